#include "hekise/graph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_map>

#include "hekise/error.hpp"

namespace hekise {

namespace {

std::atomic<std::uint64_t> next_graph_id{1};

// Labels must survive the word and graph text formats unchanged.
bool valid_label(std::string_view s) {
  if (s.empty() || s == "\xce\xb5") {  // "ε" spells the empty word
    return false;
  }
  if (s.find("->") != std::string_view::npos) {
    return false;
  }
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v' || c == ',' || c == '#';
  });
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
  }
  return labels;
}

}  // namespace

std::optional<VertexId> OrientedGraph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return vertex_at(static_cast<std::size_t>(it - labels_.begin()));
}

bool OrientedGraph::has_arrow(VertexId a, VertexId b) const {
  if (index_of(a) >= size() || index_of(b) >= size()) {
    throw Error(ErrorKind::InvalidArgument, "vertex id out of range");
  }
  return arrow_unchecked(a, b);
}

bool OrientedGraph::disconnected(VertexId a, VertexId b) const {
  if (a == b) {
    throw Error(ErrorKind::EqualVertices, label(a));
  }
  return !has_arrow(a, b) && !has_arrow(b, a);
}

std::vector<std::pair<VertexId, VertexId>> OrientedGraph::arrows() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(arrow_count_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (adjacency_[i * size() + j] != 0) {
        out.emplace_back(vertex_at(i), vertex_at(j));
      }
    }
  }
  return out;
}

std::vector<VertexId> OrientedGraph::out_neighbours(VertexId a) const {
  std::vector<VertexId> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (has_arrow(a, vertex_at(j))) {
      out.push_back(vertex_at(j));
    }
  }
  return out;
}

std::vector<VertexId> OrientedGraph::in_neighbours(VertexId a) const {
  std::vector<VertexId> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (has_arrow(vertex_at(j), a)) {
      out.push_back(vertex_at(j));
    }
  }
  return out;
}

OrientedGraph build_graph(std::vector<std::string> labels,
                          std::vector<LabelArrow> const& arrows,
                          OrderPolicy policy) {
  OrientedGraph g;
  std::unordered_map<std::string, std::size_t> index;
  for (auto const& s : labels) {
    if (!valid_label(s)) {
      throw Error(ErrorKind::InvalidLabel, s);
    }
    if (!index.emplace(s, index.size()).second) {
      throw Error(ErrorKind::DuplicateLabel, s);
    }
  }
  std::size_t const n = labels.size();
  g.adjacency_.assign(n * n, 0);

  auto lookup = [&](std::string const& s) {
    auto it = index.find(s);
    if (it == index.end()) {
      throw Error(ErrorKind::UnknownEndpoint, s);
    }
    return it->second;
  };
  for (auto const& [from, to] : arrows) {
    std::size_t const a = lookup(from);
    std::size_t const b = lookup(to);
    if (a == b) {
      throw Error(ErrorKind::SelfLoop, from);
    }
    if (g.adjacency_[a * n + b] != 0) {
      throw Error(ErrorKind::DuplicateArrow, from + "," + to);
    }
    if (g.adjacency_[b * n + a] != 0) {
      throw Error(ErrorKind::TwoCycle, from + "," + to);
    }
    g.adjacency_[a * n + b] = 1;
    ++g.arrow_count_;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (policy == OrderPolicy::LabelLexicographic) {
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return labels[x] < labels[y]; });
  }
  g.rank_.resize(n);
  g.ordered_.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    g.rank_[order[r]] = static_cast<std::uint32_t>(r);
    g.ordered_.push_back(vertex_at(order[r]));
  }

  g.single_char_labels_ = std::all_of(labels.begin(), labels.end(),
                                      [](auto const& s) { return s.size() == 1; });
  g.labels_ = std::move(labels);
  g.policy_ = policy;
  g.id_ = next_graph_id.fetch_add(1, std::memory_order_relaxed);
  return g;
}

bool is_acyclic(OrientedGraph const& g) {
  std::size_t const n = g.size();
  std::vector<std::size_t> in_degree(n, 0);
  for (auto const& [a, b] : g.arrows()) {
    ++in_degree[index_of(b)];
  }
  std::vector<std::size_t> sources;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_degree[v] == 0) {
      sources.push_back(v);
    }
  }
  std::size_t removed = 0;
  while (!sources.empty()) {
    std::size_t const v = sources.back();
    sources.pop_back();
    ++removed;
    for (std::size_t w = 0; w < n; ++w) {
      if (g.arrow_unchecked(vertex_at(v), vertex_at(w)) && --in_degree[w] == 0) {
        sources.push_back(w);
      }
    }
  }
  return removed == n;
}

OrientedGraph make_gamma_n(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorKind::InvalidArgument, "gamma_n needs n >= 1");
  }
  auto labels = numeric_labels(n);
  std::vector<LabelArrow> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      arrows.emplace_back(labels[i], labels[j]);
    }
  }
  return build_graph(std::move(labels), arrows, OrderPolicy::DeclarationOrder);
}

OrientedGraph make_path_n(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorKind::InvalidArgument, "path needs n >= 1");
  }
  auto labels = numeric_labels(n);
  std::vector<LabelArrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    arrows.emplace_back(labels[i], labels[i + 1]);
  }
  return build_graph(std::move(labels), arrows, OrderPolicy::DeclarationOrder);
}

OrientedGraph make_cycle_n(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorKind::CycleTooShort, std::to_string(n));
  }
  auto labels = numeric_labels(n);
  std::vector<LabelArrow> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    arrows.emplace_back(labels[i], labels[(i + 1) % n]);
  }
  return build_graph(std::move(labels), arrows, OrderPolicy::DeclarationOrder);
}

}  // namespace hekise
