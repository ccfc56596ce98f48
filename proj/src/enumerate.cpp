#include "hekise/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "hekise/error.hpp"
#include "hekise/rewrite.hpp"

namespace hekise {

namespace {

Word right_product(Word const& x, VertexId a, OrientedGraph const& g) {
  Word w = x;
  w.push_back(a);
  return canonicalize(w, g).word();
}

MonoidCensus finish(OrientedGraph const& g, std::vector<Word> found, bool complete) {
  std::sort(found.begin(), found.end(), [&](Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return lex_less(u, v, g);
  });
  MonoidCensus census;
  census.graph_id = g.id();
  census.complete = complete;
  census.elements.reserve(found.size());
  for (auto& w : found) {
    ++census.by_length[w.size()];
    // Already canonical; re-canonicalising is cheap and mints the token.
    census.elements.push_back(canonicalize(w, g));
  }
  return census;
}

void check_budget(std::size_t max_elements) {
  if (max_elements == 0) {
    throw Error(ErrorKind::InvalidArgument, "max_elements must be positive");
  }
}

}  // namespace

MonoidCensus enumerate_elements_serial(OrientedGraph const& g, std::size_t max_elements) {
  check_budget(max_elements);
  std::vector<Word> found{Word{}};
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::deque<Word> queue{Word{}};
  bool complete = true;
  while (!queue.empty() && complete) {
    Word x = std::move(queue.front());
    queue.pop_front();
    for (VertexId a : g.ordered_vertices()) {
      Word y = right_product(x, a, g);
      if (seen.contains(y)) {
        continue;
      }
      if (found.size() == max_elements) {
        complete = false;
        break;
      }
      seen.insert(y);
      found.push_back(y);
      queue.push_back(std::move(y));
    }
  }
  return finish(g, std::move(found), complete);
}

MonoidCensus enumerate_elements(OrientedGraph const& g, std::size_t max_elements) {
  check_budget(max_elements);
  auto const gens = g.ordered_vertices();
  std::size_t const n = gens.size();

  std::vector<Word> found{Word{}};
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  bool complete = true;

  while (!frontier.empty() && complete) {
    std::vector<Word> products(frontier.size() * n);
    auto const count = static_cast<std::ptrdiff_t>(products.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      auto const idx = static_cast<std::size_t>(k);
      products[idx] = right_product(frontier[idx / n], gens[idx % n], g);
    }

    std::vector<Word> next;
    for (auto& y : products) {
      if (seen.contains(y)) {
        continue;
      }
      if (found.size() == max_elements) {
        complete = false;
        break;
      }
      seen.insert(y);
      found.push_back(y);
      next.push_back(std::move(y));
    }
    frontier = std::move(next);
  }
  return finish(g, std::move(found), complete);
}

std::vector<CanonicalForm> cycle_power_witnesses(OrientedGraph const& g,
                                                 std::span<VertexId const> cycle,
                                                 std::size_t k_max) {
  std::size_t const m = cycle.size();
  if (m < 3) {
    throw Error(ErrorKind::NotACycle, "a directed cycle needs at least 3 vertices");
  }
  std::unordered_set<std::size_t> distinct;
  for (std::size_t i = 0; i < m; ++i) {
    VertexId const a = cycle[i];
    VertexId const b = cycle[(i + 1) % m];
    if (index_of(a) >= g.size() || index_of(b) >= g.size()) {
      throw Error(ErrorKind::NotACycle, "vertex id out of range");
    }
    if (!distinct.insert(index_of(a)).second) {
      throw Error(ErrorKind::NotACycle, "repeated vertex " + g.label(a));
    }
    if (!g.has_arrow(a, b)) {
      throw Error(ErrorKind::NotACycle, "no arrow " + g.label(a) + " -> " + g.label(b));
    }
  }

  std::vector<CanonicalForm> out;
  Word power;
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (VertexId v : cycle) {
      power.push_back(v);
    }
    if (!is_normal_form(power, g)) {
      throw Error(ErrorKind::NotNormalForm, format_word(power, g));
    }
    auto form = canonicalize(power, g);
    if (std::find(out.begin(), out.end(), form) != out.end()) {
      throw std::logic_error("cycle powers collapsed: " + format_word(power, g));
    }
    out.push_back(std::move(form));
  }
  return out;
}

namespace {

std::string dot_quote(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string cayley_dot(MonoidCensus const& census, OrientedGraph const& g) {
  if (!census.complete) {
    throw Error(ErrorKind::IncompleteCensus,
                std::to_string(census.elements.size()) + " elements");
  }
  if (census.graph_id != g.id()) {
    throw Error(ErrorKind::GraphMismatch, "census was built for another graph");
  }
  std::string out = "digraph cayley {\n";
  for (auto const& x : census.elements) {
    out += "  " + dot_quote(format_word(x.word(), g)) + ";\n";
  }
  for (auto const& x : census.elements) {
    auto const from = dot_quote(format_word(x.word(), g));
    for (VertexId a : g.ordered_vertices()) {
      auto const ax = canonicalize(Word{a} + x.word(), g);
      out += "  " + from + " -> " + dot_quote(format_word(ax.word(), g)) +
             " [label=" + dot_quote(g.label(a)) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace hekise
