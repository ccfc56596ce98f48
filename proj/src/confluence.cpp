#include "hekise/confluence.hpp"

#include <algorithm>
#include <unordered_set>

#include "hekise/rewrite.hpp"

namespace hekise {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
bool intersects(std::vector<T> const& a, std::vector<T> const& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// Past this many memoised words a sweep starts over with an empty cache.
constexpr std::size_t kMemoLimit = 1'500'000;

}  // namespace

std::string_view claim_name(Claim c) noexcept {
  switch (c) {
    case Claim::SingleClass: return "normal forms in one commutation class";
    case Claim::EqualLength: return "normal forms of equal length";
    case Claim::SequenceLength: return "maximal simplifying sequences of equal length";
    case Claim::Alpha: return "local confluence (alpha)";
    case Claim::Beta: return "local confluence (beta)";
  }
  return "unknown";
}

WordCheckStats& WordCheckStats::operator+=(WordCheckStats const& other) noexcept {
  alpha_pairs += other.alpha_pairs;
  beta_pairs += other.beta_pairs;
  beta_multi_step += other.beta_multi_step;
  return *this;
}

ReductionExplorer::ReductionExplorer(OrientedGraph const& g) : graph_(&g) {}

ReductionExplorer::Node const& ReductionExplorer::node(Word const& w) {
  if (auto it = memo_.find(w); it != memo_.end()) {
    return it->second;
  }
  Node n;
  for (auto const& site : cancellation_sites(w, *graph_)) {
    n.successors.push_back(apply_cancellation(w, site, *graph_));
  }
  sort_unique(n.successors);
  if (n.successors.empty()) {
    n.nf_keys.push_back(commutation_key(w, *graph_));
    n.nf_lengths.push_back(w.size());
    n.sequence_lengths.push_back(0);
  }
  for (auto const& s : n.successors) {
    Node const& child = node(s);
    n.nf_keys.insert(n.nf_keys.end(), child.nf_keys.begin(), child.nf_keys.end());
    n.nf_lengths.insert(n.nf_lengths.end(), child.nf_lengths.begin(), child.nf_lengths.end());
    for (std::size_t len : child.sequence_lengths) {
      n.sequence_lengths.push_back(len + 1);
    }
  }
  sort_unique(n.nf_keys);
  sort_unique(n.nf_lengths);
  sort_unique(n.sequence_lengths);
  return memo_.emplace(w, std::move(n)).first->second;
}

std::vector<CommutationKey> const& ReductionExplorer::normal_form_keys(Word const& w) {
  return node(w).nf_keys;
}

std::vector<std::size_t> const& ReductionExplorer::normal_form_lengths(Word const& w) {
  return node(w).nf_lengths;
}

std::vector<std::size_t> const& ReductionExplorer::sequence_lengths(Word const& w) {
  return node(w).sequence_lengths;
}

std::vector<Word> ReductionExplorer::reachable(Word const& w) {
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> out{w};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto const& s : node(out[i]).successors) {
      if (seen.insert(s).second) {
        out.push_back(s);
      }
    }
  }
  return out;
}

std::optional<ConfluenceFailure> ReductionExplorer::check_word(Word const& x,
                                                               WordCheckStats& stats) {
  OrientedGraph const& g = *graph_;
  Node const& nx = node(x);

  if (nx.nf_keys.size() != 1) {
    return ConfluenceFailure{Claim::SingleClass, x,
                             std::to_string(nx.nf_keys.size()) + " classes"};
  }
  if (nx.nf_lengths.size() != 1) {
    return ConfluenceFailure{Claim::EqualLength, x,
                             std::to_string(nx.nf_lengths.size()) + " lengths"};
  }
  if (nx.sequence_lengths.size() != 1 ||
      nx.sequence_lengths.front() != x.size() - nx.nf_lengths.front()) {
    return ConfluenceFailure{Claim::SequenceLength, x,
                             std::to_string(nx.sequence_lengths.size()) +
                                 " distinct sequence lengths"};
  }

  auto key_set = [&](Word const& w) {
    std::vector<CommutationKey> keys;
    for (auto const& r : reachable(w)) {
      keys.push_back(commutation_key(r, g));
    }
    sort_unique(keys);
    return keys;
  };

  // memo_ is node-based: references survive the insertions made below.
  std::vector<Word> const& successors = nx.successors;

  for (std::size_t i = 0; i < successors.size(); ++i) {
    for (std::size_t j = i + 1; j < successors.size(); ++j) {
      ++stats.alpha_pairs;
      Word const& y = successors[i];
      Word const& z = successors[j];
      if (intersects(node(y).nf_keys, node(z).nf_keys)) {
        continue;
      }
      if (!intersects(key_set(y), key_set(z))) {
        return ConfluenceFailure{Claim::Alpha, x,
                                 "y=" + format_word(y, g) + " z=" + format_word(z, g)};
      }
    }
  }

  for (std::size_t c : elementary_commutation_sites(x, g)) {
    Word const y = x.swapped(c);
    std::vector<Word> const& y_successors = node(y).successors;
    for (auto const& z : successors) {
      ++stats.beta_pairs;
      auto const target = commutation_key(z, g);
      bool joined = std::any_of(y_successors.begin(), y_successors.end(),
                                [&](Word const& u) { return commutation_key(u, g) == target; });
      if (joined) {
        continue;
      }
      ++stats.beta_multi_step;
      auto const reach = reachable(y);
      joined = std::any_of(reach.begin(), reach.end(),
                           [&](Word const& u) { return commutation_key(u, g) == target; });
      if (!joined) {
        return ConfluenceFailure{Claim::Beta, x,
                                 "y=" + format_word(y, g) + " z=" + format_word(z, g)};
      }
    }
  }
  return std::nullopt;
}

std::optional<ConfluenceFailure> ReductionExplorer::check_closure(Word const& x,
                                                                  WordCheckStats& stats) {
  for (auto const& w : reachable(x)) {
    if (auto failure = check_word(w, stats)) {
      return failure;
    }
  }
  return std::nullopt;
}

namespace {

ConfluenceReport empty_report(WordSpace const& space) {
  ConfluenceReport report;
  report.max_len = space.max_len();
  report.words_checked = space.size();
  return report;
}

}  // namespace

ConfluenceReport check_all_words(OrientedGraph const& g, std::size_t max_len) {
  WordSpace const space(g, max_len);
  ConfluenceReport report = empty_report(space);
  auto const total = static_cast<std::ptrdiff_t>(space.size());
  std::size_t failure_index = space.size();

#pragma omp parallel
  {
    ReductionExplorer explorer(g);
    WordCheckStats local;
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
      auto const i = static_cast<std::size_t>(k);
      if (explorer.memo_size() > kMemoLimit) {
        explorer = ReductionExplorer(g);
      }
      if (auto failure = explorer.check_word(space.at(i), local)) {
#pragma omp critical(hekise_confluence_failure)
        {
          if (i < failure_index) {
            failure_index = i;
            report.failure = std::move(failure);
          }
        }
      }
    }
#pragma omp critical(hekise_confluence_stats)
    report.stats += local;
  }
  return report;
}

ConfluenceReport check_all_words_serial(OrientedGraph const& g, std::size_t max_len) {
  WordSpace const space(g, max_len);
  ConfluenceReport report = empty_report(space);
  ReductionExplorer explorer(g);
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (explorer.memo_size() > kMemoLimit) {
      explorer = ReductionExplorer(g);
    }
    auto failure = explorer.check_word(space.at(i), report.stats);
    if (failure && !report.failure) {
      report.failure = std::move(failure);
    }
  }
  return report;
}

std::string describe(ConfluenceFailure const& failure, OrientedGraph const& g) {
  return std::string(claim_name(failure.claim)) + " fails at " +
         format_word(failure.word, g) + ": " + failure.detail;
}

}  // namespace hekise
