#include "hekise/rewrite.hpp"

#include <random>
#include <unordered_set>

#include "hekise/error.hpp"

namespace hekise {

namespace {

struct GapCheck {
  bool right_ok;  // nothing between has an arrow to the letter
  bool left_ok;   // nothing between has an arrow from the letter
};

GapCheck check_gap(Word const& w, std::size_t i, std::size_t j,
                   OrientedGraph const& g) noexcept {
  VertexId const a = w[i];
  GapCheck out{true, true};
  for (std::size_t k = i + 1; k < j && (out.right_ok || out.left_ok); ++k) {
    if (g.arrow_unchecked(w[k], a)) {
      out.right_ok = false;
    }
    if (g.arrow_unchecked(a, w[k])) {
      out.left_ok = false;
    }
  }
  return out;
}

// Calls fn(i, j) for every pair of consecutive occurrences of a letter, in
// increasing order of j.
template <typename Fn>
void for_each_consecutive_pair(Word const& w, std::size_t alphabet, Fn&& fn) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last(alphabet, kNone);
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::size_t& prev = last[index_of(w[j])];
    if (prev != kNone && !fn(prev, j)) {
      return;
    }
    prev = j;
  }
}

}  // namespace

std::vector<CancellationSite> cancellation_sites(Word const& w, OrientedGraph const& g) {
  std::vector<CancellationSite> sites;
  for_each_consecutive_pair(w, g.size(), [&](std::size_t i, std::size_t j) {
    auto const gap = check_gap(w, i, j, g);
    if (gap.right_ok) {
      sites.push_back({CancellationKind::Right, i, j, w[i]});
    }
    if (gap.left_ok) {
      sites.push_back({CancellationKind::Left, i, j, w[i]});
    }
    return true;
  });
  return sites;
}

Word apply_cancellation(Word const& w, CancellationSite const& site,
                        OrientedGraph const& g) {
  auto stale = [&](char const* why) {
    return Error(ErrorKind::StaleSite, std::string(kind_name(site.kind)) + " @ (" +
                                           std::to_string(site.outer_left) + "," +
                                           std::to_string(site.outer_right) + "): " + why);
  };
  if (site.outer_left >= site.outer_right || site.outer_right >= w.size()) {
    throw stale("positions out of range");
  }
  if (index_of(site.letter) >= g.size() || w[site.outer_left] != site.letter ||
      w[site.outer_right] != site.letter) {
    throw stale("letter mismatch");
  }
  for (std::size_t k = site.outer_left + 1; k < site.outer_right; ++k) {
    if (w[k] == site.letter) {
      throw stale("occurrences are not consecutive");
    }
  }
  auto const gap = check_gap(w, site.outer_left, site.outer_right, g);
  if (site.kind == CancellationKind::Right) {
    if (!gap.right_ok) {
      throw stale("a letter in between has an arrow to the cancelled letter");
    }
    return w.without(site.outer_right);
  }
  if (!gap.left_ok) {
    throw stale("a letter in between has an arrow from the cancelled letter");
  }
  return w.without(site.outer_left);
}

bool is_normal_form(Word const& w, OrientedGraph const& g) {
  bool normal = true;
  for_each_consecutive_pair(w, g.size(), [&](std::size_t i, std::size_t j) {
    auto const gap = check_gap(w, i, j, g);
    normal = !gap.right_ok && !gap.left_ok;
    return normal;
  });
  return normal;
}

Normalized normalize(Word const& w, OrientedGraph const& g, Strategy strategy) {
  Normalized out{w, RewriteTrace{w, {}}};
  std::mt19937_64 rng(strategy.seed());
  for (;;) {
    auto sites = cancellation_sites(out.word, g);
    if (sites.empty()) {
      return out;
    }
    std::size_t pick = 0;
    if (strategy.kind() == Strategy::Kind::RandomSeeded) {
      pick = std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng);
    }
    Word next = apply_cancellation(out.word, sites[pick], g);
    out.trace.steps.push_back({sites[pick], next});
    out.word = std::move(next);
  }
}

std::set<Word> all_normal_forms(Word const& w, OrientedGraph const& g, std::size_t budget) {
  std::set<Word> normal_forms;
  std::unordered_set<Word, WordHash> visited{w};
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    Word current = std::move(stack.back());
    stack.pop_back();
    auto sites = cancellation_sites(current, g);
    if (sites.empty()) {
      normal_forms.insert(std::move(current));
      continue;
    }
    for (auto const& site : sites) {
      Word next = apply_cancellation(current, site, g);
      if (visited.insert(next).second) {
        if (visited.size() > budget) {
          throw Error(ErrorKind::BudgetExceeded, std::to_string(budget));
        }
        stack.push_back(std::move(next));
      }
    }
  }
  return normal_forms;
}

std::string_view kind_name(CancellationKind kind) noexcept {
  return kind == CancellationKind::Right ? "Right" : "Left";
}

std::string format_step(RewriteStep const& step, OrientedGraph const& g) {
  return std::string(kind_name(step.site.kind)) + " " + g.label(step.site.letter) +
         " @ (" + std::to_string(step.site.outer_left) + "," +
         std::to_string(step.site.outer_right) + ") => " + format_word(step.result, g);
}

}  // namespace hekise
