#ifndef HEKISE_REWRITE_HPP_
#define HEKISE_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hekise/graph.hpp"
#include "hekise/word.hpp"

namespace hekise {

// Right keeps the occurrence at outer_left, Left keeps the one at outer_right.
enum class CancellationKind { Right, Left };

//! Two consecutive occurrences of `letter` at outer_left < outer_right. Right
//! is allowed when no letter strictly between them has an arrow to `letter`;
//! Left when none has an arrow from it.
struct CancellationSite {
  CancellationKind kind;
  std::size_t outer_left;
  std::size_t outer_right;
  VertexId letter;

  friend bool operator==(CancellationSite const&, CancellationSite const&) = default;
};

struct RewriteStep {
  CancellationSite site;
  Word result;
};

//! A simplifying sequence: each step removes exactly one letter.
struct RewriteTrace {
  Word start;
  std::vector<RewriteStep> steps;

  Word const& result() const noexcept {
    return steps.empty() ? start : steps.back().result;
  }
};

class Strategy {
 public:
  enum class Kind { LeftmostRightFirst, RandomSeeded };

  // Least outer_right, then least outer_left, then Right before Left.
  static Strategy leftmost_right_first() noexcept { return Strategy(Kind::LeftmostRightFirst, 0); }
  // Uniform choice among the available sites, driven by a seeded mt19937_64.
  static Strategy random_seeded(std::uint64_t seed) noexcept {
    return Strategy(Kind::RandomSeeded, seed);
  }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  Strategy(Kind kind, std::uint64_t seed) noexcept : kind_(kind), seed_(seed) {}
  Kind kind_;
  std::uint64_t seed_;
};

//! All sites between consecutive occurrences, ordered by (outer_right,
//! outer_left, Right before Left).
std::vector<CancellationSite> cancellation_sites(Word const& w, OrientedGraph const& g);

//! Re-checks `site` against w and removes one occurrence. Throws StaleSite.
Word apply_cancellation(Word const& w, CancellationSite const& site,
                        OrientedGraph const& g);

bool is_normal_form(Word const& w, OrientedGraph const& g);

struct Normalized {
  Word word;
  RewriteTrace trace;
};

//! Runs a maximal simplifying sequence; the result is a normal form.
Normalized normalize(Word const& w, OrientedGraph const& g,
                     Strategy strategy = Strategy::leftmost_right_first());

//! Every normal form reachable from w by some maximal simplifying sequence.
//! Throws BudgetExceeded once more than `budget` distinct words are visited.
std::set<Word> all_normal_forms(Word const& w, OrientedGraph const& g,
                                std::size_t budget = 1'000'000);

std::string_view kind_name(CancellationKind kind) noexcept;
//! `<kind> <letter> @ (<i>,<j>) => <word>`
std::string format_step(RewriteStep const& step, OrientedGraph const& g);

}  // namespace hekise

#endif  // HEKISE_REWRITE_HPP_
