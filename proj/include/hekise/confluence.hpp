#ifndef HEKISE_CONFLUENCE_HPP_
#define HEKISE_CONFLUENCE_HPP_

// Executable checks that cancellation is confluent modulo commutation:
//
//   normal forms   every normal form reachable from x lies in one ~-class,
//                  and every maximal simplifying sequence from x has
//                  length |x| - |normal form|;
//   alpha          y <- x -> z  ==>  y ->* u, z ->* v with u ~ v;
//   beta           y ~ x -> z (one commutation, one cancellation)
//                  ==>  y ->* u with u ~ z.
//
// All searches are exhaustive over the words reachable by cancellation, which
// is finite because every cancellation removes one letter.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hekise/graph.hpp"
#include "hekise/word.hpp"

namespace hekise {

enum class Claim { SingleClass, EqualLength, SequenceLength, Alpha, Beta };
std::string_view claim_name(Claim c) noexcept;

struct ConfluenceFailure {
  Claim claim;
  Word word;
  std::string detail;
};

struct WordCheckStats {
  std::size_t alpha_pairs = 0;
  std::size_t beta_pairs = 0;
  // beta pairs not closed by a single cancellation of y
  std::size_t beta_multi_step = 0;

  WordCheckStats& operator+=(WordCheckStats const& other) noexcept;
};

//! Memoised view of the cancellation graph below a set of words.
class ReductionExplorer {
 public:
  explicit ReductionExplorer(OrientedGraph const& g);

  //! Commutation keys of the normal forms reachable from w, sorted, unique.
  std::vector<CommutationKey> const& normal_form_keys(Word const& w);
  //! Lengths of normal forms reachable from w, sorted, unique.
  std::vector<std::size_t> const& normal_form_lengths(Word const& w);
  //! Lengths of all maximal simplifying sequences from w, sorted, unique.
  std::vector<std::size_t> const& sequence_lengths(Word const& w);

  //! Every word reachable from w, w included.
  std::vector<Word> reachable(Word const& w);

  //! Checks the three normal-form claims, alpha and beta at x.
  std::optional<ConfluenceFailure> check_word(Word const& x, WordCheckStats& stats);

  //! check_word at x and at every word reachable from it.
  std::optional<ConfluenceFailure> check_closure(Word const& x, WordCheckStats& stats);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  struct Node {
    std::vector<Word> successors;  // distinct results of one cancellation
    std::vector<CommutationKey> nf_keys;
    std::vector<std::size_t> nf_lengths;
    std::vector<std::size_t> sequence_lengths;
  };
  Node const& node(Word const& w);

  OrientedGraph const* graph_;
  std::unordered_map<Word, Node, WordHash> memo_;
};

struct ConfluenceReport {
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  WordCheckStats stats;
  //! Failure at the smallest word index (shortest, then lexicographic).
  std::optional<ConfluenceFailure> failure;

  bool passed() const noexcept { return !failure.has_value(); }
};

//! Checks every word of length <= max_len, splitting the word space across
//! OpenMP threads. Same report as check_all_words_serial.
ConfluenceReport check_all_words(OrientedGraph const& g, std::size_t max_len);

ConfluenceReport check_all_words_serial(OrientedGraph const& g, std::size_t max_len);

std::string describe(ConfluenceFailure const& failure, OrientedGraph const& g);

}  // namespace hekise

#endif  // HEKISE_CONFLUENCE_HPP_
