#ifndef HEKISE_WORD_HPP_
#define HEKISE_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hekise/graph.hpp"

namespace hekise {

//! An element of the free monoid on the vertex set. The built-in ordering
//! compares raw vertex ids and exists for use as a container key; use LexLess
//! for the order induced by a graph's order policy.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<VertexId> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<VertexId> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  VertexId operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<VertexId const> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(VertexId v) { letters_.push_back(v); }

  //! Copy with the letter at `pos` removed.
  Word without(std::size_t pos) const;
  //! Copy with letters at `pos` and `pos + 1` exchanged.
  Word swapped(std::size_t pos) const;
  Word subword(std::size_t pos, std::size_t count) const;

  friend Word operator+(Word const& lhs, Word const& rhs);
  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

 private:
  std::vector<VertexId> letters_;
};

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

//! Lexicographic order on words induced by the graph's vertex order; a proper
//! prefix precedes its extensions.
struct LexLess {
  OrientedGraph const* graph;
  bool operator()(Word const& u, Word const& v) const noexcept;
};

bool lex_less(Word const& u, Word const& v, OrientedGraph const& g) noexcept;

//! Accepts whitespace- or comma-separated labels ("c a b", "c,a,b"), or the
//! compact form "cab" when every label is a single character. "" and "ε" are
//! the empty word. Throws UnknownLetter.
Word parse_word(std::string_view text, OrientedGraph const& g);
//! Compact when every label is one character, space-separated otherwise;
//! the empty word prints as "ε".
std::string format_word(Word const& w, OrientedGraph const& g);

// Distinct letters, sorted by id.
using Support = std::vector<VertexId>;
Support support(Word const& w);

//! Positions i where w[i], w[i+1] are distinct and disconnected.
std::vector<std::size_t> elementary_commutation_sites(Word const& w,
                                                      OrientedGraph const& g);

//! The ~-class of w, by breadth-first search over elementary commutations.
//! Throws BudgetExceeded once more than `budget` words have been found.
std::set<Word> commutation_class(Word const& w, OrientedGraph const& g,
                                 std::size_t budget);

//! Projection criterion: equal letter counts, and equal projections onto
//! every connected pair of letters.
bool commutation_equivalent(Word const& u, Word const& v, OrientedGraph const& g);

//! A key such that u ~ v iff the keys are equal (letter counts followed by the
//! projections used by commutation_equivalent).
using CommutationKey = std::vector<std::uint32_t>;
CommutationKey commutation_key(Word const& w, OrientedGraph const& g);

//! Positions j whose letter is distinct from and disconnected from every
//! letter before j. A repeated letter is never initial at its later
//! occurrence.
std::vector<std::size_t> initial_letter_positions(Word const& w,
                                                  OrientedGraph const& g);

//! The least initial letter under the graph order. Throws EmptyWord.
VertexId iota(Word const& w, OrientedGraph const& g);

bool is_tidy(Word const& w, OrientedGraph const& g);

//! Dense numbering of all words of length <= max_len: shorter words first,
//! words of equal length in the graph's lexicographic order.
class WordSpace {
 public:
  //! Throws StateBudgetExceeded if the space holds more than `limit` words.
  WordSpace(OrientedGraph const& g, std::size_t max_len,
            std::size_t limit = static_cast<std::size_t>(-1));

  std::size_t size() const noexcept { return offsets_.back(); }
  std::size_t max_len() const noexcept { return max_len_; }
  Word at(std::size_t index) const;
  //! Throws InvalidArgument for words longer than max_len().
  std::size_t index(Word const& w) const;

 private:
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> rank_;
  std::size_t max_len_;
  std::vector<std::size_t> offsets_;  // offsets_[k] = first index of length k
};

}  // namespace hekise

template <>
struct std::hash<hekise::Word> {
  std::size_t operator()(hekise::Word const& w) const noexcept {
    return hekise::WordHash{}(w);
  }
};

#endif  // HEKISE_WORD_HPP_
