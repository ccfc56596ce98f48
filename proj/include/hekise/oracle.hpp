#ifndef HEKISE_ORACLE_HPP_
#define HEKISE_ORACLE_HPP_

// Brute-force equality in HK_Γ straight from the defining relations
//   a² = a,   aba = bab = ab (a -> b),   ab = ba (a, b disconnected),
// with no use of cancellations or normal forms. Words are explored up to a
// length horizon `max_len`; every nonempty class is infinite in the free
// monoid (a -> aa -> aaa ...), so results are relative to that horizon.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hekise/graph.hpp"
#include "hekise/word.hpp"

namespace hekise {

enum class MoveKind {
  IdemInsert,     // a -> aa
  IdemDelete,     // aa -> a
  BraidExpand,    // ab -> aba, ab -> bab   (a -> b)
  BraidContract,  // aba -> ab, bab -> ab   (a -> b)
  Commute,        // ab -> ba               (a, b disconnected)
};

//! One directed application of one relation at `position`.
struct RelationMove {
  MoveKind kind;
  std::size_t position;
  VertexId first;
  VertexId second;  // equals `first` for the idempotent moves
  Word result;
};

std::vector<RelationMove> relation_moves(Word const& w, OrientedGraph const& g);

enum class OracleVerdict { Equal, NotEqual, Inconclusive };
std::string_view verdict_name(OracleVerdict v) noexcept;

inline constexpr std::size_t kOracleExtraLength = 4;
inline constexpr std::size_t kDefaultOracleStates = 5'000'000;

//! Bidirectional BFS over words of length <= max_len. Equal when the two
//! searches meet; NotEqual when either side's bounded class is exhausted
//! first; Inconclusive when more than max_states words were stored.
OracleVerdict oracle_equal(Word const& u, Word const& v, OrientedGraph const& g,
                           std::size_t max_len, std::size_t max_states = kDefaultOracleStates);

//! max_len defaults to the longer input plus kOracleExtraLength.
OracleVerdict oracle_equal(Word const& u, Word const& v, OrientedGraph const& g);

struct OracleClass {
  Word representative;  // shortest, then lexicographically least
  std::size_t size;
};

//! Union-find partition of every word of length <= max_len under the
//! relation moves that stay within the horizon. Classes whose members are all
//! close to max_len can be split that a larger horizon would merge.
class OraclePartition {
 public:
  //! Throws StateBudgetExceeded if there are more than max_states words.
  OraclePartition(OrientedGraph const& g, std::size_t max_len,
                  std::size_t max_states = kDefaultOracleStates);

  std::size_t max_len() const noexcept { return space_.max_len(); }
  std::size_t word_count() const noexcept { return class_of_index_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }

  //! Dense class number in [0, class_count()). Throws InvalidArgument when w is
  //! longer than max_len().
  std::size_t class_of(Word const& w) const;

  //! Classes ordered by representative (shortest, then lexicographic).
  std::vector<OracleClass> classes() const;

  WordSpace const& space() const noexcept { return space_; }

 private:
  WordSpace space_;
  std::vector<std::size_t> class_of_index_;
  std::size_t class_count_ = 0;
};

std::vector<OracleClass> oracle_classes(OrientedGraph const& g, std::size_t max_len,
                                        std::size_t max_states = kDefaultOracleStates);

}  // namespace hekise

#endif  // HEKISE_ORACLE_HPP_
