#include "hekise/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "hekise/error.hpp"

namespace hekise {

namespace {

Word inserted(Word const& w, std::size_t pos, VertexId v) {
  std::vector<VertexId> out(w.begin(), w.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), v);
  return Word(std::move(out));
}

// Union by size with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) {
      parent_[i] = i;
    }
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i == j) {
      return;
    }
    if (size_[i] < size_[j]) {
      std::swap(i, j);
    }
    parent_[j] = i;
    size_[i] += size_[j];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

std::vector<RelationMove> relation_moves(Word const& w, OrientedGraph const& g) {
  std::vector<RelationMove> moves;
  std::size_t const n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    VertexId const a = w[i];
    moves.push_back({MoveKind::IdemInsert, i, a, a, inserted(w, i, a)});
    if (i + 1 >= n) {
      continue;
    }
    VertexId const b = w[i + 1];
    if (a == b) {
      moves.push_back({MoveKind::IdemDelete, i, a, a, w.without(i)});
      continue;
    }
    if (g.arrow_unchecked(a, b)) {
      moves.push_back({MoveKind::BraidExpand, i, a, b, inserted(w, i + 2, a)});
      moves.push_back({MoveKind::BraidExpand, i, a, b, inserted(w, i, b)});
    } else if (!g.arrow_unchecked(b, a)) {
      moves.push_back({MoveKind::Commute, i, a, b, w.swapped(i)});
    }
    if (i + 2 < n && w[i + 2] == a) {
      // xyx with an arrow between x and y: aba -> ab when x -> y, and
      // bab -> ab (i.e. xyx -> yx) when y -> x.
      if (g.arrow_unchecked(a, b)) {
        moves.push_back({MoveKind::BraidContract, i, a, b, w.without(i + 2)});
      } else if (g.arrow_unchecked(b, a)) {
        moves.push_back({MoveKind::BraidContract, i, b, a, w.without(i)});
      }
    }
  }
  return moves;
}

std::string_view verdict_name(OracleVerdict v) noexcept {
  switch (v) {
    case OracleVerdict::Equal: return "Equal";
    case OracleVerdict::NotEqual: return "NotEqual";
    case OracleVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

OracleVerdict oracle_equal(Word const& u, Word const& v, OrientedGraph const& g,
                           std::size_t max_len, std::size_t max_states) {
  if (u.size() > max_len || v.size() > max_len) {
    throw Error(ErrorKind::InvalidArgument, "max_len is shorter than an input word");
  }
  if (u == v) {
    return OracleVerdict::Equal;
  }
  using Visited = std::unordered_set<Word, WordHash>;
  Visited seen_u{u};
  Visited seen_v{v};
  std::vector<Word> frontier_u{u};
  std::vector<Word> frontier_v{v};

  for (;;) {
    if (frontier_u.empty() || frontier_v.empty()) {
      return OracleVerdict::NotEqual;
    }
    bool const grow_u = frontier_u.size() <= frontier_v.size();
    auto& frontier = grow_u ? frontier_u : frontier_v;
    auto& mine = grow_u ? seen_u : seen_v;
    auto const& theirs = grow_u ? seen_v : seen_u;

    std::vector<Word> next;
    for (auto const& w : frontier) {
      for (auto& move : relation_moves(w, g)) {
        if (move.result.size() > max_len) {
          continue;
        }
        if (theirs.contains(move.result)) {
          return OracleVerdict::Equal;
        }
        if (mine.insert(move.result).second) {
          if (seen_u.size() + seen_v.size() > max_states) {
            return OracleVerdict::Inconclusive;
          }
          next.push_back(std::move(move.result));
        }
      }
    }
    frontier = std::move(next);
  }
}

OracleVerdict oracle_equal(Word const& u, Word const& v, OrientedGraph const& g) {
  return oracle_equal(u, v, g, std::max(u.size(), v.size()) + kOracleExtraLength);
}

OraclePartition::OraclePartition(OrientedGraph const& g, std::size_t max_len,
                                 std::size_t max_states)
    : space_(g, max_len, max_states) {
  std::size_t const total = space_.size();
  DisjointSets sets(total);
  for (std::size_t i = 0; i < total; ++i) {
    for (auto const& move : relation_moves(space_.at(i), g)) {
      if (move.result.size() <= max_len) {
        sets.unite(i, space_.index(move.result));
      }
    }
  }

  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_class(total, kUnset);
  class_of_index_.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t const root = sets.find(i);
    if (root_class[root] == kUnset) {
      root_class[root] = class_count_++;
    }
    class_of_index_[i] = root_class[root];
  }
}

std::size_t OraclePartition::class_of(Word const& w) const {
  return class_of_index_[space_.index(w)];
}

std::vector<OracleClass> OraclePartition::classes() const {
  std::vector<OracleClass> out(class_count_);
  std::vector<bool> named(class_count_, false);
  for (std::size_t i = 0; i < class_of_index_.size(); ++i) {
    std::size_t const c = class_of_index_[i];
    // Indices grow by length then lexicographically, so the first hit is the
    // representative.
    if (!named[c]) {
      named[c] = true;
      out[c].representative = space_.at(i);
    }
    ++out[c].size;
  }
  return out;
}

std::vector<OracleClass> oracle_classes(OrientedGraph const& g, std::size_t max_len,
                                        std::size_t max_states) {
  return OraclePartition(g, max_len, max_states).classes();
}

}  // namespace hekise
