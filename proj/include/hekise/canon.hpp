#ifndef HEKISE_CANON_HPP_
#define HEKISE_CANON_HPP_

#include <cstdint>

#include "hekise/graph.hpp"
#include "hekise/word.hpp"

namespace hekise {

//! The tidy, lexicographically least normal form of a monoid element, tagged
//! with the id of the graph it was computed for. Only obtainable through
//! canonicalize(), multiply() and identity().
class CanonicalForm {
 public:
  Word const& word() const noexcept { return word_; }
  std::uint64_t graph_id() const noexcept { return graph_id_; }
  std::size_t size() const noexcept { return word_.size(); }

  friend bool operator==(CanonicalForm const&, CanonicalForm const&) = default;

 private:
  friend CanonicalForm canonicalize(Word const&, OrientedGraph const&);
  friend CanonicalForm identity(OrientedGraph const&);
  CanonicalForm(Word word, std::uint64_t graph_id)
      : word_(std::move(word)), graph_id_(graph_id) {}

  Word word_;
  std::uint64_t graph_id_;
};

//! Lexicographically least member of the ~-class of a normal form w, built by
//! repeatedly emitting the least initial letter and deleting its leftmost
//! occurrence. Throws NotNormalForm.
Word min_normal_form(Word const& w, OrientedGraph const& g);

CanonicalForm canonicalize(Word const& w, OrientedGraph const& g);

bool equal_in_monoid(Word const& u, Word const& v, OrientedGraph const& g);

// Throws GraphMismatch unless x, y and g share a graph id.
CanonicalForm multiply(OrientedGraph const& g, CanonicalForm const& x,
                       CanonicalForm const& y);

CanonicalForm identity(OrientedGraph const& g);

}  // namespace hekise

#endif  // HEKISE_CANON_HPP_
