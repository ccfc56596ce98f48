#include "hekise/canon.hpp"

#include "hekise/error.hpp"
#include "hekise/rewrite.hpp"

namespace hekise {

namespace {

Word least_in_class(Word const& w, OrientedGraph const& g) {
  std::vector<VertexId> rest(w.begin(), w.end());
  Word out;
  while (!rest.empty()) {
    // The leftmost occurrence of a letter is the only one that can be initial.
    std::size_t best = 0;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      if (g.rank(rest[j]) >= g.rank(rest[best])) {
        continue;
      }
      bool initial = true;
      for (std::size_t i = 0; i < j && initial; ++i) {
        initial = g.commutes(rest[i], rest[j]);
      }
      if (initial) {
        best = j;
      }
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

Word min_normal_form(Word const& w, OrientedGraph const& g) {
  if (!is_normal_form(w, g)) {
    throw Error(ErrorKind::NotNormalForm, format_word(w, g));
  }
  return least_in_class(w, g);
}

CanonicalForm canonicalize(Word const& w, OrientedGraph const& g) {
  auto normal = normalize(w, g, Strategy::leftmost_right_first());
  return CanonicalForm(least_in_class(normal.word, g), g.id());
}

bool equal_in_monoid(Word const& u, Word const& v, OrientedGraph const& g) {
  return canonicalize(u, g) == canonicalize(v, g);
}

CanonicalForm multiply(OrientedGraph const& g, CanonicalForm const& x,
                       CanonicalForm const& y) {
  if (x.graph_id() != g.id() || y.graph_id() != g.id()) {
    throw Error(ErrorKind::GraphMismatch,
                std::to_string(x.graph_id()) + "," + std::to_string(y.graph_id()) +
                    " vs " + std::to_string(g.id()));
  }
  return canonicalize(x.word() + y.word(), g);
}

CanonicalForm identity(OrientedGraph const& g) { return CanonicalForm(Word{}, g.id()); }

}  // namespace hekise
