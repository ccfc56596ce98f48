#ifndef HEKISE_GRAPH_HPP_
#define HEKISE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hekise {

// Dense vertex index, 0..|V|-1. Labels only exist at the I/O boundary.
enum class VertexId : std::uint32_t {};

constexpr std::size_t index_of(VertexId v) noexcept {
  return static_cast<std::size_t>(v);
}
constexpr VertexId vertex_at(std::size_t i) noexcept {
  return static_cast<VertexId>(static_cast<std::uint32_t>(i));
}

// The total order on V used for lexicographic comparison of words.
enum class OrderPolicy { LabelLexicographic, DeclarationOrder };

using LabelArrow = std::pair<std::string, std::string>;

//! A simple oriented graph: no self-loops, no oriented 2-cycles, at most one
//! arrow per ordered pair. Immutable once built; copies share the same id().
class OrientedGraph {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  std::string const& label(VertexId v) const { return labels_.at(index_of(v)); }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  bool has_arrow(VertexId a, VertexId b) const;

  //! Neither (a,b) nor (b,a) is an arrow. Throws EqualVertices if a == b.
  bool disconnected(VertexId a, VertexId b) const;

  //! Hot-path variant of disconnected(): false for a == b, never throws and
  //! does no bounds checking.
  bool commutes(VertexId a, VertexId b) const noexcept {
    return a != b && adjacency_[index_of(a) * size() + index_of(b)] == 0 &&
           adjacency_[index_of(b) * size() + index_of(a)] == 0;
  }
  bool arrow_unchecked(VertexId a, VertexId b) const noexcept {
    return adjacency_[index_of(a) * size() + index_of(b)] != 0;
  }

  //! Arrows sorted by (source, target) id.
  std::vector<std::pair<VertexId, VertexId>> arrows() const;
  std::size_t arrow_count() const noexcept { return arrow_count_; }

  std::vector<VertexId> out_neighbours(VertexId a) const;
  std::vector<VertexId> in_neighbours(VertexId a) const;

  OrderPolicy order_policy() const noexcept { return policy_; }
  //! Position of v in the total order (0 = least).
  std::uint32_t rank(VertexId v) const noexcept { return rank_[index_of(v)]; }
  //! Vertices listed from least to greatest in the total order.
  std::span<VertexId const> ordered_vertices() const noexcept { return ordered_; }

  //! Identity token assigned at build; distinct for every build.
  std::uint64_t id() const noexcept { return id_; }

  bool single_char_labels() const noexcept { return single_char_labels_; }

 private:
  friend OrientedGraph build_graph(std::vector<std::string> labels,
                                   std::vector<LabelArrow> const& arrows,
                                   OrderPolicy policy);
  OrientedGraph() = default;

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> adjacency_;  // row-major |V| x |V|
  std::size_t arrow_count_ = 0;
  OrderPolicy policy_ = OrderPolicy::LabelLexicographic;
  std::vector<std::uint32_t> rank_;
  std::vector<VertexId> ordered_;
  std::uint64_t id_ = 0;
  bool single_char_labels_ = true;
};

//! Validates and interns a graph. Vertex ids follow declaration order.
//! Errors: InvalidLabel, DuplicateLabel, UnknownEndpoint, SelfLoop,
//! DuplicateArrow, TwoCycle.
OrientedGraph build_graph(std::vector<std::string> labels,
                          std::vector<LabelArrow> const& arrows,
                          OrderPolicy policy = OrderPolicy::LabelLexicographic);

// Kahn elimination.
bool is_acyclic(OrientedGraph const& g);

// Labels "1".."n", arrow i->j for every i<j, declaration order.
OrientedGraph make_gamma_n(std::size_t n);
// 1->2->...->n.
OrientedGraph make_path_n(std::size_t n);
// 1->2->...->n->1, n >= 3.
OrientedGraph make_cycle_n(std::size_t n);

// Graph text format: `vertex <label>`, `<label> -> <label>`, `#` comments.
// Labels first seen in arrow lines are declared in order of appearance.
OrientedGraph parse_graph(std::string_view text,
                          OrderPolicy policy = OrderPolicy::LabelLexicographic);
OrientedGraph load_graph(std::filesystem::path const& path,
                         OrderPolicy policy = OrderPolicy::LabelLexicographic);
std::string format_graph(OrientedGraph const& g);

}  // namespace hekise

#endif  // HEKISE_GRAPH_HPP_
