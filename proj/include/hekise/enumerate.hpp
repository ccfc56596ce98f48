#ifndef HEKISE_ENUMERATE_HPP_
#define HEKISE_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hekise/canon.hpp"
#include "hekise/graph.hpp"

namespace hekise {

inline constexpr std::size_t kDefaultMaxElements = 1'000'000;

//! The elements of HK_Γ found by closing {identity} under right
//! multiplication by generators. When `complete` is false the census was cut
//! off at the element budget and the monoid may be larger (or infinite).
struct MonoidCensus {
  std::uint64_t graph_id = 0;
  std::vector<CanonicalForm> elements;  // sorted by (length, lex)
  bool complete = false;
  std::map<std::size_t, std::size_t> by_length;
};

//! Level-synchronous BFS; products of each frontier are canonicalised in
//! parallel and merged in frontier order, so the result (including where a
//! truncated census stops) matches enumerate_elements_serial exactly.
MonoidCensus enumerate_elements(OrientedGraph const& g,
                                std::size_t max_elements = kDefaultMaxElements);

//! Single-threaded queue BFS. Reference for enumerate_elements.
MonoidCensus enumerate_elements_serial(OrientedGraph const& g,
                                       std::size_t max_elements = kDefaultMaxElements);

//! Canonical forms of (c1 c2 ... cm)^k for k = 1..k_max. Throws NotACycle if
//! `cycle` is not a directed cycle of g, and NotNormalForm if some power is
//! not already a normal form.
std::vector<CanonicalForm> cycle_power_witnesses(OrientedGraph const& g,
                                                 std::span<VertexId const> cycle,
                                                 std::size_t k_max);

//! Left Cayley graph in DOT: one node per element, an edge x -> a·x labelled
//! a for every generator a. Throws IncompleteCensus.
std::string cayley_dot(MonoidCensus const& census, OrientedGraph const& g);

}  // namespace hekise

#endif  // HEKISE_ENUMERATE_HPP_
