#ifndef PERMBLOCKS_COVERING_HPP
#define PERMBLOCKS_COVERING_HPP

#include "permblocks/monodromy.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace permblocks {

/** One branch point of a component: the fiber orbit over marked point
 * `point` with branching index = orbit size. */
struct BranchRecord {
  std::size_t point;
  OrbitRef orbit;
  std::size_t index;          // branching index = |orbit|
  std::size_t marked_element; // the chosen element of the orbit
  std::vector<std::size_t> elements;

  bool operator==(const BranchRecord &) const = default;
};

/** A connected component of the covering: one orbit of the group generated
 * by all g_j. Its degree is the orbit size; its genus comes from the
 * branch data via Riemann-Hurwitz. */
struct CoveringComponent {
  std::vector<std::size_t> orbit; // sorted ascending
  std::size_t degree;
  std::vector<BranchRecord> branches; // ordered by (point, orbit rep)
  std::int64_t genus;

  bool operator==(const CoveringComponent &) const = default;
};

/** The full combinatorial covering of the pointed sphere described by one
 * MonodromyData: components sorted by least orbit element, partitioning
 * the ground set. */
struct CoveringReport {
  MonodromyData source;
  std::vector<CoveringComponent> components;
  std::size_t total_degree;
};

/** Build the covering: components are orbits of <g_1, ..., g_N>; each
 * component's genus g satisfies
 *
 *   2 - 2g = 2 * degree - sum over branch orbits of (index - 1)
 *
 * (Riemann-Hurwitz over the sphere), equivalently
 *
 *   g = 1 + (N/2 - 1) * degree - 1/2 * sum_j #orbits of g_j in the component.
 *
 * Both forms are evaluated in exact integer arithmetic; disagreement, an odd
 * doubled genus, or a negative genus raises Internal. */
CoveringReport build_covering(const MonodromyData &data);

/** Deck action of a word in the source generators on the fiber. */
Permutation lift_word(const CoveringReport &report, const GroupWord &word);

/** Byte-deterministic Graphviz rendering: one cluster per component
 * (annotated with elements, degree, genus), one node per branch record
 * labeled "point id / orbit rep / index k". */
std::string export_dot(const CoveringReport &report);

} // namespace permblocks

#endif
