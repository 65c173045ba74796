#ifndef PERMBLOCKS_TWISTED_HPP
#define PERMBLOCKS_TWISTED_HPP

#include "permblocks/covering.hpp"
#include "permblocks/fusion.hpp"

#include <map>
#include <string>
#include <vector>

namespace permblocks {

/** Choice of an untwisted module label for every <g_j>-orbit of every
 * marked point, keyed by (point index, orbit representative). */
using ModuleAssignment = std::map<OrbitRef, std::size_t>;

/** Dimension of the space of twisted conformal blocks attached to the data:
 * the product over covering components of N(genus; labels of the branch
 * orbits inside the component). The assignment must cover every orbit
 * exactly (IncompleteAssignment for gaps, BadLabel for stray keys or bad
 * label indices). */
Integer twisted_block_dim(const MonodromyData &data, const DimCache &cache,
                          const ModuleAssignment &assignment);

/** Same, reusing an already-built covering of the data. */
Integer twisted_block_dim(const CoveringReport &covering, const DimCache &cache,
                          const ModuleAssignment &assignment);

/** Per-component factor breakdown backing a dimension value. */
struct DimFactor {
  std::size_t component;
  std::int64_t genus;
  std::vector<std::size_t> insertions; // label indices in (point, orbit) order
  Integer value;
};
std::vector<DimFactor> twisted_block_factors(const CoveringReport &covering,
                                             const DimCache &cache,
                                             const ModuleAssignment &assignment);

/** A twisted module over one marked point: labels for each orbit, listed by
 * ascending orbit representative. */
struct TwistedModule {
  std::vector<std::size_t> orbit_reps;
  std::vector<std::size_t> labels;
  std::string name; // "(rep: label, ...)" with 1-based reps
};

/** The fusion table of g1- and g2-twisted modules: for each pair and each
 * candidate g1 g2-twisted output, the multiplicity
 *   N_{M1 M2}^{M3} = dim of blocks with M1, M2 inserted and M3 dualized at
 * the third point, whose permutation is (g1 o g2)^-1. */
struct TwistedFusionTable {
  MonodromyData data;                     // the three-point data used
  std::vector<TwistedModule> modules[3];  // per point, lexicographic
  std::vector<Integer> values;            // [i][j][k] flattened, k fastest
  std::size_t rows1, rows2, rows3;

  const Integer &value(std::size_t i, std::size_t j, std::size_t k) const {
    return values[(i * rows2 + j) * rows3 + k];
  }
};

/** Enumerate all label assignments per point (lexicographic in ascending
 * orbit representative, then label index) and tabulate every multiplicity.
 * CombinatorialBlowup when the entry count rows1*rows2*rows3 exceeds cap. */
TwistedFusionTable twisted_fusion_table(const DimCache &cache, std::size_t ground_size,
                                        const Permutation &g1, const Permutation &g2,
                                        std::size_t cap = 1000000);

/** Integer-graded dimensions of one untwisted module, dims[n] = dim W(n). */
struct GradedDims {
  std::vector<Integer> dims;
};

/** Graded dimensions of a twisted module: exact weights n with denominator
 * dividing the order of the twisting permutation. */
struct TwistedGradedDims {
  std::uint64_t order; // |g_j|
  std::map<Rational, Integer> weights;
};

/** Convolve per-orbit graded dimensions into the twisted module's grading
 * at point j: an orbit of size k contributes weight n/k for its degree-n
 * piece, and the total weight of a tensor term is the sum over orbits.
 * All weights up to and including max_weight are produced.
 * Errors: BadWeightDenominator (denominator of max_weight does not divide
 * |g_j|), IncompleteAssignment (an orbit without dims),
 * InsufficientTruncation (an orbit's dims stop before k * max_weight). */
TwistedGradedDims twisted_graded_dims(const MonodromyData &data, std::size_t point,
                                      const std::map<std::size_t, GradedDims> &orbit_dims,
                                      const Rational &max_weight);

/** Assignment for the contragredient data (generators inverted, same
 * orbits): every label replaced by its dual. */
ModuleAssignment contragredient_assignment(const ModuleAssignment &assignment,
                                           const FusionRing &ring);

} // namespace permblocks

#endif
