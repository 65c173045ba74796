#ifndef PERMBLOCKS_MONODROMY_HPP
#define PERMBLOCKS_MONODROMY_HPP

#include "permblocks/perm.hpp"

#include <map>
#include <string>
#include <vector>

namespace permblocks {

/** A marked point on the base sphere. The position hint is display-only
 * (a coordinate or a symbolic tag); all computation depends only on the
 * point ordering and its permutation. */
struct MarkedPoint {
  std::string id;
  std::string position_hint; // may be empty

  bool operator==(const MarkedPoint &) const = default;
};

/** Reference to one <g_j>-orbit: the point index and the orbit's least
 * element (its canonical representative). */
struct OrbitRef {
  std::size_t point;
  std::size_t rep;

  auto operator<=>(const OrbitRef &) const = default;
};

/** Result of the admissibility check: the ordered left-action product
 * gens[0] o gens[1] o ... o gens[N-1], which must be the identity. The
 * product is returned as a witness when it is not. */
struct AdmissibilityResult {
  bool admissible;
  Permutation product;
};

/** Compute the ordered product of the generators and compare with the
 * identity. Errors: EmptyData (no generators), GroundMismatch. */
AdmissibilityResult check_admissible(std::span<const Permutation> gens,
                                     std::size_t ground_size);

/** Monodromy data of a pointed sphere: a ground set E, ordered marked
 * points with one permutation each, and a chosen marked element in every
 * <g_j>-orbit. Instances are always admissible; construct them through
 * build_monodromy (or sew / rebase), which validate. */
class MonodromyData {
public:
  const IndexSet &ground() const { return ground_; }
  const std::vector<MarkedPoint> &points() const { return points_; }
  const std::vector<Permutation> &gens() const { return gens_; }
  std::size_t point_count() const { return points_.size(); }
  const Permutation &gen(std::size_t j) const { return gens_[j]; }

  /** Orbits of <g_j> on the ground set (including fixed points), each
   * sorted ascending, ordered by least element. */
  std::vector<std::vector<std::size_t>> point_orbits(std::size_t j) const;

  /** Chosen marked element per orbit; keys cover every orbit of every
   * point. Defaults to the orbit's least element. */
  const std::map<OrbitRef, std::size_t> &marked() const { return marked_; }
  std::size_t marked_element(const OrbitRef &orbit) const;

  friend MonodromyData build_monodromy(IndexSet ground,
                                       std::vector<MarkedPoint> points,
                                       std::vector<Permutation> gens,
                                       const std::map<OrbitRef, std::size_t> &);

private:
  MonodromyData(IndexSet ground, std::vector<MarkedPoint> points,
                std::vector<Permutation> gens,
                const std::map<OrbitRef, std::size_t> &marked_overrides);

  IndexSet ground_;
  std::vector<MarkedPoint> points_;
  std::vector<Permutation> gens_;
  std::map<OrbitRef, std::size_t> marked_;
};

/** Validate and assemble monodromy data.
 *
 * Checks: nonempty ground and point list, distinct point ids, one generator
 * per point acting on the ground set, ordered product = identity, and that
 * every marked override names an existing orbit by its representative and
 * picks an element inside that orbit. Unspecified orbits get their least
 * element. Errors: EmptyData, SchemaError (duplicate ids), GroundMismatch,
 * NotAdmissible, BadMarkedChoice. */
MonodromyData build_monodromy(IndexSet ground, std::vector<MarkedPoint> points,
                              std::vector<Permutation> gens,
                              const std::map<OrbitRef, std::size_t> &marked_overrides = {});

/** Change of base point along sigma: every generator g_j is replaced by
 * s^-1 o g_j o s where s = eval_word(sigma, gens). Point ids and order are
 * kept; marked choices are re-derived by the default rule. The result is
 * admissible whenever the input is. */
MonodromyData rebase(const MonodromyData &data, const GroupWord &sigma);

} // namespace permblocks

#endif
