#ifndef PERMBLOCKS_SEWING_HPP
#define PERMBLOCKS_SEWING_HPP

#include "permblocks/twisted.hpp"

#include <string>
#include <vector>

namespace permblocks {

/** Two admissible data sets to be glued at one point each. Both must share
 * the ground set, the glued generators must be mutually inverse
 * (g0 o h0 = id), and each side must keep at least one other point. */
struct SewSpec {
  MonodromyData left;
  MonodromyData right;
  std::size_t sew_left = 0;
  std::size_t sew_right = 0;
};

/** Result of sewing: the glued data lists the left side's surviving points
 * (in cyclic order starting after the sewn point) followed by the right
 * side's. Point indices of survivors are recorded for callers that need to
 * remap orbit references, as are any right-side id renames. */
struct SewResult {
  MonodromyData data;
  std::vector<std::size_t> left_points;  // new index -> old left index
  std::vector<std::size_t> right_points; // new index (offset) -> old right index
  std::vector<std::pair<std::string, std::string>> renames; // right ids old -> new

  /** New index of old left point j (must not be the sewn point). */
  std::size_t left_index(std::size_t j) const;
  /** New index of old right point j (must not be the sewn point). */
  std::size_t right_index(std::size_t j) const;
};

/** Glue the two spheres at the sewn points. Validation: GroundMismatch,
 * SewPairNotInverse (g0 o h0 != id), NoRemainingPoints (a side consists of
 * only its sewn point). The output is admissible by construction; this is
 * re-checked and a failure raises Internal. Marked choices of surviving
 * points carry over. */
SewResult sew(const SewSpec &spec);

/** One glued tube: a <g0>-orbit together with the left and right component
 * (indices into the respective covering reports) it connects. */
struct GluedTube {
  std::size_t orbit_rep;
  std::size_t left_component;
  std::size_t right_component;
};

/** Surgery bookkeeping for covering_commutes: every <g0>-orbit becomes one
 * tube; merged components are connected groups of side components. */
struct SurgeryLedger {
  std::vector<GluedTube> tubes;
  std::vector<std::size_t> merged_of_left;  // left component -> merged index
  std::vector<std::size_t> merged_of_right; // right component -> merged index
  std::vector<std::size_t> tube_count;      // per merged component
};

struct SurgeryComparison {
  SewResult sewn;
  CoveringReport direct;    // covering of the sewn data
  CoveringReport predicted; // assembled from the side coverings by surgery
  SurgeryLedger ledger;
};

/** Build the covering of the sewn data directly, and predict it from the
 * coverings of the two sides: merge components along the tubes and account
 * genus via Euler characteristics (chi = sum chi_i - 2 * #tubes). The two
 * must agree component by component (elements, genus, branch data);
 * disagreement raises Internal. */
SurgeryComparison covering_commutes(const SewSpec &spec);

/** Result of the factorization identity check. */
struct FactorizationReport {
  Integer lhs;        // dimension attached to the sewn data
  Integer rhs;        // sum over intermediate assignments of products
  std::size_t terms;  // number of intermediate assignments summed
};

/** Verify that the dimension of the sewn data equals the sum, over all
 * total assignments X of labels to the <g0>-orbits, of
 *   dim(left, rest + X) * dim(right, rest + dual(X)).
 * assign_left_rest / assign_right_rest must cover exactly the non-sewn
 * orbits of their side (IncompleteAssignment / BadLabel otherwise).
 * CombinatorialBlowup when labels^#orbits exceeds cap. A mismatch between
 * the two sides of the identity raises Internal. */
FactorizationReport factorization_check(const SewSpec &spec, const DimCache &cache,
                                        const ModuleAssignment &assign_left_rest,
                                        const ModuleAssignment &assign_right_rest,
                                        std::size_t cap = 1000000);

} // namespace permblocks

#endif
