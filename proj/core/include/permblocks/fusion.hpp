#ifndef PERMBLOCKS_FUSION_HPP
#define PERMBLOCKS_FUSION_HPP

#include "permblocks/errors.hpp"
#include "permblocks/integer.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permblocks {

/** A fusion ring presented by structure constants.
 *
 * Labels are indexed in file order; `unit` and `dual` refer to indices.
 * coeff(a, b, c) is the multiplicity N_{ab}^c, stored densely. The struct
 * itself carries no guarantees beyond shape; run validate_ring (or build a
 * DimCache) before trusting the axioms. */
struct FusionRing {
  std::string name; // optional, for reports
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  std::vector<Integer> coeffs; // dense, size labels^3, index (a*n + b)*n + c

  std::size_t size() const { return labels.size(); }

  const Integer &coeff(std::size_t a, std::size_t b, std::size_t c) const;
  void set_coeff(std::size_t a, std::size_t b, std::size_t c, Integer value);

  std::optional<std::size_t> label_index(std::string_view label) const;

  /** Shape checks only (sizes, ranges, duplicate labels); the axioms are
   * validate_ring's job. Raises InvalidRing. */
  void check_structure() const;
};

/** One failed axiom with a concrete counterexample. */
struct AxiomViolation {
  std::string axiom;               // "dual-involution", "unit", "duality",
                                   // "commutativity", "associativity", "frobenius"
  std::vector<std::size_t> where;  // offending label indices
  std::string detail;
};

/** Check the fusion ring axioms and report every violation found:
 * dual is an involution fixing the unit; N_{1a}^b = delta_{ab};
 * N_{ab}^{1} = delta_{b, dual(a)}; commutativity; associativity;
 * Frobenius reciprocity N_{ab}^c = N_{a,dual(c)}^{dual(b)}.
 * Raises InvalidRing only for structural breakage (bad shapes). */
std::vector<AxiomViolation> validate_ring(const FusionRing &ring);

/** Genus and insertion labels of one conformal-block dimension query. */
struct GenusQuery {
  std::int64_t genus = 0;
  std::vector<std::size_t> insertions; // label indices, any order
};

/** Memoized evaluator for block dimensions N(g; W_1, ..., W_N) over a fixed
 * ring. Construction validates the ring (InvalidRing) unless downgraded.
 * Queries are safe to issue from multiple threads; the memo table is
 * shared under a mutex and never held across recursion.
 *
 * Recursion: genus handles are removed first,
 *   N(g; S) = sum_M N(g-1; S + {M, M'}),
 * with N(g; {}) = N(g; {unit}) for g >= 1; at genus 0 insertions are peeled
 * two at a time,
 *   N(0; a, b, rest) = sum_M N(0; a, b, M) * N(0; rest + {M'}),
 * down to the closed forms N(0; a,b,c) = N_{ab}^{dual(c)},
 * N(0; a,b) = delta_{b, dual(a)}, N(0; a) = delta_{a, unit}, N(0; {}) = 1.
 * Values are exact and independent of insertion order. */
class DimCache {
public:
  explicit DimCache(FusionRing ring, bool validate = true);

  const FusionRing &ring() const { return ring_; }

  /** Evaluate one query. Errors: BadLabel (index out of range) and
   * InvalidRing (negative genus). */
  Integer block_dim(const GenusQuery &query) const;
  Integer block_dim(std::int64_t genus, std::vector<std::size_t> insertions) const;

private:
  using Key = std::pair<std::int64_t, std::vector<std::size_t>>;

  Integer eval(std::int64_t genus, std::vector<std::size_t> sorted) const;

  FusionRing ring_;
  mutable std::map<Key, Integer> memo_;
  mutable std::mutex mutex_;
};

/** One-shot convenience: validates the ring, evaluates, discards the memo. */
Integer block_dim(const FusionRing &ring, const GenusQuery &query);

/** Deterministic rendering of all n^2 products "a x b = ...", rows in label
 * order. Raises InvalidRing when the ring fails validation. */
std::string fusion_table(const FusionRing &ring);

} // namespace permblocks

#endif
