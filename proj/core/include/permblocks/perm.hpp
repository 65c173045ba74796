#ifndef PERMBLOCKS_PERM_HPP
#define PERMBLOCKS_PERM_HPP

#include "permblocks/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permblocks {

/** Finite ground set {1, ..., size} with optional display names.
 *
 * Elements are handled 0-based internally; every textual interface (cycle
 * strings, file schemas, reports) is 1-based. Names, when present, are
 * pairwise distinct and never consist solely of digits, so a token in a
 * cycle string is unambiguous: digits mean a 1-based index, anything else
 * is looked up as a name. */
class IndexSet {
public:
  explicit IndexSet(std::size_t size);
  IndexSet(std::size_t size, const std::map<std::size_t, std::string> &names);

  std::size_t size() const { return size_; }

  /** Display name of element i: its name if set, else the 1-based index. */
  std::string display(std::size_t i) const;

  /** Name of element i, or empty string if unnamed. */
  const std::string &name(std::size_t i) const { return names_[i]; }

  /** Resolve a token (name or 1-based integer) to a 0-based element. */
  std::optional<std::size_t> find(std::string_view token) const;

  bool operator==(const IndexSet &other) const = default;

private:
  std::size_t size_;
  std::vector<std::string> names_;
};

/** Permutation of {0, ..., n-1} by its image table.
 *
 * Composition acts on the left: compose(a, b) maps e to a(b(e)). */
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t e) const { return images_[e]; }
  const std::vector<std::size_t> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /** Multiplicative order (lcm of cycle lengths). */
  std::uint64_t order() const;

  /** Nontrivial cycles, each rotated to start at its least element, sorted
   * by least element. */
  std::vector<std::vector<std::size_t>> cycles() const;

  bool operator==(const Permutation &other) const = default;
  bool operator<(const Permutation &other) const { return images_ < other.images_; }

private:
  std::vector<std::size_t> images_;
};

/** Left-action product: (a o b)(e) = a(b(e)). Degrees must agree. */
Permutation compose(const Permutation &a, const Permutation &b);

/** Parse a permutation in cycle notation over the given ground set.
 *
 * Grammar:  perm := "id" | "()" | cycle+
 *           cycle := "(" elem (sep elem)+ ")"
 *           sep := whitespace | ","
 * Cycles need at least two elements; fixed points are omitted. Tokens are
 * element names or 1-based indices. Errors: UnknownElement, RepeatedElement
 * (an element appearing twice across all cycles), MalformedSyntax. */
Permutation parse_cycles(std::string_view text, const IndexSet &ground);

/** Serialize in canonical cycle notation: "id" for the identity, else
 * cycles sorted by least element, elements space-separated. Inverse of
 * parse_cycles on its output. */
std::string format_cycles(const Permutation &perm, const IndexSet &ground);

/** Orbits of the group generated by gens on {0, ..., ground_size-1},
 * computed by union-find; each orbit sorted ascending, orbits sorted by
 * least element. Every gen must have degree ground_size (GroundMismatch). */
std::vector<std::vector<std::size_t>>
orbits(std::span<const Permutation> gens, std::size_t ground_size);

/** One letter of a word in an ambient generator list: gens[generator]
 * raised to a nonzero exponent. */
struct WordLetter {
  std::size_t generator;
  std::int64_t exponent;
};

/** Word in ambient generators, multiplied left to right under compose, so
 * eval_word({{0,1},{1,1}}, gens) = compose(gens[0], gens[1]). */
struct GroupWord {
  std::vector<WordLetter> letters;
};

/** Evaluate a word against a generator list. Errors: BadGeneratorIndex for
 * an out-of-range generator, MalformedSyntax for a zero exponent, and
 * GroundMismatch for generators of unequal degree. */
Permutation eval_word(const GroupWord &word, std::span<const Permutation> gens);

} // namespace permblocks

#endif
