#include "permblocks/fusion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace permblocks {

const Integer &FusionRing::coeff(std::size_t a, std::size_t b, std::size_t c) const {
  const std::size_t n = labels.size();
  if (a >= n || b >= n || c >= n)
    raise(ErrorKind::BadLabel, "coefficient index out of range");
  return coeffs[(a * n + b) * n + c];
}

void FusionRing::set_coeff(std::size_t a, std::size_t b, std::size_t c, Integer value) {
  const std::size_t n = labels.size();
  if (a >= n || b >= n || c >= n)
    raise(ErrorKind::BadLabel, "coefficient index out of range");
  coeffs[(a * n + b) * n + c] = std::move(value);
}

std::optional<std::size_t> FusionRing::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label)
      return i;
  return std::nullopt;
}

void FusionRing::check_structure() const {
  const std::size_t n = labels.size();
  if (n == 0)
    raise(ErrorKind::InvalidRing, "ring has no labels");
  std::set<std::string> seen;
  for (const std::string &label : labels) {
    if (label.empty())
      raise(ErrorKind::InvalidRing, "empty label");
    if (!seen.insert(label).second)
      raise(ErrorKind::InvalidRing, "duplicate label '" + label + "'");
  }
  if (unit >= n)
    raise(ErrorKind::InvalidRing, "unit index out of range");
  if (dual.size() != n)
    raise(ErrorKind::InvalidRing, "dual table has wrong size");
  for (std::size_t d : dual)
    if (d >= n)
      raise(ErrorKind::InvalidRing, "dual index out of range");
  if (coeffs.size() != n * n * n)
    raise(ErrorKind::InvalidRing, "coefficient table has wrong size");
  for (const Integer &value : coeffs)
    if (value < 0)
      raise(ErrorKind::InvalidRing, "negative coefficient");
}

std::vector<AxiomViolation> validate_ring(const FusionRing &ring) {
  ring.check_structure();
  const std::size_t n = ring.size();
  std::vector<AxiomViolation> violations;

  auto label = [&](std::size_t i) { return ring.labels[i]; };

  for (std::size_t a = 0; a < n; ++a)
    if (ring.dual[ring.dual[a]] != a)
      violations.push_back({"dual-involution", {a},
                            "dual(dual(" + label(a) + ")) = " +
                                label(ring.dual[ring.dual[a]])});
  if (ring.dual[ring.unit] != ring.unit)
    violations.push_back({"dual-involution", {ring.unit},
                          "dual(" + label(ring.unit) + ") = " +
                              label(ring.dual[ring.unit]) + ", expected the unit"});

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Integer &value = ring.coeff(ring.unit, a, b);
      Integer expected = (a == b) ? 1 : 0;
      if (value != expected)
        violations.push_back({"unit", {a, b},
                              "N(" + label(ring.unit) + "," + label(a) + ";" +
                                  label(b) + ") = " + to_string(value)});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Integer &value = ring.coeff(a, b, ring.unit);
      Integer expected = (b == ring.dual[a]) ? 1 : 0;
      if (value != expected)
        violations.push_back({"duality", {a, b},
                              "N(" + label(a) + "," + label(b) + ";" +
                                  label(ring.unit) + ") = " + to_string(value)});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (ring.coeff(a, b, c) != ring.coeff(b, a, c))
          violations.push_back({"commutativity", {a, b, c},
                                "N(" + label(a) + "," + label(b) + ";" + label(c) +
                                    ") = " + to_string(ring.coeff(a, b, c)) +
                                    " but N(" + label(b) + "," + label(a) + ";" +
                                    label(c) + ") = " + to_string(ring.coeff(b, a, c))});

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Integer lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < n; ++e) {
            lhs += ring.coeff(a, b, e) * ring.coeff(e, c, d);
            rhs += ring.coeff(b, c, e) * ring.coeff(a, e, d);
          }
          if (lhs != rhs)
            violations.push_back({"associativity", {a, b, c, d},
                                  "((" + label(a) + " " + label(b) + ") " + label(c) +
                                      " -> " + label(d) + ") = " + to_string(lhs) +
                                      " but (" + label(a) + " (" + label(b) + " " +
                                      label(c) + ") -> " + label(d) + ") = " +
                                      to_string(rhs)});
        }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Integer &lhs = ring.coeff(a, b, c);
        const Integer &rhs = ring.coeff(a, ring.dual[c], ring.dual[b]);
        if (lhs != rhs)
          violations.push_back({"frobenius", {a, b, c},
                                "N(" + label(a) + "," + label(b) + ";" + label(c) +
                                    ") = " + to_string(lhs) + " but N(" + label(a) +
                                    "," + label(ring.dual[c]) + ";" +
                                    label(ring.dual[b]) + ") = " + to_string(rhs)});
      }

  return violations;
}

DimCache::DimCache(FusionRing ring, bool validate) : ring_(std::move(ring)) {
  ring_.check_structure();
  if (validate) {
    auto violations = validate_ring(ring_);
    if (!violations.empty())
      raise(ErrorKind::InvalidRing,
            "ring fails validation (" + std::to_string(violations.size()) +
                " violations); first: " + violations.front().axiom + ": " +
                violations.front().detail);
  }
}

Integer DimCache::block_dim(const GenusQuery &query) const {
  return block_dim(query.genus, query.insertions);
}

Integer DimCache::block_dim(std::int64_t genus, std::vector<std::size_t> insertions) const {
  if (genus < 0)
    raise(ErrorKind::InvalidRing, "negative genus");
  for (std::size_t label : insertions)
    if (label >= ring_.size())
      raise(ErrorKind::BadLabel,
            "insertion index " + std::to_string(label) + " out of range");
  std::sort(insertions.begin(), insertions.end());
  return eval(genus, std::move(insertions));
}

Integer DimCache::eval(std::int64_t genus, std::vector<std::size_t> sorted) const {
  const std::size_t n = ring_.size();

  if (genus == 0) {
    switch (sorted.size()) {
    case 0:
      return 1;
    case 1:
      return sorted[0] == ring_.unit ? 1 : 0;
    case 2:
      return sorted[1] == ring_.dual[sorted[0]] ? 1 : 0;
    case 3:
      return ring_.coeff(sorted[0], sorted[1], ring_.dual[sorted[2]]);
    default:
      break;
    }
  } else if (sorted.empty()) {
    // N(g; {}) = N(g; {unit}) for g >= 1; canonicalized before memo lookup
    // so both spellings share an entry.
    sorted.push_back(ring_.unit);
  }

  Key key{genus, sorted};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end())
      return it->second;
  }

  Integer result = 0;
  if (genus >= 1) {
    // Trade one handle for a dual pair of insertions.
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<std::size_t> next = sorted;
      next.push_back(m);
      next.push_back(ring_.dual[m]);
      std::sort(next.begin(), next.end());
      result += eval(genus - 1, std::move(next));
    }
  } else {
    // Pants peel: split off the first two insertions against a summed
    // intermediate label.
    std::vector<std::size_t> rest(sorted.begin() + 2, sorted.end());
    for (std::size_t m = 0; m < n; ++m) {
      const Integer &three = ring_.coeff(sorted[0], sorted[1], ring_.dual[m]);
      if (three == 0)
        continue;
      std::vector<std::size_t> next = rest;
      next.push_back(ring_.dual[m]);
      std::sort(next.begin(), next.end());
      result += three * eval(0, std::move(next));
    }
  }

  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

Integer block_dim(const FusionRing &ring, const GenusQuery &query) {
  return DimCache(ring).block_dim(query);
}

std::string fusion_table(const FusionRing &ring) {
  auto violations = validate_ring(ring);
  if (!violations.empty())
    raise(ErrorKind::InvalidRing,
          "ring fails validation (" + std::to_string(violations.size()) +
              " violations); first: " + violations.front().axiom + ": " +
              violations.front().detail);
  const std::size_t n = ring.size();
  std::ostringstream out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      out << ring.labels[a] << " x " << ring.labels[b] << " =";
      bool empty = true;
      for (std::size_t c = 0; c < n; ++c) {
        const Integer &value = ring.coeff(a, b, c);
        if (value == 0)
          continue;
        out << (empty ? " " : " + ");
        if (value != 1)
          out << to_string(value) << "*";
        out << ring.labels[c];
        empty = false;
      }
      if (empty)
        out << " 0";
      out << '\n';
    }
  return out.str();
}

} // namespace permblocks
