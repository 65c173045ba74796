#include "permblocks/twisted.hpp"

#include <algorithm>
#include <sstream>

namespace permblocks {

namespace {

void check_assignment(const CoveringReport &covering, const DimCache &cache,
                      const ModuleAssignment &assignment) {
  const std::size_t n_labels = cache.ring().size();
  std::size_t known = 0;
  for (const CoveringComponent &component : covering.components)
    for (const BranchRecord &record : component.branches) {
      auto it = assignment.find(record.orbit);
      if (it == assignment.end())
        raise(ErrorKind::IncompleteAssignment,
              "no label assigned to orbit " + std::to_string(record.orbit.rep + 1) +
                  " of point '" + covering.source.points()[record.point].id + "'");
      if (it->second >= n_labels)
        raise(ErrorKind::BadLabel,
              "label index " + std::to_string(it->second) + " out of range");
      ++known;
    }
  if (known != assignment.size())
    for (const auto &[ref, label] : assignment) {
      bool found = false;
      for (const CoveringComponent &component : covering.components)
        for (const BranchRecord &record : component.branches)
          found = found || record.orbit == ref;
      if (!found)
        raise(ErrorKind::BadLabel,
              "assignment references nonexistent orbit " + std::to_string(ref.rep + 1) +
                  " of point " + std::to_string(ref.point + 1));
    }
}

} // namespace

std::vector<DimFactor> twisted_block_factors(const CoveringReport &covering,
                                             const DimCache &cache,
                                             const ModuleAssignment &assignment) {
  check_assignment(covering, cache, assignment);
  std::vector<DimFactor> factors;
  factors.reserve(covering.components.size());
  for (std::size_t c = 0; c < covering.components.size(); ++c) {
    const CoveringComponent &component = covering.components[c];
    std::vector<std::size_t> insertions;
    insertions.reserve(component.branches.size());
    for (const BranchRecord &record : component.branches)
      insertions.push_back(assignment.at(record.orbit));
    Integer value = cache.block_dim(component.genus, insertions);
    factors.push_back({c, component.genus, std::move(insertions), std::move(value)});
  }
  return factors;
}

Integer twisted_block_dim(const CoveringReport &covering, const DimCache &cache,
                          const ModuleAssignment &assignment) {
  Integer result = 1;
  for (const DimFactor &factor : twisted_block_factors(covering, cache, assignment))
    result *= factor.value;
  return result;
}

Integer twisted_block_dim(const MonodromyData &data, const DimCache &cache,
                          const ModuleAssignment &assignment) {
  return twisted_block_dim(build_covering(data), cache, assignment);
}

namespace {

std::string module_name(const FusionRing &ring, const std::vector<std::size_t> &reps,
                        const std::vector<std::size_t> &labels) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (i > 0)
      out << ", ";
    out << (reps[i] + 1) << ": " << ring.labels[labels[i]];
  }
  out << ')';
  return out.str();
}

std::vector<TwistedModule> enumerate_modules(const FusionRing &ring,
                                             const std::vector<std::size_t> &reps) {
  const std::size_t n = ring.size();
  std::vector<TwistedModule> result;
  std::vector<std::size_t> labels(reps.size(), 0);
  while (true) {
    result.push_back({reps, labels, module_name(ring, reps, labels)});
    // Odometer with the last orbit fastest, so the sequence is lexicographic
    // in (orbit rep, label index).
    std::size_t i = reps.size();
    while (i > 0) {
      --i;
      if (++labels[i] < n)
        break;
      labels[i] = 0;
      if (i == 0)
        return result;
    }
    if (reps.empty())
      return result; // single empty assignment
  }
}

} // namespace

TwistedFusionTable twisted_fusion_table(const DimCache &cache, std::size_t ground_size,
                                        const Permutation &g1, const Permutation &g2,
                                        std::size_t cap) {
  const FusionRing &ring = cache.ring();
  Permutation g3 = compose(g1, g2).inverse();
  MonodromyData data = build_monodromy(
      IndexSet(ground_size), {{"x1", ""}, {"x2", ""}, {"x3", ""}},
      {g1, g2, std::move(g3)});
  CoveringReport covering = build_covering(data);

  std::vector<std::size_t> reps[3];
  for (std::size_t j = 0; j < 3; ++j)
    for (const auto &orbit : data.point_orbits(j))
      reps[j].push_back(orbit.front());

  TwistedFusionTable table{std::move(data), {}, {}, 0, 0, 0};
  for (std::size_t j = 0; j < 3; ++j)
    table.modules[j] = enumerate_modules(ring, reps[j]);
  table.rows1 = table.modules[0].size();
  table.rows2 = table.modules[1].size();
  table.rows3 = table.modules[2].size();

  const std::size_t entries = table.rows1 * table.rows2 * table.rows3;
  if (entries > cap)
    raise(ErrorKind::CombinatorialBlowup,
          "fusion table would have " + std::to_string(entries) +
              " entries, cap is " + std::to_string(cap));

  table.values.reserve(entries);
  for (const TwistedModule &m1 : table.modules[0])
    for (const TwistedModule &m2 : table.modules[1])
      for (const TwistedModule &m3 : table.modules[2]) {
        ModuleAssignment assignment;
        for (std::size_t i = 0; i < m1.orbit_reps.size(); ++i)
          assignment[{0, m1.orbit_reps[i]}] = m1.labels[i];
        for (std::size_t i = 0; i < m2.orbit_reps.size(); ++i)
          assignment[{1, m2.orbit_reps[i]}] = m2.labels[i];
        // Output module: dualize its labels at the third point.
        for (std::size_t i = 0; i < m3.orbit_reps.size(); ++i)
          assignment[{2, m3.orbit_reps[i]}] = ring.dual[m3.labels[i]];
        table.values.push_back(twisted_block_dim(covering, cache, assignment));
      }
  return table;
}

TwistedGradedDims twisted_graded_dims(const MonodromyData &data, std::size_t point,
                                      const std::map<std::size_t, GradedDims> &orbit_dims,
                                      const Rational &max_weight) {
  if (point >= data.point_count())
    raise(ErrorKind::BadGeneratorIndex,
          "point index " + std::to_string(point) + " out of range");
  if (max_weight < 0)
    raise(ErrorKind::BadWeightDenominator, "negative truncation weight");

  const Permutation &g = data.gen(point);
  const std::uint64_t order = g.order();

  Rational weight = max_weight;
  weight.canonicalize();
  if (!mpz_divisible_p(Integer(order).get_mpz_t(), weight.get_den().get_mpz_t()))
    raise(ErrorKind::BadWeightDenominator,
          "truncation weight " + to_string(weight) +
              " has denominator not dividing the twist order " + std::to_string(order));

  auto point_orbits = data.point_orbits(point);
  TwistedGradedDims result{order, {}};
  result.weights[Rational(0)] = 1;

  for (const auto &orbit : point_orbits) {
    auto it = orbit_dims.find(orbit.front());
    if (it == orbit_dims.end())
      raise(ErrorKind::IncompleteAssignment,
            "no graded dimensions for orbit " + std::to_string(orbit.front() + 1));
    const std::vector<Integer> &dims = it->second.dims;
    for (const Integer &d : dims)
      if (d < 0)
        raise(ErrorKind::SchemaError, "negative graded dimension");

    const std::uint64_t k = orbit.size();
    // Need every degree n with n/k <= max_weight, i.e. n <= k * max_weight.
    Rational bound = weight * Rational(static_cast<unsigned long>(k));
    bound.canonicalize();
    Integer needed = bound.get_num() / bound.get_den(); // floor, both >= 0
    if (Integer(static_cast<unsigned long>(dims.size())) <= needed)
      raise(ErrorKind::InsufficientTruncation,
            "orbit " + std::to_string(orbit.front() + 1) + " needs dims up to degree " +
                to_string(needed) + " but only " + std::to_string(dims.size()) +
                " entries were given");

    std::map<Rational, Integer> next;
    for (const auto &[w, count] : result.weights) {
      if (count == 0)
        continue;
      for (std::size_t n = 0; n < dims.size(); ++n) {
        if (dims[n] == 0)
          continue;
        Rational w2 = w + Rational(static_cast<unsigned long>(n),
                                   static_cast<unsigned long>(k));
        w2.canonicalize();
        if (w2 > weight)
          break; // degrees ascend, so later n only grow
        next[w2] += count * dims[n];
      }
    }
    result.weights = std::move(next);
  }
  return result;
}

ModuleAssignment contragredient_assignment(const ModuleAssignment &assignment,
                                           const FusionRing &ring) {
  ModuleAssignment result;
  for (const auto &[ref, label] : assignment) {
    if (label >= ring.size())
      raise(ErrorKind::BadLabel,
            "label index " + std::to_string(label) + " out of range");
    result[ref] = ring.dual[label];
  }
  return result;
}

} // namespace permblocks
