#include "permblocks/sewing.hpp"

#include "union_find.hpp"

#include <algorithm>
#include <set>

namespace permblocks {

std::size_t SewResult::left_index(std::size_t j) const {
  for (std::size_t i = 0; i < left_points.size(); ++i)
    if (left_points[i] == j)
      return i;
  raise(ErrorKind::BadGeneratorIndex,
        "left point " + std::to_string(j + 1) + " did not survive the sewing");
}

std::size_t SewResult::right_index(std::size_t j) const {
  for (std::size_t i = 0; i < right_points.size(); ++i)
    if (right_points[i] == j)
      return left_points.size() + i;
  raise(ErrorKind::BadGeneratorIndex,
        "right point " + std::to_string(j + 1) + " did not survive the sewing");
}

SewResult sew(const SewSpec &spec) {
  const MonodromyData &left = spec.left;
  const MonodromyData &right = spec.right;

  if (!(left.ground() == right.ground()))
    raise(ErrorKind::GroundMismatch, "sides act on different ground sets");
  if (spec.sew_left >= left.point_count())
    raise(ErrorKind::SchemaError, "left sew point index out of range");
  if (spec.sew_right >= right.point_count())
    raise(ErrorKind::SchemaError, "right sew point index out of range");
  if (left.point_count() < 2 || right.point_count() < 2)
    raise(ErrorKind::NoRemainingPoints,
          "each side needs at least one point besides the sewn one");

  const Permutation &g0 = left.gen(spec.sew_left);
  const Permutation &h0 = right.gen(spec.sew_right);
  if (!compose(g0, h0).is_identity())
    raise(ErrorKind::SewPairNotInverse,
          "sewn generators are not mutually inverse: g0 o h0 = " +
              format_cycles(compose(g0, h0), left.ground()));

  // Cyclic rotation brings each sewn point to the front without disturbing
  // admissibility; the glued data then lists the left survivors followed by
  // the right survivors.
  std::vector<std::size_t> left_points, right_points;
  for (std::size_t i = 1; i < left.point_count(); ++i)
    left_points.push_back((spec.sew_left + i) % left.point_count());
  for (std::size_t i = 1; i < right.point_count(); ++i)
    right_points.push_back((spec.sew_right + i) % right.point_count());

  auto new_left_index = [&](std::size_t j) {
    return static_cast<std::size_t>(
        std::find(left_points.begin(), left_points.end(), j) - left_points.begin());
  };
  auto new_right_index = [&](std::size_t j) {
    return left_points.size() +
           static_cast<std::size_t>(std::find(right_points.begin(), right_points.end(), j) -
                                    right_points.begin());
  };

  std::vector<MarkedPoint> points;
  std::vector<Permutation> gens;
  std::vector<std::pair<std::string, std::string>> renames;
  std::set<std::string> ids;
  for (std::size_t j : left_points) {
    points.push_back(left.points()[j]);
    gens.push_back(left.gen(j));
    ids.insert(points.back().id);
  }
  for (std::size_t j : right_points) {
    MarkedPoint point = right.points()[j];
    std::string renamed = point.id;
    while (ids.contains(renamed))
      renamed += "_b";
    if (renamed != point.id)
      renames.emplace_back(point.id, renamed);
    point.id = renamed;
    ids.insert(renamed);
    points.push_back(std::move(point));
    gens.push_back(right.gen(j));
  }

  std::map<OrbitRef, std::size_t> marked;
  for (const auto &[ref, element] : left.marked())
    if (ref.point != spec.sew_left)
      marked[{new_left_index(ref.point), ref.rep}] = element;
  for (const auto &[ref, element] : right.marked())
    if (ref.point != spec.sew_right)
      marked[{new_right_index(ref.point), ref.rep}] = element;

  // The sides satisfy g0 g1...gN = id and h0 h1...hK = id with g0 h0 = id,
  // so g1...gN h1...hK = g0^-1 h0^-1 = id; anything else is a bug.
  try {
    return SewResult{build_monodromy(left.ground(), std::move(points),
                                     std::move(gens), marked),
                     std::move(left_points), std::move(right_points),
                     std::move(renames)};
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::NotAdmissible)
      raise(ErrorKind::Internal,
            std::string("sewn data failed the admissibility assertion: ") + e.what());
    throw;
  }
}

SurgeryComparison covering_commutes(const SewSpec &spec) {
  SewResult sewn = sew(spec);
  CoveringReport direct = build_covering(sewn.data);
  CoveringReport left_cov = build_covering(spec.left);
  CoveringReport right_cov = build_covering(spec.right);

  const std::size_t n = spec.left.ground().size();
  std::vector<std::size_t> left_comp_of(n), right_comp_of(n);
  for (std::size_t c = 0; c < left_cov.components.size(); ++c)
    for (std::size_t e : left_cov.components[c].orbit)
      left_comp_of[e] = c;
  for (std::size_t c = 0; c < right_cov.components.size(); ++c)
    for (std::size_t e : right_cov.components[c].orbit)
      right_comp_of[e] = c;

  const Permutation &g0 = spec.left.gen(spec.sew_left);
  auto tube_orbits = orbits(std::span(&g0, 1), n);

  const std::size_t n_left = left_cov.components.size();
  const std::size_t n_right = right_cov.components.size();
  detail::UnionFind uf(n_left + n_right);

  SurgeryLedger ledger;
  for (const auto &orbit : tube_orbits) {
    std::size_t lc = left_comp_of[orbit.front()];
    std::size_t rc = right_comp_of[orbit.front()];
    ledger.tubes.push_back({orbit.front(), lc, rc});
    uf.unite(lc, n_left + rc);
  }

  // Merged groups ordered by their least ground element so the prediction
  // lines up with build_covering's component order.
  std::map<std::size_t, std::size_t> merged_index; // least element -> index
  std::vector<std::size_t> root_min(n_left + n_right, n);
  for (std::size_t c = 0; c < n_left; ++c) {
    std::size_t root = uf.find(c);
    root_min[root] = std::min(root_min[root], left_cov.components[c].orbit.front());
  }
  for (std::size_t c = 0; c < n_right; ++c) {
    std::size_t root = uf.find(n_left + c);
    root_min[root] = std::min(root_min[root], right_cov.components[c].orbit.front());
  }
  std::vector<std::size_t> roots;
  for (std::size_t r = 0; r < root_min.size(); ++r)
    if (uf.find(r) == r && root_min[r] < n)
      roots.push_back(r);
  std::sort(roots.begin(), roots.end(),
            [&](std::size_t a, std::size_t b) { return root_min[a] < root_min[b]; });
  for (std::size_t i = 0; i < roots.size(); ++i)
    merged_index[roots[i]] = i;

  ledger.merged_of_left.resize(n_left);
  ledger.merged_of_right.resize(n_right);
  ledger.tube_count.assign(roots.size(), 0);
  for (std::size_t c = 0; c < n_left; ++c)
    ledger.merged_of_left[c] = merged_index.at(uf.find(c));
  for (std::size_t c = 0; c < n_right; ++c)
    ledger.merged_of_right[c] = merged_index.at(uf.find(n_left + c));
  for (const GluedTube &tube : ledger.tubes)
    ledger.tube_count[ledger.merged_of_left[tube.left_component]] += 1;

  // Assemble the predicted components: elements from either side's parts
  // (they must coincide), genus from chi = sum chi_i - 2 * #tubes, branch
  // records carried over with remapped point indices.
  std::vector<CoveringComponent> predicted(roots.size());
  std::vector<std::int64_t> chi(roots.size(), 0);
  std::vector<std::vector<std::size_t>> right_elements(roots.size());

  for (std::size_t c = 0; c < n_left; ++c) {
    const CoveringComponent &part = left_cov.components[c];
    std::size_t m = ledger.merged_of_left[c];
    predicted[m].orbit.insert(predicted[m].orbit.end(), part.orbit.begin(),
                              part.orbit.end());
    chi[m] += 2 - 2 * part.genus;
    for (const BranchRecord &record : part.branches) {
      if (record.point == spec.sew_left)
        continue;
      BranchRecord moved = record;
      moved.point = sewn.left_index(record.point);
      moved.orbit.point = moved.point;
      predicted[m].branches.push_back(std::move(moved));
    }
  }
  for (std::size_t c = 0; c < n_right; ++c) {
    const CoveringComponent &part = right_cov.components[c];
    std::size_t m = ledger.merged_of_right[c];
    right_elements[m].insert(right_elements[m].end(), part.orbit.begin(),
                             part.orbit.end());
    chi[m] += 2 - 2 * part.genus;
    for (const BranchRecord &record : part.branches) {
      if (record.point == spec.sew_right)
        continue;
      BranchRecord moved = record;
      moved.point = sewn.right_index(record.point);
      moved.orbit.point = moved.point;
      predicted[m].branches.push_back(std::move(moved));
    }
  }

  for (std::size_t m = 0; m < predicted.size(); ++m) {
    CoveringComponent &component = predicted[m];
    std::sort(component.orbit.begin(), component.orbit.end());
    std::sort(right_elements[m].begin(), right_elements[m].end());
    if (component.orbit != right_elements[m])
      raise(ErrorKind::Internal,
            "left and right parts of a merged component cover different elements");
    component.degree = component.orbit.size();
    std::sort(component.branches.begin(), component.branches.end(),
              [](const BranchRecord &a, const BranchRecord &b) {
                return std::pair(a.point, a.orbit.rep) < std::pair(b.point, b.orbit.rep);
              });
    const std::int64_t chi_merged =
        chi[m] - 2 * static_cast<std::int64_t>(ledger.tube_count[m]);
    if ((2 - chi_merged) % 2 != 0)
      raise(ErrorKind::Internal, "odd Euler characteristic after surgery");
    component.genus = (2 - chi_merged) / 2;
    if (component.genus < 0)
      raise(ErrorKind::Internal, "negative genus after surgery");
  }

  CoveringReport predicted_report{sewn.data, std::move(predicted),
                                  direct.total_degree};

  if (predicted_report.components != direct.components)
    raise(ErrorKind::Internal,
          "surgery prediction disagrees with the covering of the sewn data");

  return SurgeryComparison{std::move(sewn), std::move(direct),
                           std::move(predicted_report), std::move(ledger)};
}

namespace {

void check_rest_assignment(const MonodromyData &side, std::size_t sew_point,
                           const ModuleAssignment &rest, std::size_t n_labels,
                           const char *which) {
  std::set<OrbitRef> expected;
  for (std::size_t j = 0; j < side.point_count(); ++j) {
    if (j == sew_point)
      continue;
    for (const auto &orbit : side.point_orbits(j))
      expected.insert({j, orbit.front()});
  }
  for (const OrbitRef &ref : expected)
    if (!rest.contains(ref))
      raise(ErrorKind::IncompleteAssignment,
            std::string(which) + " assignment misses orbit " +
                std::to_string(ref.rep + 1) + " of point " +
                std::to_string(ref.point + 1));
  for (const auto &[ref, label] : rest) {
    if (!expected.contains(ref))
      raise(ErrorKind::BadLabel,
            std::string(which) + " assignment references orbit " +
                std::to_string(ref.rep + 1) + " of point " +
                std::to_string(ref.point + 1) +
                ", which is not a non-sewn orbit");
    if (label >= n_labels)
      raise(ErrorKind::BadLabel,
            "label index " + std::to_string(label) + " out of range");
  }
}

} // namespace

FactorizationReport factorization_check(const SewSpec &spec, const DimCache &cache,
                                        const ModuleAssignment &assign_left_rest,
                                        const ModuleAssignment &assign_right_rest,
                                        std::size_t cap) {
  const FusionRing &ring = cache.ring();
  SewResult sewn = sew(spec);

  check_rest_assignment(spec.left, spec.sew_left, assign_left_rest, ring.size(), "left");
  check_rest_assignment(spec.right, spec.sew_right, assign_right_rest, ring.size(),
                        "right");

  CoveringReport sewn_cov = build_covering(sewn.data);
  CoveringReport left_cov = build_covering(spec.left);
  CoveringReport right_cov = build_covering(spec.right);

  ModuleAssignment combined;
  for (const auto &[ref, label] : assign_left_rest)
    combined[{sewn.left_index(ref.point), ref.rep}] = label;
  for (const auto &[ref, label] : assign_right_rest)
    combined[{sewn.right_index(ref.point), ref.rep}] = label;
  Integer lhs = twisted_block_dim(sewn_cov, cache, combined);

  const Permutation &g0 = spec.left.gen(spec.sew_left);
  auto tube_orbits = orbits(std::span(&g0, 1), spec.left.ground().size());
  const std::size_t t = tube_orbits.size();

  Integer total = 1;
  for (std::size_t i = 0; i < t; ++i) {
    total *= static_cast<unsigned long>(ring.size());
    if (total > static_cast<unsigned long>(cap))
      raise(ErrorKind::CombinatorialBlowup,
            "factorization sum needs " + std::to_string(ring.size()) + "^" +
                std::to_string(t) + " intermediate assignments, cap is " +
                std::to_string(cap));
  }
  const std::size_t terms = static_cast<std::size_t>(total.get_ui());

  Integer rhs = 0;
  std::vector<std::size_t> choice(t, 0);
  ModuleAssignment left_full = assign_left_rest;
  ModuleAssignment right_full = assign_right_rest;
  while (true) {
    for (std::size_t i = 0; i < t; ++i) {
      left_full[{spec.sew_left, tube_orbits[i].front()}] = choice[i];
      right_full[{spec.sew_right, tube_orbits[i].front()}] = ring.dual[choice[i]];
    }
    rhs += twisted_block_dim(left_cov, cache, left_full) *
           twisted_block_dim(right_cov, cache, right_full);

    std::size_t i = t;
    bool done = t == 0;
    while (i > 0) {
      --i;
      if (++choice[i] < ring.size())
        break;
      choice[i] = 0;
      if (i == 0)
        done = true;
    }
    if (done)
      break;
  }

  if (lhs != rhs)
    raise(ErrorKind::Internal,
          "factorization identity violated: sewn dimension " + to_string(lhs) +
              " vs intermediate sum " + to_string(rhs));
  return FactorizationReport{std::move(lhs), std::move(rhs), terms};
}

} // namespace permblocks
