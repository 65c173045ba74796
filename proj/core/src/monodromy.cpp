#include "permblocks/monodromy.hpp"

#include <algorithm>
#include <set>

namespace permblocks {

AdmissibilityResult check_admissible(std::span<const Permutation> gens,
                                     std::size_t ground_size) {
  if (gens.empty())
    raise(ErrorKind::EmptyData, "no generators to check");
  for (const Permutation &g : gens)
    if (g.degree() != ground_size)
      raise(ErrorKind::GroundMismatch,
            "generator of degree " + std::to_string(g.degree()) +
                " on ground of size " + std::to_string(ground_size));
  Permutation product = Permutation::identity(ground_size);
  for (const Permutation &g : gens)
    product = compose(product, g);
  return AdmissibilityResult{product.is_identity(), std::move(product)};
}

MonodromyData::MonodromyData(IndexSet ground, std::vector<MarkedPoint> points,
                             std::vector<Permutation> gens,
                             const std::map<OrbitRef, std::size_t> &marked_overrides)
    : ground_(std::move(ground)), points_(std::move(points)), gens_(std::move(gens)) {
  if (ground_.size() == 0)
    raise(ErrorKind::EmptyData, "empty ground set");
  if (points_.empty())
    raise(ErrorKind::EmptyData, "no marked points");
  if (points_.size() != gens_.size())
    raise(ErrorKind::GroundMismatch,
          std::to_string(points_.size()) + " points but " +
              std::to_string(gens_.size()) + " generators");

  std::set<std::string> ids;
  for (const MarkedPoint &point : points_) {
    if (point.id.empty())
      raise(ErrorKind::SchemaError, "marked point with empty id");
    if (!ids.insert(point.id).second)
      raise(ErrorKind::SchemaError, "duplicate point id '" + point.id + "'");
  }

  auto result = check_admissible(gens_, ground_.size());
  if (!result.admissible)
    raise(ErrorKind::NotAdmissible,
          "ordered product of generators is " +
              format_cycles(result.product, ground_) + ", not the identity");

  // Default marked choice: the least element of each orbit. Overrides must
  // name an existing orbit by its representative and stay inside it.
  std::set<OrbitRef> valid;
  for (std::size_t j = 0; j < points_.size(); ++j)
    for (const auto &orbit : point_orbits(j)) {
      OrbitRef ref{j, orbit.front()};
      valid.insert(ref);
      marked_[ref] = orbit.front();
    }
  for (const auto &[ref, element] : marked_overrides) {
    if (!valid.contains(ref))
      raise(ErrorKind::BadMarkedChoice,
            "no orbit of point " + std::to_string(ref.point + 1) +
                " has representative " + std::to_string(ref.rep + 1));
    bool inside = false;
    std::size_t e = ref.rep;
    do {
      if (e == element) {
        inside = true;
        break;
      }
      e = gens_[ref.point](e);
    } while (e != ref.rep);
    if (!inside)
      raise(ErrorKind::BadMarkedChoice,
            "element " + std::to_string(element + 1) + " is not in the orbit of " +
                std::to_string(ref.rep + 1) + " at point " +
                std::to_string(ref.point + 1));
    marked_[ref] = element;
  }
}

std::vector<std::vector<std::size_t>> MonodromyData::point_orbits(std::size_t j) const {
  return orbits(std::span(&gens_[j], 1), ground_.size());
}

std::size_t MonodromyData::marked_element(const OrbitRef &orbit) const {
  auto it = marked_.find(orbit);
  if (it == marked_.end())
    raise(ErrorKind::BadMarkedChoice,
          "no orbit of point " + std::to_string(orbit.point + 1) +
              " has representative " + std::to_string(orbit.rep + 1));
  return it->second;
}

MonodromyData build_monodromy(IndexSet ground, std::vector<MarkedPoint> points,
                              std::vector<Permutation> gens,
                              const std::map<OrbitRef, std::size_t> &marked_overrides) {
  return MonodromyData(std::move(ground), std::move(points), std::move(gens),
                       marked_overrides);
}

MonodromyData rebase(const MonodromyData &data, const GroupWord &sigma) {
  Permutation s = eval_word(sigma, data.gens());
  Permutation s_inv = s.inverse();
  std::vector<Permutation> gens;
  gens.reserve(data.gens().size());
  for (const Permutation &g : data.gens())
    gens.push_back(compose(s_inv, compose(g, s)));
  return build_monodromy(data.ground(), data.points(), std::move(gens));
}

} // namespace permblocks
