#include "permblocks/covering.hpp"

#include <algorithm>
#include <sstream>

namespace permblocks {

namespace {

std::string element_list(const std::vector<std::size_t> &elements,
                         const IndexSet &ground) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0)
      out << ' ';
    out << ground.display(elements[i]);
  }
  out << '}';
  return out.str();
}

} // namespace

CoveringReport build_covering(const MonodromyData &data) {
  const std::size_t n = data.ground().size();
  const std::size_t point_count = data.point_count();

  auto component_orbits = orbits(data.gens(), n);
  std::vector<std::size_t> component_of(n);
  for (std::size_t c = 0; c < component_orbits.size(); ++c)
    for (std::size_t e : component_orbits[c])
      component_of[e] = c;

  std::vector<CoveringComponent> components(component_orbits.size());
  for (std::size_t c = 0; c < component_orbits.size(); ++c) {
    components[c].orbit = component_orbits[c];
    components[c].degree = component_orbits[c].size();
  }

  // Distribute the <g_j>-orbits over components. Point orbits are emitted
  // sorted by least element, so branch records stay ordered by
  // (point, orbit rep) without an extra sort.
  for (std::size_t j = 0; j < point_count; ++j)
    for (const auto &orbit : data.point_orbits(j)) {
      OrbitRef ref{j, orbit.front()};
      BranchRecord record{j, ref, orbit.size(), data.marked_element(ref), orbit};
      components[component_of[orbit.front()]].branches.push_back(std::move(record));
    }

  for (CoveringComponent &component : components) {
    // Riemann-Hurwitz: 2g = 2 - 2*degree + sum (index - 1). Kept doubled so
    // everything stays in integers until parity is confirmed.
    std::int64_t ramification = 0;
    std::int64_t orbit_count = 0;
    for (const BranchRecord &record : component.branches) {
      ramification += static_cast<std::int64_t>(record.index) - 1;
      orbit_count += 1;
    }
    const std::int64_t degree = static_cast<std::int64_t>(component.degree);
    const std::int64_t points = static_cast<std::int64_t>(point_count);

    const std::int64_t doubled = 2 - 2 * degree + ramification;
    // Second route: 2g = 2 + (N - 2) * degree - sum_j #orbits_j. Agrees with
    // the first because sum_j (degree - #orbits_j) = ramification; both are
    // evaluated from the orbit data as a guard against bookkeeping bugs.
    const std::int64_t doubled_alt = 2 + (points - 2) * degree - orbit_count;
    if (doubled != doubled_alt)
      raise(ErrorKind::Internal, "genus formulas disagree on component with orbit " +
                                     std::to_string(component.orbit.front() + 1));
    if (doubled % 2 != 0)
      raise(ErrorKind::Internal, "odd doubled genus on component with orbit " +
                                     std::to_string(component.orbit.front() + 1));
    component.genus = doubled / 2;
    if (component.genus < 0)
      raise(ErrorKind::Internal, "negative genus on component with orbit " +
                                     std::to_string(component.orbit.front() + 1));
    // Euler characteristic of the component as a closed surface.
    if (2 - 2 * component.genus != 2 * degree - ramification)
      raise(ErrorKind::Internal, "Euler characteristic mismatch on component with orbit " +
                                     std::to_string(component.orbit.front() + 1));
  }

  return CoveringReport{data, std::move(components), n};
}

Permutation lift_word(const CoveringReport &report, const GroupWord &word) {
  return eval_word(word, report.source.gens());
}

std::string export_dot(const CoveringReport &report) {
  std::ostringstream out;
  out << "graph covering {\n";
  out << "  label=\"degree " << report.total_degree << ", components "
      << report.components.size() << "\";\n";
  const IndexSet &ground = report.source.ground();
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const CoveringComponent &component = report.components[c];
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"component " << c << ": elements "
        << element_list(component.orbit, ground) << ", degree " << component.degree
        << ", genus " << component.genus << "\";\n";
    for (std::size_t b = 0; b < component.branches.size(); ++b) {
      const BranchRecord &record = component.branches[b];
      out << "    c" << c << "_b" << b << " [label=\""
          << report.source.points()[record.point].id << " / orbit "
          << ground.display(record.orbit.rep) << " / index " << record.index
          << "\"];\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace permblocks
