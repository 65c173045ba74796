#include "permblocks/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace permblocks {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string &message) {
  raise(ErrorKind::SchemaError, message);
}

json parse_json(const std::string &text, const char *what) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    schema_fail(std::string(what) + ": " + e.what());
  }
}

void check_keys(const json &obj, const std::vector<std::string> &allowed,
                const char *context) {
  if (!obj.is_object())
    schema_fail(std::string(context) + " must be a JSON object");
  for (const auto &item : obj.items())
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      schema_fail(std::string("unknown key '") + item.key() + "' in " + context);
}

const json &require(const json &obj, const char *key, const char *context) {
  auto it = obj.find(key);
  if (it == obj.end())
    schema_fail(std::string(context) + " is missing required key '" + key + "'");
  return *it;
}

void check_version(const json &obj, const char *context) {
  const json &version = require(obj, "format_version", context);
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1)
    schema_fail(std::string(context) + " has unsupported format_version (expected 1)");
}

std::string get_string(const json &value, const char *context) {
  if (!value.is_string())
    schema_fail(std::string(context) + " must be a string");
  return value.get<std::string>();
}

std::size_t get_index1(const json &value, const char *context) {
  if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0)
    schema_fail(std::string(context) + " must be a positive integer");
  return static_cast<std::size_t>(value.get<std::uint64_t>()) - 1;
}

Integer get_integer(const json &value, const char *context) {
  if (value.is_number_unsigned())
    return Integer(static_cast<unsigned long>(value.get<std::uint64_t>()));
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    try {
      return Integer(text);
    } catch (const std::invalid_argument &) {
      schema_fail(std::string(context) + ": '" + text + "' is not a decimal integer");
    }
  }
  schema_fail(std::string(context) + " must be a nonnegative integer or decimal string");
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    schema_fail("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t ring_label(const FusionRing &ring, const json &value, const char *context) {
  const std::string name = get_string(value, context);
  auto index = ring.label_index(name);
  if (!index)
    schema_fail(std::string(context) + ": unknown label '" + name + "'");
  return *index;
}

FusionRing parse_ring_json(const json &root, bool validate_axioms) {
  check_keys(root, {"format_version", "name", "provenance", "labels", "unit", "dual",
                    "coeffs"},
             "ring file");
  check_version(root, "ring file");

  FusionRing ring;
  if (root.contains("name"))
    ring.name = get_string(root["name"], "ring name");

  const json &labels = require(root, "labels", "ring file");
  if (!labels.is_array() || labels.empty())
    schema_fail("'labels' must be a nonempty array");
  for (const json &label : labels)
    ring.labels.push_back(get_string(label, "label"));

  const std::size_t n = ring.labels.size();
  ring.dual.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    ring.dual[i] = i;
  ring.coeffs.assign(n * n * n, Integer(0));

  ring.unit = ring_label(ring, require(root, "unit", "ring file"), "'unit'");

  if (root.contains("dual")) {
    const json &dual = root["dual"];
    if (!dual.is_array())
      schema_fail("'dual' must be an array of label pairs");
    std::vector<bool> assigned(n, false);
    for (const json &pair : dual) {
      if (!pair.is_array() || pair.size() != 2)
        schema_fail("each 'dual' entry must be a pair of labels");
      std::size_t a = ring_label(ring, pair[0], "'dual'");
      std::size_t b = ring_label(ring, pair[1], "'dual'");
      if ((assigned[a] && ring.dual[a] != b) || (assigned[b] && ring.dual[b] != a))
        schema_fail("conflicting 'dual' entries for label '" + ring.labels[a] + "'");
      assigned[a] = assigned[b] = true;
      ring.dual[a] = b;
      ring.dual[b] = a;
    }
  }

  const json &coeffs = require(root, "coeffs", "ring file");
  if (!coeffs.is_array())
    schema_fail("'coeffs' must be an array");
  std::vector<bool> listed(n * n * n, false);
  for (const json &entry : coeffs) {
    if (!entry.is_array() || entry.size() != 4)
      schema_fail("each 'coeffs' entry must be [a, b, c, value]");
    std::size_t a = ring_label(ring, entry[0], "'coeffs'");
    std::size_t b = ring_label(ring, entry[1], "'coeffs'");
    std::size_t c = ring_label(ring, entry[2], "'coeffs'");
    Integer value = get_integer(entry[3], "'coeffs' value");
    if (value < 0)
      schema_fail("'coeffs' value must be nonnegative");
    std::size_t flat = (a * n + b) * n + c;
    if (listed[flat])
      schema_fail("duplicate 'coeffs' entry for (" + ring.labels[a] + ", " +
                  ring.labels[b] + ", " + ring.labels[c] + ")");
    listed[flat] = true;
    ring.coeffs[flat] = std::move(value);
  }

  ring.check_structure();
  if (validate_axioms) {
    auto violations = validate_ring(ring);
    if (!violations.empty())
      raise(ErrorKind::InvalidRing,
            "ring fails validation (" + std::to_string(violations.size()) +
                " violations); first: " + violations.front().axiom + ": " +
                violations.front().detail);
  }
  return ring;
}

} // namespace

FusionRing parse_ring_text(const std::string &json_text, bool validate_axioms) {
  return parse_ring_json(parse_json(json_text, "ring file"), validate_axioms);
}

FusionRing load_ring(const std::string &path, bool validate_axioms) {
  FusionRing ring = parse_ring_text(read_file(path), validate_axioms);
  if (ring.name.empty())
    ring.name = std::filesystem::path(path).stem().string();
  return ring;
}

ProblemFile parse_problem_text(const std::string &json_text, const std::string &base_dir,
                               bool validate_ring_axioms) {
  const json root = parse_json(json_text, "problem file");
  check_keys(root, {"format_version", "provenance", "ground", "points", "marked", "ring",
                    "assignment", "metadata"},
             "problem file");
  check_version(root, "problem file");

  const json &ground_obj = require(root, "ground", "problem file");
  check_keys(ground_obj, {"size", "names"}, "'ground'");
  const json &size = require(ground_obj, "size", "'ground'");
  if (!size.is_number_unsigned() || size.get<std::uint64_t>() == 0)
    schema_fail("'ground.size' must be a positive integer");
  std::map<std::size_t, std::string> names;
  if (ground_obj.contains("names")) {
    const json &names_obj = ground_obj["names"];
    if (!names_obj.is_object())
      schema_fail("'ground.names' must map 1-based indices to strings");
    for (const auto &item : names_obj.items()) {
      std::size_t index = 0;
      try {
        std::size_t consumed = 0;
        index = std::stoull(item.key(), &consumed);
        if (consumed != item.key().size() || index == 0)
          throw std::invalid_argument("");
      } catch (const std::exception &) {
        schema_fail("'ground.names' key '" + item.key() + "' is not a 1-based index");
      }
      names[index - 1] = get_string(item.value(), "'ground.names' value");
    }
  }
  IndexSet ground(static_cast<std::size_t>(size.get<std::uint64_t>()), names);

  const json &points_arr = require(root, "points", "problem file");
  if (!points_arr.is_array() || points_arr.empty())
    schema_fail("'points' must be a nonempty array");
  std::vector<MarkedPoint> points;
  std::vector<Permutation> gens;
  for (const json &point : points_arr) {
    check_keys(point, {"id", "perm", "position_hint"}, "point");
    MarkedPoint marked_point;
    marked_point.id = get_string(require(point, "id", "point"), "'id'");
    if (point.contains("position_hint"))
      marked_point.position_hint = get_string(point["position_hint"], "'position_hint'");
    points.push_back(std::move(marked_point));
    gens.push_back(parse_cycles(get_string(require(point, "perm", "point"), "'perm'"),
                                ground));
  }

  auto point_by_id = [&](const json &value, const char *context) {
    const std::string id = get_string(value, context);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j].id == id)
        return j;
    schema_fail(std::string(context) + ": no point with id '" + id + "'");
  };

  std::map<OrbitRef, std::size_t> marked_overrides;
  if (root.contains("marked")) {
    const json &marked_arr = root["marked"];
    if (!marked_arr.is_array())
      schema_fail("'marked' must be an array");
    for (const json &entry : marked_arr) {
      check_keys(entry, {"point", "orbit", "element"}, "'marked' entry");
      std::size_t point = point_by_id(require(entry, "point", "'marked' entry"),
                                      "'marked.point'");
      std::size_t rep = get_index1(require(entry, "orbit", "'marked' entry"),
                                   "'marked.orbit'");
      std::size_t element = get_index1(require(entry, "element", "'marked' entry"),
                                       "'marked.element'");
      marked_overrides[{point, rep}] = element;
    }
  }

  ProblemFile result{build_monodromy(std::move(ground), points, std::move(gens),
                                     marked_overrides),
                     std::nullopt,
                     std::nullopt,
                     {},
                     false,
                     ""};
  if (root.contains("provenance"))
    result.provenance = get_string(root["provenance"], "'provenance'");

  if (root.contains("ring")) {
    const json &ring_ref = root["ring"];
    if (ring_ref.is_string()) {
      std::filesystem::path ring_path(ring_ref.get<std::string>());
      if (ring_path.is_relative() && !base_dir.empty())
        ring_path = std::filesystem::path(base_dir) / ring_path;
      result.ring_path = ring_ref.get<std::string>();
      result.ring = load_ring(ring_path.string(), validate_ring_axioms);
    } else {
      result.ring = parse_ring_json(ring_ref, validate_ring_axioms);
    }
  }

  if (root.contains("assignment")) {
    if (!result.ring)
      schema_fail("'assignment' requires a 'ring'");
    const json &assignment_arr = root["assignment"];
    if (!assignment_arr.is_array())
      schema_fail("'assignment' must be an array");
    auto is_orbit_rep = [&](std::size_t point, std::size_t rep) {
      for (const auto &orbit : result.data.point_orbits(point))
        if (orbit.front() == rep)
          return true;
      return false;
    };
    for (const json &entry : assignment_arr) {
      check_keys(entry, {"point", "orbit", "label"}, "'assignment' entry");
      std::size_t point = point_by_id(require(entry, "point", "'assignment' entry"),
                                      "'assignment.point'");
      std::size_t rep = get_index1(require(entry, "orbit", "'assignment' entry"),
                                   "'assignment.orbit'");
      if (!is_orbit_rep(point, rep))
        schema_fail("'assignment' entry: point '" + points[point].id +
                    "' has no orbit with representative " + std::to_string(rep + 1));
      std::size_t label = ring_label(*result.ring,
                                     require(entry, "label", "'assignment' entry"),
                                     "'assignment.label'");
      OrbitRef ref{point, rep};
      if (result.assignment.contains(ref))
        schema_fail("duplicate 'assignment' entry for orbit " + std::to_string(rep + 1) +
                    " of point '" + points[point].id + "'");
      result.assignment[ref] = label;
    }
    result.has_assignment = true;
  }

  return result;
}

ProblemFile load_problem(const std::string &path, bool validate_ring_axioms) {
  return parse_problem_text(read_file(path),
                            std::filesystem::path(path).parent_path().string(),
                            validate_ring_axioms);
}

namespace {

json ground_json(const IndexSet &ground) {
  json result;
  result["size"] = ground.size();
  json names = json::object();
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (!ground.name(i).empty())
      names[std::to_string(i + 1)] = ground.name(i);
  if (!names.empty())
    result["names"] = names;
  return result;
}

json points_json(const MonodromyData &data) {
  json result = json::array();
  for (std::size_t j = 0; j < data.point_count(); ++j) {
    json point;
    point["id"] = data.points()[j].id;
    point["perm"] = format_cycles(data.gen(j), data.ground());
    if (!data.points()[j].position_hint.empty())
      point["position_hint"] = data.points()[j].position_hint;
    result.push_back(std::move(point));
  }
  return result;
}

json assignment_json(const MonodromyData &data, const ModuleAssignment &assignment,
                     const FusionRing &ring) {
  json result = json::array();
  for (const auto &[ref, label] : assignment) {
    json entry;
    entry["point"] = data.points()[ref.point].id;
    entry["orbit"] = ref.rep + 1;
    entry["label"] = ring.labels[label];
    result.push_back(std::move(entry));
  }
  return result;
}

json ring_json(const FusionRing &ring) {
  json result;
  result["format_version"] = 1;
  if (!ring.name.empty())
    result["name"] = ring.name;
  result["labels"] = ring.labels;
  result["unit"] = ring.labels[ring.unit];
  json dual = json::array();
  for (std::size_t a = 0; a < ring.size(); ++a)
    if (ring.dual[a] != a && a < ring.dual[a])
      dual.push_back(json::array({ring.labels[a], ring.labels[ring.dual[a]]}));
  if (!dual.empty())
    result["dual"] = dual;
  json coeffs = json::array();
  for (std::size_t a = 0; a < ring.size(); ++a)
    for (std::size_t b = 0; b < ring.size(); ++b)
      for (std::size_t c = 0; c < ring.size(); ++c) {
        const Integer &value = ring.coeff(a, b, c);
        if (value == 0)
          continue;
        json entry = json::array({ring.labels[a], ring.labels[b], ring.labels[c]});
        if (value.fits_ulong_p())
          entry.push_back(value.get_ui());
        else
          entry.push_back(to_string(value));
        coeffs.push_back(std::move(entry));
      }
  result["coeffs"] = coeffs;
  return result;
}

json problem_json(const ProblemWriteSpec &spec) {
  json result;
  result["format_version"] = 1;
  result["ground"] = ground_json(spec.data->ground());
  result["points"] = points_json(*spec.data);

  json marked = json::array();
  for (const auto &[ref, element] : spec.data->marked()) {
    if (element == ref.rep)
      continue; // defaults are implied
    json entry;
    entry["point"] = spec.data->points()[ref.point].id;
    entry["orbit"] = ref.rep + 1;
    entry["element"] = element + 1;
    marked.push_back(std::move(entry));
  }
  if (!marked.empty())
    result["marked"] = marked;

  if (spec.ring && spec.inline_ring)
    result["ring"] = ring_json(*spec.ring);
  else if (!spec.ring_path.empty())
    result["ring"] = spec.ring_path;

  if (spec.assignment && spec.ring)
    result["assignment"] = assignment_json(*spec.data, *spec.assignment, *spec.ring);

  if (!spec.metadata.empty()) {
    json metadata;
    for (const auto &[key, value] : spec.metadata)
      metadata[key] = value;
    result["metadata"] = metadata;
  }
  return result;
}

json elements_json(const std::vector<std::size_t> &elements) {
  json result = json::array();
  for (std::size_t e : elements)
    result.push_back(e + 1);
  return result;
}

json cover_json(const CoveringReport &report) {
  json result;
  result["command"] = "cover";
  result["format_version"] = 1;
  result["ground"] = ground_json(report.source.ground());
  result["points"] = points_json(report.source);
  result["admissible"] = true;
  result["degree"] = report.total_degree;
  json components = json::array();
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const CoveringComponent &component = report.components[c];
    json comp;
    comp["index"] = c;
    comp["elements"] = elements_json(component.orbit);
    comp["degree"] = component.degree;
    comp["genus"] = component.genus;
    json branches = json::array();
    for (const BranchRecord &record : component.branches) {
      json branch;
      branch["point"] = report.source.points()[record.point].id;
      branch["orbit"] = record.orbit.rep + 1;
      branch["index"] = record.index;
      branch["elements"] = elements_json(record.elements);
      branch["marked"] = record.marked_element + 1;
      branches.push_back(std::move(branch));
    }
    comp["branches"] = branches;
    components.push_back(std::move(comp));
  }
  result["components"] = components;
  return result;
}

std::string cover_text(const CoveringReport &report) {
  std::ostringstream out;
  const MonodromyData &data = report.source;
  out << "ground: size " << data.ground().size() << "\n";
  out << "points:";
  for (std::size_t j = 0; j < data.point_count(); ++j)
    out << " " << data.points()[j].id << ":" << format_cycles(data.gen(j), data.ground());
  out << "\n";
  out << "degree " << report.total_degree << ", components "
      << report.components.size() << "\n";
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const CoveringComponent &component = report.components[c];
    out << "component " << c << ": elements {";
    for (std::size_t i = 0; i < component.orbit.size(); ++i)
      out << (i ? " " : "") << data.ground().display(component.orbit[i]);
    out << "}, degree " << component.degree << ", genus " << component.genus << "\n";
    for (const BranchRecord &record : component.branches)
      out << "  " << data.points()[record.point].id << ": orbit "
          << data.ground().display(record.orbit.rep) << ", index " << record.index
          << ", marked " << data.ground().display(record.marked_element) << "\n";
  }
  return out.str();
}

std::string dump(const json &value) { return value.dump(2) + "\n"; }

} // namespace

std::string write_problem(const ProblemWriteSpec &spec) {
  return dump(problem_json(spec));
}

std::string render_cover(const CoveringReport &report, bool as_json) {
  if (as_json)
    return dump(cover_json(report));
  return cover_text(report);
}

std::string render_dim(const DimReport &report, bool as_json) {
  const FusionRing &ring = *report.ring;
  if (as_json) {
    json result = cover_json(*report.covering);
    result["command"] = "dim";
    result["ring"] = ring.name.empty() ? json() : json(ring.name);
    if (report.assignment)
      result["assignment"] =
          assignment_json(report.covering->source, *report.assignment, ring);
    json factors = json::array();
    for (const DimFactor &factor : report.factors) {
      json f;
      f["component"] = factor.component;
      f["genus"] = factor.genus;
      json insertions = json::array();
      for (std::size_t label : factor.insertions)
        insertions.push_back(ring.labels[label]);
      f["insertions"] = insertions;
      f["value"] = to_string(factor.value);
      factors.push_back(std::move(f));
    }
    result["factors"] = factors;
    result["dimension"] = to_string(report.dimension);
    return dump(result);
  }
  std::ostringstream out;
  out << cover_text(*report.covering);
  if (!ring.name.empty())
    out << "ring: " << ring.name << "\n";
  for (const DimFactor &factor : report.factors) {
    out << "factor component " << factor.component << ": N(genus " << factor.genus
        << ";";
    for (std::size_t i = 0; i < factor.insertions.size(); ++i)
      out << (i ? ", " : " ") << ring.labels[factor.insertions[i]];
    out << ") = " << to_string(factor.value) << "\n";
  }
  out << "dimension: " << to_string(report.dimension) << "\n";
  return out.str();
}

std::string render_table(const TwistedFusionTable &table, const FusionRing &ring,
                         bool as_json) {
  const IndexSet &ground = table.data.ground();
  std::string g1 = format_cycles(table.data.gen(0), ground);
  std::string g2 = format_cycles(table.data.gen(1), ground);
  std::string g3 = format_cycles(table.data.gen(2), ground);
  if (as_json) {
    json result;
    result["command"] = "table";
    result["format_version"] = 1;
    result["ring"] = ring.name.empty() ? json() : json(ring.name);
    result["ground"] = ground_json(ground);
    result["g1"] = g1;
    result["g2"] = g2;
    result["g3"] = g3;
    for (std::size_t j = 0; j < 3; ++j) {
      json modules = json::array();
      for (const TwistedModule &module : table.modules[j])
        modules.push_back(module.name);
      result[j == 0 ? "modules1" : (j == 1 ? "modules2" : "modules3")] = modules;
    }
    json entries = json::array();
    for (std::size_t i = 0; i < table.rows1; ++i)
      for (std::size_t j = 0; j < table.rows2; ++j)
        for (std::size_t k = 0; k < table.rows3; ++k) {
          const Integer &value = table.value(i, j, k);
          if (value == 0)
            continue;
          json entry;
          entry["left"] = table.modules[0][i].name;
          entry["right"] = table.modules[1][j].name;
          entry["output"] = table.modules[2][k].name;
          entry["value"] = to_string(value);
          entries.push_back(std::move(entry));
        }
    result["entries"] = entries;
    return dump(result);
  }
  std::ostringstream out;
  if (!ring.name.empty())
    out << "ring: " << ring.name << ", ";
  out << "ground size " << ground.size() << "\n";
  out << "g1 = " << g1 << ", g2 = " << g2 << ", g3 = " << g3 << "\n";
  for (std::size_t i = 0; i < table.rows1; ++i)
    for (std::size_t j = 0; j < table.rows2; ++j) {
      out << table.modules[0][i].name << " x " << table.modules[1][j].name << " =";
      bool empty = true;
      for (std::size_t k = 0; k < table.rows3; ++k) {
        const Integer &value = table.value(i, j, k);
        if (value == 0)
          continue;
        out << (empty ? " " : " + ");
        if (value != 1)
          out << to_string(value) << "*";
        out << table.modules[2][k].name;
        empty = false;
      }
      if (empty)
        out << " 0";
      out << "\n";
    }
  return out.str();
}

std::string render_ring_report(const FusionRing &ring,
                               const std::vector<AxiomViolation> &violations,
                               bool as_json) {
  if (as_json) {
    json result;
    result["command"] = "check-ring";
    result["format_version"] = 1;
    result["ring"] = ring.name.empty() ? json() : json(ring.name);
    result["labels"] = ring.labels;
    result["valid"] = violations.empty();
    json list = json::array();
    for (const AxiomViolation &violation : violations) {
      json v;
      v["axiom"] = violation.axiom;
      json labels = json::array();
      for (std::size_t index : violation.where)
        labels.push_back(ring.labels[index]);
      v["labels"] = labels;
      v["detail"] = violation.detail;
      list.push_back(std::move(v));
    }
    result["violations"] = list;
    return dump(result);
  }
  std::ostringstream out;
  out << "ring: " << (ring.name.empty() ? "(unnamed)" : ring.name) << " ("
      << ring.size() << " labels)\n";
  if (violations.empty()) {
    out << "valid: yes\n";
  } else {
    out << "valid: no (" << violations.size() << " violations)\n";
    for (const AxiomViolation &violation : violations) {
      out << "  " << violation.axiom << " at (";
      for (std::size_t i = 0; i < violation.where.size(); ++i)
        out << (i ? ", " : "") << ring.labels[violation.where[i]];
      out << "): " << violation.detail << "\n";
    }
  }
  return out.str();
}

std::string render_sew(const SewReport &report, bool as_json) {
  const SewResult &sewn = *report.sewn;
  const SewSpec &spec = *report.spec;
  ProblemWriteSpec write_spec;
  write_spec.data = &sewn.data;
  std::vector<std::pair<std::string, std::string>> metadata;
  metadata.emplace_back("left_rotation", std::to_string(spec.sew_left));
  metadata.emplace_back("right_rotation", std::to_string(spec.sew_right));
  write_spec.metadata = metadata;

  if (as_json) {
    json result;
    result["command"] = "sew";
    result["format_version"] = 1;
    result["left_point"] = spec.left.points()[spec.sew_left].id;
    result["right_point"] = spec.right.points()[spec.sew_right].id;
    json renames = json::array();
    for (const auto &[before, after] : sewn.renames)
      renames.push_back(json::array({before, after}));
    result["renames"] = renames;
    result["sewn"] = parse_json(write_problem(write_spec), "internal");
    json checks;
    if (report.checked_covering)
      checks["covering"] = "ok";
    if (report.factorization) {
      json f;
      f["lhs"] = to_string(report.factorization->lhs);
      f["rhs"] = to_string(report.factorization->rhs);
      f["terms"] = report.factorization->terms;
      checks["factorization"] = f;
    }
    result["checks"] = checks;
    return dump(result);
  }
  std::ostringstream out;
  out << "sewed " << spec.left.points()[spec.sew_left].id << " (left) to "
      << spec.right.points()[spec.sew_right].id << " (right), g0 = "
      << format_cycles(spec.left.gen(spec.sew_left), spec.left.ground()) << "\n";
  const MonodromyData &data = sewn.data;
  out << "result points:";
  for (std::size_t j = 0; j < data.point_count(); ++j)
    out << " " << data.points()[j].id << ":" << format_cycles(data.gen(j), data.ground());
  out << "\n";
  for (const auto &[before, after] : sewn.renames)
    out << "renamed right point " << before << " -> " << after << "\n";
  if (report.checked_covering)
    out << "covering check: ok\n";
  if (report.factorization)
    out << "factorization: lhs = " << to_string(report.factorization->lhs)
        << ", rhs = " << to_string(report.factorization->rhs) << " over "
        << report.factorization->terms << " intermediate assignments\n";
  return out.str();
}

} // namespace permblocks
