#ifndef PERMBLOCKS_IO_HPP
#define PERMBLOCKS_IO_HPP

#include "permblocks/sewing.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permblocks {

/** A parsed problem file: monodromy data plus optional ring reference and
 * module assignment. All textual schemas are JSON with format_version 1;
 * malformed content raises SchemaError (or the specific parse error kind
 * for cycle strings). */
struct ProblemFile {
  MonodromyData data;
  std::optional<FusionRing> ring;      // resolved, whether inline or by path
  std::optional<std::string> ring_path; // as written, when referenced by path
  ModuleAssignment assignment;
  bool has_assignment = false;
  std::string provenance;
};

/** Parse a ring file from JSON text. Structure is always enforced; the
 * axioms are checked unless validate_axioms is false (InvalidRing). */
FusionRing parse_ring_text(const std::string &json_text, bool validate_axioms = true);
FusionRing load_ring(const std::string &path, bool validate_axioms = true);

/** Parse a problem file from JSON text; base_dir resolves relative ring
 * paths ("" = current directory). */
ProblemFile parse_problem_text(const std::string &json_text, const std::string &base_dir,
                               bool validate_ring_axioms = true);
ProblemFile load_problem(const std::string &path, bool validate_ring_axioms = true);

/** Inputs for writing a problem file. The ring is needed to render label
 * names when an assignment is present; ring_path, when nonempty, is written
 * as a path reference instead of inlining. */
struct ProblemWriteSpec {
  const MonodromyData *data = nullptr;
  const ModuleAssignment *assignment = nullptr;
  const FusionRing *ring = nullptr;
  std::string ring_path;
  bool inline_ring = false;
  std::vector<std::pair<std::string, std::string>> metadata;
};
std::string write_problem(const ProblemWriteSpec &spec);

/** Report renderers. Every JSON rendering is byte-deterministic (sorted
 * object keys, dimensions as decimal strings) and ends with a newline. */
std::string render_cover(const CoveringReport &report, bool as_json);

struct DimReport {
  const CoveringReport *covering = nullptr;
  const FusionRing *ring = nullptr;
  std::vector<DimFactor> factors;
  Integer dimension;
  const ModuleAssignment *assignment = nullptr;
};
std::string render_dim(const DimReport &report, bool as_json);

std::string render_table(const TwistedFusionTable &table, const FusionRing &ring,
                         bool as_json);

std::string render_ring_report(const FusionRing &ring,
                               const std::vector<AxiomViolation> &violations,
                               bool as_json);

struct SewReport {
  const SewResult *sewn = nullptr;
  const SewSpec *spec = nullptr;
  bool checked_covering = false;
  const FactorizationReport *factorization = nullptr; // null when not run
};
std::string render_sew(const SewReport &report, bool as_json);

} // namespace permblocks

#endif
