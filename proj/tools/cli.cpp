#include "cli.hpp"

#include "permblocks/covering.hpp"
#include "permblocks/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace permblocks::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotAdmissible:
    return 2;
  case ErrorKind::IncompleteAssignment:
    return 4;
  case ErrorKind::CombinatorialBlowup:
    return 5;
  case ErrorKind::SewPairNotInverse:
  case ErrorKind::NoRemainingPoints:
    return 6;
  case ErrorKind::Internal:
    return 70;
  default:
    return 3;
  }
}

int run_guarded(const std::function<int()> &body) {
  try {
    return body();
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return exit_code_for(ErrorKind::Internal);
  }
}

namespace {

void write_output(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    raise(ErrorKind::SchemaError, "cannot write '" + path + "'");
  out << content;
}

std::size_t point_index_by_id(const MonodromyData &data, const std::string &id) {
  for (std::size_t j = 0; j < data.point_count(); ++j)
    if (data.points()[j].id == id)
      return j;
  raise(ErrorKind::SchemaError, "no point with id '" + id + "'");
}

FusionRing resolve_ring(const std::string &ring_flag, const ProblemFile &problem,
                        bool validate) {
  if (!ring_flag.empty())
    return load_ring(ring_flag, validate);
  if (problem.ring)
    return *problem.ring;
  raise(ErrorKind::SchemaError,
        "no ring: pass --ring or add one to the problem file");
}

} // namespace

int run(int argc, const char *const *argv) {
  CLI::App app{"permutation coverings of the sphere and twisted conformal block dimensions"};
  app.require_subcommand(1);

  std::string format = "text";
  bool quiet = false;
  bool no_validate = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--quiet", quiet, "suppress the report on stdout");
  app.add_flag("--no-validate", no_validate,
               "skip fusion ring axiom checks on load (structure is always checked)");

  // cover
  auto *cover = app.add_subcommand("cover", "build the branched covering of a problem file");
  std::string cover_problem;
  std::string cover_dot;
  cover->add_option("problem", cover_problem, "problem file (JSON)")->required();
  cover->add_option("--dot", cover_dot,
                    "write a Graphviz rendering to this file ('-' = stdout, replacing the report)");

  // dim
  auto *dim = app.add_subcommand("dim", "twisted conformal block dimension of a problem file");
  std::string dim_problem;
  std::string dim_ring;
  dim->add_option("problem", dim_problem, "problem file (JSON) with an assignment")->required();
  dim->add_option("--ring", dim_ring, "ring file overriding the problem file's ring");

  // table
  auto *table = app.add_subcommand("table", "fusion table of twisted modules for two permutations");
  std::string table_ring;
  std::size_t table_size = 0;
  std::string table_g1, table_g2;
  std::size_t table_cap = 1000000;
  table->add_option("ring", table_ring, "ring file (JSON)")->required();
  table->add_option("size", table_size, "ground set size")->required()
      ->check(CLI::PositiveNumber);
  table->add_option("g1", table_g1, "first permutation, cycle notation")->required();
  table->add_option("g2", table_g2, "second permutation, cycle notation")->required();
  table->add_option("--cap", table_cap, "maximum number of table entries")
      ->capture_default_str();

  // sew
  auto *sew_cmd = app.add_subcommand("sew", "glue two problem files at one point each");
  std::string sew_left_file, sew_right_file;
  std::string sew_left_point, sew_right_point;
  std::string sew_output;
  std::string sew_ring;
  bool sew_check_covering = false;
  bool sew_check_factorization = false;
  std::size_t sew_cap = 1000000;
  sew_cmd->add_option("left", sew_left_file, "left problem file")->required();
  sew_cmd->add_option("right", sew_right_file, "right problem file")->required();
  sew_cmd->add_option("--left-point", sew_left_point,
                      "id of the left sewn point (default: first point)");
  sew_cmd->add_option("--right-point", sew_right_point,
                      "id of the right sewn point (default: first point)");
  sew_cmd->add_option("-o,--output", sew_output, "write the sewn problem file here");
  sew_cmd->add_flag("--check-covering", sew_check_covering,
                    "verify the covering against the surgery prediction");
  sew_cmd->add_flag("--check-factorization", sew_check_factorization,
                    "verify the factorization identity (needs ring and assignments)");
  sew_cmd->add_option("--ring", sew_ring, "ring file for --check-factorization");
  sew_cmd->add_option("--cap", sew_cap, "cap on intermediate assignments")
      ->capture_default_str();

  // check-ring
  auto *check = app.add_subcommand("check-ring", "validate a fusion ring file");
  std::string check_ring_file;
  check->add_option("ring", check_ring_file, "ring file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  const bool as_json = format == "json";
  const bool validate = !no_validate;

  if (cover->parsed())
    return run_guarded([&]() -> int {
      ProblemFile problem = load_problem(cover_problem, validate);
      CoveringReport report = build_covering(problem.data);
      if (cover_dot == "-") {
        std::cout << export_dot(report);
        return 0;
      }
      if (!cover_dot.empty())
        write_output(cover_dot, export_dot(report));
      if (!quiet)
        std::cout << render_cover(report, as_json);
      return 0;
    });

  if (dim->parsed())
    return run_guarded([&]() -> int {
      ProblemFile problem = load_problem(dim_problem, validate);
      FusionRing ring = resolve_ring(dim_ring, problem, validate);
      if (!problem.has_assignment)
        raise(ErrorKind::IncompleteAssignment, "problem file has no assignment");
      DimCache cache(ring, validate);
      CoveringReport covering = build_covering(problem.data);
      DimReport report;
      report.covering = &covering;
      report.ring = &cache.ring();
      report.factors = twisted_block_factors(covering, cache, problem.assignment);
      report.dimension = 1;
      for (const DimFactor &factor : report.factors)
        report.dimension *= factor.value;
      report.assignment = &problem.assignment;
      if (!quiet)
        std::cout << render_dim(report, as_json);
      return 0;
    });

  if (table->parsed())
    return run_guarded([&]() -> int {
      FusionRing ring = load_ring(table_ring, validate);
      IndexSet ground(table_size);
      Permutation g1 = parse_cycles(table_g1, ground);
      Permutation g2 = parse_cycles(table_g2, ground);
      DimCache cache(ring, validate);
      TwistedFusionTable result = twisted_fusion_table(cache, table_size, g1, g2, table_cap);
      if (!quiet)
        std::cout << render_table(result, cache.ring(), as_json);
      return 0;
    });

  if (sew_cmd->parsed())
    return run_guarded([&]() -> int {
      ProblemFile left = load_problem(sew_left_file, validate);
      ProblemFile right = load_problem(sew_right_file, validate);
      SewSpec spec{left.data, right.data, 0, 0};
      if (!sew_left_point.empty())
        spec.sew_left = point_index_by_id(left.data, sew_left_point);
      if (!sew_right_point.empty())
        spec.sew_right = point_index_by_id(right.data, sew_right_point);

      SewReport report;
      report.spec = &spec;

      SewResult sewn = [&] {
        if (sew_check_covering) {
          SurgeryComparison comparison = covering_commutes(spec);
          report.checked_covering = true;
          return std::move(comparison.sewn);
        }
        return sew(spec);
      }();
      report.sewn = &sewn;

      FactorizationReport factorization{0, 0, 0};
      if (sew_check_factorization) {
        FusionRing ring = [&] {
          if (!sew_ring.empty())
            return load_ring(sew_ring, validate);
          if (left.ring)
            return *left.ring;
          if (right.ring)
            return *right.ring;
          raise(ErrorKind::SchemaError,
                "--check-factorization needs a ring (--ring or in a problem file)");
        }();
        if (!left.has_assignment || !right.has_assignment)
          raise(ErrorKind::IncompleteAssignment,
                "--check-factorization needs assignments in both problem files");
        DimCache cache(std::move(ring), validate);
        factorization = factorization_check(spec, cache, left.assignment,
                                            right.assignment, sew_cap);
        report.factorization = &factorization;
      }

      if (!sew_output.empty()) {
        ProblemWriteSpec write_spec;
        write_spec.data = &sewn.data;
        write_spec.metadata.emplace_back("left_rotation", std::to_string(spec.sew_left));
        write_spec.metadata.emplace_back("right_rotation", std::to_string(spec.sew_right));
        for (const auto &[before, after] : sewn.renames)
          write_spec.metadata.emplace_back("renamed " + before, after);
        write_output(sew_output, write_problem(write_spec));
      }
      if (!quiet)
        std::cout << render_sew(report, as_json);
      return 0;
    });

  if (check->parsed())
    return run_guarded([&]() -> int {
      FusionRing ring = load_ring(check_ring_file, false);
      auto violations = validate_ring(ring);
      if (!quiet)
        std::cout << render_ring_report(ring, violations, as_json);
      return violations.empty() ? 0 : exit_code_for(ErrorKind::InvalidRing);
    });

  return 0;
}

} // namespace permblocks::cli
