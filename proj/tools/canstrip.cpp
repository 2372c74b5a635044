// canstrip: exact Verlinde numbers, Hilbert polynomials of rank-2 moduli
// spaces and their derived Fano/Calabi-Yau constructions, certified complex
// roots, and canonical-strip classification. Data goes to stdout,
// diagnostics to stderr.
//
// Exit codes: 0 success, 1 usage error, 2 computation error
// (non-convergence / indeterminate verdict), 3 threshold-claim mismatch.

#include "canstrip/ehrhart.hpp"
#include "canstrip/errors.hpp"
#include "canstrip/report.hpp"
#include "canstrip/verlinde.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>

namespace {

using namespace canstrip;

int run_verlinde(int genus, long max_level, const std::string& method) {
  for (long k = 0; k <= max_level; ++k) {
    Int v = (method == "trig") ? verlinde_trig(genus, k, default_trig_precision(genus, k))
                               : verlinde_det(genus, k);
    std::cout << to_string(v) << "\n";
  }
  return 0;
}

int run_ehrhart(const std::string& polytope_file, const std::string& scan_dir,
                double target_error) {
  if (!polytope_file.empty()) {
    LatticePolytope p = read_polytope_file(polytope_file);
    EhrhartAnalysis a = analyze_polytope(
        std::filesystem::path(polytope_file).filename().string(), p, target_error);
    nlohmann::json j{{"name", a.name},
                     {"dimension", a.dimension},
                     {"ehrhart", to_json(a.ehrhart)},
                     {"roots", to_json(a.roots)},
                     {"verdict", to_json(a.verdict)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(scan_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".poly")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ParseError("no .poly files in " + scan_dir);
  std::vector<std::pair<std::string, LatticePolytope>> polytopes;
  for (const auto& f : files)
    polytopes.emplace_back(f.filename().string(), read_polytope_file(f));
  ScanResult scan = scan_maximum(polytopes, target_error);
  nlohmann::json entries = nlohmann::json::array();
  for (const EhrhartAnalysis& a : scan.entries)
    entries.push_back(nlohmann::json{{"name", a.name},
                                     {"dimension", a.dimension},
                                     {"ehrhart", to_json(a.ehrhart)},
                                     {"max_real_part", a.roots.max_real_part.to_decimal(20)},
                                     {"verdict", to_json(a.verdict)}});
  nlohmann::json j{{"entries", std::move(entries)},
                   {"max_real_part", scan.max_real_part.to_decimal(20)},
                   {"argmax", scan.argmax}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert polynomial root loci of rank-2 moduli spaces and "
               "related varieties, with canonical-strip classification"};
  app.require_subcommand(1);

  int genus = 2;
  int genus_min = 2, genus_max = 12;
  long max_level = 10;
  std::string method = "det";
  std::string construction = "moduli";
  double target_error = 1e-10;
  std::string format;
  int jobs = 0;
  std::string polytope_file, scan_dir;

  auto* cmd_verlinde = app.add_subcommand("verlinde", "Verlinde numbers, one per line");
  cmd_verlinde->add_option("--genus", genus, "curve genus (>= 2)")->required();
  cmd_verlinde->add_option("--max-level", max_level, "levels 0..K")->required();
  cmd_verlinde->add_option("--method", method, "det (exact) or trig (oracle)")
      ->check(CLI::IsMember({"det", "trig"}));

  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert polynomial as JSON");
  cmd_hilbert->add_option("--genus", genus)->required();
  cmd_hilbert->add_option("--construction", construction, "moduli|fano1|fano2|cy1..cy6");

  auto* cmd_roots = app.add_subcommand("roots", "certified complex roots as JSON");
  cmd_roots->add_option("--genus", genus)->required();
  cmd_roots->add_option("--construction", construction);
  cmd_roots->add_option("--target-error", target_error);

  auto* cmd_check = app.add_subcommand("check", "hypothesis verdict as JSON");
  cmd_check->add_option("--genus", genus)->required();
  cmd_check->add_option("--construction", construction);
  cmd_check->add_option("--target-error", target_error);

  auto* cmd_table = app.add_subcommand("table", "max real parts, all constructions");
  cmd_table->add_option("--genus-min", genus_min);
  cmd_table->add_option("--genus-max", genus_max);
  cmd_table->add_option("--target-error", target_error);
  cmd_table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  cmd_table->add_option("--jobs", jobs, "worker threads (default: all cores)");

  auto* cmd_plot = app.add_subcommand("plot-data", "root scatter data as CSV");
  cmd_plot->add_option("--genus-min", genus_min);
  cmd_plot->add_option("--genus-max", genus_max);
  cmd_plot->add_option("--target-error", target_error);
  cmd_plot->add_option("--jobs", jobs);

  auto* cmd_thresholds = app.add_subcommand("thresholds", "verify the verdict flip points");
  cmd_thresholds->add_option("--target-error", target_error);
  cmd_thresholds->add_option("--jobs", jobs);

  auto* cmd_ehrhart = app.add_subcommand("ehrhart", "Ehrhart pipeline for lattice polytopes");
  auto* opt_poly = cmd_ehrhart->add_option("--polytope", polytope_file, "vertex file");
  auto* opt_scan = cmd_ehrhart->add_option("--scan", scan_dir, "directory of .poly files");
  cmd_ehrhart->add_option("--target-error", target_error);
  opt_poly->excludes(opt_scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 0 covers --help and --version
  }

  try {
    if (cmd_verlinde->parsed()) return run_verlinde(genus, max_level, method);

    if (cmd_hilbert->parsed()) {
      PolarisedInvariant inv = apply(parse_construction(construction), genus);
      std::cout << to_json(inv, genus).dump(2) << "\n";
      return 0;
    }

    if (cmd_roots->parsed() || cmd_check->parsed()) {
      VarietyAnalysis a =
          analyze_variety(genus, parse_construction(construction), target_error);
      nlohmann::json j{{"genus", genus},
                       {"construction", construction_name(a.invariant.kind)},
                       {"dimension", a.invariant.dimension},
                       {"index", a.invariant.index_r}};
      if (cmd_roots->parsed())
        j["roots"] = to_json(a.roots);
      else {
        j["verdict"] = to_json(a.verdict);
        j["max_real_part"] = a.roots.max_real_part.to_decimal(20);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_table->parsed()) {
      TableReport report = generate_table(genus_min, genus_max, target_error, jobs);
      std::cout << (format == "json" ? render_table_json(report) : render_table_csv(report));
      return 0;
    }

    if (cmd_plot->parsed()) {
      std::cout << figure_data_csv(genus_min, genus_max, target_error, jobs);
      return 0;
    }

    if (cmd_thresholds->parsed()) {
      ThresholdReport report = check_thresholds(target_error, jobs);
      std::cout << render_thresholds_text(report);
      return report.all_ok ? 0 : 3;
    }

    if (cmd_ehrhart->parsed()) {
      if (polytope_file.empty() && scan_dir.empty())
        throw ParseError("ehrhart needs --polytope FILE or --scan DIR");
      return run_ehrhart(polytope_file, scan_dir, target_error);
    }
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Indeterminate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidGenus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
