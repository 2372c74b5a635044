#pragma once

#include "canstrip/constructions.hpp"
#include "canstrip/hypotheses.hpp"
#include "canstrip/roots.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace canstrip {

/// Everything the pipeline knows about one (genus, construction) cell.
struct VarietyAnalysis {
  int genus = 0;
  PolarisedInvariant invariant;
  RootAnalysis roots;
  HypothesisVerdict verdict;
};

/// Full pipeline: Hilbert polynomial, construction transform, certified
/// roots (with the Serre centre -r/2 enabled for exact line snapping),
/// hypothesis verdict.
VarietyAnalysis analyze_variety(int genus, ConstructionKind kind,
                                double target_error = 1e-10);
VarietyAnalysis analyze_variety(int genus, ConstructionKind kind,
                                const ExactPolynomial& h, double target_error);

struct TableCell {
  bool ok = false;
  std::string value;        // max real part, 20 significant digits
  std::string error_bound;  // certified error, or the failure message if !ok
  bool exact = false;       // max attained at an exactly known real part
  int dimension = 0;
};

struct TableRow {
  int genus = 0;
  std::array<TableCell, 9> cells;  // kTableOrder: Fano1 Fano2 Moduli CY1..CY6
};

struct TableReport {
  int g_min = 0, g_max = 0;
  std::vector<TableRow> rows;
};

/// One row per genus, all nine constructions, computed on a worker pool but
/// emitted in deterministic order. A failed cell carries its message instead
/// of aborting the table. jobs <= 0 means all cores.
TableReport generate_table(int g_min, int g_max, double target_error, int jobs);
std::string render_table_csv(const TableReport& report);
std::string render_table_json(const TableReport& report);

/// Root scatter data for the moduli spaces: one record per root per genus,
/// exactly removed roots flagged (the root at -1 appears once with its
/// multiplicity).
std::string figure_data_csv(int g_min, int g_max, double target_error, int jobs);

struct ThresholdReport {
  struct Claim {
    std::string name;
    bool ok = false;
    std::string detail;
  };
  std::vector<Claim> claims;
  bool all_ok = false;
};

/// Verifies where the moduli NCS/CS verdicts and the CY1 canonical-line
/// verdict flip, for genus up to 15.
ThresholdReport check_thresholds(double target_error = 1e-10, int jobs = 0);
std::string render_thresholds_text(const ThresholdReport& report);

// JSON fragments shared by the CLI subcommands.
nlohmann::json to_json(const PolarisedInvariant& inv, int genus);
nlohmann::json to_json(const RootAnalysis& analysis);
nlohmann::json to_json(const HypothesisVerdict& verdict);

/// Runs fn(0..count-1) on a small thread pool; fn must be pure per index.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

}  // namespace canstrip
