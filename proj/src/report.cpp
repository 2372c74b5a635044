#include "canstrip/report.hpp"

#include "canstrip/errors.hpp"
#include "canstrip/verlinde.hpp"

#include <atomic>
#include <mutex>
#include <functional>
#include <sstream>
#include <thread>

namespace canstrip {

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  unsigned n = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  n = std::min<unsigned>(n, count == 0 ? 1 : static_cast<unsigned>(count));
  if (n <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> bail{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&]() {
      while (!bail.load()) {
        const size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          bail.store(true);
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

VarietyAnalysis analyze_variety(int genus, ConstructionKind kind, double target_error) {
  return analyze_variety(genus, kind, hilbert_polynomial(genus), target_error);
}

VarietyAnalysis analyze_variety(int genus, ConstructionKind kind,
                                const ExactPolynomial& h, double target_error) {
  VarietyAnalysis a;
  a.genus = genus;
  a.invariant = apply(kind, genus, h);
  SolveOptions opts;
  opts.target_error = target_error;
  Rat center(-a.invariant.index_r, 2);
  center.canonicalize();
  opts.symmetry_center = center;
  a.roots = solve(a.invariant.hilbert, opts);
  a.verdict = classify(a.roots, a.invariant.dimension, a.invariant.index_r);
  return a;
}

TableReport generate_table(int g_min, int g_max, double target_error, int jobs) {
  if (g_min < 2 || g_min > g_max || g_max > 40)
    throw Error("genus range must satisfy 2 <= g_min <= g_max <= 40");
  TableReport report;
  report.g_min = g_min;
  report.g_max = g_max;
  report.rows.resize(static_cast<size_t>(g_max - g_min + 1));

  parallel_for(report.rows.size(), jobs, [&](size_t idx) {
    const int g = g_min + static_cast<int>(idx);
    TableRow& row = report.rows[idx];
    row.genus = g;
    ExactPolynomial h;
    bool have_h = true;
    std::string h_error;
    try {
      h = hilbert_polynomial(g);
    } catch (const Error& e) {
      have_h = false;
      h_error = e.what();
    }
    for (size_t c = 0; c < kTableOrder.size(); ++c) {
      TableCell& cell = row.cells[c];
      cell.dimension = construction_dimension(kTableOrder[c], g);
      if (!have_h) {
        cell.ok = false;
        cell.error_bound = h_error;
        continue;
      }
      try {
        VarietyAnalysis a = analyze_variety(g, kTableOrder[c], h, target_error);
        cell.ok = true;
        cell.value = a.roots.max_real_part.to_decimal(20);
        cell.error_bound = a.roots.max_real_error.to_decimal(3);
        cell.exact = a.roots.max_is_exact;
      } catch (const Error& e) {
        cell.ok = false;
        cell.error_bound = e.what();
      }
    }
  });
  return report;
}

std::string render_table_csv(const TableReport& report) {
  std::ostringstream out;
  out << "genus";
  for (ConstructionKind kind : kTableOrder) out << ',' << construction_name(kind);
  out << "\r\n";
  for (const TableRow& row : report.rows) {
    out << row.genus;
    for (const TableCell& cell : row.cells)
      out << ',' << (cell.ok ? cell.value : "error");
    out << "\r\n";
  }
  out << "dim,3g-4,3g-3,3g-3,3g-4,3g-5,3g-3,3g-3,3g-3,3g-3\r\n";
  return out.str();
}

std::string render_table_json(const TableReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& row : report.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (size_t c = 0; c < row.cells.size(); ++c) {
      const TableCell& cell = row.cells[c];
      nlohmann::json j{{"construction", construction_name(kTableOrder[c])},
                       {"dimension", cell.dimension}};
      if (cell.ok) {
        j["max_real_part"] = cell.value;
        j["certified_error"] = cell.error_bound;
        j["exact"] = cell.exact;
      } else {
        j["error"] = cell.error_bound;
      }
      cells.push_back(std::move(j));
    }
    rows.push_back(nlohmann::json{{"genus", row.genus}, {"cells", std::move(cells)}});
  }
  nlohmann::json j{{"g_min", report.g_min}, {"g_max", report.g_max}, {"rows", std::move(rows)}};
  return j.dump(2) + "\n";
}

std::string figure_data_csv(int g_min, int g_max, double target_error, int jobs) {
  if (g_min < 2 || g_min > g_max || g_max > 40)
    throw Error("genus range must satisfy 2 <= g_min <= g_max <= 40");
  const size_t count = static_cast<size_t>(g_max - g_min + 1);
  std::vector<std::string> chunks(count);
  parallel_for(count, jobs, [&](size_t idx) {
    const int g = g_min + static_cast<int>(idx);
    VarietyAnalysis a = analyze_variety(g, ConstructionKind::Moduli, target_error);
    std::ostringstream out;
    if (a.roots.multiplicity_at_minus_one > 0)
      out << g << ",-1,0,1," << a.roots.multiplicity_at_minus_one << "\r\n";
    for (const CertifiedRoot& root : a.roots.roots) {
      const bool deflated = root.exact_root.has_value();
      out << g << ',' << root.re.to_decimal(20) << ',' << root.im.to_decimal(20) << ','
          << (deflated ? 1 : 0) << ',' << root.multiplicity << "\r\n";
    }
    chunks[idx] = out.str();
  });
  std::string out = "genus,real_part,imaginary_part,deflated,multiplicity\r\n";
  for (const std::string& c : chunks) out += c;
  return out;
}

ThresholdReport check_thresholds(double target_error, int jobs) {
  constexpr int kMaxGenus = 15;
  struct PerGenus {
    bool ncs_moduli = false, cs_moduli = false, cl_cy1 = false;
    std::string error;
  };
  std::vector<PerGenus> status(kMaxGenus - 1);

  parallel_for(status.size(), jobs, [&](size_t idx) {
    const int g = 2 + static_cast<int>(idx);
    try {
      ExactPolynomial h = hilbert_polynomial(g);
      VarietyAnalysis moduli = analyze_variety(g, ConstructionKind::Moduli, h, target_error);
      VarietyAnalysis cy1 = analyze_variety(g, ConstructionKind::CY1, h, target_error);
      status[idx].ncs_moduli = moduli.verdict.narrow_strip;
      status[idx].cs_moduli = moduli.verdict.strip;
      status[idx].cl_cy1 = cy1.verdict.canonical_line;
    } catch (const Error& e) {
      status[idx].error = e.what();
    }
  });

  ThresholdReport report;
  report.all_ok = true;
  auto add_claim = [&](const std::string& name, int g_lo, int g_hi,
                       const std::function<bool(const PerGenus&)>& get, bool expected) {
    ThresholdReport::Claim claim;
    claim.name = name;
    claim.ok = true;
    std::ostringstream detail;
    for (int g = g_lo; g <= g_hi; ++g) {
      const PerGenus& s = status[static_cast<size_t>(g - 2)];
      if (!s.error.empty()) {
        claim.ok = false;
        detail << " g=" << g << ": " << s.error << ';';
        continue;
      }
      if (get(s) != expected) {
        claim.ok = false;
        detail << " g=" << g << ": " << (get(s) ? "pass" : "fail") << " (expected "
               << (expected ? "pass" : "fail") << ");";
      }
    }
    claim.detail = detail.str().empty() ? "confirmed" : detail.str();
    report.all_ok = report.all_ok && claim.ok;
    report.claims.push_back(std::move(claim));
  };

  auto ncs = [](const PerGenus& s) { return s.ncs_moduli; };
  auto cs = [](const PerGenus& s) { return s.cs_moduli; };
  auto cl = [](const PerGenus& s) { return s.cl_cy1; };
  add_claim("narrow canonical strip holds for the moduli space, g = 2..7", 2, 7, ncs, true);
  add_claim("narrow canonical strip fails for the moduli space, g = 8..15", 8, 15, ncs, false);
  add_claim("canonical strip holds for the moduli space, g = 2..9", 2, 9, cs, true);
  add_claim("canonical strip fails for the moduli space, g = 10..15", 10, 15, cs, false);
  add_claim("canonical line holds for the anticanonical section, g = 10", 10, 10, cl, true);
  add_claim("canonical line fails for the anticanonical section, g = 11..15", 11, 15, cl, false);
  return report;
}

std::string render_thresholds_text(const ThresholdReport& report) {
  std::ostringstream out;
  for (const auto& claim : report.claims)
    out << (claim.ok ? "PASS" : "FAIL") << ": " << claim.name << " (" << claim.detail << ")\n";
  out << (report.all_ok ? "all threshold claims confirmed" : "threshold claims violated") << "\n";
  return out.str();
}

nlohmann::json to_json(const PolarisedInvariant& inv, int genus) {
  return nlohmann::json{{"genus", genus},
                        {"construction", construction_name(inv.kind)},
                        {"dimension", inv.dimension},
                        {"index", inv.index_r},
                        {"hilbert", to_json(inv.hilbert)}};
}

nlohmann::json to_json(const RootAnalysis& analysis) {
  nlohmann::json roots = nlohmann::json::array();
  for (const CertifiedRoot& r : analysis.roots) {
    nlohmann::json j{{"re", r.re.to_decimal(20)},
                     {"im", r.im.to_decimal(20)},
                     {"radius", r.radius.to_decimal(3)},
                     {"multiplicity", r.multiplicity}};
    if (r.exact_root) j["exact_value"] = to_string(*r.exact_root);
    if (r.exact_re) j["exact_real_part"] = to_string(*r.exact_re);
    j["real"] = r.real_exact;
    roots.push_back(std::move(j));
  }
  nlohmann::json j{{"degree", analysis.input_degree},
                   {"multiplicity_at_minus_one", analysis.multiplicity_at_minus_one},
                   {"deflated_degree", analysis.deflated_degree},
                   {"roots", std::move(roots)},
                   {"max_real_part", analysis.max_real_part.to_decimal(20)},
                   {"certified_error", analysis.max_real_error.to_decimal(3)},
                   {"max_exact", analysis.max_is_exact}};
  if (analysis.max_exact_value) j["max_exact_value"] = to_string(*analysis.max_exact_value);
  return j;
}

nlohmann::json to_json(const HypothesisVerdict& v) {
  return nlohmann::json{
      {"canonical_line", nlohmann::json{{"pass", v.canonical_line},
                                        {"margin", v.margin_cl.to_decimal(20)}}},
      {"narrow_strip", nlohmann::json{{"pass", v.narrow_strip},
                                      {"margin", v.margin_ncs.to_decimal(20)}}},
      {"strip", nlohmann::json{{"pass", v.strip}, {"margin", v.margin_cs.to_decimal(20)}}},
      {"bounds", nlohmann::json{{"strip", {to_string(v.cs_lo), to_string(v.cs_hi)}},
                                {"narrow_strip", {to_string(v.ncs_lo), to_string(v.ncs_hi)}},
                                {"line_center", to_string(v.line_center)}}}};
}

}  // namespace canstrip
