#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "sprigid/irreps.hpp"
#include "sprigid/numeric_lab.hpp"
#include "sprigid/obstruction.hpp"
#include "sprigid/report.hpp"
#include "sprigid/root_system.hpp"
#include "sprigid/spectrum.hpp"

namespace sprigid {

namespace detail {

inline Json json_integer(const Integer &n) {
  static const Integer lo = std::numeric_limits<long long>::min();
  static const Integer hi = std::numeric_limits<long long>::max();
  if (n >= lo && n <= hi) return Json(n.convert_to<long long>());
  return Json(n.str());
}

inline std::string solution_text(const SolutionMultiset &sol) {
  std::string out;
  for (size_t i = 0; i < sol.entries.size(); ++i) {
    if (i > 0) out += " + ";
    out += std::to_string(sol.entries[i].count) + " x " + to_string(sol.entries[i].irrep.weight);
  }
  return out;
}

inline void finish(Report &report, bool pass) {
  report.verdicts.push_back(std::string("pass=") + (pass ? "true" : "false"));
}

}  // namespace detail

/// True exactly when the report's final verdict is "pass=true"; commands
/// always append one, and the CLI maps false to exit code 2.
inline bool report_passed(const Report &report) {
  return !report.verdicts.empty() && report.verdicts.back() == "pass=true";
}

/// Irrep table for sp(n): all dominant weights with dim <= max_dim
/// (default (2n)^2, the square of the defining dimension), sorted by
/// (Casimir, dim, weight).
inline Report cmd_tables(const RankedGroup &group,
                         std::optional<Integer> max_dim = std::nullopt) {
  if (group.family != Family::C)
    throw std::invalid_argument("tables supports only the C family");
  const int n = group.rank;
  const Integer bound = max_dim ? *max_dim : Integer(4) * n * n;
  if (bound < 1) throw std::invalid_argument("max_dim must be positive");
  const RootSystemData rs = build_root_system(group);

  Report report;
  report.command = "tables";
  report.inputs["group"] = to_string(group);
  report.inputs["max_dim"] = detail::json_integer(bound);
  std::vector<Rational> twice_eps2;
  if (n >= 2) {
    twice_eps2.assign(n, 0);
    twice_eps2[0] = 2;
  }
  for (const auto &s : enumerate_irreps_by_dim(rs, bound)) {
    Json row;
    row["weight"] = to_string(s.weight);
    row["casimir"] = rat_to_string(s.casimir);
    row["dim"] = detail::json_integer(s.dim);
    row["fs_type"] = to_string(s.fs);
    row["note"] = s.weight.coeffs == twice_eps2
                      ? "dominant Weyl representative of 2*eps2"
                      : "";
    report.rows.push_back(std::move(row));
  }
  report.verdicts.push_back("rows=" + std::to_string(report.rows.size()));
  detail::finish(report, true);
  return report;
}

/// First `count` distinct Laplace eigenvalues with exact multiplicities.
inline Report cmd_spectrum(const RankedGroup &group, int count) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  const RootSystemData rs = build_root_system(group);
  Report report;
  report.command = "spectrum";
  report.inputs["group"] = to_string(group);
  report.inputs["count"] = count;
  for (const auto &line : bi_invariant_spectrum(rs, count)) {
    Json row;
    row["eigenvalue"] = rat_to_string(line.eigenvalue);
    row["multiplicity"] = detail::json_integer(line.multiplicity);
    std::string contributors;
    for (size_t i = 0; i < line.contributors.size(); ++i) {
      if (i > 0) contributors += "; ";
      contributors += line.contributors[i].second.str() + "x" +
                      to_string(line.contributors[i].first);
    }
    row["contributors"] = contributors;
    report.rows.push_back(std::move(row));
  }
  report.verdicts.push_back("lines=" + std::to_string(report.rows.size()));
  detail::finish(report, true);
  return report;
}

/// Full first-eigenvalue multiplicity case analysis with the trace
/// obstruction's symplectic parity pruning where Frobenius-Schur types are
/// known. Passes exactly when the method proves rigidity.
inline Report cmd_uniqueness(const RankedGroup &group) {
  const RigidityAnalysis a = analyze_rigidity(group);
  Report report;
  report.command = "uniqueness";
  report.inputs["group"] = to_string(group);
  for (const auto &sol : a.solutions) {
    Json row;
    row["solution"] = detail::solution_text(sol);
    row["pruned"] = sol.pruned;
    row["reason"] = sol.prune_reason;
    row["canonical"] = is_canonical_solution(sol, a.first);
    report.rows.push_back(std::move(row));
  }
  report.verdicts.push_back("first_eigenvalue=" + rat_to_string(a.first.value));
  report.verdicts.push_back("multiplicity=" + a.first.multiplicity.str());
  report.verdicts.push_back("solution_count=" + std::to_string(a.verdict.solution_count));
  report.verdicts.push_back("surviving_count=" + std::to_string(a.verdict.surviving_count));
  report.verdicts.push_back(std::string("parity_applied=") +
                            (a.parity_applied ? "true" : "false"));
  report.verdicts.push_back("conclusion=" + to_string(a.verdict.conclusion));
  detail::finish(report, a.verdict.conclusion == Conclusion::RigidByMethod);
  return report;
}

/// First-eigenvalue case analysis for every supported non-C group up to
/// max_rank; passes when each has at least two solution multisets.
inline Report cmd_scan(int max_rank) {
  Report report;
  report.command = "scan";
  report.inputs["max_rank"] = max_rank;
  bool pass = true;
  for (const auto &a : scan_analyses(max_rank)) {
    Json row;
    row["group"] = to_string(a.verdict.group);
    row["first_eigenvalue"] = rat_to_string(a.first.value);
    row["multiplicity"] = detail::json_integer(a.first.multiplicity);
    row["solution_count"] = a.verdict.solution_count;
    row["conclusion"] = to_string(a.verdict.conclusion);
    if (a.verdict.solution_count < 2) pass = false;
    report.rows.push_back(std::move(row));
  }
  report.verdicts.push_back("groups=" + std::to_string(report.rows.size()));
  report.verdicts.push_back(std::string("all_solution_counts_at_least_two=") +
                            (pass ? "true" : "false"));
  detail::finish(report, pass);
  return report;
}

/// Trace identity for the metric Casimir on the defining representation of
/// sp(n) over seeded random metrics with det >= 1.
inline Report cmd_verify_gss(int n, int trials, std::uint64_t seed) {
  const double tolerance = 1e-8;
  const double residual = verify_gss_trace(n, trials, seed);
  Report report;
  report.command = "verify-gss";
  report.inputs["n"] = n;
  report.inputs["trials"] = trials;
  report.inputs["seed"] = seed;
  Json row;
  row["max_rel_residual"] = residual;
  row["tolerance"] = tolerance;
  report.rows.push_back(std::move(row));
  detail::finish(report, residual < tolerance);
  return report;
}

/// Kramers parity of metric-Casimir spectra in the spin-j representation:
/// half-integer spin must produce only even eigenvalue clusters, integer
/// spin must exhibit an odd cluster.
inline Report cmd_verify_parity(const Rational &j, int trials, std::uint64_t seed) {
  const ParityReport parity = verify_kramers_parity(j, trials, seed);
  const Rational two_j(2 * j);
  const bool half_integer = denominator(two_j) == 1 && numerator(two_j) % 2 != 0;
  Report report;
  report.command = "verify-parity";
  report.inputs["j"] = rat_to_string(j);
  report.inputs["trials"] = trials;
  report.inputs["seed"] = seed;
  Json row;
  row["all_clusters_even"] = parity.all_clusters_even;
  row["trials_with_odd_cluster"] = parity.trials_with_odd_cluster;
  row["trials"] = parity.trials;
  report.rows.push_back(std::move(row));
  report.verdicts.push_back(std::string("expected_parity=") +
                            (half_integer ? "even_clusters" : "odd_cluster_present"));
  detail::finish(report, half_integer ? parity.all_clusters_even
                                      : parity.trials_with_odd_cluster > 0);
  return report;
}

}  // namespace sprigid
