#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sprigid/irreps.hpp"
#include "sprigid/root_system.hpp"
#include "sprigid/spectrum.hpp"

namespace sprigid {

/// A multiset of nontrivial irreps whose dimensions, with repetition counts,
/// sum to the first-eigenvalue multiplicity. Counts never exceed the irrep
/// dimension: an irrep has only that many eigenvalue slots to offer.
struct SolutionEntry {
  IrrepSummary irrep;
  long long count = 0;
};

struct SolutionMultiset {
  std::vector<SolutionEntry> entries;
  bool pruned = false;
  std::string prune_reason;  // empty when not pruned
};

enum class Conclusion { RigidByMethod, MethodInconclusive };

inline std::string to_string(Conclusion c) {
  return c == Conclusion::RigidByMethod ? "rigid_by_method" : "method_inconclusive";
}

struct RigidityVerdict {
  RankedGroup group;
  long long solution_count = 0;
  long long surviving_count = 0;
  bool canonical_survives_uniquely = false;
  Conclusion conclusion = Conclusion::MethodInconclusive;
};

namespace detail {

inline long long to_small(const Integer &x, const char *what) {
  if (x > 2'000'000'000LL)
    throw std::invalid_argument(std::string(what) + " too large for solution enumeration");
  return x.convert_to<long long>();
}

inline bool entry_list_less(const std::vector<SolutionEntry> &x,
                            const std::vector<SolutionEntry> &y) {
  for (size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (irrep_less(x[i].irrep, y[i].irrep)) return true;
    if (irrep_less(y[i].irrep, x[i].irrep)) return false;
    if (x[i].count != y[i].count) return x[i].count < y[i].count;
  }
  return x.size() < y.size();
}

/// Bounded knapsack over the irrep dimensions: items in decreasing dimension,
/// a reachability table over (item, residual) pruning dead branches.
inline std::vector<SolutionMultiset> solve_multiplicity_equation(
    const std::vector<IrrepSummary> &irreps, long long target) {
  std::vector<const IrrepSummary *> items;
  for (const auto &s : irreps)
    if (!is_zero_weight(s.weight)) items.push_back(&s);
  std::sort(items.begin(), items.end(), [](const IrrepSummary *a, const IrrepSummary *b) {
    if (a->dim != b->dim) return a->dim > b->dim;
    return irrep_less(*a, *b);
  });

  const size_t n = items.size();
  std::vector<std::vector<char>> reachable(n + 1, std::vector<char>(target + 1, 0));
  reachable[n][0] = 1;
  for (size_t i = n; i-- > 0;) {
    const long long d = to_small(items[i]->dim, "dimension");
    const long long cmax = to_small(items[i]->dim, "dimension");
    for (long long t = 0; t <= target; ++t) {
      for (long long c = 0; c <= cmax && c * d <= t; ++c) {
        if (reachable[i + 1][t - c * d]) {
          reachable[i][t] = 1;
          break;
        }
      }
    }
  }

  std::vector<SolutionMultiset> out;
  std::vector<SolutionEntry> current;
  std::function<void(size_t, long long)> visit = [&](size_t i, long long rest) {
    if (rest == 0) {
      out.push_back(SolutionMultiset{current, false, {}});
      return;
    }
    if (i == n || !reachable[i][rest]) return;
    const long long d = to_small(items[i]->dim, "dimension");
    const long long cmax = std::min(to_small(items[i]->dim, "dimension"), rest / d);
    for (long long c = 0; c <= cmax; ++c) {
      if (c > 0) current.push_back(SolutionEntry{*items[i], c});
      visit(i + 1, rest - c * d);
      if (c > 0) current.pop_back();
    }
  };
  visit(0, target);

  for (auto &sol : out)
    std::sort(sol.entries.begin(), sol.entries.end(),
              [](const SolutionEntry &a, const SolutionEntry &b) {
                return irrep_less(a.irrep, b.irrep);
              });
  std::sort(out.begin(), out.end(), [](const SolutionMultiset &a, const SolutionMultiset &b) {
    return entry_list_less(a.entries, b.entries);
  });
  return out;
}

}  // namespace detail

/// All solutions of the first-eigenvalue multiplicity equation
///   sum over entries of count * dim == multiplicity,
/// over nontrivial irreps with dim <= multiplicity and count <= dim.
inline std::vector<SolutionMultiset> diophantine_solutions(const RootSystemData &rs) {
  const FirstEigenvalue fe = first_eigenvalue(rs);
  const long long target = detail::to_small(fe.multiplicity, "multiplicity");
  return detail::solve_multiplicity_equation(enumerate_irreps_by_dim(rs, fe.multiplicity),
                                             target);
}

/// Marks pruned every solution containing a quaternionic irrep with odd
/// count. Refuses to run if any entry's Frobenius-Schur type is undetermined.
inline std::vector<SolutionMultiset> parity_prune(std::vector<SolutionMultiset> solutions) {
  for (auto &sol : solutions) {
    for (const auto &e : sol.entries)
      if (e.irrep.fs == FsType::Undetermined)
        throw std::invalid_argument("Frobenius-Schur type undetermined for " +
                                    to_string(e.irrep.weight) + "; cannot parity-prune");
    for (const auto &e : sol.entries) {
      if (e.irrep.fs == FsType::Quaternionic && e.count % 2 != 0) {
        sol.pruned = true;
        sol.prune_reason = "quaternionic irrep " + to_string(e.irrep.weight) +
                           " occurs with odd count " + std::to_string(e.count);
        break;
      }
    }
  }
  return solutions;
}

/// The forced solution: every first-eigenvalue minimizer occurring exactly
/// dim-many times.
inline bool is_canonical_solution(const SolutionMultiset &sol, const FirstEigenvalue &fe) {
  if (sol.entries.size() != fe.minimizers.size()) return false;
  std::vector<DominantWeight> sorted_min = fe.minimizers;
  std::sort(sorted_min.begin(), sorted_min.end(),
            [](const DominantWeight &a, const DominantWeight &b) {
              return a.coeffs < b.coeffs;
            });
  std::vector<const SolutionEntry *> entries;
  for (const auto &e : sol.entries) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(), [](const SolutionEntry *a, const SolutionEntry *b) {
    return a->irrep.weight.coeffs < b->irrep.weight.coeffs;
  });
  for (size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i]->irrep.weight == sorted_min[i])) return false;
    if (Integer(entries[i]->count) != entries[i]->irrep.dim) return false;
  }
  return true;
}

/// Everything the verdict rests on, kept for reporting.
struct RigidityAnalysis {
  FirstEigenvalue first;
  std::vector<SolutionMultiset> solutions;
  bool parity_applied = false;
  RigidityVerdict verdict;
};

inline RigidityAnalysis analyze_rigidity(const RankedGroup &group) {
  const RootSystemData rs = build_root_system(group);
  RigidityAnalysis a;
  a.first = first_eigenvalue(rs);
  const long long target = detail::to_small(a.first.multiplicity, "multiplicity");
  a.solutions = detail::solve_multiplicity_equation(
      enumerate_irreps_by_dim(rs, a.first.multiplicity), target);

  const bool fs_known = std::all_of(
      a.solutions.begin(), a.solutions.end(), [](const SolutionMultiset &sol) {
        return std::all_of(sol.entries.begin(), sol.entries.end(), [](const SolutionEntry &e) {
          return e.irrep.fs != FsType::Undetermined;
        });
      });
  if (fs_known) {
    a.solutions = parity_prune(std::move(a.solutions));
    a.parity_applied = true;
  }

  RigidityVerdict v;
  v.group = group;
  v.solution_count = static_cast<long long>(a.solutions.size());
  const SolutionMultiset *survivor = nullptr;
  for (const auto &sol : a.solutions) {
    if (sol.pruned) continue;
    ++v.surviving_count;
    survivor = &sol;
  }
  v.canonical_survives_uniquely =
      v.surviving_count == 1 && is_canonical_solution(*survivor, a.first);
  v.conclusion = v.canonical_survives_uniquely ? Conclusion::RigidByMethod
                                               : Conclusion::MethodInconclusive;
  a.verdict = v;
  return a;
}

inline RigidityVerdict rigidity_verdict(const RankedGroup &group) {
  return analyze_rigidity(group).verdict;
}

/// The non-C groups the scan covers, in deterministic order.
inline std::vector<RankedGroup> scan_groups(int max_rank) {
  if (max_rank < 2) throw std::invalid_argument("max_rank must be at least 2");
  std::vector<RankedGroup> groups;
  for (int r = 1; r <= max_rank; ++r) groups.push_back(make_group(Family::A, r));
  for (int r = 3; r <= max_rank; ++r) groups.push_back(make_group(Family::B, r));
  for (int r = 4; r <= max_rank; ++r) groups.push_back(make_group(Family::D, r));
  return groups;
}

inline std::vector<RigidityAnalysis> scan_analyses(int max_rank) {
  std::vector<RigidityAnalysis> out;
  for (const auto &g : scan_groups(max_rank)) out.push_back(analyze_rigidity(g));
  return out;
}

/// Verdicts for every supported non-C group up to max_rank.
inline std::vector<RigidityVerdict> scan_verdicts(int max_rank) {
  std::vector<RigidityVerdict> out;
  for (const auto &g : scan_groups(max_rank)) out.push_back(rigidity_verdict(g));
  return out;
}

///// Expected trace of the metric Casimir on the given irrep:
/// (|A|^2 / m) * dim * casimir, with m the group dimension.
inline double gss_expected_trace(const RankedGroup &group, const DominantWeight &weight,
                                 double gram_norm_sq) {
  if (!(gram_norm_sq > 0)) throw std::invalid_argument("gram_norm_sq must be positive");
  const RootSystemData rs = build_root_system(group);
  const IrrepSummary s = make_irrep_summary(weight, rs);
  const double m = rat_to_double(Rational(group_dimension(group)));
  return gram_norm_sq / m * rat_to_double(Rational(s.dim) * s.casimir);
}

///// Certifies the equality case of AM-GM on the Gram eigenvalues: product
/// within `tolerance` of 1 and sum within `tolerance` of m force every entry
/// within a derived bound of 1, which is checked explicitly.
inline bool amgm_rigidity_check(const std::vector<double> &gram_eigenvalues,
                                double tolerance) {
  if (gram_eigenvalues.empty()) throw std::invalid_argument("eigenvalue list is empty");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  for (double a : gram_eigenvalues)
    if (!(a > 0)) throw std::invalid_argument("Gram eigenvalues must be positive");

  const double m = static_cast<double>(gram_eigenvalues.size());
  double sum = 0, log_product = 0;
  for (double a : gram_eigenvalues) {
    sum += a;
    log_product += std::log(a);
  }
  const double product = std::exp(log_product);
  if (std::abs(product - 1.0) > tolerance) return false;
  if (std::abs(sum - m) > tolerance) return false;

  // Each entry satisfies a - 1 - log(a) <= G, and a - 1 - log(a) >= h(|a-1|)
  // with h(t) = t - log(1+t); invert h to bound |a-1|.
  const double gap = std::max(0.0, (sum - m) - log_product) + 1e-14 * m;
  double lo = 0, hi = 1;
  auto h = [](double t) { return t - std::log1p(t); };
  while (h(hi) < gap) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < gap ? lo : hi) = mid;
  }
  const double entry_bound = hi;
  for (double a : gram_eigenvalues)
    if (std::abs(a - 1.0) > entry_bound) return false;
  return true;
}

}  // namespace sprigid
