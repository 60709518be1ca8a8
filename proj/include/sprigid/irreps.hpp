#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sprigid/rational.hpp"
#include "sprigid/root_system.hpp"

namespace sprigid {

/// Highest weight in epsilon coefficients a_1..a_rank.
///
/// Family conventions (full weight lattice of the simply connected group):
///   A_r: integers a_1 >= ... >= a_r >= 0; the ambient realization appends a
///        zero and projects onto the sum-zero hyperplane.
///   B_r: a_1 >= ... >= a_r >= 0, all integers or all half-odd integers.
///   C_n: integers a_1 >= ... >= a_n >= 0.
///   D_r: a_1 >= ... >= a_{r-1} >= |a_r|, all integers or all half-odd
///        integers; the last coefficient may be negative.
struct DominantWeight {
  RankedGroup group;
  std::vector<Rational> coeffs;

  friend bool operator==(const DominantWeight &, const DominantWeight &) = default;
};

inline bool is_zero_weight(const DominantWeight &w) {
  return std::all_of(w.coeffs.begin(), w.coeffs.end(),
                     [](const Rational &c) { return c == 0; });
}

inline DominantWeight zero_weight(const RankedGroup &g) {
  return DominantWeight{g, std::vector<Rational>(g.rank, Rational(0))};
}

inline std::string to_string(const DominantWeight &w) {
  std::string s = "(";
  for (size_t i = 0; i < w.coeffs.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(w.coeffs[i]);
  }
  return s + ")";
}

inline bool is_dominant(const DominantWeight &w) {
  const int r = w.group.rank;
  if (static_cast<int>(w.coeffs.size()) != r) return false;
  auto is_integral = [](const Rational &c) { return denominator(c) == 1; };
  auto is_half_odd = [](const Rational &c) { return denominator(c) == 2; };
  switch (w.group.family) {
    case Family::A:
    case Family::C: {
      for (int i = 0; i < r; ++i)
        if (!is_integral(w.coeffs[i])) return false;
      for (int i = 0; i + 1 < r; ++i)
        if (w.coeffs[i] < w.coeffs[i + 1]) return false;
      return w.coeffs[r - 1] >= 0;
    }
    case Family::B: {
      const bool half = is_half_odd(w.coeffs[0]);
      for (int i = 0; i < r; ++i)
        if (half ? !is_half_odd(w.coeffs[i]) : !is_integral(w.coeffs[i])) return false;
      for (int i = 0; i + 1 < r; ++i)
        if (w.coeffs[i] < w.coeffs[i + 1]) return false;
      return w.coeffs[r - 1] >= 0;
    }
    case Family::D: {
      const bool half = is_half_odd(w.coeffs[0]);
      for (int i = 0; i < r; ++i)
        if (half ? !is_half_odd(w.coeffs[i]) : !is_integral(w.coeffs[i])) return false;
      for (int i = 0; i + 2 < r; ++i)
        if (w.coeffs[i] < w.coeffs[i + 1]) return false;
      return w.coeffs[r - 2] >= abs(w.coeffs[r - 1]);
    }
  }
  return false;
}

inline void require_dominant(const DominantWeight &w) {
  if (!is_dominant(w))
    throw std::invalid_argument("weight " + to_string(w) + " is not dominant for " +
                                to_string(w.group));
}

/// Ambient epsilon-coordinate realization; for A the partition is projected
/// onto the sum-zero hyperplane.
inline WeightVector to_weight_vector(const DominantWeight &w) {
  WeightVector v;
  v.coords.assign(w.coeffs.begin(), w.coeffs.end());
  if (w.group.family == Family::A) {
    v.coords.push_back(0);
    Rational mean = 0;
    for (const auto &c : v.coords) mean += c;
    mean /= int(v.coords.size());
    for (auto &c : v.coords) c -= mean;
  }
  return v;
}

/// Weight with the given fundamental-weight coordinates (all labels >= 0).
inline DominantWeight weight_from_dynkin(const RankedGroup &g,
                                         const std::vector<Integer> &labels) {
  const int r = g.rank;
  if (static_cast<int>(labels.size()) != r)
    throw std::invalid_argument("need one label per node");
  for (const auto &m : labels)
    if (m < 0) throw std::invalid_argument("labels must be nonnegative");
  std::vector<Rational> a(r, Rational(0));
  switch (g.family) {
    case Family::A:
    case Family::C:
      // omega_i = e_1 + ... + e_i
      for (int j = r - 1; j >= 0; --j)
        a[j] = labels[j] + (j + 1 < r ? a[j + 1] : Rational(0));
      break;
    case Family::B:
      // omega_i = e_1 + ... + e_i for i < r, omega_r = (e_1 + ... + e_r)/2
      a[r - 1] = Rational(labels[r - 1], 2);
      for (int j = r - 2; j >= 0; --j) a[j] = labels[j] + a[j + 1];
      break;
    case Family::D: {
      // omega_{r-1} = (e_1 + ... + e_{r-1} - e_r)/2,
      // omega_r     = (e_1 + ... + e_{r-1} + e_r)/2
      a[r - 1] = Rational(labels[r - 1] - labels[r - 2], 2);
      Rational tail = Rational(labels[r - 1] + labels[r - 2], 2);
      a[r - 2] = tail;
      for (int j = r - 3; j >= 0; --j) a[j] = labels[j] + a[j + 1];
      break;
    }
  }
  DominantWeight w{g, std::move(a)};
  require_dominant(w);
  return w;
}

inline std::vector<DominantWeight> fundamental_weights(const RankedGroup &g) {
  std::vector<DominantWeight> out;
  out.reserve(g.rank);
  for (int i = 0; i < g.rank; ++i) {
    std::vector<Integer> labels(g.rank, 0);
    labels[i] = 1;
    out.push_back(weight_from_dynkin(g, labels));
  }
  return out;
}

/// Casimir eigenvalue <mu + 2 rho, mu> under the root system's form.
inline Rational casimir_eigenvalue(const DominantWeight &w, const RootSystemData &rs) {
  if (w.group != rs.group)
    throw std::invalid_argument("weight belongs to a different group");
  require_dominant(w);
  const WeightVector mu = to_weight_vector(w);
  return form(rs, add(mu, scale(2, rs.rho)), mu);
}

/// Weyl dimension: product over positive roots of <mu+rho,a>/<rho,a>,
/// evaluated in exact rational arithmetic. The form scale cancels.
inline Integer weyl_dimension(const DominantWeight &w, const RootSystemData &rs) {
  if (w.group != rs.group)
    throw std::invalid_argument("weight belongs to a different group");
  require_dominant(w);
  const WeightVector shifted = add(to_weight_vector(w), rs.rho);
  Rational prod = 1;
  for (const auto &alpha : rs.positive_roots)
    prod *= inner_product(shifted, alpha) / inner_product(rs.rho, alpha);
  if (denominator(prod) != 1 || prod <= 0)
    throw std::logic_error("Weyl dimension product is not a positive integer");
  return numerator(prod);
}

/// dim of the C_n irrep with highest weight k*e_1: binom(k+2n-1, k).
inline Integer dim_k_eps1(int n, const Integer &k) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  return binomial(k + 2 * n - 1, k);
}

/// dim of the C_n irrep with highest weight e_1+...+e_p:
/// (2n+2-2p)/(2n+2-p) * binom(2n+1, p).
inline Integer dim_omega_p(int n, int p) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (p < 1 || p > n) throw std::invalid_argument("p out of range");
  const Integer num = (2 * n + 2 - 2 * p) * binomial(2 * n + 1, p);
  const Integer den = 2 * n + 2 - p;
  if (num % den != 0) throw std::logic_error("closed-form dimension not integral");
  return num / den;
}

enum class FsType { Real, Complex, Quaternionic, Undetermined };

inline std::string to_string(FsType t) {
  switch (t) {
    case FsType::Real: return "real";
    case FsType::Complex: return "complex";
    case FsType::Quaternionic: return "quaternionic";
    case FsType::Undetermined: return "undetermined";
  }
  throw std::logic_error("bad fs type");
}

/// Frobenius-Schur type. Every C_n irrep is self-dual; it is quaternionic
/// exactly when the coefficient sum is odd. Other families are reported
/// undetermined rather than risking a wrong prune.
inline FsType fs_type(const DominantWeight &w) {
  require_dominant(w);
  if (w.group.family != Family::C) return FsType::Undetermined;
  Rational sum = 0;
  for (const auto &c : w.coeffs) sum += c;
  return numerator(sum) % 2 != 0 ? FsType::Quaternionic : FsType::Real;
}

struct IrrepSummary {
  DominantWeight weight;
  Integer dim;
  Rational casimir;
  FsType fs;

  friend bool operator==(const IrrepSummary &, const IrrepSummary &) = default;
};

inline IrrepSummary make_irrep_summary(const DominantWeight &w, const RootSystemData &rs) {
  return IrrepSummary{w, weyl_dimension(w, rs), casimir_eigenvalue(w, rs), fs_type(w)};
}

/// (casimir, dim, lexicographic coefficients) ordering used everywhere a
/// deterministic irrep list is emitted.
inline bool irrep_less(const IrrepSummary &x, const IrrepSummary &y) {
  if (x.casimir != y.casimir) return x.casimir < y.casimir;
  if (x.dim != y.dim) return x.dim < y.dim;
  return x.weight.coeffs < y.weight.coeffs;
}

namespace detail {

/// DFS over fundamental-weight coordinates. Both the Weyl dimension and the
/// Casimir eigenvalue strictly increase when any single label increases, so
/// pruning on the partial label vector is exhaustive.
inline std::vector<DominantWeight> enumerate_dominant(
    const RootSystemData &rs,
    const std::function<bool(const DominantWeight &)> &within_bound) {
  const int r = rs.group.rank;
  std::vector<DominantWeight> kept;
  std::vector<Integer> labels(r, 0);
  std::function<void(int)> visit = [&](int pos) {
    if (pos == r) return;
    visit(pos + 1);
    for (;;) {
      labels[pos] += 1;
      DominantWeight w = weight_from_dynkin(rs.group, labels);
      if (!within_bound(w)) break;
      kept.push_back(std::move(w));
      visit(pos + 1);
    }
    labels[pos] = 0;
  };
  kept.push_back(zero_weight(rs.group));
  visit(0);
  return kept;
}

inline std::vector<IrrepSummary> summarize_sorted(const std::vector<DominantWeight> &weights,
                                                  const RootSystemData &rs) {
  std::vector<IrrepSummary> out;
  out.reserve(weights.size());
  for (const auto &w : weights) out.push_back(make_irrep_summary(w, rs));
  std::sort(out.begin(), out.end(), irrep_less);
  return out;
}

}  // namespace detail

/// All dominant weights with Weyl dimension <= max_dim, sorted by
/// (casimir, dim, lexicographic coefficients).
inline std::vector<IrrepSummary> enumerate_irreps_by_dim(const RootSystemData &rs,
                                                         const Integer &max_dim) {
  if (max_dim < 1) throw std::invalid_argument("max_dim must be positive");
  const auto kept = detail::enumerate_dominant(
      rs, [&](const DominantWeight &w) { return weyl_dimension(w, rs) <= max_dim; });
  return detail::summarize_sorted(kept, rs);
}

/// All dominant weights with Casimir eigenvalue <= max_casimir, same order.
inline std::vector<IrrepSummary> enumerate_irreps_by_casimir(const RootSystemData &rs,
                                                             const Rational &max_casimir) {
  if (max_casimir < 0) throw std::invalid_argument("max_casimir must be nonnegative");
  const auto kept = detail::enumerate_dominant(
      rs, [&](const DominantWeight &w) { return casimir_eigenvalue(w, rs) <= max_casimir; });
  return detail::summarize_sorted(kept, rs);
}

/// Margin cubic of the factor-by-factor comparison behind
/// dim V_mu >= dim V_{a1 e1} for C_n: with x in [0, a1] standing for a later
/// coefficient a_j, the candidate certificate asserts nonnegativity of
///   F(x) = (x+n+1-j)(x+a1+2n+1-j)(a1-x+j-1) - (n+1-j)(a1+2n+1-j)(a1+j-1).
/// Exact integer evaluation. F(0) = 0 always, and the certificate is valid at
/// n = 2 (the rank the flagship multiplicity bound needs), but it fails for
/// larger ranks: F = -3 at (n, j, a1, x) = (3, 2, 1, 1). The dimension
/// comparison it aims at is nevertheless true; the enumeration route used by
/// the multiplicity analyses does not rely on this polynomial.
inline Integer dim_lower_bound_cubic(int n, int j, const Integer &a1, const Integer &x) {
  if (n < 2 || j < 2 || j > n) throw std::invalid_argument("need 2 <= j <= n");
  return (x + n + 1 - j) * (x + a1 + 2 * n + 1 - j) * (a1 - x + j - 1) -
         Integer(n + 1 - j) * (a1 + 2 * n + 1 - j) * (a1 + j - 1);
}

}  // namespace sprigid
