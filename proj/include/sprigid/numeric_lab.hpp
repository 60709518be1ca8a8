#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sprigid/irreps.hpp"
#include "sprigid/obstruction.hpp"
#include "sprigid/root_system.hpp"

namespace sprigid {

/// Orthonormal matrix basis of the compact real form sp(n), realized as
/// 2n x 2n complex matrices [[A, B], [-conj(B), conj(A)]] with A
/// anti-Hermitian and B symmetric. Orthonormality is with respect to
/// <X,Y> = -form_constant * tr(XY), the constant calibrated so the defining
/// representation's Casimir is (2n+1) * Id.
struct LieBasis {
  RankedGroup group;
  std::vector<Eigen::MatrixXcd> matrices;
  double form_constant = 0;
  std::string gram_form;
};

struct MetricMatrix {
  Eigen::MatrixXd entries;
  double det = 0;
  double norm_sq = 0;
};

struct CasimirMatrix {
  Eigen::MatrixXcd matrix;
  std::string rep;
};

struct RepSpec {
  enum class Kind { Defining, Spin };
  Kind kind = Kind::Defining;
  Rational spin = 0;

  static RepSpec defining() { return RepSpec{Kind::Defining, 0}; }
  static RepSpec spin_j(const Rational &j) { return RepSpec{Kind::Spin, j}; }
};

/// The standard symplectic form [[0, I], [-I, 0]].
inline Eigen::MatrixXcd standard_symplectic_form(int n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
  return j;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
}

/// Raw (unnormalized) basis of sp(n), in a fixed enumeration order:
/// diagonal anti-Hermitian, real and imaginary off-diagonal anti-Hermitian,
/// then real and imaginary symmetric blocks.
inline std::vector<Eigen::MatrixXcd> raw_sp_basis(int n) {
  using Mat = Eigen::MatrixXcd;
  const std::complex<double> i_unit(0, 1);
  std::vector<Mat> basis;
  auto embed_a = [&](const Mat &a) {
    Mat x = Mat::Zero(2 * n, 2 * n);
    x.topLeftCorner(n, n) = a;
    x.bottomRightCorner(n, n) = a.conjugate();
    return x;
  };
  auto embed_b = [&](const Mat &b) {
    Mat x = Mat::Zero(2 * n, 2 * n);
    x.topRightCorner(n, n) = b;
    x.bottomLeftCorner(n, n) = -b.conjugate();
    return x;
  };
  for (int j = 0; j < n; ++j) {
    Mat a = Mat::Zero(n, n);
    a(j, j) = i_unit;
    basis.push_back(embed_a(a));
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Mat a = Mat::Zero(n, n);
      a(j, k) = 1;
      a(k, j) = -1;
      basis.push_back(embed_a(a));
    }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Mat a = Mat::Zero(n, n);
      a(j, k) = i_unit;
      a(k, j) = i_unit;
      basis.push_back(embed_a(a));
    }
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      Mat b = Mat::Zero(n, n);
      b(j, k) += 1;
      b(k, j) = b(j, k);
      basis.push_back(embed_b(b));
    }
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      Mat b = Mat::Zero(n, n);
      b(j, k) += i_unit;
      b(k, j) = b(j, k);
      basis.push_back(embed_b(b));
    }
  return basis;
}

inline double off_scalar_residual(const Eigen::MatrixXcd &s, double scalar) {
  const int d = static_cast<int>(s.rows());
  return (s - scalar * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

}  // namespace detail

/// Builds the orthonormal sp(n) basis, calibrating the trace-form constant
/// against the defining-representation Casimir scalar 2n+1.
inline LieBasis build_sp_basis(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("build_sp_basis supports 1 <= n <= 6");
  auto basis = detail::raw_sp_basis(n);
  for (auto &x : basis) {
    const double norm_sq = -(x * x).trace().real();
    x /= std::sqrt(norm_sq);
  }
  Eigen::MatrixXcd casimir = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (const auto &x : basis) casimir += x * x;
  const double scalar = casimir.trace().real() / (2 * n);
  if (detail::off_scalar_residual(casimir, scalar) > 1e-8)
    throw std::runtime_error("defining-rep Casimir is not scalar; basis construction bug");
  // With the basis orthonormal under -c*tr, the Casimir scales as 1/c.
  const double c = -scalar / (2 * n + 1);
  if (!(c > 0)) throw std::runtime_error("calibration produced a nonpositive form constant");
  for (auto &x : basis) x /= std::sqrt(c);
  LieBasis out;
  out.group = make_group(Family::C, n);
  out.matrices = std::move(basis);
  out.form_constant = c;
  out.gram_form = "<X,Y> = -" + std::to_string(c) + " * tr(XY)";
  return out;
}

/// Calibrated trace-form constant and the max-entry residual of
/// sum X_i^2 + (2n+1) Id in the defining representation.
inline std::pair<double, double> verify_normalization(int n) {
  const LieBasis basis = build_sp_basis(n);
  Eigen::MatrixXcd casimir = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (const auto &x : basis.matrices) casimir += x * x;
  const double residual = detail::off_scalar_residual(casimir, -(2.0 * n + 1.0));
  return {basis.form_constant, residual};
}

inline MetricMatrix identity_metric(int m) {
  MetricMatrix a;
  a.entries = Eigen::MatrixXd::Identity(m, m);
  a.det = 1;
  a.norm_sq = m;
  return a;
}

inline MetricMatrix metric_from(Eigen::MatrixXd entries) {
  MetricMatrix a;
  a.det = entries.determinant();
  a.norm_sq = entries.squaredNorm();
  a.entries = std::move(entries);
  return a;
}

/// Seeded random metric: entries i.i.d. uniform on [-1,1], resampled while
/// |det| < 1e-3, sign-fixed and rescaled so det >= 1.
inline MetricMatrix random_metric(int m, std::uint64_t seed, int trial) {
  auto rng = detail::trial_rng(seed, trial);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::MatrixXd a(m, m);
  double det = 0;
  do {
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) a(r, c) = uniform(rng);
    det = a.determinant();
  } while (std::abs(det) < 1e-3);
  if (det < 0) {
    a.col(0) *= -1;
    det = -det;
  }
  if (det < 1) {
    a *= std::pow(det, -1.0 / m);
  }
  return metric_from(std::move(a));
}

namespace detail {

/// Angular momentum matrices (J_x, J_y, J_z) for spin j, basis ordered by
/// decreasing magnetic number, Condon-Shortley phases.
inline std::array<Eigen::MatrixXcd, 3> spin_generators(const Rational &j) {
  const Rational two_j = 2 * j;
  if (j < 0 || denominator(two_j) != 1)
    throw std::invalid_argument("spin must be a nonnegative half-integer");
  const int d = two_j.convert_to<int>() + 1;
  const double jd = rat_to_double(j);
  Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double mk = jd - k;
    jz(k, k) = mk;
    if (k > 0) jp(k - 1, k) = std::sqrt(jd * (jd + 1) - mk * (mk + 1));
  }
  const Eigen::MatrixXcd jm = jp.adjoint();
  const std::complex<double> i_unit(0, 1);
  return {0.5 * (jp + jm), -0.5 * i_unit * (jp - jm), jz};
}

/// Images of the sp(1) basis elements under the spin-j representation,
/// obtained by decomposing each 2x2 element over i*sigma and mapping
/// i*sigma_w to 2i*J_w.
inline std::vector<Eigen::MatrixXcd> spin_rep_images(const LieBasis &basis,
                                                     const Rational &j) {
  if (basis.group.rank != 1)
    throw std::invalid_argument("spin representations exist only for sp(1)");
  const auto gens = spin_generators(j);
  const std::complex<double> i_unit(0, 1);
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 1, 1, 0;
  sy << 0, -i_unit, i_unit, 0;
  sz << 1, 0, 0, -1;
  const std::array<Eigen::Matrix2cd, 3> sigma = {sx, sy, sz};
  std::vector<Eigen::MatrixXcd> images;
  for (const auto &x : basis.matrices) {
    // X = sum_w coeff_w * (i sigma_w), coeff_w = tr(X sigma_w) / (2i)
    Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(gens[0].rows(), gens[0].cols());
    for (int w = 0; w < 3; ++w) {
      const std::complex<double> coeff = (x * sigma[w]).trace() / (2.0 * i_unit);
      image += coeff * (2.0 * i_unit * gens[w]);
    }
    images.push_back(std::move(image));
  }
  return images;
}

}  // namespace detail

/// pi(-C_A) = -sum_j (sum_i a_ij pi(X_i))^2 for the chosen representation.
inline CasimirMatrix casimir_matrix(const LieBasis &basis, const MetricMatrix &metric,
                                    const RepSpec &rep) {
  const int m = static_cast<int>(basis.matrices.size());
  if (metric.entries.rows() != m || metric.entries.cols() != m)
    throw std::invalid_argument("metric matrix size does not match the basis");
  if (std::abs(metric.det) < 1e-9)
    throw std::invalid_argument("metric matrix is singular");
  std::vector<Eigen::MatrixXcd> images;
  std::string rep_name;
  if (rep.kind == RepSpec::Kind::Defining) {
    images = basis.matrices;
    rep_name = "defining representation of sp(" + std::to_string(basis.group.rank) + ")";
  } else {
    images = detail::spin_rep_images(basis, rep.spin);
    rep_name = "spin-" + rat_to_string(rep.spin) + " representation of sp(1)";
  }
  const int d = static_cast<int>(images[0].rows());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int col = 0; col < m; ++col) {
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(d, d);
    for (int row = 0; row < m; ++row) y += metric.entries(row, col) * images[row];
    out -= y * y;
  }
  return CasimirMatrix{std::move(out), std::move(rep_name)};
}

/// Max relative deviation of tr pi(-C_A) from the expected-trace formula over
/// seeded random metrics with det >= 1.
inline double verify_gss_trace(int n, int trials, std::uint64_t seed) {
  if (n < 1 || n > 4) throw std::invalid_argument("verify_gss_trace supports 1 <= n <= 4");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const LieBasis basis = build_sp_basis(n);
  const int m = static_cast<int>(basis.matrices.size());
  const RankedGroup group = make_group(Family::C, n);
  std::vector<Integer> e1_labels(n, 0);
  e1_labels[0] = 1;
  const DominantWeight eps1 = weight_from_dynkin(group, e1_labels);
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    const MetricMatrix a = random_metric(m, seed, t);
    const CasimirMatrix c = casimir_matrix(basis, a, RepSpec::defining());
    const double expected = gss_expected_trace(group, eps1, a.norm_sq);
    const double got = c.matrix.trace().real();
    worst = std::max(worst, std::abs(got - expected) / std::abs(expected));
  }
  return worst;
}

/// Sorted eigenvalue clustering with relative gap threshold 1e-6. Throws when
/// a gap falls within a factor 10 of the threshold on either side.
inline std::vector<int> cluster_eigenvalues(std::vector<double> eigenvalues) {
  if (eigenvalues.empty()) throw std::invalid_argument("no eigenvalues to cluster");
  std::sort(eigenvalues.begin(), eigenvalues.end());
  const double range = eigenvalues.back() - eigenvalues.front();
  const double scale = std::max({std::abs(eigenvalues.back()),
                                 std::abs(eigenvalues.front()), 1e-300});
  std::vector<int> sizes;
  if (range <= 1e-9 * scale) {
    sizes.push_back(static_cast<int>(eigenvalues.size()));
    return sizes;
  }
  const double threshold = 1e-6 * range;
  int current = 1;
  for (size_t i = 0; i + 1 < eigenvalues.size(); ++i) {
    const double gap = eigenvalues[i + 1] - eigenvalues[i];
    if (gap > threshold / 10 && gap < threshold * 10)
      throw std::runtime_error(
          "ambiguous eigenvalue clustering (gap near threshold); retry with a new seed");
    if (gap <= threshold) {
      ++current;
    } else {
      sizes.push_back(current);
      current = 1;
    }
  }
  sizes.push_back(current);
  return sizes;
}

struct ParityReport {
  bool all_clusters_even = false;
  int trials_with_odd_cluster = 0;
  int trials = 0;
};

/// Checks Kramers parity of pi(-C_A) spectra for the spin-j representation
/// over seeded random metrics: with half-integer j every eigenvalue cluster
/// must have even size; integer j generically produces odd clusters.
inline ParityReport verify_kramers_parity(const Rational &j, int trials,
                                          std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (j <= 0 || 2 * j > 6 || denominator(Rational(2 * j)) != 1)
    throw std::invalid_argument("spin must be a half-integer with 0 < 2j <= 6");
  const LieBasis basis = build_sp_basis(1);
  ParityReport report;
  report.trials = trials;
  report.all_clusters_even = true;
  for (int t = 0; t < trials; ++t) {
    const MetricMatrix a = random_metric(3, seed, t);
    const CasimirMatrix c = casimir_matrix(basis, a, RepSpec::spin_j(j));
    const Eigen::MatrixXcd herm = 0.5 * (c.matrix + c.matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    std::vector<double> evals(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
    bool odd = false;
    for (int size : cluster_eigenvalues(evals))
      if (size % 2 != 0) odd = true;
    if (odd) {
      report.all_clusters_even = false;
      ++report.trials_with_odd_cluster;
    }
  }
  return report;
}

/// Frobenius-Schur indicator from explicit representation matrices of a real
/// basis of the algebra: +1 real, -1 quaternionic, 0 when no conjugation
/// intertwiner exists.
inline int frobenius_schur_indicator(const std::vector<Eigen::MatrixXcd> &images) {
  if (images.empty()) throw std::invalid_argument("no representation matrices");
  const int d = static_cast<int>(images[0].rows());
  const int m = static_cast<int>(images.size());
  // conj(R) T = T R for all R, as a linear system on vec(T).
  Eigen::MatrixXcd k(m * d * d, d * d);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  for (int r = 0; r < m; ++r) {
    const Eigen::MatrixXcd &rep = images[r];
    for (int col = 0; col < d; ++col)
      for (int row = 0; row < d; ++row) {
        // block row for equation entry; vec is column-major
        for (int q = 0; q < d; ++q) {
          for (int p = 0; p < d; ++p) {
            std::complex<double> val = 0;
            if (q == col) val += std::conj(rep(row, p));
            if (p == row) val -= rep(q, col);
            k(r * d * d + col * d + row, q * d + p) = val;
          }
        }
      }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeThinV);
  const auto &sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest > 1e-8 * sv(0)) return 0;
  Eigen::MatrixXcd t(d, d);
  for (int q = 0; q < d; ++q)
    for (int p = 0; p < d; ++p) t(p, q) = svd.matrixV()(q * d + p, sv.size() - 1);
  const Eigen::MatrixXcd tt = t * t.conjugate();
  const std::complex<double> lambda = tt.trace() / static_cast<double>(d);
  if ((tt - lambda * id).cwiseAbs().maxCoeff() > 1e-6 * std::abs(lambda))
    throw std::runtime_error("conjugation intertwiner is not scalar-squared");
  return lambda.real() > 0 ? 1 : -1;
}

}  // namespace sprigid
