#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "sprigid/irreps.hpp"
#include "sprigid/root_system.hpp"

namespace sprigid {

/// One distinct eigenvalue of the bi-invariant Laplacian: each contributing
/// irrep of dimension d accounts for d^2 copies.
struct SpectrumLine {
  Rational eigenvalue;
  Integer multiplicity;
  std::vector<std::pair<DominantWeight, Integer>> contributors;
};

struct FirstEigenvalue {
  Rational value;
  Integer multiplicity;
  std::vector<DominantWeight> minimizers;
};

namespace detail {

inline std::vector<SpectrumLine> lines_up_to(const RootSystemData &rs,
                                             const Rational &threshold) {
  std::map<Rational, SpectrumLine> by_value;
  for (const auto &s : enumerate_irreps_by_casimir(rs, threshold)) {
    auto &line = by_value[s.casimir];
    line.eigenvalue = s.casimir;
    line.multiplicity += s.dim * s.dim;
    line.contributors.emplace_back(s.weight, s.dim);
  }
  std::vector<SpectrumLine> lines;
  lines.reserve(by_value.size());
  for (auto &[value, line] : by_value) lines.push_back(std::move(line));
  return lines;
}

}  // namespace detail

/// First `count` distinct eigenvalues of the bi-invariant Laplacian, in
/// increasing order with exact multiplicities. The enumeration threshold is
/// grown until it covers the last reported line, so every line is complete.
inline std::vector<SpectrumLine> bi_invariant_spectrum(const RootSystemData &rs, int count) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  Rational threshold = rs.form_scale * (2 * rs.group.rank + 1);
  for (;;) {
    auto lines = detail::lines_up_to(rs, threshold);
    if (static_cast<int>(lines.size()) >= count) {
      lines.resize(count);
      return lines;
    }
    threshold *= 2;
  }
}

/// Smallest nonzero eigenvalue with its minimizer set, certified by a full
/// enumeration below the best fundamental-weight eigenvalue.
///
/// Soundness: the Casimir eigenvalue is superadditive on dominant weights, so
/// the minimum over nonzero dominant weights is attained at a fundamental
/// weight; the enumeration then certifies the exact minimizer set.
inline FirstEigenvalue first_eigenvalue(const RootSystemData &rs) {
  Rational best = 0;
  bool have = false;
  for (const auto &w : fundamental_weights(rs.group)) {
    const Rational lambda = casimir_eigenvalue(w, rs);
    if (!have || lambda < best) {
      best = lambda;
      have = true;
    }
  }
  const auto below = enumerate_irreps_by_casimir(rs, best);
  FirstEigenvalue out;
  out.value = best;
  for (const auto &s : below)
    if (s.casimir != 0 && s.casimir < out.value) out.value = s.casimir;
  out.multiplicity = 0;
  for (const auto &s : below) {
    if (s.casimir != out.value) continue;
    out.multiplicity += s.dim * s.dim;
    out.minimizers.push_back(s.weight);
  }
  return out;
}

}  // namespace sprigid
