#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sprigid/rational.hpp"

namespace sprigid {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  throw std::logic_error("bad family");
}

/// A classical simple group identified by family letter and rank.
///
/// Each isomorphism class is admitted under exactly one label: the low-rank
/// coincidences B1=C1=A1, B2=C2 and D3=A3 are rejected with a redirect to the
/// label this library uses, and the non-simple D1, D2 are rejected outright.
struct RankedGroup {
  Family family;
  int rank;

  friend bool operator==(const RankedGroup &, const RankedGroup &) = default;
};

inline std::string to_string(const RankedGroup &g) {
  return std::string(1, family_letter(g.family)) + std::to_string(g.rank);
}

inline RankedGroup make_group(Family family, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  switch (family) {
    case Family::A:
    case Family::C:
      break;
    case Family::B:
      if (rank == 1)
        throw std::invalid_argument("B1 duplicates A1 = C1; use A1 or C1");
      if (rank == 2) throw std::invalid_argument("B2 duplicates C2; use C2");
      break;
    case Family::D:
      if (rank == 1)
        throw std::invalid_argument("D1 is abelian, not a simple group");
      if (rank == 2)
        throw std::invalid_argument("D2 duplicates A1 x A1, not simple");
      if (rank == 3) throw std::invalid_argument("D3 duplicates A3; use A3");
      break;
  }
  return RankedGroup{family, rank};
}

/// Parses a selector like "C4" or "A2".
inline RankedGroup parse_group(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("bad group selector: '" + std::string(s) + "'");
  Family f;
  switch (s[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'B': case 'b': f = Family::B; break;
    case 'C': case 'c': f = Family::C; break;
    case 'D': case 'd': f = Family::D; break;
    default:
      throw std::invalid_argument("bad group selector: '" + std::string(s) + "'");
  }
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad group selector: '" + std::string(s) + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw std::invalid_argument("rank out of range");
  }
  return make_group(f, rank);
}

/// Number of epsilon coordinates the family's weights live in.
/// A_r is realized on the sum-zero hyperplane of R^(r+1).
inline int ambient_dim(const RankedGroup &g) {
  return g.family == Family::A ? g.rank + 1 : g.rank;
}

inline Integer positive_root_count(const RankedGroup &g) {
  const Integer r = g.rank;
  switch (g.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B: return r * r;
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
  }
  throw std::logic_error("bad family");
}

/// Dimension of the group manifold: rank + number of roots.
inline Integer group_dimension(const RankedGroup &g) {
  return Integer(g.rank) + 2 * positive_root_count(g);
}

/// Exact vector in the epsilon basis of the Cartan dual.
struct WeightVector {
  std::vector<Rational> coords;

  friend bool operator==(const WeightVector &, const WeightVector &) = default;
};

/// Plain dot product of the epsilon coordinates; both vectors must have the
/// same ambient dimension.
inline Rational inner_product(const WeightVector &u, const WeightVector &v) {
  if (u.coords.size() != v.coords.size())
    throw std::invalid_argument("inner_product: dimension mismatch");
  Rational acc = 0;
  for (size_t i = 0; i < u.coords.size(); ++i) acc += u.coords[i] * v.coords[i];
  return acc;
}

inline WeightVector add(const WeightVector &u, const WeightVector &v) {
  if (u.coords.size() != v.coords.size())
    throw std::invalid_argument("add: dimension mismatch");
  WeightVector w = u;
  for (size_t i = 0; i < v.coords.size(); ++i) w.coords[i] += v.coords[i];
  return w;
}

inline WeightVector scale(const Rational &c, const WeightVector &u) {
  WeightVector w = u;
  for (auto &x : w.coords) x *= c;
  return w;
}

/// Positive roots and rho of a classical group in epsilon coordinates.
///
/// The weight-space form used downstream is form_scale * (dot product); the
/// default scale 1 makes the epsilon basis orthonormal.
struct RootSystemData {
  RankedGroup group;
  std::vector<WeightVector> positive_roots;
  WeightVector rho;
  Rational form_scale = 1;
};

/// The inner product all spectral quantities are computed with.
inline Rational form(const RootSystemData &rs, const WeightVector &u,
                     const WeightVector &v) {
  return rs.form_scale * inner_product(u, v);
}

inline RootSystemData build_root_system(const RankedGroup &group,
                                        const Rational &form_scale = 1) {
  if (form_scale <= 0) throw std::invalid_argument("form_scale must be positive");
  const int d = ambient_dim(group);
  auto unit = [d](int i, const Rational &c) {
    WeightVector w;
    w.coords.assign(d, Rational(0));
    w.coords[i] = c;
    return w;
  };
  std::vector<WeightVector> roots;
  switch (group.family) {
    case Family::A:
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) roots.push_back(add(unit(i, 1), unit(j, -1)));
      break;
    case Family::B:
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          roots.push_back(add(unit(i, 1), unit(j, -1)));
          roots.push_back(add(unit(i, 1), unit(j, 1)));
        }
      for (int j = 0; j < d; ++j) roots.push_back(unit(j, 1));
      break;
    case Family::C:
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          roots.push_back(add(unit(i, 1), unit(j, -1)));
          roots.push_back(add(unit(i, 1), unit(j, 1)));
        }
      for (int j = 0; j < d; ++j) roots.push_back(unit(j, 2));
      break;
    case Family::D:
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          roots.push_back(add(unit(i, 1), unit(j, -1)));
          roots.push_back(add(unit(i, 1), unit(j, 1)));
        }
      break;
  }
  WeightVector rho;
  rho.coords.assign(d, Rational(0));
  for (const auto &alpha : roots) rho = add(rho, alpha);
  rho = scale(Rational(1, 2), rho);
  return RootSystemData{group, std::move(roots), std::move(rho), form_scale};
}

}  // namespace sprigid
