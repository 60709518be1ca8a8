#include <catch2/catch_amalgamated.hpp>

#include "sprigid/root_system.hpp"

using namespace sprigid;

namespace {

std::vector<RankedGroup> supported_groups(int max_rank) {
  std::vector<RankedGroup> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(make_group(Family::A, r));
  for (int r = 3; r <= max_rank; ++r) out.push_back(make_group(Family::B, r));
  for (int r = 1; r <= max_rank; ++r) out.push_back(make_group(Family::C, r));
  for (int r = 4; r <= max_rank; ++r) out.push_back(make_group(Family::D, r));
  return out;
}

}  // namespace

TEST_CASE("group construction accepts supported ranks", "[root_system]") {
  CHECK(to_string(make_group(Family::C, 4)) == "C4");
  CHECK(to_string(make_group(Family::A, 1)) == "A1");
  CHECK(to_string(make_group(Family::B, 3)) == "B3");
  CHECK(to_string(make_group(Family::D, 4)) == "D4");
}

TEST_CASE("group construction rejects duplicate or degenerate ranks", "[root_system]") {
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_WITH(make_group(Family::B, 1), ContainsSubstring("A1") && ContainsSubstring("C1"));
  CHECK_THROWS_WITH(make_group(Family::B, 2), ContainsSubstring("C2"));
  CHECK_THROWS_AS(make_group(Family::D, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_group(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_WITH(make_group(Family::D, 3), ContainsSubstring("A3"));
  CHECK_THROWS_AS(make_group(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_group(Family::C, -1), std::invalid_argument);
}

TEST_CASE("group parsing", "[root_system]") {
  CHECK(parse_group("C4") == make_group(Family::C, 4));
  CHECK(parse_group("A12") == make_group(Family::A, 12));
  CHECK_THROWS_AS(parse_group("E8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("C"), std::invalid_argument);
  CHECK(parse_group("c4") == make_group(Family::C, 4));
  CHECK_THROWS_AS(parse_group("C4x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("B2"), std::invalid_argument);
}

TEST_CASE("counting formulas match the built root lists", "[root_system]") {
  for (const auto &g : supported_groups(6)) {
    const RootSystemData rs = build_root_system(g);
    CHECK(static_cast<int>(rs.positive_roots.size()) == positive_root_count(g));
    CHECK(group_dimension(g) == g.rank + 2 * positive_root_count(g));
    for (const auto &root : rs.positive_roots)
      CHECK(static_cast<int>(root.coords.size()) == ambient_dim(g));
  }
  // closed forms spot-checked
  CHECK(group_dimension(make_group(Family::C, 1)) == 3);
  CHECK(group_dimension(make_group(Family::C, 2)) == 10);
  CHECK(group_dimension(make_group(Family::C, 3)) == 21);
  CHECK(group_dimension(make_group(Family::C, 4)) == 36);
  CHECK(group_dimension(make_group(Family::A, 1)) == 3);
  CHECK(group_dimension(make_group(Family::A, 2)) == 8);
  CHECK(group_dimension(make_group(Family::B, 3)) == 21);
  CHECK(group_dimension(make_group(Family::D, 4)) == 28);
}

TEST_CASE("rho is half the sum of positive roots", "[root_system]") {
  for (const auto &g : supported_groups(6)) {
    const RootSystemData rs = build_root_system(g);
    WeightVector sum;
    sum.coords.assign(ambient_dim(g), 0);
    for (const auto &root : rs.positive_roots) sum = add(sum, root);
    for (int i = 0; i < ambient_dim(g); ++i)
      CHECK(Rational(2) * rs.rho.coords[i] == sum.coords[i]);
  }
}

TEST_CASE("rho values for reference groups", "[root_system]") {
  CHECK(build_root_system(make_group(Family::C, 2)).rho.coords ==
        std::vector<Rational>{2, 1});
  CHECK(build_root_system(make_group(Family::A, 2)).rho.coords ==
        std::vector<Rational>{1, 0, -1});
  CHECK(build_root_system(make_group(Family::B, 3)).rho.coords ==
        std::vector<Rational>{Rational(5, 2), Rational(3, 2), Rational(1, 2)});
  CHECK(build_root_system(make_group(Family::D, 4)).rho.coords ==
        std::vector<Rational>{3, 2, 1, 0});
}

TEST_CASE("rho pairs positively with every positive root", "[root_system]") {
  for (const auto &g : supported_groups(6)) {
    const RootSystemData rs = build_root_system(g);
    for (const auto &root : rs.positive_roots) CHECK(form(rs, rs.rho, root) > 0);
  }
}

TEST_CASE("inner product arithmetic", "[root_system]") {
  WeightVector u{{1, 2}}, v{{3, Rational(-1, 2)}};
  CHECK(inner_product(u, v) == Rational(2));
  CHECK(add(u, v).coords == std::vector<Rational>{4, Rational(3, 2)});
  CHECK(scale(Rational(2), u).coords == std::vector<Rational>{2, 4});
  WeightVector w{{1, 2, 3}};
  CHECK_THROWS_AS(inner_product(u, w), std::invalid_argument);
}

TEST_CASE("form scale multiplies the pairing", "[root_system]") {
  const RootSystemData plain = build_root_system(make_group(Family::C, 2));
  const RootSystemData scaled = build_root_system(make_group(Family::C, 2), Rational(3));
  WeightVector u{{1, 1}};
  CHECK(form(scaled, u, u) == Rational(3) * form(plain, u, u));
}
