// The truncated ring of C x P^n and the GRR pushforward. The ring gets the
// usual axiom battery on random elements with a fixed seed; the pushforward
// is compared coefficient by coefficient against the hand-expanded formula
// r_j = sum_i (d_i + twist + 1 - g) * k_i^j / j!, which never touches the
// ring code.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wzwblocks/chow.hpp>

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

using wzw::ChowElement;
using wzw::FamilyChernData;
using wzw::Int;
using wzw::LineSummand;
using wzw::Rat;

namespace {

ChowElement random_element(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 4);
  ChowElement out(n);
  for (std::size_t j = 0; j <= n; ++j) {
    out.base(j) = Rat(numerator(rng), denominator(rng));
    out.fiber(j) = Rat(numerator(rng), denominator(rng));
  }
  return out;
}

ChowElement pow(ChowElement x, int k) {
  ChowElement out = ChowElement::one(x.ambient_dim());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

// k^j / j! computed from scratch.
Rat exp_coefficient(const Int& k, std::size_t j) {
  Rat out = 1;
  for (std::size_t i = 1; i <= j; ++i) out *= Rat(k, Int(i));
  return out;
}

}  // namespace

TEST_CASE("distinguished elements") {
  const std::size_t n = 4;
  const ChowElement one = ChowElement::one(n);
  const ChowElement h = ChowElement::hyperplane(n);
  const ChowElement pt = ChowElement::curve_point(n);

  CHECK(one * h == h);
  CHECK(one * pt == pt);
  CHECK(pow(h, int(n)).base(n) == 1);
  // Truncation relations: h^{n+1} = 0 and pt^2 = 0.
  CHECK(pow(h, int(n) + 1) == ChowElement(n));
  CHECK(pt * pt == ChowElement(n));
  // pt * h^n survives as the top class.
  CHECK((pt * pow(h, int(n))).fiber(n) == 1);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(97531u);
  for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(3), std::size_t(5)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const ChowElement x = random_element(n, rng);
      const ChowElement y = random_element(n, rng);
      const ChowElement z = random_element(n, rng);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      CHECK(x - x == ChowElement(n));
      CHECK(x * ChowElement::one(n) == x);
      CHECK(x * ChowElement(n) == ChowElement(n));
    }
  }
}

TEST_CASE("mixing ambient dimensions is rejected") {
  ChowElement small(2);
  ChowElement big(3);
  CHECK_THROWS_AS(small * big, std::invalid_argument);
  CHECK_THROWS_AS(small += big, std::invalid_argument);
  CHECK_THROWS_AS(small -= big, std::invalid_argument);
}

TEST_CASE("chern character of line summands") {
  const std::size_t n = 6;
  const Int d = -3;
  const Int k = 2;
  const ChowElement ch = wzw::ch_line(n, d, k);
  for (std::size_t j = 0; j <= n; ++j) {
    CHECK(ch.base(j) == exp_coefficient(k, j));
    CHECK(ch.fiber(j) == Rat(d) * exp_coefficient(k, j));
  }

  // ch is multiplicative: tensoring line bundles adds degrees and twists.
  std::mt19937 rng(8642u);
  std::uniform_int_distribution<int> degree(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const Int d1 = degree(rng), k1 = degree(rng);
    const Int d2 = degree(rng), k2 = degree(rng);
    CHECK(wzw::ch_line(n, d1 + d2, k1 + k2) == wzw::ch_line(n, d1, k1) * wzw::ch_line(n, d2, k2));
  }
}

TEST_CASE("todd class of the curve factor") {
  for (Int g = -3; g <= 4; ++g) {
    const ChowElement todd = wzw::todd_curve(5, g);
    ChowElement expected = ChowElement::one(5);
    expected.fiber(0) = Rat(1 - g);
    CHECK(todd == expected);
  }
}

TEST_CASE("grr pushforward matches the hand-expanded formula") {
  std::mt19937 rng(13579u);
  std::uniform_int_distribution<int> degree(-5, 5);
  std::uniform_int_distribution<int> genus_dist(-2, 4);
  std::uniform_int_distribution<std::size_t> count(1, 4);
  for (std::size_t n : {std::size_t(1), std::size_t(3), std::size_t(6)}) {
    for (int trial = 0; trial < 30; ++trial) {
      FamilyChernData family;
      family.ambient_dim = n;
      family.genus = genus_dist(rng);
      const std::size_t summands = count(rng);
      for (std::size_t i = 0; i < summands; ++i) {
        family.summands.push_back({Int(degree(rng)), Int(degree(rng))});
      }
      const Int twist = degree(rng);
      const std::vector<Rat> pushed = wzw::grr_pushforward(family, twist);
      REQUIRE(pushed.size() == n + 1);
      for (std::size_t j = 0; j <= n; ++j) {
        Rat expected = 0;
        for (const LineSummand& s : family.summands) {
          expected += Rat(s.curve_degree + twist + 1 - family.genus) *
                      exp_coefficient(s.h_twist, j);
        }
        CHECK(pushed[j] == expected);
      }
    }
  }
}

TEST_CASE("grr pushforward is additive in the family") {
  std::mt19937 rng(2468u);
  std::uniform_int_distribution<int> degree(-5, 5);
  const std::size_t n = 4;
  for (int trial = 0; trial < 30; ++trial) {
    const Int g = degree(rng);
    const Int twist = degree(rng);
    FamilyChernData left{n, g, {{Int(degree(rng)), Int(degree(rng))}}};
    FamilyChernData right{n, g, {{Int(degree(rng)), Int(degree(rng))}}};
    FamilyChernData both{n, g, {left.summands[0], right.summands[0]}};
    const auto a = wzw::grr_pushforward(left, twist);
    const auto b = wzw::grr_pushforward(right, twist);
    const auto c = wzw::grr_pushforward(both, twist);
    for (std::size_t j = 0; j <= n; ++j) CHECK(c[j] == a[j] + b[j]);
  }
}

TEST_CASE("empty families are rejected") {
  FamilyChernData family{3, 0, {}};
  CHECK_THROWS_AS(wzw::grr_pushforward(family, 0), std::invalid_argument);
}

TEST_CASE("determinant degree, frozen examples") {
  // Family [(0,0), (2,-1)] over a genus-1 curve, twist -1: the weights
  // d_i + twist + 1 - g are -1 and +1, so r_0 = 0 and r_1 = (+1)*(-1),
  // giving degree -r_1 = 1.
  CHECK(wzw::det_degree_grr(1, 1, 0, 2, -1) == 1);
  CHECK(wzw::det_degree_grr(5, 0, -2, 4, -2) == 3);
}

TEST_CASE("determinant degree equals the closed form on a grid") {
  // For the two-summand family [(d1, 0), (d2, -1)] the balancing twist is
  // ell = g - 1 - (d1+d2)/2 and the degree comes out as (d2-d1)/2.
  for (Int g = -3; g <= 5; ++g) {
    for (Int d1 = -6; d1 <= 6; ++d1) {
      for (Int d2 = d1 % 2 == 0 ? Int(-6) : Int(-5); d2 <= 6; d2 += 2) {
        const Int ell = g - 1 - (d1 + d2) / 2;
        CHECK(wzw::det_degree_grr(3, g, d1, d2, ell) == (d2 - d1) / 2);
      }
    }
  }
}

TEST_CASE("determinant degree rejects bad input") {
  CHECK_THROWS_AS(wzw::det_degree_grr(0, 1, 0, 2, -1), std::invalid_argument);
  // Twist off by one: the virtual rank no longer vanishes.
  CHECK_THROWS_AS(wzw::det_degree_grr(1, 1, 0, 2, 0), std::invalid_argument);
}
