#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "sincivp/transform.hpp"

using namespace sincivp;

namespace {
constexpr double kPi = std::numbers::pi;
const Interval kUnit{0.0, 1.0};
const Interval kTwo{0.0, 2.0};
const Interval kSym{-1.0, 1.0};

// parameter sets of the worked examples, per transformation kind, for grid
// stress tests
const RegularityParams kSeParamSets[] = {{1.0, 1.0},
                                         {1.0, 3.0 * 3.14 / 4.0},
                                         {0.5, 3.14},
                                         {1.0, 1.57}};
const RegularityParams kDeParamSets[] = {{1.0, 1.0},
                                         {1.0, 0.8332164256942911},
                                         {0.5, 1.57},
                                         {1.0, 0.5233061083388532}};
}  // namespace

TEST_SUITE_BEGIN("transform");

TEST_CASE("SE forward midpoint and sample values") {
  const NodePoint mid = se_forward(0.0, kUnit);
  CHECK(mid.t == 0.5);
  CHECK(mid.off_a == 0.5);
  CHECK(mid.off_b == 0.5);
  CHECK(se_forward(2.0, kTwo).t ==
        doctest::Approx(1.7615941559557649).epsilon(1e-15));  // tanh(1)+1
}

TEST_CASE("SE forward approaches the endpoints from inside") {
  const NodePoint p = se_forward(700.0, kUnit);
  CHECK(p.off_b > 0.0);
  CHECK(p.t <= 1.0);
  const NodePoint q = se_forward(-700.0, kUnit);
  CHECK(q.off_a > 0.0);
  CHECK(q.t >= 0.0);
}

TEST_CASE("SE offsets sum to the interval length") {
  for (double x : {-30.0, -3.0, -0.1, 0.0, 0.7, 5.0, 30.0}) {
    const NodePoint p = se_forward(x, kTwo);
    CHECK(p.off_a + p.off_b == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("SE inverse values and domain errors") {
  CHECK(se_inverse(0.5, kUnit) == 0.0);
  CHECK(se_inverse(0.75, kUnit) ==
        doctest::Approx(1.0986122886681098).epsilon(1e-15));  // log 3
  CHECK_THROWS_AS(se_inverse(0.0, kUnit), std::domain_error);
  CHECK_THROWS_AS(se_inverse(1.0, kUnit), std::domain_error);
  CHECK_THROWS_AS(se_inverse(-0.5, kUnit), std::domain_error);
}

TEST_CASE("SE round trip through the offset-aware inverse") {
  for (double x = -30.0; x <= 30.0; x += 0.25) {
    const NodePoint p = se_forward(x, kTwo);
    const double back =
        inverse_from_offsets(TransformKind::SE, p.off_a, p.off_b);
    CHECK(std::abs(back - x) < 1e-10);
  }
  // plain-t inverse round-trips while b - t is still well represented
  for (double x = -10.0; x <= 10.0; x += 0.5) {
    const NodePoint p = se_forward(x, kUnit);
    CHECK(std::abs(se_inverse(p.t, kUnit) - x) < 1e-10);
  }
}

TEST_CASE("DE forward midpoint, offsets, and round trip") {
  CHECK(de_forward(0.0, kUnit).t == 0.5);
  const NodePoint p = de_forward(-3.0, kTwo);
  CHECK(p.off_a == doctest::Approx(4.2941610558782408e-14).epsilon(1e-13));
  CHECK(p.off_a > 0.0);
  for (double x = -4.0; x <= 4.0; x += 0.05) {
    const NodePoint q = de_forward(x, kSym);
    const double back =
        inverse_from_offsets(TransformKind::DE, q.off_a, q.off_b);
    CHECK(std::abs(back - x) < 1e-10);
  }
  for (double x = -2.0; x <= 2.0; x += 0.25) {
    const NodePoint q = de_forward(x, kUnit);
    CHECK(std::abs(de_inverse(q.t, kUnit) - x) < 1e-10);
  }
}

TEST_CASE("DE inverse values and domain errors") {
  CHECK(de_inverse(0.5, kUnit) == 0.0);
  // arctanh(tanh(pi/2)) telescopes: x = asinh(1)
  CHECK(de_inverse(std::tanh(kPi / 2), kSym) ==
        doctest::Approx(0.8813735870195430).epsilon(1e-12));
  CHECK_THROWS_AS(de_inverse(1.0, kUnit), std::domain_error);
  CHECK_THROWS_AS(de_inverse(0.0, kUnit), std::domain_error);
}

TEST_CASE("DE forward rejects arguments whose sinh overflows") {
  CHECK_THROWS_AS(de_forward(800.0, kUnit), std::invalid_argument);
  CHECK_THROWS_AS(de_forward(std::numeric_limits<double>::infinity(), kUnit),
                  std::invalid_argument);
}

TEST_CASE("derivatives: closed forms and sample values") {
  CHECK(se_derivative(0.0, kUnit) == 0.25);
  CHECK(se_derivative(0.0, {0.0, 4.0}) == 1.0);
  CHECK(de_derivative(0.0, kUnit) == doctest::Approx(kPi / 4).epsilon(1e-15));
}

TEST_CASE("derivatives match central finite differences") {
  for (double x = -3.0; x <= 3.0; x += 0.1) {
    const double se_fd = oracles::central_difference(
        [&](double u) { return se_forward(u, kTwo).t; }, x);
    const double se_cf = se_derivative(x, kTwo);
    CHECK(std::abs(se_cf - se_fd) <= 1e-6 * (1.0 + std::abs(se_cf)));

    const double de_fd = oracles::central_difference(
        [&](double u) { return de_forward(u, kTwo).t; }, x);
    const double de_cf = de_derivative(x, kTwo);
    CHECK(std::abs(de_cf - de_fd) <= 1e-6 * (1.0 + std::abs(de_cf)));
  }
}

TEST_CASE("derivatives stay positive, DE derivative is even") {
  for (double x : {-50.0, -8.0, -1.0, 0.0, 2.5, 7.0, 100.0, 700.0}) {
    CHECK(se_derivative(x, kUnit) > 0.0);
    CHECK(de_derivative(x, kUnit) > 0.0);
    CHECK(de_derivative(x, kUnit) == de_derivative(-x, kUnit));
    CHECK(std::isfinite(de_derivative(x, kUnit)));
  }
}

TEST_CASE("step size formulas") {
  CHECK(step_size(TransformKind::SE, {1.0, kPi}, 16) ==
        doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(step_size(TransformKind::DE, {1.0, 1.0}, 2) ==
        doctest::Approx(0.6931471805599453).epsilon(1e-15));  // log(4)/2
  CHECK(step_size(TransformKind::DE, {0.5, 1.57}, 31) ==
        doctest::Approx(0.17004378016016947).epsilon(1e-14));
}

TEST_CASE("step size parameter validation") {
  CHECK_THROWS_AS(step_size(TransformKind::SE, {0.0, 1.0}, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_size(TransformKind::SE, {1.5, 1.0}, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_size(TransformKind::SE, {1.0, 3.2}, 8),
                  std::invalid_argument);  // d > pi
  CHECK_THROWS_AS(step_size(TransformKind::DE, {1.0, 1.6}, 8),
                  std::invalid_argument);  // d > pi/2
  CHECK_THROWS_AS(step_size(TransformKind::DE, {1.0, 0.001}, 400),
                  std::invalid_argument);  // 2dN/alpha <= 1
  CHECK_THROWS_AS(step_size(TransformKind::SE, {1.0, 1.0}, 0),
                  std::invalid_argument);
}

TEST_CASE("step size decay shapes") {
  // SE: h ~ N^{-1/2}, so h sqrt(N) is constant
  const double c16 = step_size(TransformKind::SE, {0.5, 3.14}, 16) * 4.0;
  const double c64 = step_size(TransformKind::SE, {0.5, 3.14}, 64) * 8.0;
  const double c256 = step_size(TransformKind::SE, {0.5, 3.14}, 256) * 16.0;
  CHECK(c16 == doctest::Approx(c64).epsilon(1e-14));
  CHECK(c64 == doctest::Approx(c256).epsilon(1e-14));
  // DE: h ~ log N / N, decreasing and slower than 1/N
  double prev = step_size(TransformKind::DE, {0.5, 1.57}, 16);
  for (int N : {64, 256}) {
    const double h = step_size(TransformKind::DE, {0.5, 1.57}, N);
    CHECK(h < prev);
    CHECK(h * N / std::log(2 * 1.57 * N / 0.5) ==
          doctest::Approx(1.0).epsilon(1e-14));
    prev = h;
  }
}

TEST_CASE("grid construction at N=1") {
  const SincGrid g = build_grid(TransformKind::SE, kUnit, {1.0, 1.0}, 1);
  CHECK(g.h == doctest::Approx(1.7724538509055160).epsilon(1e-15));
  CHECK(g.size() == 3);
  CHECK(g.node(0).t == 0.5);
  CHECK(g.node(1).t == doctest::Approx(0.8547625660248639).epsilon(1e-15));
  CHECK(g.node(-1).t == doctest::Approx(0.1452374339751361).epsilon(1e-15));
}

TEST_CASE("grid nodes are strictly increasing while t can represent them") {
  // the SE map keeps its outermost offsets far above one ulp up to N = 40;
  // DE offsets shrink double-exponentially, so strictness in t itself holds
  // only on small grids (that is what the stored offsets are for)
  for (const RegularityParams& params : kSeParamSets)
    for (int N : {1, 8, 20, 40}) {
      const SincGrid g = build_grid(TransformKind::SE, kTwo, params, N);
      for (int l = 1; l < g.size(); ++l)
        CHECK(g.nodes[l].t > g.nodes[l - 1].t);
    }
  for (const RegularityParams& params : kDeParamSets)
    for (int N : {1, 2}) {
      const SincGrid g = build_grid(TransformKind::DE, kTwo, params, N);
      for (int l = 1; l < g.size(); ++l)
        CHECK(g.nodes[l].t > g.nodes[l - 1].t);
    }
  // in t the nodes are at worst tied onto an endpoint, never out of order
  for (const RegularityParams& params : kDeParamSets)
    for (int N : {8, 40}) {
      const SincGrid g = build_grid(TransformKind::DE, kTwo, params, N);
      for (int l = 1; l < g.size(); ++l)
        CHECK(g.nodes[l].t >= g.nodes[l - 1].t);
    }
}

TEST_CASE("grid offsets and weights stay positive up to N = 200") {
  for (TransformKind kind : {TransformKind::SE, TransformKind::DE}) {
    const auto& sets =
        kind == TransformKind::SE ? kSeParamSets : kDeParamSets;
    for (const RegularityParams& params : sets)
      for (int N : {50, 100, 200}) {
        const SincGrid g = build_grid(kind, kTwo, params, N);
        CHECK(g.size() == 2 * N + 1);
        for (int l = 0; l < g.size(); ++l) {
          CHECK(g.nodes[l].off_a > 0.0);
          CHECK(g.nodes[l].off_b > 0.0);
          CHECK(g.dweights[l] > 0.0);
          CHECK(g.nodes[l].t >= 0.0);
          CHECK(g.nodes[l].t <= 2.0);
          CHECK(g.nodes[l].off_a + g.nodes[l].off_b ==
                doctest::Approx(2.0).epsilon(1e-12));
        }
        // offsets themselves never decrease even where t has collapsed
        for (int l = 1; l < g.size(); ++l)
          CHECK(g.nodes[l].off_a >= g.nodes[l - 1].off_a);
      }
  }
}

TEST_CASE("grid symmetry on a symmetric interval") {
  for (TransformKind kind : {TransformKind::SE, TransformKind::DE}) {
    const SincGrid g = build_grid(kind, kSym, {1.0, 1.0}, 12);
    for (int j = 0; j <= g.N; ++j) {
      CHECK(g.node(j).off_b == g.node(-j).off_a);
      CHECK(g.dweight(j) == g.dweight(-j));
    }
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(build_grid(TransformKind::SE, {1.0, 0.0}, {1.0, 1.0}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_grid_with_h(TransformKind::SE, kUnit, {1.0, 1.0}, 4, 0.0),
      std::invalid_argument);
}

TEST_SUITE_END();
