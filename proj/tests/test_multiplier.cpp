#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rdmap/errors.hpp"
#include "rdmap/harness.hpp"
#include "rdmap/kernel.hpp"
#include "rdmap/multiplier.hpp"
#include "rdmap/random.hpp"

namespace rdmap {
namespace {

const auto kFree2 = GroupDescriptor::free(2);
const double kFreeC = std::numbers::pi / std::sqrt(6.0);

GroupElement w(const char* letters) { return make_free_word(kFree2, letters); }

GroupRingElement kesten() {
  GroupRingElement f(kFree2);
  for (const char* x : {"a", "A", "b", "B"}) f.add(w(x), 1.0);
  return f;
}

double grid_sup(double r, double s, double lo, double hi, int steps = 4'000'000) {
  double best = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + (hi - lo) * i / steps;
    best = std::max(best, std::exp(-r * x + s * std::log1p(x)));
  }
  return best;
}

TEST(MultiplierEval, Examples) {
  EXPECT_EQ(Multiplier::heat(0.3).eval(kFree2, identity(kFree2)), Complex(1.0));
  EXPECT_EQ(Multiplier::truncated_heat(1.0, 2).eval(kFree2, w("abb")), Complex(0.0));
  EXPECT_NEAR(Multiplier::heat(0.5).eval(kFree2, w("ab")).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(Multiplier::heat(0.5).eval(kFree2, w("ab")).real(), 0.3679, 1e-4);
  EXPECT_NEAR(Multiplier::scaled(Multiplier::heat(1.0), 2.0).eval(kFree2, w("a")).real(),
              std::exp(-1.0) / 2.0, 1e-15);
}

TEST(MultiplierEval, InvalidParameters) {
  EXPECT_THROW(Multiplier::heat(0.0), std::invalid_argument);
  EXPECT_THROW(Multiplier::truncated_heat(1.0, -1), std::invalid_argument);
  EXPECT_THROW(Multiplier::scaled(Multiplier::heat(1.0), 0.9), std::invalid_argument);
  GroupRingElement other(GroupDescriptor::cyclic(3));
  other.add(make_residue(GroupDescriptor::cyclic(3), 1), 1.0);
  EXPECT_THROW(Multiplier::table(other).eval(kFree2, w("a")), GroupMismatch);
}

TEST(MultiplierApply, Examples) {
  Rng rng(1);
  const auto f = random_element(kFree2, rng, 3, 6);

  GroupRingElement ones(kFree2);
  for (const auto& [x, c] : f.terms()) ones.add(x, 1.0);
  EXPECT_EQ(apply(Multiplier::table(ones), f), f);

  GroupRingElement at_e = GroupRingElement::delta(kFree2, identity(kFree2));
  auto g = f;
  g.set(identity(kFree2), Complex(0.25, -2.0));
  EXPECT_EQ(apply(Multiplier::table(at_e), g),
            GroupRingElement::delta(kFree2, identity(kFree2), Complex(0.25, -2.0)));

  GroupRingElement h(kFree2);
  h.add(w("a"), 1.0);
  h.add(w("ab"), 1.0);
  const auto out = apply(Multiplier::heat(1.0), h);
  EXPECT_NEAR(out.coefficient(w("a")).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(out.coefficient(w("ab")).real(), std::exp(-2.0), 1e-15);
  EXPECT_EQ(out.support_size(), 2u);
}

TEST(LemmaNormBound, Examples) {
  const RdParams rd(kFreeC, 2.0);
  const auto heat = lemma_norm_bound(Multiplier::heat(1.0), kFree2, rd);
  EXPECT_NEAR(heat.upper, kFreeC * 4.0 * std::exp(-1.0), 1e-14);
  EXPECT_NEAR(heat.upper, 1.2825 * 1.4715, 2e-4);
  EXPECT_FALSE(heat.rank_bound.has_value());

  const auto point = lemma_norm_bound(
      Multiplier::table(GroupRingElement::delta(kFree2, identity(kFree2))), kFree2, rd);
  EXPECT_DOUBLE_EQ(point.upper, rd.C);
  EXPECT_EQ(point.rank_bound, std::optional<std::uint64_t>(1));

  const auto trunc = lemma_norm_bound(Multiplier::truncated_heat(1.0, 5), kFree2, rd);
  EXPECT_DOUBLE_EQ(trunc.upper, heat.upper);
  EXPECT_EQ(trunc.rank_bound, std::optional<std::uint64_t>(ball(kFree2, 5).size()));
}

TEST(CertifiedNormBound, HeatIsContraction) {
  const RdParams rd(kFreeC, 2.0);
  EXPECT_DOUBLE_EQ(certified_norm_bound(Multiplier::heat(1.0), kFree2, rd).upper, 1.0);
  const auto rho = scaled_multiplier(1.0, 2.0, 5, rd.C);
  EXPECT_LE(certified_norm_bound(rho, kFree2, rd).upper, 1.0 + 1e-15);
}

TEST(TailBound, Examples) {
  EXPECT_NEAR(tail_bound(1.0, 2.0, 5, kFreeC), kFreeC * 36.0 * std::exp(-5.0), 1e-14);
  EXPECT_NEAR(tail_bound(1.0, 2.0, 5, 1.2825), 0.3110, 1e-4);
  EXPECT_NEAR(tail_bound(1.0, 2.0, 5, kFreeC), kFreeC * grid_sup(1.0, 2.0, 5.0, 60.0),
              1e-9);
  EXPECT_LT(tail_bound(1.0, 2.0, 100'000, kFreeC), 1e-300);
  // n = 0 sits before the peak at x = 1: the global supremum.
  EXPECT_DOUBLE_EQ(tail_bound(1.0, 2.0, 0, kFreeC),
                   kFreeC * decay_certificate(1.0, 2.0).K());
}

TEST(CertifiedScale, Examples) {
  EXPECT_NEAR(certified_scale(1.0, 2.0, 5, 1.2825), 1.3110, 1e-4);
  EXPECT_GE(certified_scale(1.0, 2.0, 5, kFreeC), 1.0);
  EXPECT_DOUBLE_EQ(certified_scale(1.0, 2.0, 1'000'000, kFreeC), 1.0);
  const double u = certified_scale(0.02, 2.0, 4000, kFreeC);
  EXPECT_LT(u - 1.0, 1e-10);
  // Grid oracle for K_4000 = e^{-80} 4001^2.
  EXPECT_NEAR(tail_bound(0.02, 2.0, 4000, 1.0), grid_sup(0.02, 2.0, 4000.0, 4100.0, 100'000),
              1e-40);
  EXPECT_NEAR(tail_bound(0.02, 2.0, 4000, 1.0), std::exp(-80.0) * 4001.0 * 4001.0, 1e-40);
}

TEST(ScaledMultiplier, Examples) {
  const auto rho = scaled_multiplier(1.0, 2.0, 5, 1.2825);
  const double u = certified_scale(1.0, 2.0, 5, 1.2825);
  EXPECT_NEAR(rho.eval(kFree2, identity(kFree2)).real(), 1.0 / u, 1e-15);
  EXPECT_LE(rho.eval(kFree2, identity(kFree2)).real(), 1.0);
  EXPECT_EQ(rho.eval(kFree2, w("abababa")), Complex(0.0));
  EXPECT_NEAR(rho.eval(kFree2, w("b")).real(), 0.2806, 1e-4);
}

TEST(MapDefect, PointMassClosedForm) {
  const RdParams rd(kFreeC, 2.0);
  const auto rho = scaled_multiplier(1.0, 2.0, 5, 1.2825);
  const double u = certified_scale(1.0, 2.0, 5, 1.2825);
  const auto defect =
      map_defect(rho, GroupRingElement::delta(kFree2, identity(kFree2)), rd, 4);
  EXPECT_NEAR(defect.bracket.lower, (u - 1.0) / u, 1e-12);
  EXPECT_NEAR(defect.bracket.upper, (u - 1.0) / u, 1e-12);
  EXPECT_NEAR(defect.bracket.upper, 0.2372, 1e-4);
}

TEST(MapDefect, ZeroElement) {
  const RdParams rd(kFreeC, 2.0);
  const auto defect = map_defect(scaled_multiplier(1.0, 2.0, 5, rd.C), GroupRingElement(kFree2), rd, 3);
  EXPECT_EQ(defect.bracket.lower, 0.0);
  EXPECT_EQ(defect.bracket.upper, 0.0);
  EXPECT_EQ(defect.cheap_bound, 0.0);
}

TEST(MapDefect, VanishesAlongSchedule) {
  const RdParams rd(kFreeC, 2.0);
  Rng rng(2);
  const auto f = random_element(kFree2, rng, 3, 6);
  double previous = std::numeric_limits<double>::infinity();
  for (double r : {1.0, 0.1, 0.01, 0.001, 0.0001, 0.00001}) {
    const auto n = static_cast<Length>(std::ceil(40.0 * rd.s / r));
    const auto defect = map_defect(scaled_multiplier(r, rd.s, n, rd.C), f, rd, 3);
    EXPECT_LE(defect.bracket.upper, defect.cheap_bound + 1e-12);
    EXPECT_LE(defect.bracket.upper, previous);
    previous = defect.bracket.upper;
  }
  EXPECT_LT(previous, 1e-3);
}

TEST(MultiplierProperty, HeatSemigroupLaw) {
  Rng rng(31);
  for (const auto& g : {kFree2, GroupDescriptor::free_abelian(2), GroupDescriptor::cyclic(9)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_element(g, rng, 4, 8);
      const double r1 = rng.uniform(0.01, 2.0);
      const double r2 = rng.uniform(0.01, 2.0);
      const auto lhs = apply(Multiplier::heat(r1), apply(Multiplier::heat(r2), f));
      const auto rhs = apply(Multiplier::heat(r1 + r2), f);
      EXPECT_LE(l1_norm(lhs - rhs), 1e-12);
    }
  }
}

TEST(MultiplierProperty, TruncationConsistency) {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_element(kFree2, rng, 3, 8);
    const double r = rng.uniform(0.01, 2.0);
    const Length longest = f.max_support_length();
    EXPECT_EQ(apply(Multiplier::truncated_heat(r, longest), f), apply(Multiplier::heat(r), f));
    EXPECT_EQ(apply(Multiplier::truncated_heat(r, longest + 3), f), apply(Multiplier::heat(r), f));
  }
}

TEST(MultiplierProperty, ContractionShadow) {
  Rng rng(33);
  for (const auto& g : {kFree2, GroupDescriptor::free_abelian(1), GroupDescriptor::cyclic(6)}) {
    const auto rd = builtin_rd_params(g);
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = random_element(g, rng, 3, 6);
      const double r = rng.uniform(0.01, 1.0);
      const Length n = static_cast<Length>(rng.below(6));
      const auto rho = scaled_multiplier(r, rd.s, n, rd.C);
      EXPECT_LE(opnorm_lower(apply(rho, f), 5), opnorm_upper(f, rd) + 1e-9) << g.to_string();
    }
  }
}

TEST(MultiplierProperty, LemmaShadow) {
  for (const auto& g : {kFree2, GroupDescriptor::free_abelian(1), GroupDescriptor::cyclic(7)}) {
    auto options = default_sample_options(g);
    options.count = 40;
    options.seed = 34;
    const auto report = lemma_sample(g, builtin_rd_params(g), options);
    EXPECT_TRUE(report.passed) << g.to_string();
    EXPECT_LE(report.max_ratio, 1.0 + 1e-9);
  }
}

TEST(MultiplierProperty, DefectImprovesWithTruncationRadius) {
  const RdParams rd(kFreeC, 2.0);
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_element(kFree2, rng, 3, 6);
    const double r = rng.uniform(0.05, 1.0);
    double previous = std::numeric_limits<double>::infinity();
    for (Length n = f.max_support_length(); n < f.max_support_length() + 60; n += 3) {
      const auto defect = map_defect(scaled_multiplier(r, rd.s, n, rd.C), f, rd, 3);
      EXPECT_LE(defect.bracket.upper, previous + 1e-15);
      previous = defect.bracket.upper;
    }
  }
}

}  // namespace
}  // namespace rdmap
