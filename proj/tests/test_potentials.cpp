#include <gtest/gtest.h>

#include <cmath>

#include "qscat/potentials.hpp"

using namespace qscat;

TEST(Evaluate, Rectangular) {
  const Rectangular r{1.0, 1.0};
  EXPECT_EQ(evaluate(r, 0.0), 1.0);
  EXPECT_EQ(evaluate(r, 2.0), 0.0);
  EXPECT_EQ(evaluate(r, -2.0), 0.0);
}

TEST(Evaluate, HulthenAtOrigin) { EXPECT_NEAR(evaluate(Hulthen{1.0, 0.5, 0.9}, 0.0), 10.0, 1e-12); }

TEST(Evaluate, HulthenSymmetricAndContinuous) {
  const Hulthen h{2.0, 0.7, 0.4};
  for (double x : {0.01, 0.3, 1.0, 5.0}) EXPECT_EQ(evaluate(h, x), evaluate(h, -x));
  EXPECT_NEAR(evaluate(h, 1e-12), evaluate(h, -1e-12), 1e-10);
  EXPECT_NEAR(evaluate(h, 1e-12), 2.0 / 0.6, 1e-10);
}

TEST(Evaluate, EckartAsymptotes) {
  const Eckart e{2.0, 1.0, -1.0 / 9.0, 3.0};
  EXPECT_NEAR(evaluate(e, 150.0), 1.0, 1e-6);
  EXPECT_NEAR(evaluate(e, -150.0), 2.0, 1e-6);
  EXPECT_TRUE(std::isfinite(evaluate(e, 1e6)));
}

TEST(Evaluate, DeltaUnsupported) {
  try {
    evaluate(PotentialSpec{Delta{1.0}}, 0.0);
    FAIL();
  } catch (const ScatterError& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported);
  }
}

TEST(AsymptoticValues, PerPotential) {
  EXPECT_EQ(asymptotic_values(Rectangular{5.0, 1.0}), std::make_pair(0.0, 0.0));
  EXPECT_EQ(asymptotic_values(Eckart{2.0, 1.0, -1.0 / 9.0, 3.0}), std::make_pair(2.0, 1.0));
  EXPECT_EQ(asymptotic_values(Hulthen{1.0, 0.5, 0.9}), std::make_pair(0.0, 0.0));
}

TEST(Validate, RejectsInvalidParameters) {
  EXPECT_THROW(validate(Rectangular{0.0, 1.0}), ScatterError);
  EXPECT_THROW(validate(Rectangular{1.0, -1.0}), ScatterError);
  EXPECT_THROW(validate(Hulthen{1.0, 0.5, 1.0}), ScatterError);
  EXPECT_THROW(validate(Hulthen{1.0, 0.5, 0.0}), ScatterError);
  EXPECT_THROW(validate(Hulthen{-1.0, 0.5, 0.5}), ScatterError);
  EXPECT_THROW(validate(Delta{0.0}), ScatterError);
  EXPECT_THROW(validate(Eckart{0.0, 0.0, 1.0, 0.0}), ScatterError);
  EXPECT_NO_THROW(validate(Eckart{0.0, -1.5, -3.0, 1.0}));
}

TEST(Wavenumbers, RectangularAbove) {
  const auto w = wavenumbers(Rectangular{1.0, 1.0}, 2.0);
  EXPECT_NEAR(w.k, 2.0, 1e-15);
  EXPECT_NEAR(*w.q_inside, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(*w.k0, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(*w.k0 * *w.k0, w.k * w.k - *w.q_inside * *w.q_inside, 1e-12 * w.k * w.k);
  EXPECT_FALSE(w.big_q.has_value());
}

TEST(Wavenumbers, RectangularBelow) {
  const auto w = wavenumbers(Rectangular{1.0, 1.0}, 0.5);
  EXPECT_NEAR(w.k, 1.0, 1e-15);
  EXPECT_NEAR(*w.big_q, 1.0, 1e-15);
  EXPECT_NEAR(*w.k0 * *w.k0, w.k * w.k + *w.big_q * *w.big_q, 1e-12);
}

TEST(Wavenumbers, DeltaK0) {
  for (double e : {0.1, 3.0, 50.0}) EXPECT_DOUBLE_EQ(*wavenumbers(Delta{1.0}, e).k0, 1.0);
  EXPECT_DOUBLE_EQ(*wavenumbers(Delta{3.0}, 1.0, {2.0, 4.0}).k0, 3.0);
}

TEST(Wavenumbers, DegenerateEnergy) {
  try {
    wavenumbers(Rectangular{1.0, 1.0}, 1.0);
    FAIL();
  } catch (const ScatterError& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_energy);
  }
}

TEST(Wavenumbers, EckartChannels) {
  const auto w = wavenumbers(Eckart{0.0, -1.5, 0.0, 1.0}, 0.5);
  EXPECT_NEAR(*w.k_minus_inf, 1.0, 1e-15);
  EXPECT_NEAR(*w.k_plus_inf, 2.0, 1e-15);
  EXPECT_THROW(wavenumbers(Eckart{0.0, 1.0, 0.0, 1.0}, 0.5), ScatterError);
}

TEST(Wavenumbers, HulthenDispersion) {
  const Hulthen h{1.0, 0.5, 0.9};
  const auto w = wavenumbers(h, 2.0);
  EXPECT_NEAR(w.k * w.k, 3.0, 1e-12 * 3.0);
  const double p2 = std::pow(2.0 + 1.0 / 0.9, 2) - 1.0;
  EXPECT_NEAR(*w.q_inside * *w.q_inside, p2, 1e-12 * p2);
  EXPECT_THROW(wavenumbers(h, 0.5), ScatterError);
}

TEST(SweepVariable, ParseRoundTrip) {
  for (auto v : {SweepVariable::k, SweepVariable::q, SweepVariable::E, SweepVariable::V0})
    EXPECT_EQ(parse_sweep_variable(to_string(v)), v);
  EXPECT_EQ(parse_sweep_variable("v0"), SweepVariable::V0);
  EXPECT_FALSE(parse_sweep_variable("x").has_value());
}
