#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qcb/errors.hpp"
#include "qcb/localdisc.hpp"

using namespace qcb;

namespace {

constexpr double kPi = std::numbers::pi;

QubitState at_angle(double r, double theta) { return QubitState(r * std::cos(theta), r * std::sin(theta), 0.0); }

double fid_lower(const QubitState& a, const QubitState& b) {
  return -0.5 * std::log(oracle::fidelity_dense(a.density().matrix(), b.density().matrix()));
}

}  // namespace

TEST(InducedDistributions, Examples) {
  const auto rho0 = QubitState(0, 0, 0.4).density();
  const auto rho1 = QubitState(0.3, -0.2, 0.1).density();
  const auto [a, b] = induced_distributions(TwoOutcomePovm(HermitianMatrix::identity(2)), rho0, rho1);
  EXPECT_NEAR(a[0], 1.0, 1e-15);
  EXPECT_NEAR(b[0], 1.0, 1e-15);

  const auto proj = TwoOutcomePovm::qubit(0.5, 0.5, {0, 0, 1});
  EXPECT_NEAR(induced_distributions(proj, rho0, rho1).first[0], 0.7, 1e-15);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double av = u(rng);
    const double bv = (2 * u(rng) - 1) * std::min(av, 1 - av);
    const auto povm = TwoOutcomePovm::qubit(av, bv, oracle::random_bloch(rng));
    const auto x = QubitState(oracle::random_bloch(rng)).density();
    const auto [p, q] = induced_distributions(povm, x, rho1);
    for (double v : {p[0], p[1], q[0], q[1]}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    EXPECT_NEAR(p[0] + p[1], 1.0, 1e-14);
  }
}

TEST(InducedDistributions, RejectsInvalidPovm) {
  EXPECT_THROW(TwoOutcomePovm::qubit(0.3, 0.5, {0, 0, 1}), ValidationError);
  EXPECT_THROW(TwoOutcomePovm(HermitianMatrix::identity(2) * 1.5), ValidationError);
}

TEST(DccQubit, IdenticalStates) {
  const QubitState q(0.2, 0.3, -0.1);
  EXPECT_NEAR(d_cc_qubit(q, q).d_cc.value(), 0.0, 1e-15);
}

TEST(DccQubit, MajorityRegimeSaturatesFidelityBound) {
  const auto a = at_angle(0.3, 0.0), b = at_angle(0.3, kPi / 2);
  const auto res = d_cc_qubit(a, b);
  EXPECT_NEAR(res.d_cc.value(), -0.5 * std::log(0.955), 1e-9);
  EXPECT_NEAR(res.d_cc.value(), 0.023022, 5e-7);
  EXPECT_NEAR(res.s_star, 0.5, 1e-5);
  EXPECT_EQ(res.regime, LocalRegime::majority);
}

TEST(DccQubit, HighPurityLeavesLowerBound) {
  // r*(π/2) ≈ 0.982, so r = 0.995 is past the majority-vote regime
  const auto a = at_angle(0.995, 0.0), b = at_angle(0.995, kPi / 2);
  const double v = d_cc_qubit(a, b).d_cc.value();
  const double dqc = quantum_chernoff(a.density(), b.density()).exponent.value();
  EXPECT_GT(v, fid_lower(a, b) + 1e-6);
  EXPECT_LT(v, dqc - 1e-6);
}

TEST(DccQubit, BracketedByFidelityAndQuantumExponent) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 25; ++k) {
    const QubitState a(oracle::random_bloch(rng, 0.99)), b(oracle::random_bloch(rng, 0.99));
    const double v = d_cc_qubit(a, b).d_cc.value();
    EXPECT_GE(v, fid_lower(a, b) - 1e-9);
    EXPECT_LE(v, quantum_chernoff(a.density(), b.density()).exponent.value() + 1e-9);
  }
}

TEST(DccQubit, RotationInvariant) {
  const QubitState a(0.5, 0.3, 0.2), b(-0.4, 0.1, 0.6);
  auto rot = [](const QubitState& q) {
    const double c = std::cos(1.1), s = std::sin(1.1);
    const auto& r = q.bloch();
    return QubitState(c * r[0] + s * r[2], r[1], -s * r[0] + c * r[2]);
  };
  EXPECT_NEAR(d_cc_qubit(a, b).d_cc.value(), d_cc_qubit(rot(a), rot(b)).d_cc.value(), 1e-9);
}

TEST(DccQubit, MoreStartsNeverWorse) {
  const auto a = at_angle(0.9, 0.0), b = at_angle(0.8, 2.0);
  double prev = 0.0;
  for (int starts : {1, 2, 4, 8, 16, 32, 64}) {
    const double v = d_cc_qubit(a, b, starts).d_cc.value();
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(DccQubit, SerialAndParallelAgree) {
  const auto a = at_angle(0.9, 0.0), b = at_angle(0.7, 1.3);
  const auto p = d_cc_qubit(a, b), s = d_cc_qubit_serial(a, b);
  EXPECT_EQ(p.d_cc.value(), s.d_cc.value());
  EXPECT_EQ(p.s_star, s.s_star);
}

TEST(DccQubit, BothPureRejected) {
  EXPECT_THROW(d_cc_qubit(QubitState(0, 0, 1), QubitState(1, 0, 0)), DomainError);
}

TEST(DccPure, Examples) {
  EXPECT_TRUE(d_cc_pure(QubitState(0, 0, 1), QubitState(0, 0, -1)).is_infinite());
  EXPECT_NEAR(d_cc_pure(QubitState(0, 0, 1), QubitState(0, 0, 1)).value(), 0.0, 1e-15);
  EXPECT_NEAR(d_cc_pure(QubitState(0, 0, 1), QubitState(1, 0, 0)).value(), std::log(2.0), 1e-15);
  EXPECT_THROW(d_cc_pure(QubitState(0, 0, 0.5), QubitState(1, 0, 0)), DomainError);

  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto x = oracle::random_ket(3, rng), y = oracle::random_ket(3, rng);
    const double f = (density_from_ket(x).matrix() * density_from_ket(y).matrix()).trace().real();
    EXPECT_NEAR(d_cc_pure(x, y).value(), -std::log(f), 1e-9);
  }
}

TEST(RStar, TrendTowardOne) {
  const double a = r_star(0.5), b = r_star(0.25), c = r_star(0.125);
  EXPECT_GT(a, 0.0);
  EXPECT_LT(c, 1.0);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
}

TEST(RStar, BelowThresholdIsMajority) {
  const double theta = kPi / 2;
  const double rs = r_star(theta);
  // regression constant; a brute-force scan over measurement axes brackets it in (0.98, 0.99)
  EXPECT_NEAR(rs, 0.98202, 2e-4);
  for (double f : {0.3, 0.7, 0.95}) {
    const auto res = d_cc_qubit(at_angle(f * rs, 0.0), at_angle(f * rs, theta));
    EXPECT_NEAR(res.s_star, 0.5, 1e-5);
  }
}

TEST(RStar, RejectsBadAngle) {
  EXPECT_THROW(r_star(0.0), ValidationError);
  EXPECT_THROW(r_star(4.0), ValidationError);
}

TEST(EqualPurity, BoundChain) {
  for (double r : {0.0, 0.2, 0.6, 0.9, 0.99, 1.0}) {
    const auto p = equal_purity_point(r, kPi / 2);
    EXPECT_LE(p.fid_lower, p.d_cc + 1e-9);
    EXPECT_LE(p.d_cc, p.d_qc + 1e-9);
    EXPECT_LE(p.d_qc, p.fid_upper + 1e-9);
  }
  EXPECT_NEAR(equal_purity_point(1.0, kPi / 2).d_cc, std::log(2.0), 1e-12);
}

TEST(SeedDirection, UnitAndNested) {
  for (int k = 0; k < 64; ++k) {
    const auto v = seed_direction(k);
    EXPECT_NEAR(v[0] * v[0] + v[1] * v[1] + v[2] * v[2], 1.0, 1e-14);
    EXPECT_EQ(v, seed_direction(k));
  }
}
