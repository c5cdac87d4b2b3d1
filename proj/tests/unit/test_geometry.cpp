#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qcb/chernoff.hpp"
#include "qcb/errors.hpp"
#include "qcb/geometry.hpp"

using namespace qcb;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix diag_state(std::vector<double> p) { return DensityMatrix::diagonal(p); }

TangentDirection sx(double eps) { return TangentDirection(CMatrix(eps * pauli(0))); }
TangentDirection sz(double eps) { return TangentDirection(CMatrix(eps * pauli(2))); }

}  // namespace

TEST(Metrics, QubitExamples) {
  const double l = 0.3, e = 0.01;
  const auto rho = diag_state({l, 1 - l});
  EXPECT_EQ(ds2_qc(rho, TangentDirection(CMatrix(CMatrix::Zero(2, 2)))), 0.0);
  // dρ = diag(ε, -ε)
  EXPECT_NEAR(ds2_qc(rho, sz(e)), e * e * (1 / l + 1 / (1 - l)) / 8, 1e-16);
  EXPECT_NEAR(ds2_bures(rho, sz(e)), e * e * (1 / l + 1 / (1 - l)) / 4, 1e-16);
  const double sq = std::sqrt(l) + std::sqrt(1 - l);
  EXPECT_NEAR(ds2_qc(rho, sx(e)), e * e / (sq * sq), 1e-16);
  EXPECT_NEAR(ds2_bures(rho, sx(e)), e * e, 1e-16);
}

TEST(Metrics, QcApproachesBuresNearPureStates) {
  double prev = 0.0;
  for (double l : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const auto rho = diag_state({1 - l, l});
    const double ratio = ds2_qc(rho, sx(1.0)) / ds2_bures(rho, sx(1.0));
    EXPECT_GT(ratio, prev);
    prev = ratio;
  }
  EXPECT_NEAR(prev, 1.0, 1e-3);
}

TEST(Metrics, Sandwich) {
  std::mt19937_64 rng(31);
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k < 40; ++k) {
      const auto rho = oracle::random_mixed(d, rng);
      const TangentDirection x(oracle::random_traceless_hermitian(d, rng));
      const double qc = ds2_qc(rho, x), bu = ds2_bures(rho, x);
      EXPECT_LE(0.5 * bu, qc * (1 + 1e-12));
      EXPECT_LE(qc, bu * (1 + 1e-12));
    }
  }
}

TEST(Metrics, MatchesFiniteDifferenceOfQ) {
  std::mt19937_64 rng(32);
  const double eps = 1e-3;
  for (int k = 0; k < 10; ++k) {
    const auto rho = oracle::random_mixed(3, rng);
    CMatrix x = oracle::random_traceless_hermitian(3, rng);
    x /= x.norm();
    const CMatrix shifted = rho.matrix() - eps * x;
    const double q = oracle::q_min_dense(rho.matrix(), shifted);
    const double expected = ds2_qc(rho, TangentDirection(x)) * eps * eps;
    EXPECT_NEAR((1 - q) / expected, 1.0, 0.01);
  }
}

TEST(Metrics, OneSidedDifferenceWithinTenEps) {
  std::mt19937_64 rng(33);
  for (double eps : {1e-3, 1e-4}) {
    for (int k = 0; k < 20; ++k) {
      const int d = 2 + k % 3;
      auto rho = oracle::random_mixed(d, rng);
      while (Eigen::SelfAdjointEigenSolver<CMatrix>(rho.matrix()).eigenvalues()[0] < 0.05) {
        rho = oracle::random_mixed(d, rng);
      }
      CMatrix x = oracle::random_traceless_hermitian(d, rng);
      x /= x.norm();
      const double q = oracle::q_min_dense(rho.matrix(), rho.matrix() - eps * x);
      EXPECT_LE(std::abs((1 - q) / (eps * eps) - ds2_qc(rho, TangentDirection(x))), 10 * eps);
    }
  }
}

TEST(Metrics, ZeroEigenvaluePairRejected) {
  const auto rho = diag_state({1.0, 0.0, 0.0});
  CMatrix x = CMatrix::Zero(3, 3);
  x(1, 2) = x(2, 1) = 1.0;
  EXPECT_THROW(ds2_qc(rho, TangentDirection(x)), DomainError);
  EXPECT_THROW(ds2_bures(rho, TangentDirection(x)), DomainError);
  EXPECT_THROW(TangentDirection(CMatrix(CMatrix::Identity(2, 2))), ValidationError);
}

TEST(Metrics, CcPiecewise) {
  const auto mixed = diag_state({0.7, 0.3});
  EXPECT_NEAR(ds2_cc(mixed, sx(0.1)), 0.5 * ds2_bures(mixed, sx(0.1)), 1e-16);

  // pure qubit rotated: Fubini-Study for |0> along σx is ε²
  const auto pure = diag_state({1.0, 0.0});
  EXPECT_NEAR(ds2_cc(pure, sx(0.1)), 0.01, 1e-15);
  EXPECT_THROW(ds2_cc(pure, sz(0.1)), DomainError);

  // mixed-side limit is half the pure-side value
  const double near = ds2_cc(diag_state({1 - 1e-9, 1e-9}), sx(0.1));
  EXPECT_NEAR(near / ds2_cc(pure, sx(0.1)), 0.5, 1e-4);

  EXPECT_THROW(ds2_cc(diag_state({0.5, 0.5, 0.0}), TangentDirection(CMatrix(CMatrix::Zero(3, 3)))), DomainError);
}

TEST(Spectral, Examples) {
  const std::vector<double> lam{0.2, 0.8};
  SpectralTangent t{{0.01, -0.01}, CMatrix::Zero(2, 2)};
  EXPECT_NEAR(ds2_spectral_qc(lam, t), 1e-4 / 8 * (1 / 0.2 + 1 / 0.8), 1e-17);

  SpectralTangent g{{0.0, 0.0}, CMatrix::Zero(2, 2)};
  g.generator(0, 1) = Complex(0.0, 0.03);
  g.generator(1, 0) = Complex(0.0, 0.03);
  const double d = std::sqrt(0.2) - std::sqrt(0.8);
  EXPECT_NEAR(ds2_spectral_qc(lam, g), d * d * 9e-4, 1e-17);
}

TEST(Spectral, MatchesDenseMetricAfterReconstruction) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k < 20; ++k) {
      std::vector<double> lam(d);
      double s = 0;
      for (double& x : lam) s += (x = u(rng));
      for (double& x : lam) x /= s;
      const CMatrix h = oracle::random_hermitian(d, rng);
      SpectralTangent t;
      t.dlambda.resize(d);
      double mean = 0;
      for (int i = 0; i < d; ++i) mean += h(i, i).real() / d;
      for (int i = 0; i < d; ++i) t.dlambda[i] = h(i, i).real() - mean;
      t.generator = Complex(0, 1) * oracle::random_hermitian(d, rng);
      for (int i = 0; i < d; ++i) t.generator(i, i) = Complex(0, t.generator(i, i).imag());
      const CMatrix x = reconstruct_tangent(lam, t);
      const double dense = ds2_qc(diag_state(lam), TangentDirection(x));
      EXPECT_NEAR(ds2_spectral_qc(lam, t), dense, 1e-9 * std::max(1.0, dense));
    }
  }
}

TEST(Fisher, Determinant) {
  const std::vector<double> half{0.5, 0.5};
  const auto g2 = fisher_simplex_metric(half);
  ASSERT_EQ(g2.rows(), 1);
  EXPECT_NEAR(g2(0, 0), 4.0, 1e-15);
  const std::vector<double> third{1.0 / 3, 1.0 / 3, 1.0 / 3};
  EXPECT_NEAR(fisher_simplex_metric(third).determinant(), 27.0, 1e-9);

  std::mt19937_64 rng(34);
  for (int k = 0; k < 20; ++k) {
    const auto ev = oracle::random_mixed(5, rng).eig().eigenvalues;
    std::vector<double> lam(ev.data(), ev.data() + ev.size());
    double prod = 1;
    for (double x : lam) prod *= x;
    const double det = fisher_simplex_metric(lam).determinant();
    EXPECT_NEAR(det * prod, 1.0, 1e-9);
  }
  const std::vector<double> edge{1.0, 0.0};
  EXPECT_THROW(fisher_simplex_metric(edge), DomainError);
}

TEST(EigenDensity, Properties) {
  const std::vector<double> deg{0.25, 0.25, 0.5};
  EXPECT_EQ(eigen_density_qc(deg, 3), 0.0);
  const std::vector<double> a{0.1, 0.3, 0.6}, b{0.6, 0.1, 0.3};
  EXPECT_NEAR(eigen_density_qc(a, 3), eigen_density_qc(b, 3), 1e-14 * eigen_density_qc(a, 3));
  const std::vector<double> edge{0.0, 0.4, 0.6};
  EXPECT_THROW(eigen_density_qc(edge, 3), DomainError);

  auto at = [](double r) {
    const std::vector<double> l{(1 + r) / 2, (1 - r) / 2};
    return eigen_density_qc(l, 2);
  };
  auto qubit = [](double r) {
    const double c = std::sqrt(1 - r * r);
    return (1 - c) / c;
  };
  EXPECT_NEAR(at(0.8) / at(0.4), qubit(0.8) / qubit(0.4), 1e-12);
}

TEST(EigenDensity, QubitMatchesRadialPrior) {
  // λ± = (1 ± r)/2 with the ordering-symmetric factor 2 and dλ = dr/2
  for (double r : {0.1, 0.5, 0.9}) {
    const std::vector<double> l{(1 + r) / 2, (1 - r) / 2};
    EXPECT_NEAR(eigen_density_qc(l, 2), qubit_priors(r).p_qc, 1e-12);
  }
}

TEST(Constants, MatchPrintedForms) {
  for (int d = 2; d <= 6; ++d) {
    EXPECT_NEAR(cd_constant(d) / oracle::cd_closed_form(d), 1.0, 1e-9) << "d=" << d;
  }
  EXPECT_NEAR(cd_constant(2), kPi - 2, 1e-14);
}

TEST(Constants, MatchHankelDeterminant) {
  for (int d = 2; d <= 10; ++d) {
    const double h = static_cast<double>(oracle::cd_hankel(d));
    EXPECT_NEAR(cd_constant(d) / h, 1.0, d <= 7 ? 1e-9 : 1e-6) << "d=" << d;
  }
  EXPECT_THROW(cd_constant(11), ValidationError);
  EXPECT_THROW(cd_constant(1), ValidationError);
}

TEST(Polynomials, Orthonormal) {
  const auto b = orthonormal_polynomials(9);
  EXPECT_LE(b.orthonormality_residual, 1e-10);
  ASSERT_EQ(b.leading_coeffs.size(), 10u);
  // P_0 = a_0 with a_0² ∫ e^{-t²} = 1
  EXPECT_NEAR(b.leading_coeffs[0], 1 / std::sqrt(std::sqrt(kPi) / 2), 1e-14);
  // independent check of <P_2, P_3> and <P_3, P_3> by quadrature
  auto poly = [&](int k, double t) {
    double v = 0, tp = 1;
    for (double c : b.coefficients[k]) {
      v += c * tp;
      tp *= t;
    }
    return v;
  };
  const double i23 = oracle::integrate([&](double t) { return std::exp(-t * t) * poly(2, t) * poly(3, t); }, 0, 12);
  const double i33 = oracle::integrate([&](double t) { return std::exp(-t * t) * poly(3, t) * poly(3, t); }, 0, 12);
  EXPECT_NEAR(i23, 0.0, 1e-8);
  EXPECT_NEAR(i33, 1.0, 1e-8);
}

TEST(Haar, UnitaryAndMoments) {
  std::mt19937_64 rng(35);
  for (int d : {2, 3, 5}) {
    double mean = 0;
    const int n = 4000;
    for (int k = 0; k < n; ++k) {
      const CMatrix u = sample_haar_unitary(d, rng);
      EXPECT_LE((u.adjoint() * u - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
      mean += std::norm(u(0, 0)) / n;
    }
    // Var |U11|² = (d-1)/(d²(d+1)); 6 standard errors
    const double sd = std::sqrt((d - 1.0) / (d * d * (d + 1.0)) / n);
    EXPECT_NEAR(mean, 1.0 / d, 6 * sd);
  }
}

TEST(Haar, DeterministicPerSeed) {
  std::mt19937_64 a(99), b(99);
  EXPECT_EQ((sample_haar_unitary(4, a) - sample_haar_unitary(4, b)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Haar, LeftInvariance) {
  // Re tr(VU) for fixed V has the same law as Re tr(U)
  std::mt19937_64 rng(36);
  const int d = 3, n = 10000;
  const CMatrix v = sample_haar_unitary(d, rng);
  std::vector<double> plain, moved;
  for (int k = 0; k < n; ++k) plain.push_back(sample_haar_unitary(d, rng).trace().real());
  for (int k = 0; k < n; ++k) moved.push_back((v * sample_haar_unitary(d, rng)).trace().real());
  std::sort(plain.begin(), plain.end());
  auto ecdf = [&](double x) {
    return static_cast<double>(std::upper_bound(plain.begin(), plain.end(), x) - plain.begin()) / n;
  };
  // two-sample statistic through the one-sample routine; effective size n/2
  std::vector<double> half(moved.begin(), moved.begin() + n / 2);
  EXPECT_GT(oracle::ks_pvalue(half, ecdf), 0.001);
}

TEST(Sampler, ValidStatesWithMaximallyMixedMean) {
  std::mt19937_64 rng(37);
  for (int d : {2, 3, 4}) {
    CMatrix mean = CMatrix::Zero(d, d);
    SamplerStats stats;
    const int n = 3000;
    for (int k = 0; k < n; ++k) {
      const auto rho = sample_density_qc(d, rng, &stats);
      EXPECT_NEAR(rho.hermitian().trace(), 1.0, 1e-12);
      EXPECT_GE(rho.eig().eigenvalues.minCoeff(), 0.0);
      mean += rho.matrix() / n;
    }
    EXPECT_LE((mean - CMatrix::Identity(d, d) / d).cwiseAbs().maxCoeff(), 0.03);
    EXPECT_GT(stats.acceptance_rate(), 0.0);
  }
  EXPECT_THROW(sample_density_qc(9, rng), ValidationError);
}

TEST(Sampler, QubitRadiusFollowsPrior) {
  std::mt19937_64 rng(38);
  std::vector<double> radii;
  for (int k = 0; k < 20000; ++k) {
    const auto l = sample_eigenvalues_qc(2, rng);
    radii.push_back(std::abs(l[0] - l[1]));
  }
  EXPECT_GT(oracle::ks_pvalue(radii, qubit_prior_qc_cdf), 0.01);
}

TEST(Priors, QubitExamples) {
  const auto z = qubit_priors(0.0);
  EXPECT_EQ(z.p_qc, 0.0);
  EXPECT_EQ(z.p_cc, 0.0);
  EXPECT_THROW(qubit_priors(1.0), DomainError);
  // r = sin t removes the endpoint singularity
  const double nq = oracle::integrate(
      [](double t) { return t >= kPi / 2 ? 2 / (kPi - 2) : qubit_priors(std::sin(t)).p_qc * std::cos(t); }, 0,
      kPi / 2);
  EXPECT_NEAR(nq, 1.0, 1e-9);
  EXPECT_NEAR(qubit_prior_qc_cdf(1.0), 1.0, 1e-15);
  EXPECT_NEAR(qubit_prior_qc_cdf(0.6), oracle::integrate([](double r) { return qubit_priors(r).p_qc; }, 0, 0.6),
              1e-10);
  // p_qc ≈ r²/(π-2) and p_cc ≈ 4r²/π near the origin
  const double r = 1e-4;
  const auto p = qubit_priors(r);
  EXPECT_NEAR(p.p_qc / p.p_cc, kPi / (4 * (kPi - 2)), 1e-7);
}

TEST(QubitMetric, Limits) {
  for (double r : {1e-3, 1e-2}) {
    const auto qc = qubit_metric_coeffs(QubitMetricKind::qc, r);
    const auto cc = qubit_metric_coeffs(QubitMetricKind::cc_mixed, r);
    EXPECT_NEAR(qc.g_angular, cc.g_angular, r * r * r * r);
    EXPECT_EQ(qc.g_rr, cc.g_rr);
  }
  EXPECT_NEAR(qubit_metric_coeffs(QubitMetricKind::qc, 1 - 1e-12).g_angular, 0.25, 1e-5);
  EXPECT_EQ(qubit_metric_coeffs(QubitMetricKind::cc_pure, 1.0).g_angular, 0.25);
  EXPECT_THROW(qubit_metric_coeffs(QubitMetricKind::qc, 1.0), DomainError);
}

TEST(QubitMetric, RadialFiniteDifference) {
  const double eps = 1e-3;
  for (double r : {0.1, 0.5, 0.8}) {
    const auto a = QubitState(0, 0, r).density(), b = QubitState(0, 0, r + eps).density();
    const double q = quantum_chernoff(a, b).q;
    EXPECT_NEAR((1 - q) / (qubit_metric_coeffs(QubitMetricKind::qc, r).g_rr * eps * eps), 1.0, 0.01);
  }
  for (double r : {0.3, 0.7}) {
    const auto a = QubitState(r, 0, 0).density();
    const auto b = QubitState(r * std::cos(eps), r * std::sin(eps), 0).density();
    const double q = quantum_chernoff(a, b).q;
    EXPECT_NEAR((1 - q) / (qubit_metric_coeffs(QubitMetricKind::qc, r).g_angular * eps * eps), 1.0, 0.01);
  }
}

TEST(Geodesic, Examples) {
  const QubitState z(0, 0, 1), mz(0, 0, -1), c(0, 0, 0);
  EXPECT_NEAR(geodesic_qc_qubit(z, z), 0.0, 1e-7);
  EXPECT_NEAR(geodesic_qc_qubit(z, mz), kPi / (2 * std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(geodesic_qc_qubit(z, c), kPi / (4 * std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(geodesic_qc_qubit(QubitState(0.3, 0, 0), c), geodesic_qc_qubit(QubitState(0, 0.3, 0), c), 1e-15);
}

TEST(Geodesic, ContinuousAtCenterAndMatchesLocalMetric) {
  const QubitState c(0, 0, 0);
  EXPECT_NEAR(geodesic_qc_qubit(QubitState(1e-7, 0, 0), c), geodesic_qc_qubit(QubitState(0, 1e-7, 0), c), 1e-12);
  // infinitesimal steps agree with the line element
  const double eps = 1e-5;
  for (double r : {0.2, 0.6}) {
    const auto qc = qubit_metric_coeffs(QubitMetricKind::qc, r);
    const double radial = geodesic_qc_qubit(QubitState(r, 0, 0), QubitState(r + eps, 0, 0));
    EXPECT_NEAR(radial / (std::sqrt(qc.g_rr) * eps), 1.0, 1e-4);
    const double ang = geodesic_qc_qubit(QubitState(r, 0, 0), QubitState(r * std::cos(eps), r * std::sin(eps), 0));
    EXPECT_NEAR(ang / (std::sqrt(qc.g_angular) * eps), 1.0, 1e-4);
  }
}
