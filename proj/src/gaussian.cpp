#include "qcb/gaussian.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qcb/errors.hpp"

namespace qcb {

namespace {

double reduce_phi(double phi) {
  if (!std::isfinite(phi)) throw ValidationError("squeezing angle must be finite");
  double out = std::fmod(phi, std::numbers::pi);
  if (out < 0.0) out += std::numbers::pi;
  return out;
}

void check_common(const Vec2& d, double r) {
  if (!std::isfinite(d[0]) || !std::isfinite(d[1])) throw ValidationError("displacement must be finite");
  if (!(r >= 0.0) || !std::isfinite(r)) throw ValidationError("squeezing magnitude must be finite and >= 0");
}

}  // namespace

GaussianState::GaussianState(bool pure, double beta, Vec2 d, double r, double phi)
    : pure_(pure), beta_(beta), displacement_(d), r_(r), phi_(reduce_phi(phi)) {
  check_common(d, r);
}

GaussianState::GaussianState(double beta, Vec2 displacement, double squeeze_r, double squeeze_phi)
    : GaussianState(std::isinf(beta) && beta > 0, beta, displacement, squeeze_r, squeeze_phi) {
  if (!(beta > 0.0)) throw ValidationError("inverse temperature must be positive");
}

GaussianState GaussianState::pure(Vec2 displacement, double squeeze_r, double squeeze_phi) {
  return GaussianState(true, std::numeric_limits<double>::infinity(), displacement, squeeze_r,
                       squeeze_phi);
}

double GaussianState::beta() const { return pure_ ? std::numeric_limits<double>::infinity() : beta_; }

SymplecticMatrix::SymplecticMatrix(const Mat2& m) : m_(m) {
  if (std::abs(m.determinant() - 1.0) > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw ValidationError("matrix is not symplectic (det != 1)");
  }
}

Mat2 rotation(double phi) {
  Mat2 o;
  o << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  return o;
}

SymplecticMatrix SymplecticMatrix::squeeze(double r, double phi) {
  const Mat2 o = rotation(phi);
  const Mat2 d = Vec2(std::exp(r), std::exp(-r)).asDiagonal();
  return SymplecticMatrix(o * d * o.transpose());
}

double gamma_beta(double beta) {
  if (std::isinf(beta) && beta > 0) return 1.0;
  if (!(beta > 0.0)) throw ValidationError("inverse temperature must be positive");
  return 1.0 / std::tanh(0.5 * beta);
}

namespace {

// S Sᵗ
Mat2 squeeze_gram(double r, double phi) {
  const Mat2 o = rotation(phi);
  return o * Vec2(std::exp(2.0 * r), std::exp(-2.0 * r)).asDiagonal() * o.transpose();
}

double gaussian_overlap(const Mat2& ga, const Mat2& gb, const Vec2& delta) {
  const Mat2 sum = ga + gb;
  return 2.0 / std::sqrt(sum.determinant()) * std::exp(-delta.dot(sum.inverse() * delta));
}

bool same_state(const GaussianState& a, const GaussianState& b) {
  if (a.is_pure() != b.is_pure()) return false;
  if (!a.is_pure() && std::abs(a.beta() - b.beta()) > 1e-14 * a.beta()) return false;
  if ((a.displacement() - b.displacement()).cwiseAbs().maxCoeff() > 1e-14) return false;
  return (covariance(a) - covariance(b)).cwiseAbs().maxCoeff() <= 1e-14;
}

}  // namespace

Mat2 covariance(const GaussianState& g) {
  return gamma_beta(g.beta()) * squeeze_gram(g.squeeze_r(), g.squeeze_phi());
}

double n_beta_s(double beta, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw ValidationError("n_beta_s needs s in (0, 1]");
  if (std::isinf(beta) && beta > 0) return 1.0;
  if (!(beta > 0.0)) throw ValidationError("inverse temperature must be positive");
  if (s == 1.0) return 1.0;
  return std::pow(-std::expm1(-beta), s) / -std::expm1(-s * beta);
}

double overlap(const GaussianState& ga, const GaussianState& gb) {
  return gaussian_overlap(covariance(ga), covariance(gb), ga.displacement() - gb.displacement());
}

double gaussian_q_s(const GaussianState& g0, const GaussianState& g1, double s) {
  if (!(s > 0.0 && s < 1.0)) throw ValidationError("gaussian_q_s needs s in (0, 1)");
  const double b0 = g0.beta();
  const double b1 = g1.beta();
  const double n0 = n_beta_s(b0, s);
  const double n1 = n_beta_s(b1, 1.0 - s);
  const Mat2 t0 = gamma_beta(s * b0) * squeeze_gram(g0.squeeze_r(), g0.squeeze_phi());
  const Mat2 t1 = gamma_beta((1.0 - s) * b1) * squeeze_gram(g1.squeeze_r(), g1.squeeze_phi());
  return n0 * n1 * gaussian_overlap(t0, t1, g0.displacement() - g1.displacement());
}

ChernoffResult gaussian_chernoff(const GaussianState& g0, const GaussianState& g1) {
  if (same_state(g0, g1)) return {1.0, 0.5, RateExponent::finite(0.0)};
  // s -> 0 gives tr(Π0 ρ1): 1 unless ρ0 is pure (full-rank otherwise)
  const double ov = overlap(g0, g1);
  const double q0 = g0.is_pure() ? ov : 1.0;
  const double q1 = g1.is_pure() ? ov : 1.0;
  return minimize_overlap([&](double s) { return gaussian_q_s(g0, g1, s); }, q0, q1);
}

double q_equal_covariance(const GaussianState& g, const Vec2& delta) {
  const Vec2 rot = rotation(g.squeeze_phi()).transpose() * delta;  // (δq_φ, δp_φ)
  const double r = g.squeeze_r();
  const double quad_form = std::exp(-2.0 * r) * rot[0] * rot[0] + std::exp(2.0 * r) * rot[1] * rot[1];
  const double t = g.is_pure() ? 1.0 : std::tanh(0.25 * g.beta());
  return std::exp(-0.5 * quad_form * t);
}

double q_isospectral(double beta, double r0, double phi0, double r1, double phi1) {
  if (!(beta > 0.0)) throw ValidationError("inverse temperature must be positive");
  if (!(r0 >= 0.0) || !(r1 >= 0.0)) throw ValidationError("squeezing magnitude must be >= 0");
  const double c = std::cosh(r0 - r1);
  const double sd = std::sin(phi0 - phi1);
  return 1.0 / std::sqrt(c * c + sd * sd * std::sinh(2.0 * r0) * std::sinh(2.0 * r1));
}

double ds2_gaussian(GaussianMetricKind which, const GaussianState& g, const GaussianDifferential& d) {
  const double r = g.squeeze_r();
  const Vec2 rot = rotation(g.squeeze_phi()).transpose() * Vec2(d.dq, d.dp);
  const double disp = std::exp(-2.0 * r) * rot[0] * rot[0] + std::exp(2.0 * r) * rot[1] * rot[1];
  const double sq = d.dr * d.dr + d.dphi * d.dphi * std::pow(std::sinh(2.0 * r), 2);
  if (g.is_pure()) {
    if (which == GaussianMetricKind::cc) throw DomainError("cc Gaussian metric requires a mixed state");
    if (d.dbeta != 0.0) throw DomainError("temperature direction is singular at a pure state");
    return 0.5 * sq + 0.5 * disp;
  }
  const double b = g.beta();
  const double sh = std::sinh(0.5 * b);
  const double thermal = d.dbeta * d.dbeta / (32.0 * sh * sh);
  if (which == GaussianMetricKind::qc) {
    return thermal + 0.5 * sq + 0.5 * disp * std::tanh(0.25 * b);
  }
  return thermal + 0.25 * disp * std::tanh(0.5 * b) + 0.25 * sq * (1.0 + 1.0 / std::cosh(b));
}

Eigen::Matrix<double, 5, 5> gaussian_metric_tensor(GaussianMetricKind which, const GaussianState& g) {
  auto unit = [](int k, double scale = 1.0) {
    GaussianDifferential d;
    double* f[5] = {&d.dbeta, &d.dq, &d.dp, &d.dr, &d.dphi};
    *f[k] = scale;
    return d;
  };
  auto add = [](GaussianDifferential a, const GaussianDifferential& b) {
    a.dbeta += b.dbeta;
    a.dq += b.dq;
    a.dp += b.dp;
    a.dr += b.dr;
    a.dphi += b.dphi;
    return a;
  };
  Eigen::Matrix<double, 5, 5> m;
  for (int i = 0; i < 5; ++i) m(i, i) = ds2_gaussian(which, g, unit(i));
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const double both = ds2_gaussian(which, g, add(unit(i), unit(j)));
      m(i, j) = m(j, i) = 0.5 * (both - m(i, i) - m(j, j));
    }
  }
  return m;
}

double jeffreys_qc_gaussian(double beta, double r) {
  if (!(beta > 0.0)) throw ValidationError("inverse temperature must be positive");
  if (!(r >= 0.0)) throw ValidationError("squeezing magnitude must be >= 0");
  if (std::isinf(beta)) return 0.0;
  return std::tanh(0.25 * beta) / std::sinh(0.5 * beta) * std::sinh(2.0 * r) /
         (16.0 * std::numbers::sqrt2);
}

FockOracle fock_oracle(const GaussianState& g, int cutoff) {
  if (cutoff < 16) throw ValidationError("Fock cutoff must be at least 16");
  const int w = cutoff + std::max(60, cutoff);
  CMatrix a = CMatrix::Zero(w, w);
  for (int n = 1; n < w; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const CMatrix ad = a.adjoint();

  CMatrix rho = CMatrix::Zero(w, w);
  if (g.is_pure()) {
    rho(0, 0) = 1.0;
  } else {
    const double b = g.beta();
    for (int n = 0; n < w; ++n) rho(n, n) = -std::expm1(-b) * std::exp(-b * n);
  }
  // S(ζ) = exp((ζ* a^2 - ζ a†^2)/2) with ζ = -r e^{-2iφ} stretches the
  // quadrature along the principal axis of O_φ D_r^2 O_φᵗ.
  const Complex zeta = -g.squeeze_r() * std::exp(Complex(0.0, -2.0 * g.squeeze_phi()));
  if (g.squeeze_r() > 0.0) {
    const CMatrix gen = 0.5 * (std::conj(zeta) * a * a - zeta * ad * ad);
    const CMatrix s = gen.exp();
    rho = s * rho * s.adjoint();
  }
  const Complex alpha(g.displacement()[0] / std::numbers::sqrt2, g.displacement()[1] / std::numbers::sqrt2);
  if (std::abs(alpha) > 0.0) {
    const CMatrix gen = alpha * ad - std::conj(alpha) * a;
    const CMatrix dop = gen.exp();
    rho = dop * rho * dop.adjoint();
  }
  const CMatrix block = rho.topLeftCorner(cutoff, cutoff);
  const double kept = block.trace().real();
  const double tail = std::max(0.0, 1.0 - kept);
  if (tail > 1e-6) {
    std::ostringstream os;
    os << "Fock tail mass " << tail << " exceeds 1e-6 at cutoff " << cutoff;
    throw DomainError(os.str());
  }
  return {DensityMatrix(HermitianMatrix::from_trusted(block / kept)), tail};
}

}  // namespace qcb
