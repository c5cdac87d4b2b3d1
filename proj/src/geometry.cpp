#include "qcb/geometry.hpp"

#include <quadmath.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "qcb/errors.hpp"

namespace qcb {

TangentDirection::TangentDirection(const HermitianMatrix& m) : m_(m) {
  if (std::abs(m.trace()) > 1e-12 * std::max(1.0, m.max_abs())) {
    throw ValidationError("tangent direction must be traceless");
  }
}

void SpectralTangent::validate() const {
  if (generator.rows() != generator.cols() ||
      generator.rows() != static_cast<Eigen::Index>(dlambda.size())) {
    throw ValidationError("spectral tangent: generator and dlambda sizes differ");
  }
  double sum = 0.0;
  for (double v : dlambda) sum += v;
  if (std::abs(sum) > 1e-12) throw ValidationError("spectral tangent: dlambda must sum to zero");
  const double scale = std::max(1.0, generator.cwiseAbs().maxCoeff());
  if ((generator + generator.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("spectral tangent: generator must be anti-Hermitian");
  }
}

namespace {

void check_dims(const DensityMatrix& rho, const TangentDirection& d) {
  if (rho.dim() != d.dim()) throw ValidationError("state and direction have different dimensions");
}

// (1/2) Σ_ij |X_ij|^2 / denom(λ_i, λ_j) with X = U† dρ U.
template <class Denom>
double pairwise_metric(const DensityMatrix& rho, const TangentDirection& drho, Denom denom) {
  check_dims(rho, drho);
  const auto& eig = rho.eig();
  const CMatrix x = eig.eigenvectors.adjoint() * drho.matrix() * eig.eigenvectors;
  const double cut = support_cutoff(eig.eigenvalues);
  const double scale = std::max(1e-300, x.cwiseAbs().maxCoeff());
  const int d = rho.dim();
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    const double li = eig.eigenvalues[i] > cut ? eig.eigenvalues[i] : 0.0;
    for (int j = 0; j < d; ++j) {
      const double lj = eig.eigenvalues[j] > cut ? eig.eigenvalues[j] : 0.0;
      const double w = std::norm(x(i, j));
      if (li == 0.0 && lj == 0.0) {
        if (std::sqrt(w) > 1e-10 * scale) {
          throw DomainError("direction has weight between two zero eigenvalues; it leaves the state space");
        }
        continue;
      }
      total += w / denom(li, lj);
    }
  }
  return 0.5 * total;
}

}  // namespace

double ds2_qc(const DensityMatrix& rho, const TangentDirection& drho) {
  return pairwise_metric(rho, drho, [](double a, double b) {
    const double s = std::sqrt(a) + std::sqrt(b);
    return s * s;
  });
}

double ds2_bures(const DensityMatrix& rho, const TangentDirection& drho) {
  return pairwise_metric(rho, drho, [](double a, double b) { return a + b; });
}

double ds2_cc(const DensityMatrix& rho, const TangentDirection& drho) {
  check_dims(rho, drho);
  const int rank = rho.rank();
  if (rank == rho.dim()) return 0.5 * ds2_bures(rho, drho);
  if (rank != 1) {
    throw DomainError("ds2_cc is defined for full-rank or pure states only");
  }
  // pure: the direction must not populate the kernel
  const auto& eig = rho.eig();
  const CMatrix x = eig.eigenvectors.adjoint() * drho.matrix() * eig.eigenvectors;
  const int d = rho.dim();
  const double scale = std::max(1e-300, x.cwiseAbs().maxCoeff());
  // the support vector is the last column (eigenvalues ascending)
  if (std::abs(x(d - 1, d - 1)) > 1e-10 * scale ||
      x.topLeftCorner(d - 1, d - 1).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw DomainError("direction changes the rank of a pure state");
  }
  return ds2_bures(rho, drho);
}

CMatrix reconstruct_tangent(std::span<const double> lambdas, const SpectralTangent& tangent) {
  tangent.validate();
  const int d = static_cast<int>(lambdas.size());
  if (d != static_cast<int>(tangent.dlambda.size())) {
    throw ValidationError("spectral tangent size does not match the spectrum");
  }
  CMatrix out(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out(i, j) = (lambdas[j] - lambdas[i]) * tangent.generator(i, j);
    }
    out(i, i) += tangent.dlambda[i];
  }
  return out;
}

double ds2_spectral_qc(std::span<const double> lambdas, const SpectralTangent& tangent) {
  tangent.validate();
  const int d = static_cast<int>(lambdas.size());
  if (d != static_cast<int>(tangent.dlambda.size())) {
    throw ValidationError("spectral tangent size does not match the spectrum");
  }
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    const double dl = tangent.dlambda[i];
    if (lambdas[i] <= 0.0) {
      if (dl != 0.0) throw DomainError("eigenvalue shift at a zero eigenvalue");
      continue;
    }
    total += dl * dl / (8.0 * lambdas[i]);
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double gap = std::sqrt(std::max(0.0, lambdas[i])) - std::sqrt(std::max(0.0, lambdas[j]));
      total += gap * gap * std::norm(tangent.generator(i, j));
    }
  }
  return total;
}

Eigen::MatrixXd fisher_simplex_metric(std::span<const double> lambdas) {
  const int d = static_cast<int>(lambdas.size());
  if (d < 2) throw ValidationError("simplex needs at least two coordinates");
  double sum = 0.0;
  for (double l : lambdas) {
    if (!(l > 0.0)) throw DomainError("Fisher metric is singular on the simplex boundary");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("eigenvalues must sum to 1");
  Eigen::MatrixXd g = Eigen::MatrixXd::Constant(d - 1, d - 1, 1.0 / lambdas[d - 1]);
  for (int i = 0; i < d - 1; ++i) g(i, i) += 1.0 / lambdas[i];
  return g;
}

double eigen_density_qc(std::span<const double> lambdas, int d) {
  if (static_cast<int>(lambdas.size()) != d) throw ValidationError("expected d eigenvalues");
  double sum = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw ValidationError("eigenvalues must be non-negative");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("eigenvalues must sum to 1");
  double vander = 1.0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double g = std::sqrt(lambdas[i]) - std::sqrt(lambdas[j]);
      vander *= g * g;
    }
  }
  if (vander == 0.0) return 0.0;
  double inv_sqrt = 1.0;
  for (double l : lambdas) {
    if (l == 0.0) throw DomainError("eigenvalue density diverges at a zero eigenvalue");
    inv_sqrt /= std::sqrt(l);
  }
  return inv_sqrt * vander / cd_constant(d);
}

namespace {

using quad = __float128;

// Γ(n/2) for n >= 1.
quad gamma_half(int n) {
  quad g = (n % 2 == 0) ? quad(1) : sqrtq(acosq(quad(-1)));
  for (int k = (n % 2 == 0) ? 2 : 1; k + 2 <= n; k += 2) g *= quad(k) / 2;
  return g;
}

struct QuadBasis {
  std::vector<std::vector<quad>> polys;
  std::vector<quad> moments;  // ∫_0^∞ t^n e^{-t^2} dt
};

quad inner(const std::vector<quad>& a, const std::vector<quad>& b, const std::vector<quad>& m) {
  quad s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * m[i + j];
  }
  return s;
}

QuadBasis gram_schmidt(int degree) {
  QuadBasis out;
  out.moments.resize(2 * degree + 1);
  for (int n = 0; n <= 2 * degree; ++n) out.moments[n] = gamma_half(n + 1) / 2;
  for (int k = 0; k <= degree; ++k) {
    std::vector<quad> e(k + 1, quad(0));
    e[k] = 1;
    for (int pass = 0; pass < 2; ++pass) {
      for (int l = 0; l < k; ++l) {
        const quad c = inner(e, out.polys[l], out.moments);
        for (int i = 0; i <= l; ++i) e[i] -= c * out.polys[l][i];
      }
    }
    const quad norm = sqrtq(inner(e, e, out.moments));
    for (auto& v : e) v /= norm;
    out.polys.push_back(std::move(e));
  }
  return out;
}

}  // namespace

PolynomialBasis orthonormal_polynomials(int degree) {
  if (degree < 0 || degree > 12) throw ValidationError("polynomial degree must lie in [0, 12]");
  const auto qb = gram_schmidt(degree);
  PolynomialBasis out{degree, {}, {}, 0.0};
  quad worst = 0;
  for (int k = 0; k <= degree; ++k) {
    out.leading_coeffs.push_back(static_cast<double>(qb.polys[k][k]));
    std::vector<double> c;
    for (quad v : qb.polys[k]) c.push_back(static_cast<double>(v));
    out.coefficients.push_back(std::move(c));
    for (int l = 0; l <= k; ++l) {
      const quad r = fabsq(inner(qb.polys[k], qb.polys[l], qb.moments) - (k == l ? 1 : 0));
      worst = std::max(worst, r);
    }
  }
  out.orthonormality_residual = static_cast<double>(worst);
  return out;
}

double cd_constant(int d) {
  if (d < 2 || d > 10) throw ValidationError("cd_constant supports 2 <= d <= 10");
  const auto qb = gram_schmidt(d - 1);
  quad prod = 1;
  for (int k = 0; k < d; ++k) {
    const quad a = qb.polys[k][k];
    prod /= a * a;
  }
  quad pre = 1;
  for (int k = 1; k <= d; ++k) pre *= 2 * k;  // 2^d d!
  return static_cast<double>(pre / gamma_half(d * d) * prod);
}

CMatrix sample_haar_unitary(int d, std::mt19937_64& rng) {
  if (d < 1) throw ValidationError("dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  CMatrix out = q;
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    out.col(j) *= (a > 0.0) ? rjj / a : Complex(1.0, 0.0);
  }
  return out;
}

namespace {

constexpr int kMaxSampleDim = 8;
constexpr long long kProposalBudget = 50'000'000;

double sqrt_vandermonde_sq(const std::vector<double>& l) {
  double v = 1.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      const double g = std::sqrt(l[i]) - std::sqrt(l[j]);
      v *= g * g;
    }
  }
  return v;
}

std::vector<double> dirichlet_half(int d, std::mt19937_64& rng) {
  std::gamma_distribution<double> gam(0.5, 1.0);
  std::vector<double> x(d);
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& v : x) {
      v = gam(rng);
      s += v;
    }
  } while (!(s > 0.0));
  for (auto& v : x) v /= s;
  return x;
}

// Maximum of Π_{i<j} (√λ_i - √λ_j)^2 over the simplex: random search from a
// fixed stream followed by coordinate refinement, times 1.1, capped at the
// trivial bound 1.
double envelope_constant(int d) {
  static std::once_flag flags[kMaxSampleDim + 1];
  static double cache[kMaxSampleDim + 1];
  std::call_once(flags[d], [d] {
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(d));
    std::vector<double> best = dirichlet_half(d, rng);
    double best_v = sqrt_vandermonde_sq(best);
    for (int k = 0; k < 200000; ++k) {
      auto x = dirichlet_half(d, rng);
      const double v = sqrt_vandermonde_sq(x);
      if (v > best_v) {
        best_v = v;
        best = std::move(x);
      }
    }
    // refine on the sphere x_i = √λ_i
    std::vector<double> x(d);
    for (int i = 0; i < d; ++i) x[i] = std::sqrt(best[i]);
    double step = 0.05;
    while (step > 1e-9) {
      bool improved = false;
      for (int i = 0; i < d; ++i) {
        for (double sgn : {1.0, -1.0}) {
          auto y = x;
          y[i] = std::max(0.0, y[i] + sgn * step);
          double n = 0.0;
          for (double v : y) n += v * v;
          n = std::sqrt(n);
          std::vector<double> l(d);
          for (int k = 0; k < d; ++k) l[k] = (y[k] / n) * (y[k] / n);
          const double v = sqrt_vandermonde_sq(l);
          if (v > best_v) {
            best_v = v;
            for (int k = 0; k < d; ++k) y[k] /= n;
            x = y;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    cache[d] = std::min(1.0, 1.1 * best_v);
  });
  return cache[d];
}

}  // namespace

std::vector<double> sample_eigenvalues_qc(int d, std::mt19937_64& rng, SamplerStats* stats) {
  if (d < 2 || d > kMaxSampleDim) throw ValidationError("sampler supports 2 <= d <= 8");
  const double m = envelope_constant(d);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (long long k = 0; k < kProposalBudget; ++k) {
    auto l = dirichlet_half(d, rng);
    const double ratio = sqrt_vandermonde_sq(l);
    if (stats) ++stats->proposals;
    if (ratio > m) throw DomainError("rejection envelope violated");
    if (unif(rng) * m < ratio) {
      if (stats) ++stats->accepted;
      return l;
    }
  }
  std::ostringstream os;
  os << "rejection budget exceeded for d=" << d;
  if (stats) os << " (acceptance rate " << stats->acceptance_rate() << ")";
  throw DomainError(os.str());
}

DensityMatrix sample_density_qc(int d, std::mt19937_64& rng, SamplerStats* stats) {
  const auto l = sample_eigenvalues_qc(d, rng, stats);
  const CMatrix u = sample_haar_unitary(d, rng);
  RVector lv(d);
  for (int i = 0; i < d; ++i) lv[i] = l[i];
  return DensityMatrix(HermitianMatrix::from_trusted(u * lv.asDiagonal() * u.adjoint()));
}

QubitPriors qubit_priors(double r) {
  if (!(r >= 0.0)) throw ValidationError("radius must be non-negative");
  if (r >= 1.0) throw DomainError("qubit priors are singular at r = 1");
  const double c = std::sqrt(1.0 - r * r);
  const double pi = std::numbers::pi;
  // (1 - c)/c written without cancellation
  const double excess = r * r / (c * (1.0 + c));
  return {4.0 / pi * r * r / c, 2.0 / (pi - 2.0) * excess};
}

double qubit_prior_qc_cdf(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw ValidationError("radius must lie in [0,1]");
  return 2.0 / (std::numbers::pi - 2.0) * (std::asin(r) - r);
}

QubitMetricCoeffs qubit_metric_coeffs(QubitMetricKind which, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw ValidationError("radius must lie in [0,1]");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  switch (which) {
    case QubitMetricKind::qc:
    case QubitMetricKind::cc_mixed: {
      if (r >= 1.0) throw DomainError("radial metric component is singular at r = 1");
      const double grr = 1.0 / (8.0 * (1.0 - r * r));
      if (which == QubitMetricKind::cc_mixed) return {grr, r * r / 8.0};
      const double c = std::sqrt(1.0 - r * r);
      return {grr, r * r / (1.0 + c) / 4.0};
    }
    case QubitMetricKind::cc_pure:
      return {nan, 0.25};
  }
  return {nan, nan};
}

double geodesic_qc_qubit(const QubitState& q0, const QubitState& q1) {
  // ds^2 = (dτ^2 + sin^2 τ dΩ^2)/2 with r = sin 2τ: a 3-sphere of radius 1/√2.
  const double t0 = 0.5 * std::asin(std::min(1.0, q0.radius()));
  const double t1 = 0.5 * std::asin(std::min(1.0, q1.radius()));
  const double theta = QubitState::angle_between(q0, q1);
  const double c = std::cos(t0) * std::cos(t1) + std::sin(t0) * std::sin(t1) * std::cos(theta);
  return std::acos(std::clamp(c, -1.0, 1.0)) / std::numbers::sqrt2;
}

}  // namespace qcb
