#pragma once

// Single-mode Gaussian states ρ(β, ξ, r, φ): squeezed, displaced thermal
// states with covariance Γ = γ_β S Sᵗ, γ_β = coth(β/2). Quadratures are
// q = (a + a†)/√2, p = (a - a†)/(i√2); Γ is twice the covariance, so the
// vacuum has Γ = 1.

#include <Eigen/Dense>

#include "qcb/chernoff.hpp"

namespace qcb {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

class GaussianState {
 public:
  // beta > 0; use pure() for β = ∞.
  GaussianState(double beta, Vec2 displacement, double squeeze_r, double squeeze_phi);
  static GaussianState pure(Vec2 displacement, double squeeze_r, double squeeze_phi);
  static GaussianState thermal(double beta) { return GaussianState(beta, Vec2::Zero(), 0.0, 0.0); }

  bool is_pure() const { return pure_; }
  // +inf when pure.
  double beta() const;
  const Vec2& displacement() const { return displacement_; }
  double squeeze_r() const { return r_; }
  double squeeze_phi() const { return phi_; }

 private:
  GaussianState(bool pure, double beta, Vec2 d, double r, double phi);
  bool pure_;
  double beta_;
  Vec2 displacement_;
  double r_;
  double phi_;  // reduced to [0, π)
};

class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(const Mat2& m);
  // O_φ D_r O_φᵗ, D_r = diag(e^r, e^-r), O_φ = [[cos φ, sin φ], [-sin φ, cos φ]].
  static SymplecticMatrix squeeze(double r, double phi);
  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

Mat2 rotation(double phi);

// coth(β/2); 1 for β = ∞.
double gamma_beta(double beta);

Mat2 covariance(const GaussianState& g);

// (1 - e^{-β})^s / (1 - e^{-sβ}), so that ρ_β^s = N_{β,s} ρ_{sβ}.
double n_beta_s(double beta, double s);

double overlap(const GaussianState& ga, const GaussianState& gb);

double gaussian_q_s(const GaussianState& g0, const GaussianState& g1, double s);

ChernoffResult gaussian_chernoff(const GaussianState& g0, const GaussianState& g1);

// Q for ρ and its copy displaced by delta.
double q_equal_covariance(const GaussianState& g, const Vec2& delta);

// Q for two undisplaced states at the same temperature.
double q_isospectral(double beta, double r0, double phi0, double r1, double phi1);

struct GaussianDifferential {
  double dbeta = 0.0;
  double dq = 0.0;
  double dp = 0.0;
  double dr = 0.0;
  double dphi = 0.0;
};

enum class GaussianMetricKind { qc, cc };

double ds2_gaussian(GaussianMetricKind which, const GaussianState& g, const GaussianDifferential& d);

// Metric tensor in the coordinates (β, q, p, r, φ), by polarization of ds2_gaussian.
Eigen::Matrix<double, 5, 5> gaussian_metric_tensor(GaussianMetricKind which, const GaussianState& g);

double jeffreys_qc_gaussian(double beta, double r);

struct FockOracle {
  DensityMatrix rho;    // renormalized, dimension = cutoff
  double tail_mass;     // weight outside the first `cutoff` number states
};

// Number-basis matrix of ρ built from the truncated thermal state with
// matrix-exponential squeeze and displacement operators on a larger working
// space. Throws DomainError if the tail mass exceeds 1e-6.
FockOracle fock_oracle(const GaussianState& g, int cutoff);

}  // namespace qcb
