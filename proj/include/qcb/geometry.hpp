#pragma once

// Riemannian metrics induced by the distinguishability measures, the induced
// priors on qubit and d-level states, and the C_d normalization constants.

#include <random>
#include <span>
#include <vector>

#include "qcb/states.hpp"

namespace qcb {

// Traceless Hermitian perturbation dρ.
class TangentDirection {
 public:
  explicit TangentDirection(const HermitianMatrix& m);
  explicit TangentDirection(const CMatrix& m) : TangentDirection(HermitianMatrix(m)) {}

  const HermitianMatrix& hermitian() const { return m_; }
  const CMatrix& matrix() const { return m_.matrix(); }
  int dim() const { return m_.dim(); }

 private:
  HermitianMatrix m_;
};

// Eigenvalue shifts and U†dU in the eigenbasis of ρ.
struct SpectralTangent {
  std::vector<double> dlambda;  // sums to zero
  CMatrix generator;            // anti-Hermitian

  void validate() const;
};

double ds2_qc(const DensityMatrix& rho, const TangentDirection& drho);
double ds2_bures(const DensityMatrix& rho, const TangentDirection& drho);
// Half the Bures metric on full-rank states, the Fubini-Study metric on pure
// states along directions that keep them pure.
double ds2_cc(const DensityMatrix& rho, const TangentDirection& drho);

double ds2_spectral_qc(std::span<const double> lambdas, const SpectralTangent& tangent);
// dρ in the eigenbasis: dλ_i δ_ij + (λ_j - λ_i) g_ij.
CMatrix reconstruct_tangent(std::span<const double> lambdas, const SpectralTangent& tangent);

// Fisher metric on the simplex in the coordinates λ_1..λ_{d-1}.
Eigen::MatrixXd fisher_simplex_metric(std::span<const double> lambdas);

// Joint eigenvalue density of the quantum Chernoff prior on the simplex.
double eigen_density_qc(std::span<const double> lambdas, int d);

// Polynomials orthonormal under ∫_0^∞ e^{-t^2} · dt.
struct PolynomialBasis {
  int degree;                                     // highest degree
  std::vector<double> leading_coeffs;             // a_0..a_degree
  std::vector<std::vector<double>> coefficients;  // P_k(t) = Σ_i coefficients[k][i] t^i
  double orthonormality_residual;                 // max |<P_k,P_l> - δ_kl|, in extended precision
};

PolynomialBasis orthonormal_polynomials(int degree);

double cd_constant(int d);

CMatrix sample_haar_unitary(int d, std::mt19937_64& rng);

struct SamplerStats {
  long long proposals = 0;
  long long accepted = 0;
  double acceptance_rate() const { return proposals ? double(accepted) / double(proposals) : 0.0; }
};

// Density matrix drawn from the quantum Chernoff prior: eigenvalues from
// eigen_density_qc, eigenbasis Haar.
DensityMatrix sample_density_qc(int d, std::mt19937_64& rng, SamplerStats* stats = nullptr);
// Eigenvalues only (unsorted).
std::vector<double> sample_eigenvalues_qc(int d, std::mt19937_64& rng,
                                          SamplerStats* stats = nullptr);

struct QubitPriors {
  double p_cc;
  double p_qc;
};

QubitPriors qubit_priors(double r);
// ∫_0^r p_qc.
double qubit_prior_qc_cdf(double r);

enum class QubitMetricKind { qc, cc_mixed, cc_pure };

struct QubitMetricCoeffs {
  double g_rr;
  double g_angular;
};

QubitMetricCoeffs qubit_metric_coeffs(QubitMetricKind which, double r);

double geodesic_qc_qubit(const QubitState& q0, const QubitState& q1);

}  // namespace qcb
