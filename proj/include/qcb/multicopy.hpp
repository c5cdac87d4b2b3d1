#pragma once

// Exact N-copy error probabilities and rate extrapolation.
//
// For qubits, rho^{⊗n} is permutation invariant and splits into total-spin
// blocks j = n/2, n/2-1, ... with multiplicities m_j. Writing
// rho = sqrt(p(1-p)) exp(beta n̂·σ/2) with e^beta = p/(1-p), each block of
// rho^{⊗n} is (p(1-p))^{n/2} exp(beta n̂·J^{(j)}), so the Helstrom trace norm
// reduces to a sum of (2j+1)-dimensional problems.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qcb/localdisc.hpp"
#include "qcb/states.hpp"

namespace qcb {

struct SpinBlock {
  int twice_j;          // 2j
  std::uint64_t multiplicity;
  int dim() const { return twice_j + 1; }
  double j() const { return 0.5 * twice_j; }
};

struct RateFit {
  double slope;      // exponent estimate
  double intercept;
  double residual;   // RMS residual of the fit of -log pe against n
};

double classical_ncopy_error(double p, double q, int n, double pi0 = 0.5);

std::vector<SpinBlock> spin_blocks(int n);

// Spin-j angular momentum matrices (Jx, Jy, Jz) in the |j,m> basis, m descending.
std::array<CMatrix, 3> spin_matrices(int twice_j);

// Blockwise exact Helstrom error for n copies of two strictly mixed qubits.
double helstrom_ncopy_qubit(const QubitState& q0, const QubitState& q1, int n, double pi0 = 0.5);
// Same computation without OpenMP; kept as the reference for the parallel path.
double helstrom_ncopy_qubit_serial(const QubitState& q0, const QubitState& q1, int n,
                                   double pi0 = 0.5);

// Two pure states with overlap c: (1 - sqrt(1 - 4 pi0 pi1 c^n))/2.
double pure_ncopy_error(const QubitState& q0, const QubitState& q1, int n, double pi0 = 0.5);
double pure_ncopy_error(const CVector& psi0, const CVector& psi1, int n, double pi0 = 0.5);

// Same two-outcome measurement on every copy, optimal classical processing.
double local_ncopy_error(const TwoOutcomePovm& povm, const DensityMatrix& rho0,
                         const DensityMatrix& rho1, int n, double pi0 = 0.5);

RateFit rate_extrapolate(const std::vector<std::pair<int, double>>& points);

}  // namespace qcb
