#pragma once

// Small dense semidefinite programming.
//
// Problems are stated over Hermitian matrix variables V_k >= 0 (optionally
// boxed, 0 <= V_k <= 1) with affine equalities between them, possibly through
// partial transposes:
//
//   minimize    sum_k Re Tr(C_k V_k)
//   subject to  sum_t c_t V_{k_t}^{T_t} = R      for every equality
//               0 <= V_k (<= 1 if boxed)
//
// The solver core works on real symmetric blocks: a Hermitian H = S + iK is
// carried as [[S, -K], [K, S]], which doubles dimensions and preserves the
// spectrum (each eigenvalue twice).

#include <vector>

#include <Eigen/Dense>

#include "trijc/errors.hpp"
#include "trijc/tensorlab.hpp"

namespace trijc::sdp {

using RealMatrix = Eigen::MatrixXd;

RealMatrix embed(const ComplexMatrix& h);

// Inverse of embed. Non-embedded input is projected onto the embedded
// subspace first (average of S and K parts).
ComplexMatrix unembed(const RealMatrix& s);

// -------------------------------------------------- Hermitian-level problem

struct Variable {
  Shape shape;              // gives the dimension and the factors for transposes
  bool boxed = true;        // also impose V <= 1
  ComplexMatrix objective;  // C_k; empty means zero
};

struct Term {
  std::size_t variable = 0;
  double coeff = 1.0;
  PartyList transposed;  // partial transpose applied to V before summing
};

struct Equality {
  std::vector<Term> terms;
  ComplexMatrix rhs;  // empty means zero
};

struct SdpProblem {
  std::vector<Variable> variables;
  std::vector<Equality> equalities;

  // Throws std::invalid_argument on inconsistent dimensions or indices.
  void validate() const;
};

struct SdpOptions {
  int max_iterations = 120;
  double gap_tolerance = 1e-9;          // stop target on |primal - dual|
  double feasibility_tolerance = 1e-10; // stop target on residuals
  double step_fraction = 0.98;
};

struct SdpSolution {
  std::vector<ComplexMatrix> variables;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double duality_gap = 0.0;        // |primal - dual|
  double primal_residual = 0.0;    // max |A(X) - b|
  double dual_residual = 0.0;      // max |C - A^T y - Z|
  int iterations = 0;
};

// Iteration cap reached without meeting the tolerance contract.
class SdpNonConvergence : public NumericalError {
 public:
  SdpNonConvergence(const std::string& what, SdpSolution best)
      : NumericalError(what), best_(std::move(best)) {}
  const SdpSolution& best() const { return best_; }

 private:
  SdpSolution best_;
};

// Succeeds when the duality gap is <= tol::kSdpGap and both residuals are
// <= tol::kSdpFeasibility; throws SdpNonConvergence otherwise.
SdpSolution sdp_solve(const SdpProblem& problem, const SdpOptions& options = {});

// ------------------------------------------------------------ real core

// Entry (row, col) of a constraint matrix in one block. Both triangles are
// listed explicitly.
struct SparseEntry {
  int row;
  int col;
  double value;
};

struct BlockCoefficients {
  int block;
  std::vector<SparseEntry> entries;
};

// min <C, X>  s.t.  <A_i, X> = b_i,  X = diag(X_1, ..., X_p) >= 0.
struct RealSdp {
  std::vector<int> block_sizes;
  std::vector<RealMatrix> objective;                      // C_b, one per block
  std::vector<std::vector<BlockCoefficients>> constraints; // A_i by block
  std::vector<double> rhs;                                // b_i
};

struct RealSolution {
  std::vector<RealMatrix> x;
  std::vector<RealMatrix> z;
  Eigen::VectorXd y;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

RealSolution solve_real(const RealSdp& problem, const SdpOptions& options = {});

// Compiles the Hermitian-level problem into real standard form. Each
// variable gets one block; boxed variables get a second block for 1 - V_k.
struct CompiledSdp {
  RealSdp real;
  std::vector<int> variable_block;  // block index of V_k
};

CompiledSdp compile(const SdpProblem& problem);

}  // namespace trijc::sdp
