#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "trijc/gme.hpp"
#include "trijc/sdp.hpp"
#include "trijc/states.hpp"
#include "trijc/tolerances.hpp"

using namespace trijc;
using namespace trijc::sdp;

namespace {

Shape qubits(int n) {
  const Party labels[] = {Party::A, Party::B, Party::C};
  std::vector<Factor> f;
  for (int k = 0; k < n; ++k) f.push_back({labels[k], 2});
  return Shape(f);
}

// Sum of negative eigenvalues via the general (non-Hermitian) eigensolver.
double negative_part(const ComplexMatrix& h) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(h);
  double s = 0.0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) s += std::min(0.0, es.eigenvalues()(i).real());
  return s;
}

void expect_contract(const SdpSolution& sol) {
  EXPECT_LE(sol.duality_gap, tol::kSdpGap);
  EXPECT_LE(sol.primal_residual, tol::kSdpFeasibility);
  EXPECT_LE(sol.dual_residual, tol::kSdpFeasibility);
}

}  // namespace

TEST(Embed, RoundTripAndSpectrum) {
  auto gen = oracle::rng(2);
  const ComplexMatrix h = oracle::random_hermitian(5, gen);
  const RealMatrix s = embed(h);
  ASSERT_EQ(s.rows(), 10);
  EXPECT_LE((s - s.transpose()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LE((unembed(s) - h).cwiseAbs().maxCoeff(), 1e-15);

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(s);
  const auto eh = eigh(h).values;
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(es.eigenvalues()(2 * i), eh(i), 1e-12);
    EXPECT_NEAR(es.eigenvalues()(2 * i + 1), eh(i), 1e-12);
  }
  // Inner products: <emb A, emb B> = 2 Re Tr(A B).
  const ComplexMatrix g = oracle::random_hermitian(5, gen);
  EXPECT_NEAR((embed(g).cwiseProduct(s)).sum(), 2.0 * (g * h).trace().real(), 1e-11);
}

TEST(SdpSolve, BoxedScalar) {
  SdpProblem lo;
  lo.variables.push_back({Shape({{Party::A, 1}}), true, ComplexMatrix::Constant(1, 1, -1.0)});
  auto sol = sdp_solve(lo);
  EXPECT_NEAR(sol.primal_objective, -1.0, 1e-8);
  EXPECT_NEAR(sol.variables[0](0, 0).real(), 1.0, 1e-8);
  expect_contract(sol);

  lo.variables[0].objective(0, 0) = 2.0;
  sol = sdp_solve(lo);
  EXPECT_NEAR(sol.primal_objective, 0.0, 1e-8);
}

TEST(SdpSolve, BoxedMatrixGivesNegativeSpectralPart) {
  auto gen = oracle::rng(8);
  for (int k = 0; k < 5; ++k) {
    const ComplexMatrix c = oracle::random_hermitian(4, gen);
    SdpProblem p;
    p.variables.push_back({qubits(2), true, c});
    const auto sol = sdp_solve(p);
    EXPECT_NEAR(sol.primal_objective, negative_part(c), 1e-7);
    expect_contract(sol);
  }
}

TEST(SdpSolve, DiagonalToyHasZeroOptimum) {
  SdpProblem p;
  p.variables.push_back({qubits(1), true, ComplexMatrix::Identity(2, 2)});
  const auto sol = sdp_solve(p);
  EXPECT_NEAR(sol.primal_objective, 0.0, 1e-8);
  EXPECT_LE(sol.variables[0].cwiseAbs().maxCoeff(), 1e-8);
}

TEST(SdpSolve, EqualityPinsVariable) {
  ComplexMatrix r(2, 2);
  r << 0.3, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.7;
  SdpProblem p;
  p.variables.push_back({qubits(1), true, ComplexMatrix::Identity(2, 2)});
  p.equalities.push_back({{{0, 1.0, {}}}, r});
  const auto sol = sdp_solve(p);
  EXPECT_NEAR(sol.primal_objective, 1.0, 1e-8);
  EXPECT_LE((sol.variables[0] - r).cwiseAbs().maxCoeff(), 1e-7);
}

TEST(SdpSolve, TransposedEqualityCouplesVariables) {
  // V0 = V1^{T_A}. |01><01| is diagonal, survives the transpose, optimum -1.
  SdpProblem p;
  ComplexMatrix c = ComplexMatrix::Zero(4, 4);
  c(1, 1) = -1.0;
  p.variables.push_back({qubits(2), true, {}});
  p.variables.push_back({qubits(2), true, c});
  p.equalities.push_back({{{0, 1.0, {}}, {1, -1.0, {Party::A}}}, {}});
  const auto sol = sdp_solve(p);
  EXPECT_NEAR(sol.primal_objective, -1.0, 1e-7);
  EXPECT_LE((sol.variables[0] - partial_transpose(sol.variables[1], qubits(2), {Party::A}))
                .cwiseAbs()
                .maxCoeff(),
            1e-7);
}

TEST(SdpSolve, SingletPptMixtureIsMinusHalf) {
  const auto rho = werner_pair(1.0, 2);
  const auto sol = sdp_solve(ppt_mixture_problem(rho));
  EXPECT_NEAR(sol.primal_objective, -0.5, 1e-7);
  expect_contract(sol);
}

TEST(SdpSolve, Deterministic) {
  auto gen = oracle::rng(44);
  SdpProblem p;
  p.variables.push_back({qubits(3), true, oracle::random_hermitian(8, gen)});
  const auto a = sdp_solve(p);
  const auto b = sdp_solve(p);
  EXPECT_EQ(a.primal_objective, b.primal_objective);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.variables[0], b.variables[0]);
}

TEST(SdpSolve, ValidationErrors) {
  SdpProblem empty;
  EXPECT_THROW(sdp_solve(empty), std::invalid_argument);

  SdpProblem bad_obj;
  bad_obj.variables.push_back({qubits(1), true, ComplexMatrix::Identity(3, 3)});
  EXPECT_THROW(sdp_solve(bad_obj), std::invalid_argument);

  SdpProblem bad_ref;
  bad_ref.variables.push_back({qubits(1), true, {}});
  bad_ref.equalities.push_back({{{3, 1.0, {}}}, {}});
  EXPECT_THROW(sdp_solve(bad_ref), std::invalid_argument);

  SdpProblem bad_label;
  bad_label.variables.push_back({qubits(1), true, {}});
  bad_label.equalities.push_back({{{0, 1.0, {Party::C}}}, {}});
  EXPECT_THROW(sdp_solve(bad_label), std::invalid_argument);

  SdpProblem mixed_dims;
  mixed_dims.variables.push_back({qubits(1), true, {}});
  mixed_dims.variables.push_back({qubits(2), true, {}});
  mixed_dims.equalities.push_back({{{0, 1.0, {}}, {1, 1.0, {}}}, {}});
  EXPECT_THROW(sdp_solve(mixed_dims), std::invalid_argument);
}

TEST(SdpSolve, IterationCapRaisesNonConvergence) {
  SdpOptions opts;
  opts.max_iterations = 2;
  const auto rho = werner_pair(0.9, 2);
  try {
    sdp_solve(ppt_mixture_problem(rho), opts);
    FAIL() << "expected SdpNonConvergence";
  } catch (const SdpNonConvergence& e) {
    EXPECT_LE(e.best().iterations, 2);
    EXPECT_FALSE(e.best().variables.empty());
  }
  // It is a NumericalError as well.
  EXPECT_THROW(sdp_solve(ppt_mixture_problem(rho), opts), NumericalError);
}
