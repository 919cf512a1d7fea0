#include "trijc/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trijc/tolerances.hpp"

namespace trijc {

namespace {

void require_three_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 8 || rho.shape().size() != 3) {
    throw std::invalid_argument(std::string(what) + ": expected a three-qubit state, got shape " +
                                to_string(rho.shape().labels()) + " of dimension " +
                                std::to_string(rho.dim()));
  }
  for (const auto& f : rho.shape().factors()) {
    if (f.dim != 2) throw std::invalid_argument(std::string(what) + ": factors must be qubits");
  }
}

Criterion make_criterion(double lhs, double rhs) {
  return {lhs, rhs, lhs > rhs + tol::kCriterionViolation};
}

}  // namespace

double negativity(const DensityMatrix& rho, const PartyList& first, const PartyList& second) {
  PartyList all = first;
  all.insert(all.end(), second.begin(), second.end());
  PartyList sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (first.empty() || second.empty() ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted != rho.shape().labels()) {
    throw std::invalid_argument("negativity: " + to_string(first) + "|" + to_string(second) +
                                " is not a bipartition of " + to_string(rho.shape().labels()));
  }
  const ComplexMatrix pt = partial_transpose(rho, first);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(pt, Eigen::EigenvaluesOnly);
  double neg = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    neg += std::max(0.0, -solver.eigenvalues()(i));
  }
  return neg;
}

Complex element(const DensityMatrix& rho_abc, int i, int j) {
  if (i < 1 || i > rho_abc.dim() || j < 1 || j > rho_abc.dim()) {
    throw std::invalid_argument("element: index out of range");
  }
  return rho_abc(i - 1, j - 1);
}

CriteriaReport biseparability_criteria(const DensityMatrix& rho_abc) {
  require_three_qubits(rho_abc, "biseparability_criteria");
  auto r = [&](int i, int j) { return element(rho_abc, i, j); };
  auto d = [&](int i) { return std::max(0.0, r(i, i).real()); };
  auto sq = [&](int i, int j) { return std::sqrt(d(i) * d(j)); };

  CriteriaReport rep;
  rep.ghz = make_criterion(std::abs(r(1, 8)), sq(2, 7) + sq(3, 6) + sq(4, 5));
  rep.ghz27 = make_criterion(std::abs(r(2, 7)), sq(1, 8) + sq(3, 6) + sq(4, 5));

  const double w_lhs = std::abs(r(2, 3)) + std::abs(r(2, 5)) + std::abs(r(3, 5));
  const double roots = sq(1, 4) + sq(1, 6) + sq(1, 7);
  rep.w = make_criterion(w_lhs, roots + 0.5 * (d(2) + d(3) + d(5)));
  rep.fullsep = make_criterion(w_lhs, roots);

  for (std::size_t k = 0; k < kTrackedElements.size(); ++k) {
    const auto [i, j] = kTrackedElements[k];
    rep.tracked[k] = {"rho" + std::to_string(i) + std::to_string(j), r(i, j)};
  }
  return rep;
}

double b_block_coherence(const DensityMatrix& rho_abc) {
  require_three_qubits(rho_abc, "b_block_coherence");
  double sum = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int c2 = 0; c2 < 2; ++c2) {
          sum += std::norm(rho_abc(4 * a + c, 4 * a2 + 2 + c2));
        }
      }
    }
  }
  return std::sqrt(sum);
}

std::array<ComplexMatrix, 2> b_diagonal_blocks(const DensityMatrix& rho_abc) {
  require_three_qubits(rho_abc, "b_diagonal_blocks");
  std::array<ComplexMatrix, 2> blocks;
  for (int b = 0; b < 2; ++b) {
    blocks[b] = ComplexMatrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a) {
      for (int c = 0; c < 2; ++c) {
        for (int a2 = 0; a2 < 2; ++a2) {
          for (int c2 = 0; c2 < 2; ++c2) {
            blocks[b](2 * a + c, 2 * a2 + c2) = rho_abc(4 * a + 2 * b + c, 4 * a2 + 2 * b + c2);
          }
        }
      }
    }
  }
  return blocks;
}

}  // namespace trijc
