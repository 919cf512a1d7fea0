#pragma once

// Closed-form entanglement detection on atomic states.
//
// Three-qubit matrix elements use 1-based names: rho_ij with |abc> at
// index 4a + 2b + c + 1, so rho18 = <000|rho|111> and rho25 = <001|rho|100>.

#include <array>
#include <string>
#include <utility>

#include "trijc/tensorlab.hpp"

namespace trijc {

// Sum of |negative eigenvalues| of the partial transpose over `first`.
// The two label sets must partition the shape.
double negativity(const DensityMatrix& rho, const PartyList& first, const PartyList& second);

// rho_ij under the 1-based three-qubit naming.
Complex element(const DensityMatrix& rho_abc, int i, int j);

struct TrackedElement {
  std::string name;  // "rho18", ...
  Complex value;
};

inline constexpr std::array<std::pair<int, int>, 10> kTrackedElements = {{
    {1, 8}, {2, 7}, {3, 6}, {4, 5},            // GHZ-type coherences
    {2, 3}, {2, 5}, {3, 5}, {4, 6}, {6, 7},    // W-type coherences
    {4, 7},
}};

struct Criterion {
  double lhs = 0.0;
  double rhs = 0.0;
  bool violated = false;

  double margin() const { return lhs - rhs; }
};

struct CriteriaReport {
  // |rho18| <= sqrt(rho22 rho77) + sqrt(rho33 rho66) + sqrt(rho44 rho55)
  Criterion ghz;
  // |rho27| <= sqrt(rho11 rho88) + sqrt(rho33 rho66) + sqrt(rho44 rho55)
  Criterion ghz27;
  // |rho23| + |rho25| + |rho35| <= sqrt(rho11 rho44) + sqrt(rho11 rho66)
  //                                + sqrt(rho11 rho77) + (rho22 + rho33 + rho55)/2
  Criterion w;
  // Same left side against the square-root terms only. Holds for fully
  // separable states.
  Criterion fullsep;
  std::array<TrackedElement, kTrackedElements.size()> tracked{};

  // A violation of any bi-separability inequality certifies genuine
  // tripartite entanglement.
  bool certifies_genuine_entanglement() const {
    return ghz.violated || ghz27.violated || w.violated;
  }
};

CriteriaReport biseparability_criteria(const DensityMatrix& rho_abc);

// Frobenius norm of the block <a,0,c|rho|a',1,c'>.
double b_block_coherence(const DensityMatrix& rho_abc);

// The two B-diagonal blocks rho_AC^(b) = <.,b,.|rho|.,b,.> (unnormalized).
std::array<ComplexMatrix, 2> b_diagonal_blocks(const DensityMatrix& rho_abc);

}  // namespace trijc
