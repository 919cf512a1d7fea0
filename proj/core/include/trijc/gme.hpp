#pragma once

// Genuine multipartite entanglement via PPT mixtures.
//
// A state is a PPT mixture iff the optimum of
//
//   min Tr(W rho)  s.t.  W = P_M + Q_M^{T_M},  0 <= P_M <= 1,  0 <= Q_M <= 1
//
// over every bipartition M|M' is non-negative. A negative optimum certifies
// genuine multipartite entanglement and its magnitude (genuine negativity)
// is an entanglement monotone. For two parties it is the negativity.

#include <vector>

#include "trijc/sdp.hpp"
#include "trijc/tensorlab.hpp"

namespace trijc {

struct BipartitionWitness {
  PartyList side;  // M, the transposed side
  ComplexMatrix p;
  ComplexMatrix q;
};

struct WitnessReport {
  Shape shape;
  double value = 0.0;               // Tr(W rho)
  double genuine_negativity = 0.0;  // max(0, -value), floored to 0 below 1e-6
  ComplexMatrix witness;
  std::vector<BipartitionWitness> decompositions;
  double residual = 0.0;            // max constraint violation of the certificate
  double duality_gap = 0.0;
  int iterations = 0;
};

// Bipartitions M|M' of `parties` with M the smaller side. Ties keep the side
// holding the first party; three parties give A|BC, B|AC, C|AB.
std::vector<PartyList> bipartitions(const PartyList& parties);

// Builds the PPT-mixture SDP for `rho` (shape must be exactly `parties`).
sdp::SdpProblem ppt_mixture_problem(const DensityMatrix& rho);

// `rho` may carry more factors than `parties`; the others are traced out.
// Throws sdp::SdpNonConvergence when the solver misses its tolerances.
WitnessReport ppt_mixture_measure(const DensityMatrix& rho, const PartyList& parties,
                                  const sdp::SdpOptions& options = {});

// Re Tr(W rho).
double witness_expectation(const ComplexMatrix& witness, const DensityMatrix& rho);

// Recomputes all certificate constraints from scratch and returns the largest
// violation: |W - P_M - Q_M^{T_M}|, spectra of P_M and Q_M outside [0, 1],
// non-Hermiticity of W. Any witness with a small residual and negative
// expectation certifies genuine entanglement on its own.
double verify_witness(const WitnessReport& report, const DensityMatrix& rho);

}  // namespace trijc
