#include "trijc/gme.hpp"

#include <algorithm>
#include <stdexcept>

#include "trijc/tolerances.hpp"

namespace trijc {

std::vector<PartyList> bipartitions(const PartyList& parties) {
  const std::size_t n = parties.size();
  if (n < 2 || n > 16) throw std::invalid_argument("bipartitions: need 2 to 16 parties");
  std::vector<PartyList> out;
  const unsigned full = (1u << n) - 1u;
  for (unsigned mask = 1; mask < full; ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (2 * size > n) continue;
    if (2 * size == n && !(mask & 1u)) continue;
    PartyList side;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1u << k)) side.push_back(parties[k]);
    }
    out.push_back(std::move(side));
  }
  // Singletons in party order first, then larger sides.
  std::stable_sort(out.begin(), out.end(),
                   [](const PartyList& a, const PartyList& b) { return a.size() < b.size(); });
  return out;
}

sdp::SdpProblem ppt_mixture_problem(const DensityMatrix& rho) {
  const Shape& shape = rho.shape();
  const auto cuts = bipartitions(shape.labels());
  sdp::SdpProblem problem;
  // Variables 2m and 2m+1 are P_M and Q_M. The objective reads W through the
  // first bipartition: Tr(rho P) + Tr(rho^{T_M} Q).
  for (std::size_t m = 0; m < cuts.size(); ++m) {
    sdp::Variable p{shape, true, {}};
    sdp::Variable q{shape, true, {}};
    if (m == 0) {
      p.objective = rho.matrix();
      q.objective = partial_transpose(rho, cuts[0]);
    }
    problem.variables.push_back(std::move(p));
    problem.variables.push_back(std::move(q));
  }
  for (std::size_t m = 1; m < cuts.size(); ++m) {
    sdp::Equality eq;
    eq.terms = {{0, 1.0, {}},
                {1, 1.0, cuts[0]},
                {2 * m, -1.0, {}},
                {2 * m + 1, -1.0, cuts[m]}};
    problem.equalities.push_back(std::move(eq));
  }
  return problem;
}

WitnessReport ppt_mixture_measure(const DensityMatrix& rho_in, const PartyList& parties,
                                  const sdp::SdpOptions& options) {
  PartyList sorted = parties;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("ppt_mixture_measure: duplicate parties");
  }
  const DensityMatrix rho =
      sorted == rho_in.shape().labels() ? rho_in : partial_trace(rho_in, sorted);

  const auto cuts = bipartitions(rho.shape().labels());
  const sdp::SdpSolution sol = sdp::sdp_solve(ppt_mixture_problem(rho), options);

  WitnessReport report;
  report.shape = rho.shape();
  report.duality_gap = sol.duality_gap;
  report.iterations = sol.iterations;
  for (std::size_t m = 0; m < cuts.size(); ++m) {
    report.decompositions.push_back(
        {cuts[m], sol.variables[2 * m], sol.variables[2 * m + 1]});
  }
  const auto& first = report.decompositions.front();
  ComplexMatrix w = first.p + partial_transpose(first.q, rho.shape(), first.side);
  report.witness = 0.5 * (w + w.adjoint());
  report.value = witness_expectation(report.witness, rho);
  const double gn = std::max(0.0, -report.value);
  report.genuine_negativity = gn < tol::kGenuineNegativityFloor ? 0.0 : gn;
  report.residual = verify_witness(report, rho);
  return report;
}

double witness_expectation(const ComplexMatrix& witness, const DensityMatrix& rho) {
  if (witness.rows() != rho.dim() || witness.cols() != rho.dim()) {
    throw std::invalid_argument("witness_expectation: dimension mismatch");
  }
  // Re sum_ij W_ij rho_ji
  return (witness.array() * rho.matrix().transpose().array()).sum().real();
}

double verify_witness(const WitnessReport& report, const DensityMatrix& rho) {
  if (!(report.shape == rho.shape())) {
    throw std::invalid_argument("verify_witness: report shape " +
                                to_string(report.shape.labels()) + " does not match state " +
                                to_string(rho.shape().labels()));
  }
  const int d = rho.dim();
  if (report.witness.rows() != d || report.witness.cols() != d) {
    throw std::invalid_argument("verify_witness: witness has wrong dimension");
  }
  if (report.decompositions.size() != bipartitions(rho.shape().labels()).size()) {
    throw std::invalid_argument("verify_witness: expected one decomposition per bipartition");
  }

  auto box_violation = [](const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()),
                                                     Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::max({0.0, -ev(0), ev(ev.size() - 1) - 1.0, hermiticity_error(m)});
  };

  double worst = hermiticity_error(report.witness);
  for (const auto& dec : report.decompositions) {
    if (dec.p.rows() != d || dec.q.rows() != d) {
      throw std::invalid_argument("verify_witness: decomposition has wrong dimension");
    }
    const ComplexMatrix recon = dec.p + partial_transpose(dec.q, rho.shape(), dec.side);
    worst = std::max(worst, (report.witness - recon).cwiseAbs().maxCoeff());
    worst = std::max({worst, box_violation(dec.p), box_violation(dec.q)});
  }
  return worst;
}

}  // namespace trijc
