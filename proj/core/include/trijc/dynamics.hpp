#pragma once

// Exact resonant Jaynes-Cummings evolution of the three atom-cavity pairs.

#include "trijc/tensorlab.hpp"

namespace trijc {

// Unitary of one atom-cavity pair, ordered (atom, cavity), index a*f + n.
//
// Matrix elements (n photons, atom ground 0 / excited 1):
//   <1,n|U|1,n>     = cos(gt sqrt(n+1))
//   <0,n|U|0,n>     = cos(gt sqrt(n))
//   <0,n+1|U|1,n>   = -i sin(gt sqrt(n+1))
//   <1,n-1|U|0,n>   = -i sin(gt sqrt(n))
// The state |1, f-1> couples to a photon level beyond the cutoff. It gets
// the identity and is excluded from the valid subspace.
struct PairUnitary {
  ComplexMatrix matrix;
  double gt = 0.0;
  int fock_dim = 0;

  // Index of the state |1, f-1> that the truncation cannot evolve.
  Eigen::Index unreachable_index() const { return 2 * fock_dim - 1; }
};

PairUnitary jc_unitary(double gt, int fock_dim);

// U_AX (x) U_BY (x) U_CZ laid out in canonical order (A,B,C,X,Y,Z).
ComplexMatrix global_unitary(double gt, int fock_dim);

// Interaction Hamiltonian sum_k (a_k^dag sigma_-^k + a_k sigma_+^k) in units
// of g, on the canonical six-party space.
ComplexMatrix interaction_hamiltonian(int fock_dim);

// Largest population of |1, f-1> over the three pairs.
double truncation_support(const DensityMatrix& rho);

// Throws TruncationError when rho touches the unreachable sector.
void require_valid_support(const DensityMatrix& rho);

// U rho U^dagger with U from the closed-form pair unitaries.
DensityMatrix evolve(const DensityMatrix& rho0, double gt);
DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& global_u);

// U rho U^dagger with U = exp(-i gt H) from the spectral decomposition of
// the interaction Hamiltonian. Shares no code with the closed form.
DensityMatrix oracle_evolve(const DensityMatrix& rho0, double gt);

// Partial trace onto `keep`, result in canonical order.
DensityMatrix reduce(const DensityMatrix& rho, const PartyList& keep);

// <a^dag a + |1><1|> for the pair (atom, cavity).
double pair_excitation(const DensityMatrix& rho, Party atom, Party cavity);

}  // namespace trijc
