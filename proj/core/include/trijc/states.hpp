#pragma once

// Initial states of the three atom-cavity pairs.
//
// Atoms A, B, C are qubits; cavities X, Y, Z are Fock modes truncated at
// `fock_dim` levels. Atom A pairs with X, B with Y, C with Z.

#include <cmath>

#include "trijc/tensorlab.hpp"

namespace trijc {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

struct JCConfig {
  double alpha = 0.95;  // Werner weight of atoms A, B
  double gamma = 0.95;  // Werner weight of cavities Y, Z
  double beta = kInvSqrt2;   // ground amplitude of atom C
  double kappa = kInvSqrt2;  // vacuum amplitude of cavity X
  int fock_dim = 3;
  double gt = 0.0;      // dimensionless coupling-time g*t

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Canonical six-party shape (A,B,C,X,Y,Z) with dims (2,2,2,f,f,f).
Shape six_party_shape(int fock_dim);

// p |psi-><psi-| + (1-p)/4 * 1 on the {0,1} levels of two parties of
// dimension `dim_per_party`; higher levels are zero-padded.
ComplexMatrix werner_pair_matrix(double p, int dim_per_party);
DensityMatrix werner_pair(double p, int dim_per_party, Party first, Party second);
DensityMatrix werner_pair(double p, int dim_per_party);

// |phi><phi| with phi = b|0> + sqrt(1 - b^2)|1>.
DensityMatrix qubit_superposition(double b, Party label = Party::C);

// Same superposition of vacuum and one photon, embedded in `fock_dim` levels.
DensityMatrix cavity_superposition(double k, int fock_dim, Party label = Party::X);

// rho_AB (x) rho_C (x) rho_X (x) rho_YZ in canonical order.
DensityMatrix assemble_initial(const JCConfig& cfg);

}  // namespace trijc
