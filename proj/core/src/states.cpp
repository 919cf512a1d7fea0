#include "trijc/states.hpp"

#include <stdexcept>
#include <string>

namespace trijc {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(v) +
                                " is outside [0, 1]");
  }
}

ComplexMatrix superposition_projector(double amp0, int dim) {
  ComplexVector psi = ComplexVector::Zero(dim);
  psi(0) = amp0;
  psi(1) = std::sqrt(std::max(0.0, 1.0 - amp0 * amp0));
  return projector(psi);
}

}  // namespace

void JCConfig::validate() const {
  require_unit_interval(alpha, "alpha");
  require_unit_interval(gamma, "gamma");
  require_unit_interval(beta, "beta");
  require_unit_interval(kappa, "kappa");
  // Per-pair excitation starts at <= 2, so three Fock levels are exact.
  if (fock_dim < 3) {
    throw std::invalid_argument("fock_dim = " + std::to_string(fock_dim) +
                                " must be at least 3");
  }
  if (!std::isfinite(gt)) throw std::invalid_argument("gt must be finite");
}

Shape six_party_shape(int fock_dim) {
  return Shape({{Party::A, 2},
                {Party::B, 2},
                {Party::C, 2},
                {Party::X, fock_dim},
                {Party::Y, fock_dim},
                {Party::Z, fock_dim}});
}

ComplexMatrix werner_pair_matrix(double p, int dim_per_party) {
  require_unit_interval(p, "werner weight");
  if (dim_per_party < 2) {
    throw std::invalid_argument("werner_pair: dim_per_party must be at least 2");
  }
  const int d = dim_per_party;
  // |psi-> = (|0,1> - |1,0>)/sqrt(2)
  ComplexVector singlet = ComplexVector::Zero(d * d);
  singlet(0 * d + 1) = kInvSqrt2;
  singlet(1 * d + 0) = -kInvSqrt2;

  ComplexMatrix m = p * projector(singlet);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) m(a * d + b, a * d + b) += (1.0 - p) / 4.0;
  }
  return m;
}

DensityMatrix werner_pair(double p, int dim_per_party, Party first, Party second) {
  return DensityMatrix(werner_pair_matrix(p, dim_per_party),
                       Shape({{first, dim_per_party}, {second, dim_per_party}}));
}

DensityMatrix werner_pair(double p, int dim_per_party) {
  return dim_per_party == 2 ? werner_pair(p, 2, Party::A, Party::B)
                            : werner_pair(p, dim_per_party, Party::Y, Party::Z);
}

DensityMatrix qubit_superposition(double b, Party label) {
  require_unit_interval(b, "beta");
  return DensityMatrix(superposition_projector(b, 2), Shape({{label, 2}}));
}

DensityMatrix cavity_superposition(double k, int fock_dim, Party label) {
  require_unit_interval(k, "kappa");
  if (fock_dim < 3) {
    throw std::invalid_argument("cavity_superposition: fock_dim must be at least 3");
  }
  return DensityMatrix(superposition_projector(k, fock_dim), Shape({{label, fock_dim}}));
}

DensityMatrix assemble_initial(const JCConfig& cfg) {
  cfg.validate();
  const int f = cfg.fock_dim;
  const ComplexMatrix atoms =
      kron(werner_pair(cfg.alpha, 2, Party::A, Party::B).matrix(),
           qubit_superposition(cfg.beta, Party::C).matrix());
  const ComplexMatrix cavities =
      kron(cavity_superposition(cfg.kappa, f, Party::X).matrix(),
           werner_pair(cfg.gamma, f, Party::Y, Party::Z).matrix());
  // Tensor product of valid states; positivity holds by construction.
  return DensityMatrix::from_positive_map(kron(atoms, cavities), six_party_shape(f));
}

}  // namespace trijc
