#include "trijc/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trijc/errors.hpp"
#include "trijc/states.hpp"
#include "trijc/tolerances.hpp"

namespace trijc {

namespace {

constexpr Party kAtoms[] = {Party::A, Party::B, Party::C};
constexpr Party kCavities[] = {Party::X, Party::Y, Party::Z};

void require_six_party(const DensityMatrix& rho, const char* what) {
  const auto& f = rho.shape().factors();
  if (f.size() != 6 || !(rho.shape() == six_party_shape(f[3].dim))) {
    throw std::invalid_argument(std::string(what) + ": expected shape ABCXYZ, got " +
                                to_string(rho.shape().labels()));
  }
}

ComplexMatrix annihilation(int fock_dim) {
  ComplexMatrix a = ComplexMatrix::Zero(fock_dim, fock_dim);
  for (int n = 1; n < fock_dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

// Operator on (A,X,B,Y,C,Z) laid out canonically.
ComplexMatrix pair_order_to_canonical(const ComplexMatrix& m, int fock_dim) {
  const Shape pair_order({{Party::A, 2},
                          {Party::X, fock_dim},
                          {Party::B, 2},
                          {Party::Y, fock_dim},
                          {Party::C, 2},
                          {Party::Z, fock_dim}});
  return permute_subsystems(m, pair_order,
                            {Party::A, Party::B, Party::C, Party::X, Party::Y, Party::Z});
}

}  // namespace

PairUnitary jc_unitary(double gt, int fock_dim) {
  if (fock_dim < 2) throw std::invalid_argument("jc_unitary: fock_dim must be at least 2");
  const int f = fock_dim;
  ComplexMatrix u = ComplexMatrix::Zero(2 * f, 2 * f);
  const Complex minus_i(0.0, -1.0);
  auto idx = [f](int atom, int n) { return atom * f + n; };

  u(idx(0, 0), idx(0, 0)) = 1.0;
  // Sector N = n + 1 spans {|1,n>, |0,n+1>}.
  for (int n = 0; n + 1 < f; ++n) {
    const double w = gt * std::sqrt(static_cast<double>(n + 1));
    u(idx(1, n), idx(1, n)) = std::cos(w);
    u(idx(0, n + 1), idx(0, n + 1)) = std::cos(w);
    u(idx(0, n + 1), idx(1, n)) = minus_i * std::sin(w);
    u(idx(1, n), idx(0, n + 1)) = minus_i * std::sin(w);
  }
  u(idx(1, f - 1), idx(1, f - 1)) = 1.0;
  return {std::move(u), gt, f};
}

ComplexMatrix global_unitary(double gt, int fock_dim) {
  const ComplexMatrix& u = jc_unitary(gt, fock_dim).matrix;
  return pair_order_to_canonical(kron(kron(u, u), u), fock_dim);
}

ComplexMatrix interaction_hamiltonian(int fock_dim) {
  const int f = fock_dim;
  const ComplexMatrix a = annihilation(f);
  ComplexMatrix sigma_minus = ComplexMatrix::Zero(2, 2);
  sigma_minus(0, 1) = 1.0;  // |0><1|
  const ComplexMatrix sigma_plus = sigma_minus.adjoint();
  // a^dag sigma_- + a sigma_+ on (atom, cavity).
  const ComplexMatrix h_pair = kron(sigma_minus, a.adjoint()) + kron(sigma_plus, a);

  const ComplexMatrix id_pair = ComplexMatrix::Identity(2 * f, 2 * f);
  const ComplexMatrix h = kron(kron(h_pair, id_pair), id_pair) +
                          kron(kron(id_pair, h_pair), id_pair) +
                          kron(kron(id_pair, id_pair), h_pair);
  return pair_order_to_canonical(h, f);
}

double truncation_support(const DensityMatrix& rho) {
  require_six_party(rho, "truncation_support");
  const int f = rho.shape().factors()[3].dim;
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    const ComplexMatrix pair = partial_trace(rho.matrix(), rho.shape(), {kAtoms[k], kCavities[k]});
    // Canonical order puts the atom first: |1, f-1> sits at 2f - 1.
    worst = std::max(worst, pair(2 * f - 1, 2 * f - 1).real());
  }
  return worst;
}

void require_valid_support(const DensityMatrix& rho) {
  const double s = truncation_support(rho);
  if (s > tol::kTruncationSupport) {
    throw TruncationError("state has population " + std::to_string(s) +
                          " on |1, f-1>, beyond the exact truncation; raise fock_dim");
  }
}

DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& global_u) {
  require_six_party(rho0, "evolve");
  if (global_u.rows() != rho0.dim() || global_u.cols() != rho0.dim()) {
    throw std::invalid_argument("evolve: unitary dimension does not match state");
  }
  require_valid_support(rho0);
  ComplexMatrix tmp = global_u * rho0.matrix();
  ComplexMatrix out = tmp * global_u.adjoint();
  return DensityMatrix::from_positive_map(out, rho0.shape());
}

DensityMatrix evolve(const DensityMatrix& rho0, double gt) {
  require_six_party(rho0, "evolve");
  return evolve(rho0, global_unitary(gt, rho0.shape().factors()[3].dim));
}

DensityMatrix oracle_evolve(const DensityMatrix& rho0, double gt) {
  require_six_party(rho0, "oracle_evolve");
  require_valid_support(rho0);
  const int f = rho0.shape().factors()[3].dim;
  const EigenDecomposition eig = eigh(interaction_hamiltonian(f));
  const ComplexMatrix u =
      spectral_apply(eig, [gt](double e) { return std::exp(Complex(0.0, -gt * e)); });
  ComplexMatrix out = u * rho0.matrix() * u.adjoint();
  return DensityMatrix::from_positive_map(out, rho0.shape());
}

DensityMatrix reduce(const DensityMatrix& rho, const PartyList& keep) {
  return partial_trace(rho, keep);
}

double pair_excitation(const DensityMatrix& rho, Party atom, Party cavity) {
  const ComplexMatrix pair = partial_trace(rho.matrix(), rho.shape(), {atom, cavity});
  const int f = rho.shape().dim_of(cavity);
  double n = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int k = 0; k < f; ++k) n += (a + k) * pair(a * f + k, a * f + k).real();
  }
  return n;
}

}  // namespace trijc
