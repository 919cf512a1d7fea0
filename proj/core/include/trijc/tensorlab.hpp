#pragma once

// Dense complex linear algebra with explicit multipartite bookkeeping.
//
// Basis convention: lexicographic product basis, leftmost factor most
// significant. For three qubits |abc> sits at row 4a + 2b + c.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace trijc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Subsystem labels. Declaration order is the canonical global order.
enum class Party : std::uint8_t { A, B, C, X, Y, Z };

using PartyList = std::vector<Party>;

char to_char(Party p);
std::optional<Party> party_from_char(char c);
std::string to_string(const PartyList& parties);

struct Factor {
  Party label;
  int dim;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Ordered list of tensor factors. Labels are unique, dimensions positive.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<Factor> factors);

  static Shape qubits(const PartyList& labels);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  int dim() const { return dim_; }
  PartyList labels() const;

  bool contains(Party p) const { return position(p).has_value(); }
  std::optional<std::size_t> position(Party p) const;
  int dim_of(Party p) const;

  // True when labels appear in the canonical A..Z order.
  bool is_canonical() const;

  // Factors listed in `keep`, arranged in this shape's order.
  Shape restricted_to(const PartyList& keep) const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<Factor> factors_;
  int dim_ = 1;
};

// Hermitian, unit-trace, positive semidefinite matrix on a canonical shape.
class DensityMatrix {
 public:
  // Validates every invariant, including positivity (one eigensolve).
  DensityMatrix(ComplexMatrix matrix, Shape shape);

  // For results of positivity-preserving maps (unitary conjugation, partial
  // trace). Hermitian part is taken; trace and shape are still checked.
  static DensityMatrix from_positive_map(const ComplexMatrix& matrix, Shape shape);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Shape& shape() const { return shape_; }
  int dim() const { return shape_.dim(); }

  Complex operator()(Eigen::Index r, Eigen::Index c) const { return matrix_(r, c); }

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, ComplexMatrix matrix, Shape shape);

  ComplexMatrix matrix_;
  Shape shape_;
};

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reorders factors so the result is laid out in the order given by `perm`.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const Shape& shape,
                                 const PartyList& perm);

Shape permuted_shape(const Shape& shape, const PartyList& perm);

ComplexMatrix partial_trace(const ComplexMatrix& m, const Shape& shape,
                            const PartyList& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const PartyList& keep);

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Shape& shape,
                                const PartyList& subset);
ComplexMatrix partial_transpose(const DensityMatrix& rho, const PartyList& subset);

double hermiticity_error(const ComplexMatrix& m);

EigenDecomposition eigh(const ComplexMatrix& m);

// max(0, -lambda_min); zero iff the matrix is positive semidefinite.
double psd_distance(const ComplexMatrix& m);

// Spectral function of a Hermitian matrix: V f(Lambda) V^dagger.
template <typename F>
ComplexMatrix spectral_apply(const EigenDecomposition& eig, F&& f) {
  ComplexVector fv(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) fv(i) = f(eig.values(i));
  return eig.vectors * fv.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix projector(const ComplexVector& psi);

}  // namespace trijc
