#include "trijc/tensorlab.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "trijc/tolerances.hpp"

namespace trijc {

namespace {

constexpr char kPartyChars[] = {'A', 'B', 'C', 'X', 'Y', 'Z'};

// Row-major digit strides for the factors of `shape`.
std::vector<int> strides_of(const Shape& shape) {
  const auto& f = shape.factors();
  std::vector<int> strides(f.size(), 1);
  for (std::size_t k = f.size(); k-- > 1;) strides[k - 1] = strides[k] * f[k].dim;
  return strides;
}

std::vector<std::size_t> positions_of(const Shape& shape, const PartyList& labels,
                                      const char* what) {
  std::vector<std::size_t> pos;
  pos.reserve(labels.size());
  for (Party p : labels) {
    auto k = shape.position(p);
    if (!k) {
      throw std::invalid_argument(std::string(what) + ": label " + to_char(p) +
                                  " not in shape " + to_string(shape.labels()));
    }
    if (std::find(pos.begin(), pos.end(), *k) != pos.end()) {
      throw std::invalid_argument(std::string(what) + ": duplicate label " + to_char(p));
    }
    pos.push_back(*k);
  }
  return pos;
}

void require_square(const ComplexMatrix& m, const Shape& shape, const char* what) {
  if (m.rows() != m.cols() || m.rows() != shape.dim()) {
    throw std::invalid_argument(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) + ", shape dimension is " +
                                std::to_string(shape.dim()));
  }
}

}  // namespace

char to_char(Party p) { return kPartyChars[static_cast<int>(p)]; }

std::optional<Party> party_from_char(char c) {
  for (int k = 0; k < 6; ++k) {
    if (kPartyChars[k] == c) return static_cast<Party>(k);
  }
  return std::nullopt;
}

std::string to_string(const PartyList& parties) {
  std::string s;
  for (Party p : parties) s.push_back(to_char(p));
  return s;
}

// ---------------------------------------------------------------- Shape

Shape::Shape(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].dim <= 0) {
      throw std::invalid_argument("Shape: non-positive dimension for factor " +
                                  std::string(1, to_char(factors_[i].label)));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (factors_[j].label == factors_[i].label) {
        throw std::invalid_argument("Shape: duplicate label " +
                                    std::string(1, to_char(factors_[i].label)));
      }
    }
    dim_ *= factors_[i].dim;
  }
}

Shape Shape::qubits(const PartyList& labels) {
  std::vector<Factor> f;
  f.reserve(labels.size());
  for (Party p : labels) f.push_back({p, 2});
  return Shape(std::move(f));
}

PartyList Shape::labels() const {
  PartyList out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

std::optional<std::size_t> Shape::position(Party p) const {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].label == p) return k;
  }
  return std::nullopt;
}

int Shape::dim_of(Party p) const {
  auto k = position(p);
  if (!k) throw std::invalid_argument(std::string("Shape: no factor ") + to_char(p));
  return factors_[*k].dim;
}

bool Shape::is_canonical() const {
  for (std::size_t k = 1; k < factors_.size(); ++k) {
    if (factors_[k - 1].label >= factors_[k].label) return false;
  }
  return true;
}

Shape Shape::restricted_to(const PartyList& keep) const {
  auto pos = positions_of(*this, keep, "restricted_to");
  std::sort(pos.begin(), pos.end());
  std::vector<Factor> f;
  f.reserve(pos.size());
  for (auto k : pos) f.push_back(factors_[k]);
  return Shape(std::move(f));
}

// --------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(Unchecked, ComplexMatrix matrix, Shape shape)
    : matrix_(std::move(matrix)), shape_(std::move(shape)) {
  if (!shape_.is_canonical()) {
    throw std::invalid_argument("DensityMatrix: shape " + to_string(shape_.labels()) +
                                " is not in canonical order");
  }
  require_square(matrix_, shape_, "DensityMatrix");
  const double tr_err = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (tr_err > tol::kTrace) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by " +
                                std::to_string(tr_err));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Shape shape)
    : DensityMatrix(Unchecked{}, std::move(matrix), std::move(shape)) {
  const double herm = hermiticity_error(matrix_);
  if (herm > tol::kHermitian) {
    throw std::invalid_argument("DensityMatrix: not Hermitian (error " +
                                std::to_string(herm) + ")");
  }
  const double neg = psd_distance(matrix_);
  if (neg > tol::kPsdSlack) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue of magnitude " +
                                std::to_string(neg));
  }
}

DensityMatrix DensityMatrix::from_positive_map(const ComplexMatrix& matrix, Shape shape) {
  ComplexMatrix herm = 0.5 * (matrix + matrix.adjoint());
  return DensityMatrix(Unchecked{}, std::move(herm), std::move(shape));
}

// ------------------------------------------------------------ operations

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Shape permuted_shape(const Shape& shape, const PartyList& perm) {
  if (perm.size() != shape.size()) {
    throw std::invalid_argument("permute_subsystems: permutation has " +
                                std::to_string(perm.size()) + " labels, shape has " +
                                std::to_string(shape.size()));
  }
  auto pos = positions_of(shape, perm, "permute_subsystems");
  std::vector<Factor> f;
  f.reserve(pos.size());
  for (auto k : pos) f.push_back(shape.factors()[k]);
  return Shape(std::move(f));
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const Shape& shape,
                                 const PartyList& perm) {
  require_square(m, shape, "permute_subsystems");
  const Shape target = permuted_shape(shape, perm);
  const auto src_pos = positions_of(shape, perm, "permute_subsystems");
  const auto src_strides = strides_of(shape);
  const auto dst_strides = strides_of(target);
  const int n = shape.dim();

  // Map each source basis index to its position in the permuted layout.
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int idx = 0; idx < n; ++idx) {
    int dst = 0;
    for (std::size_t k = 0; k < src_pos.size(); ++k) {
      const int digit = (idx / src_strides[src_pos[k]]) % shape.factors()[src_pos[k]].dim;
      dst += digit * dst_strides[k];
    }
    map[static_cast<std::size_t>(idx)] = dst;
  }

  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(map[i], map[j]) = m(i, j);
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const Shape& shape,
                            const PartyList& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep list");
  require_square(m, shape, "partial_trace");
  auto keep_pos = positions_of(shape, keep, "partial_trace");
  std::sort(keep_pos.begin(), keep_pos.end());
  const Shape kept = shape.restricted_to(keep);
  const auto strides = strides_of(shape);
  const auto kept_strides = strides_of(kept);
  const int n = shape.dim();
  const int n_kept = kept.dim();
  const int n_traced = n / n_kept;

  // Split each basis index into (kept index, traced index).
  std::vector<std::vector<std::pair<int, int>>> by_traced(static_cast<std::size_t>(n_traced));
  for (int idx = 0; idx < n; ++idx) {
    int k_idx = 0;
    int t_idx = 0;
    std::size_t kk = 0;
    for (std::size_t f = 0; f < shape.size(); ++f) {
      const int d = shape.factors()[f].dim;
      const int digit = (idx / strides[f]) % d;
      if (kk < keep_pos.size() && keep_pos[kk] == f) {
        k_idx += digit * kept_strides[kk];
        ++kk;
      } else {
        t_idx = t_idx * d + digit;
      }
    }
    by_traced[static_cast<std::size_t>(t_idx)].emplace_back(k_idx, idx);
  }

  ComplexMatrix out = ComplexMatrix::Zero(n_kept, n_kept);
  for (const auto& group : by_traced) {
    for (const auto& [ka, ga] : group) {
      for (const auto& [kb, gb] : group) out(ka, kb) += m(ga, gb);
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const PartyList& keep) {
  ComplexMatrix red = partial_trace(rho.matrix(), rho.shape(), keep);
  return DensityMatrix::from_positive_map(red, rho.shape().restricted_to(keep));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Shape& shape,
                                const PartyList& subset) {
  require_square(m, shape, "partial_transpose");
  const auto pos = positions_of(shape, subset, "partial_transpose");
  const auto strides = strides_of(shape);
  const int n = shape.dim();

  // Per basis index, the part carried by transposed factors.
  std::vector<int> sub(static_cast<std::size_t>(n), 0);
  for (int idx = 0; idx < n; ++idx) {
    int s = 0;
    for (auto k : pos) {
      const int digit = (idx / strides[k]) % shape.factors()[k].dim;
      s += digit * strides[k];
    }
    sub[static_cast<std::size_t>(idx)] = s;
  }

  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int si = sub[i];
      const int sj = sub[j];
      out(i - si + sj, j - sj + si) = m(i, j);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const PartyList& subset) {
  return partial_transpose(rho.matrix(), rho.shape(), subset);
}

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EigenDecomposition eigh(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigh: matrix is not square");
  const double scale = std::max(1.0, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
  const double herm = hermiticity_error(m);
  if (herm > tol::kHermitian * scale) {
    throw std::invalid_argument("eigh: matrix is not Hermitian (error " +
                                std::to_string(herm) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double psd_distance(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return std::max(0.0, -solver.eigenvalues()(0));
}

ComplexMatrix projector(const ComplexVector& psi) { return psi * psi.adjoint(); }

}  // namespace trijc
