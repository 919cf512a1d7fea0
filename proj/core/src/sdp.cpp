#include "trijc/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "trijc/tolerances.hpp"

namespace trijc::sdp {

RealMatrix embed(const ComplexMatrix& h) {
  const Eigen::Index d = h.rows();
  RealMatrix s(2 * d, 2 * d);
  s.topLeftCorner(d, d) = h.real();
  s.bottomRightCorner(d, d) = h.real();
  s.topRightCorner(d, d) = -h.imag();
  s.bottomLeftCorner(d, d) = h.imag();
  return s;
}

ComplexMatrix unembed(const RealMatrix& s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) {
    throw std::invalid_argument("unembed: expected a square matrix of even dimension");
  }
  const Eigen::Index d = s.rows() / 2;
  const RealMatrix re = 0.5 * (s.topLeftCorner(d, d) + s.bottomRightCorner(d, d));
  const RealMatrix im = 0.5 * (s.bottomLeftCorner(d, d) - s.topRightCorner(d, d));
  ComplexMatrix h(d, d);
  h.real() = re;
  h.imag() = im;
  return h;
}

// ------------------------------------------------------------ validation

void SdpProblem::validate() const {
  if (variables.empty()) throw std::invalid_argument("SdpProblem: no variables");
  for (std::size_t k = 0; k < variables.size(); ++k) {
    const auto& v = variables[k];
    const int d = v.shape.dim();
    if (v.objective.size() != 0 && (v.objective.rows() != d || v.objective.cols() != d)) {
      throw std::invalid_argument("SdpProblem: objective of variable " + std::to_string(k) +
                                  " has wrong dimension");
    }
    if (v.objective.size() != 0 && hermiticity_error(v.objective) > tol::kHermitian) {
      throw std::invalid_argument("SdpProblem: objective of variable " + std::to_string(k) +
                                  " is not Hermitian");
    }
  }
  for (std::size_t e = 0; e < equalities.size(); ++e) {
    const auto& eq = equalities[e];
    if (eq.terms.empty()) {
      throw std::invalid_argument("SdpProblem: equality " + std::to_string(e) + " has no terms");
    }
    int d = -1;
    for (const auto& t : eq.terms) {
      if (t.variable >= variables.size()) {
        throw std::invalid_argument("SdpProblem: equality " + std::to_string(e) +
                                    " references unknown variable");
      }
      const Shape& shape = variables[t.variable].shape;
      for (Party p : t.transposed) {
        if (!shape.contains(p)) {
          throw std::invalid_argument("SdpProblem: transposed label " + std::string(1, to_char(p)) +
                                      " not in variable shape");
        }
      }
      if (d >= 0 && shape.dim() != d) {
        throw std::invalid_argument("SdpProblem: equality " + std::to_string(e) +
                                    " mixes variable dimensions");
      }
      d = shape.dim();
    }
    if (eq.rhs.size() != 0 && (eq.rhs.rows() != d || eq.rhs.cols() != d ||
                               hermiticity_error(eq.rhs) > tol::kHermitian)) {
      throw std::invalid_argument("SdpProblem: equality " + std::to_string(e) +
                                  " right-hand side must be a Hermitian matrix of matching size");
    }
  }
}

// ----------------------------------------------------------- compilation

namespace {

// Orthonormal basis of d x d Hermitian matrices under Re Tr(A B).
std::vector<ComplexMatrix> hermitian_basis(int d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d * d));
  const double r = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < d; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(k, k) = 1.0;
    basis.push_back(std::move(e));
  }
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) {
      ComplexMatrix s = ComplexMatrix::Zero(d, d);
      s(k, l) = r;
      s(l, k) = r;
      basis.push_back(std::move(s));
      ComplexMatrix a = ComplexMatrix::Zero(d, d);
      a(k, l) = Complex(0.0, r);
      a(l, k) = Complex(0.0, -r);
      basis.push_back(std::move(a));
    }
  }
  return basis;
}

// Accumulates <embed(M), X_block> coefficients for one real constraint.
class ConstraintBuilder {
 public:
  void add(int block, const ComplexMatrix& m, double scale) {
    const RealMatrix s = embed(m);
    auto& acc = blocks_[block];
    for (Eigen::Index r = 0; r < s.rows(); ++r) {
      for (Eigen::Index c = 0; c < s.cols(); ++c) {
        if (s(r, c) != 0.0) acc[{static_cast<int>(r), static_cast<int>(c)}] += scale * s(r, c);
      }
    }
  }

  std::vector<BlockCoefficients> finish() const {
    std::vector<BlockCoefficients> out;
    for (const auto& [block, entries] : blocks_) {
      BlockCoefficients bc{block, {}};
      for (const auto& [rc, v] : entries) {
        if (v != 0.0) bc.entries.push_back({rc.first, rc.second, v});
      }
      if (!bc.entries.empty()) out.push_back(std::move(bc));
    }
    return out;
  }

 private:
  std::map<int, std::map<std::pair<int, int>, double>> blocks_;
};

}  // namespace

CompiledSdp compile(const SdpProblem& problem) {
  problem.validate();
  CompiledSdp out;
  RealSdp& real = out.real;
  std::vector<int> slack_block(problem.variables.size(), -1);

  for (std::size_t k = 0; k < problem.variables.size(); ++k) {
    const auto& v = problem.variables[k];
    const int n = 2 * v.shape.dim();
    out.variable_block.push_back(static_cast<int>(real.block_sizes.size()));
    real.block_sizes.push_back(n);
    // <embed(C), embed(V)> = 2 Re Tr(C V)
    real.objective.push_back(v.objective.size() ? RealMatrix(0.5 * embed(v.objective))
                                                : RealMatrix(RealMatrix::Zero(n, n)));
    if (v.boxed) {
      slack_block[k] = static_cast<int>(real.block_sizes.size());
      real.block_sizes.push_back(n);
      real.objective.push_back(RealMatrix::Zero(n, n));
    }
  }

  // V_k + S_k = 1, one real constraint per Hermitian basis element.
  for (std::size_t k = 0; k < problem.variables.size(); ++k) {
    if (slack_block[k] < 0) continue;
    for (const auto& e : hermitian_basis(problem.variables[k].shape.dim())) {
      ConstraintBuilder cb;
      cb.add(out.variable_block[k], e, 1.0);
      cb.add(slack_block[k], e, 1.0);
      real.constraints.push_back(cb.finish());
      real.rhs.push_back(2.0 * e.trace().real());
    }
  }

  // Re Tr(E V^T) = Re Tr(E^T V): partial transposes move onto the basis.
  for (const auto& eq : problem.equalities) {
    const int d = problem.variables[eq.terms.front().variable].shape.dim();
    for (const auto& e : hermitian_basis(d)) {
      ConstraintBuilder cb;
      for (const auto& t : eq.terms) {
        const auto& var = problem.variables[t.variable];
        const ComplexMatrix et =
            t.transposed.empty() ? e : partial_transpose(e, var.shape, t.transposed);
        cb.add(out.variable_block[t.variable], et, t.coeff);
      }
      real.constraints.push_back(cb.finish());
      real.rhs.push_back(eq.rhs.size() ? 2.0 * (e * eq.rhs).trace().real() : 0.0);
    }
  }
  return out;
}

// ------------------------------------------------------------ real solver

namespace {

using Blocks = std::vector<RealMatrix>;

struct BlockUse {
  int constraint;
  const std::vector<SparseEntry>* entries;
};

double inner(const Blocks& a, const Blocks& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k].array() * b[k].array()).sum();
  return s;
}

double max_abs(const Blocks& a) {
  double m = 0.0;
  for (const auto& blk : a) {
    if (blk.size()) m = std::max(m, blk.cwiseAbs().maxCoeff());
  }
  return m;
}

RealMatrix sym(const RealMatrix& m) { return 0.5 * (m + m.transpose()); }

class RealSolver {
 public:
  RealSolver(const RealSdp& p, const SdpOptions& o) : p_(p), opt_(o) {
    const std::size_t nb = p_.block_sizes.size();
    if (p_.objective.size() != nb) {
      throw std::invalid_argument("solve_real: objective block count mismatch");
    }
    if (p_.constraints.size() != p_.rhs.size()) {
      throw std::invalid_argument("solve_real: constraint and rhs counts differ");
    }
    uses_.resize(nb);
    for (std::size_t i = 0; i < p_.constraints.size(); ++i) {
      for (const auto& bc : p_.constraints[i]) {
        if (bc.block < 0 || static_cast<std::size_t>(bc.block) >= nb) {
          throw std::invalid_argument("solve_real: constraint references unknown block");
        }
        for (const auto& e : bc.entries) {
          const int n = p_.block_sizes[bc.block];
          if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n) {
            throw std::invalid_argument("solve_real: constraint entry out of range");
          }
        }
        uses_[bc.block].push_back({static_cast<int>(i), &bc.entries});
      }
    }
    for (std::size_t b = 0; b < nb; ++b) n_total_ += p_.block_sizes[b];
    b_ = Eigen::Map<const Eigen::VectorXd>(p_.rhs.data(), static_cast<Eigen::Index>(p_.rhs.size()));
  }

  RealSolution run() {
    init();
    RealSolution best;
    double best_merit = std::numeric_limits<double>::infinity();
    int stalled = 0;

    for (int it = 0;; ++it) {
      const Eigen::VectorXd rp = b_ - apply_a(x_);
      const Blocks rd = dual_residual();
      const double pobj = inner(p_.objective, x_);
      const double dobj = b_.dot(y_);
      const double gap = std::max(std::abs(pobj - dobj), std::max(0.0, inner(x_, z_)));
      const double pres = rp.size() ? rp.cwiseAbs().maxCoeff() : 0.0;
      const double dres = max_abs(rd);

      const double merit = std::max({gap / tol::kSdpGap, pres / tol::kSdpFeasibility,
                                     dres / tol::kSdpFeasibility});
      if (merit < best_merit) {
        best_merit = merit;
        best = snapshot(pobj, dobj, pres, dres, it);
      }
      if (gap <= opt_.gap_tolerance && pres <= opt_.feasibility_tolerance &&
          dres <= opt_.feasibility_tolerance) {
        break;
      }
      if (it >= opt_.max_iterations || stalled >= 5) break;

      const double mu = inner(x_, z_) / n_total_;
      if (!step(rp, rd, mu)) break;
      stalled = (last_alpha_ < 1e-8) ? stalled + 1 : 0;
    }

    best.converged = best_merit <= 1.0;
    return best;
  }

 private:
  void init() {
    const std::size_t nb = p_.block_sizes.size();
    x_.resize(nb);
    z_.resize(nb);
    std::vector<double> norm_a(nb, 0.0);
    std::vector<double> ratio(nb, 0.0);
    for (std::size_t b = 0; b < nb; ++b) {
      for (const auto& u : uses_[b]) {
        double s = 0.0;
        for (const auto& e : *u.entries) s += e.value * e.value;
        s = std::sqrt(s);
        norm_a[b] = std::max(norm_a[b], s);
        ratio[b] = std::max(ratio[b], (1.0 + std::abs(b_(u.constraint))) / (1.0 + s));
      }
    }
    for (std::size_t b = 0; b < nb; ++b) {
      const int n = p_.block_sizes[b];
      const double sn = std::sqrt(static_cast<double>(n));
      const double xi = std::max({10.0, sn, n * ratio[b]});
      const double eta = std::max({10.0, sn, norm_a[b], p_.objective[b].norm()});
      x_[b] = xi * RealMatrix::Identity(n, n);
      z_[b] = eta * RealMatrix::Identity(n, n);
    }
    y_ = Eigen::VectorXd::Zero(b_.size());
  }

  Eigen::VectorXd apply_a(const Blocks& x) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(b_.size());
    for (std::size_t b = 0; b < uses_.size(); ++b) {
      for (const auto& u : uses_[b]) {
        double s = 0.0;
        for (const auto& e : *u.entries) s += e.value * x[b](e.row, e.col);
        out(u.constraint) += s;
      }
    }
    return out;
  }

  Blocks apply_at(const Eigen::VectorXd& y) const {
    Blocks out(p_.block_sizes.size());
    for (std::size_t b = 0; b < out.size(); ++b) {
      out[b] = RealMatrix::Zero(p_.block_sizes[b], p_.block_sizes[b]);
      for (const auto& u : uses_[b]) {
        const double yi = y(u.constraint);
        for (const auto& e : *u.entries) out[b](e.row, e.col) += yi * e.value;
      }
    }
    return out;
  }

  Blocks dual_residual() const {
    Blocks at = apply_at(y_);
    for (std::size_t b = 0; b < at.size(); ++b) at[b] = p_.objective[b] - at[b] - z_[b];
    return at;
  }

  // Largest t with m + t*d >= 0 (infinity when d does not reduce m).
  static double max_step(const RealMatrix& m, const RealMatrix& d) {
    Eigen::LLT<RealMatrix> llt(m);
    if (llt.info() != Eigen::Success) return 0.0;
    RealMatrix w = llt.matrixL().solve(d);
    RealMatrix t = llt.matrixL().solve(w.transpose());
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(sym(t), Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    return lmin >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lmin;
  }

  RealSolution snapshot(double pobj, double dobj, double pres, double dres, int it) const {
    RealSolution s;
    s.x = x_;
    s.z = z_;
    s.y = y_;
    s.primal_objective = pobj;
    s.dual_objective = dobj;
    s.primal_residual = pres;
    s.dual_residual = dres;
    s.iterations = it;
    return s;
  }

  // HKM Schur complement M_ij = <A_i, X A_j Z^-1>.
  Eigen::MatrixXd schur(const Blocks& zinv) const {
    const Eigen::Index m = b_.size();
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t b = 0; b < uses_.size(); ++b) {
      const int n = p_.block_sizes[b];
      RealMatrix g(n, n);
      for (const auto& uj : uses_[b]) {
        g.setZero();
        for (const auto& e : *uj.entries) {
          g.noalias() += e.value * x_[b].col(e.row) * zinv[b].row(e.col);
        }
        for (const auto& ui : uses_[b]) {
          double s = 0.0;
          for (const auto& e : *ui.entries) s += e.value * g(e.row, e.col);
          mat(ui.constraint, uj.constraint) += s;
        }
      }
    }
    return 0.5 * (mat + mat.transpose());
  }

  // One predictor-corrector iteration. Returns false on breakdown.
  bool step(const Eigen::VectorXd& rp, const Blocks& rd, double mu) {
    const std::size_t nb = x_.size();
    Blocks zinv(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      Eigen::LLT<RealMatrix> llt(z_[b]);
      if (llt.info() != Eigen::Success) return false;
      zinv[b] = sym(llt.solve(RealMatrix::Identity(z_[b].rows(), z_[b].cols())));
    }

    Eigen::MatrixXd mat = schur(zinv);
    Eigen::LLT<Eigen::MatrixXd> chol(mat);
    if (chol.info() != Eigen::Success) {
      const double reg = 1e-13 * std::max(1.0, mat.diagonal().cwiseAbs().maxCoeff());
      mat.diagonal().array() += reg;
      chol.compute(mat);
      if (chol.info() != Eigen::Success) return false;
    }

    // X Rd Z^-1 is shared by both solves.
    Blocks x_rd_zinv(nb);
    for (std::size_t b = 0; b < nb; ++b) x_rd_zinv[b] = x_[b] * rd[b] * zinv[b];
    const Eigen::VectorXd a_xrz = apply_a(x_rd_zinv);

    auto solve_direction = [&](const Blocks& rc, Blocks& dx, Eigen::VectorXd& dy, Blocks& dz) {
      dy = chol.solve(rp - apply_a(rc) + a_xrz);
      dz = apply_at(dy);
      dx.resize(nb);
      for (std::size_t b = 0; b < nb; ++b) {
        dz[b] = rd[b] - dz[b];
        dx[b] = sym(rc[b] - x_[b] * dz[b] * zinv[b]);
      }
    };
    auto step_lengths = [&](const Blocks& dx, const Blocks& dz, double frac) {
      double ap = std::numeric_limits<double>::infinity();
      double ad = std::numeric_limits<double>::infinity();
      for (std::size_t b = 0; b < nb; ++b) {
        ap = std::min(ap, max_step(x_[b], dx[b]));
        ad = std::min(ad, max_step(z_[b], dz[b]));
      }
      return std::pair{std::min(1.0, frac * ap), std::min(1.0, frac * ad)};
    };

    // Predictor (affine scaling).
    Blocks rc(nb);
    for (std::size_t b = 0; b < nb; ++b) rc[b] = -x_[b];
    Blocks dx_a, dz_a;
    Eigen::VectorXd dy_a;
    solve_direction(rc, dx_a, dy_a, dz_a);
    const auto [ap_a, ad_a] = step_lengths(dx_a, dz_a, 1.0);

    double mu_aff = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      mu_aff += ((x_[b] + ap_a * dx_a[b]).array() * (z_[b] + ad_a * dz_a[b]).array()).sum();
    }
    mu_aff /= n_total_;
    const double ratio = std::clamp(mu_aff / mu, 0.0, 1.0);
    const double sigma = ratio * ratio * ratio;

    // Corrector with second-order term.
    for (std::size_t b = 0; b < nb; ++b) {
      rc[b] = sigma * mu * zinv[b] - x_[b] - dx_a[b] * dz_a[b] * zinv[b];
    }
    Blocks dx, dz;
    Eigen::VectorXd dy;
    solve_direction(rc, dx, dy, dz);
    const auto [ap, ad] = step_lengths(dx, dz, opt_.step_fraction);

    for (std::size_t b = 0; b < nb; ++b) {
      x_[b] = sym(x_[b] + ap * dx[b]);
      z_[b] = sym(z_[b] + ad * dz[b]);
    }
    y_ += ad * dy;
    last_alpha_ = std::min(ap, ad);
    return true;
  }

  const RealSdp& p_;
  SdpOptions opt_;
  std::vector<std::vector<BlockUse>> uses_;
  Eigen::VectorXd b_;
  double n_total_ = 0.0;
  Blocks x_, z_;
  Eigen::VectorXd y_;
  double last_alpha_ = 1.0;
};

}  // namespace

RealSolution solve_real(const RealSdp& problem, const SdpOptions& options) {
  return RealSolver(problem, options).run();
}

SdpSolution sdp_solve(const SdpProblem& problem, const SdpOptions& options) {
  const CompiledSdp compiled = compile(problem);
  const RealSolution real = solve_real(compiled.real, options);

  SdpSolution sol;
  for (int block : compiled.variable_block) sol.variables.push_back(unembed(real.x[block]));
  sol.primal_objective = real.primal_objective;
  sol.dual_objective = real.dual_objective;
  sol.duality_gap = std::abs(real.primal_objective - real.dual_objective);
  sol.primal_residual = real.primal_residual;
  sol.dual_residual = real.dual_residual;
  sol.iterations = real.iterations;

  if (!real.converged) {
    throw SdpNonConvergence(
        "sdp_solve: no convergence after " + std::to_string(real.iterations) +
            " iterations (gap " + std::to_string(sol.duality_gap) + ", primal residual " +
            std::to_string(sol.primal_residual) + ", dual residual " +
            std::to_string(sol.dual_residual) + ")",
        sol);
  }
  return sol;
}

}  // namespace trijc::sdp
