#include "shilov/lie.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <optional>

namespace shilov {

namespace {

RVec vec_real(const CMat& x) {
  const int n2 = static_cast<int>(x.size());
  RVec r(2 * n2);
  int pos = 0;
  for (int j = 0; j < x.cols(); ++j)
    for (int i = 0; i < x.rows(); ++i) r(pos++) = x(i, j).real();
  for (int j = 0; j < x.cols(); ++j)
    for (int i = 0; i < x.rows(); ++i) r(pos++) = x(i, j).imag();
  return r;
}

}  // namespace

Subspace Subspace::span(int ambient, const RMat& vectors, double tol) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.cols() == 0) {
    s.basis_ = RMat::Zero(ambient, 0);
    return s;
  }
  if (vectors.rows() != ambient)
    throw DimensionError("subspace vectors have the wrong ambient dimension");
  Eigen::JacobiSVD<RMat> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * rel_scale(sv(0))) ++r;
  s.basis_ = svd.matrixU().leftCols(r);
  return s;
}

Subspace Subspace::zero(int ambient) {
  return span(ambient, RMat::Zero(ambient, 0));
}

double Subspace::distance(const RVec& v) const {
  return (v - basis_ * (basis_.transpose() * v)).norm();
}

bool Subspace::contains(const RVec& v, double tol) const {
  return distance(v) <= tol * rel_scale(v.norm());
}

double Subspace::containment_residual(const Subspace& other) const {
  double worst = 0.0;
  for (int j = 0; j < other.dim(); ++j)
    worst = std::max(worst, distance(other.basis_.col(j)));
  return worst;
}

Subspace Subspace::sum(const Subspace& other, double tol) const {
  RMat joint(ambient_, dim() + other.dim());
  joint << basis_, other.basis_;
  return span(ambient_, joint, tol);
}

MatrixLieAlgebra MatrixLieAlgebra::from_basis(int ambient_size,
                                              std::vector<CMat> basis) {
  MatrixLieAlgebra g;
  g.n_ = ambient_size;
  g.basis_ = std::move(basis);
  const int dim = g.dim();
  if (dim == 0) throw DimensionError("Lie algebra needs a nonempty basis");
  g.coord_matrix_.resize(2 * ambient_size * ambient_size, dim);
  for (int i = 0; i < dim; ++i) {
    if (g.basis_[i].rows() != ambient_size || g.basis_[i].cols() != ambient_size)
      throw DimensionError("basis matrices must be square of the ambient size");
    g.coord_matrix_.col(i) = vec_real(g.basis_[i]);
  }
  g.solver_ = Eigen::ColPivHouseholderQR<RMat>(g.coord_matrix_);
  if (g.solver_.rank() < dim)
    throw DomainError("basis matrices are linearly dependent over R");

  g.c_.assign(dim, std::vector<RVec>(dim));
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const CMat br = g.basis_[i] * g.basis_[j] - g.basis_[j] * g.basis_[i];
      double res = 0.0;
      g.c_[i][j] = g.coordinates(br, &res);
      worst = std::max(worst, res);
    }
  }
  g.closure_residual_ = worst;
  return g;
}

RVec MatrixLieAlgebra::coordinates(const CMat& x, double* residual) const {
  const RVec v = vec_real(x);
  const RVec c = solver_.solve(v);
  if (residual) *residual = (coord_matrix_ * c - v).norm();
  return c;
}

CMat MatrixLieAlgebra::matrix(const RVec& coords) const {
  CMat acc = CMat::Zero(n_, n_);
  for (int i = 0; i < dim(); ++i) acc += coords(i) * basis_[i];
  return acc;
}

RVec MatrixLieAlgebra::bracket_coords(const RVec& x, const RVec& y) const {
  RVec out = RVec::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y(j) == 0.0) continue;
      out += (x(i) * y(j)) * c_[i][j];
    }
  }
  return out;
}

CVec MatrixLieAlgebra::complexified_bracket(const CVec& x, const CVec& y) const {
  CVec out = CVec::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x(i) == cxd(0, 0)) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y(j) == cxd(0, 0)) continue;
      const cxd w = x(i) * y(j);
      for (int k = 0; k < dim(); ++k) out(k) += w * c_[i][j](k);
    }
  }
  return out;
}

double MatrixLieAlgebra::jacobi_residual() const {
  const int dim = this->dim();
  auto unit = [dim](int k) {
    RVec e = RVec::Zero(dim);
    e(k) = 1.0;
    return e;
  };
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        const RVec acc = bracket_coords(c_[i][j], unit(k)) +
                         bracket_coords(c_[j][k], unit(i)) +
                         bracket_coords(c_[k][i], unit(j));
        worst = std::max(worst, acc.norm());
      }
  return worst;
}

InvolutionData InvolutionData::from_map(
    const MatrixLieAlgebra& g, const std::function<CMat(const CMat&)>& tau,
    double tol) {
  const int dim = g.dim();
  RMat t(dim, dim);
  for (int i = 0; i < dim; ++i) {
    double res = 0.0;
    t.col(i) = g.coordinates(tau(g.basis(i)), &res);
    if (res > tol)
      throw DomainError("involution does not preserve the algebra (residual " +
                        std::to_string(res) + ")");
  }
  if ((t * t - RMat::Identity(dim, dim)).norm() > tol * dim)
    throw DomainError("map is not an involution");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      RVec ei = RVec::Zero(dim), ej = RVec::Zero(dim);
      ei(i) = 1.0;
      ej(j) = 1.0;
      const RVec lhs = t * g.bracket_coords(ei, ej);
      const RVec rhs = g.bracket_coords(t * ei, t * ej);
      if ((lhs - rhs).norm() > tol * 10)
        throw DomainError("involution does not respect brackets");
    }
  return {t};
}

namespace {

Subspace eigen_space(const RMat& t, double eigenvalue) {
  const int dim = t.rows();
  const RMat shifted = t - eigenvalue * RMat::Identity(dim, dim);
  Eigen::JacobiSVD<RMat> svd(shifted, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int null_dim = 0;
  for (int i = sv.size() - 1; i >= 0; --i) {
    if (sv(i) <= kClusterTol * rel_scale(sv(0))) ++null_dim;
  }
  return Subspace::span(dim, svd.matrixV().rightCols(null_dim));
}

double bracket_containment(const MatrixLieAlgebra& g, const Subspace& x,
                           const Subspace& y, const Subspace& target) {
  double worst = 0.0;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j)
      worst = std::max(
          target.distance(g.bracket_coords(x.basis().col(i), y.basis().col(j))),
          worst);
  return worst;
}

RMat bracket_span_vectors(const MatrixLieAlgebra& g, const Subspace& x,
                          const Subspace& y) {
  RMat out(g.dim(), x.dim() * y.dim());
  int col = 0;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j)
      out.col(col++) = g.bracket_coords(x.basis().col(i), y.basis().col(j));
  return out;
}

}  // namespace

FixDecomposition fix_decompose(const MatrixLieAlgebra& g,
                               const InvolutionData& tau) {
  FixDecomposition out{eigen_space(tau.coord_matrix, 1.0),
                       eigen_space(tau.coord_matrix, -1.0),
                       Subspace::zero(g.dim())};
  if (out.l.dim() + out.m.dim() != g.dim())
    throw DomainError("fixed spaces do not split the algebra");
  out.ll_residual = bracket_containment(g, out.l, out.l, out.l);
  out.lm_residual = bracket_containment(g, out.l, out.m, out.m);
  out.mm_residual = bracket_containment(g, out.m, out.m, out.l);
  Subspace mm = Subspace::span(g.dim(), bracket_span_vectors(g, out.m, out.m));
  out.a = out.m.sum(mm);
  Subspace full = Subspace::span(g.dim(), RMat::Identity(g.dim(), g.dim()));
  out.ideal_residual = bracket_containment(g, full, out.a, out.a);
  return out;
}

CRAlgebraData make_cr_data(MatrixLieAlgebra g, RMat k_basis, RMat h_basis,
                           RMat j_on_h) {
  const int dim = g.dim();
  if (k_basis.size() == 0) k_basis = RMat::Zero(dim, 0);
  if (k_basis.rows() != dim || h_basis.rows() != dim)
    throw DimensionError("subspace bases must live in algebra coordinates");
  const int dh = static_cast<int>(h_basis.cols());
  if (j_on_h.rows() != dh || j_on_h.cols() != dh)
    throw DimensionError("J must act on the h basis");
  if ((j_on_h * j_on_h + RMat::Identity(dh, dh)).norm() > 1e-9 * (dh + 1))
    throw DomainError("J^2 != -id");
  for (int i = 0; i < dh; ++i) {
    const CMat x = g.matrix(h_basis.col(i));
    const CMat jx = g.matrix(h_basis * j_on_h.col(i));
    if (std::abs(jx.norm() - x.norm()) > 1e-9 * rel_scale(x.norm()))
      throw DomainError("J is not an ambient isometry on h");
  }
  const Subspace k = Subspace::span(dim, k_basis);
  const Subspace h = Subspace::span(dim, h_basis);
  if (k.dim() + h.dim() != k.sum(h).dim())
    throw DomainError("h and k overlap");
  return {std::move(g), std::move(k_basis), std::move(h_basis),
          std::move(j_on_h)};
}

Filtration filtration(const MatrixLieAlgebra& g, const RMat& h_basis,
                      const RMat& k_basis) {
  if (h_basis.rows() != g.dim())
    throw DomainError("h does not live in the algebra coordinates");
  Filtration out;
  Subspace chain = Subspace::span(g.dim(), h_basis);
  const Subspace h = chain;
  out.dims.push_back(chain.dim());
  for (int step = 0; step < g.dim() + 1; ++step) {
    Subspace next =
        chain.sum(Subspace::span(g.dim(), bracket_span_vectors(g, h, chain)));
    if (next.dim() == chain.dim()) break;
    chain = next;
    out.dims.push_back(chain.dim());
  }
  out.kappa = static_cast<int>(out.dims.size());
  if (h.dim() == 0) out.kappa = 0;
  out.trr_codim = g.dim() - chain.dim();
  Subspace kb = k_basis.size() == 0 ? Subspace::zero(g.dim())
                                    : Subspace::span(g.dim(), k_basis);
  out.minimal = chain.sum(kb).dim() == g.dim();
  return out;
}

IntegrabilityResult integrability_check(const CRAlgebraData& data,
                                        double tol) {
  const MatrixLieAlgebra& g = data.g;
  const int dh = data.dim_h();
  const int dk = data.dim_k();
  std::vector<CVec> minus;
  for (int i = 0; i < dh; ++i) {
    const RVec x = data.h_basis.col(i);
    const RVec jx = data.h_basis * data.j_on_h.col(i);
    minus.push_back(jx.cast<cxd>() - cxd(0, 1) * x.cast<cxd>());
  }
  CMat kspan(g.dim(), dk);
  for (int i = 0; i < dk; ++i) kspan.col(i) = data.k_basis.col(i).cast<cxd>();
  std::optional<Eigen::ColPivHouseholderQR<CMat>> ksolve;
  if (dk > 0) ksolve.emplace(kspan);

  IntegrabilityResult out;
  for (int i = 0; i < dh; ++i)
    for (int j = i + 1; j < dh; ++j) {
      const CVec w = g.complexified_bracket(minus[i], minus[j]);
      double res;
      if (dk == 0) {
        res = w.norm();
      } else {
        const CVec c = ksolve->solve(w);
        res = (kspan * c - w).norm();
      }
      out.residual = std::max(out.residual, res);
    }
  out.integrable = out.residual <= tol * 1e1;
  return out;
}

namespace {

CMat unit_matrix(int n, int i, int j, cxd value) {
  CMat m = CMat::Zero(n, n);
  m(i, j) = value;
  return m;
}

}  // namespace

CRAlgebraData build_vorh(int n) {
  if (n < 3) throw DomainError("build_vorh needs n >= 3");
  std::vector<CMat> basis;
  // Subdiagonal-major order so the h block comes first.
  for (int diag = 1; diag < n; ++diag)
    for (int j = 0; j + diag < n; ++j) {
      basis.push_back(unit_matrix(n, j + diag, j, 1.0));
      basis.push_back(unit_matrix(n, j + diag, j, cxd(0, 1)));
    }
  auto g = MatrixLieAlgebra::from_basis(n, std::move(basis));
  const int pairs = n - 1;  // complex entries on the first subdiagonal
  RMat h = RMat::Zero(g.dim(), 2 * pairs);
  RMat j = RMat::Zero(2 * pairs, 2 * pairs);
  for (int m = 0; m < pairs; ++m) {
    h(2 * m, 2 * m) = 1.0;
    h(2 * m + 1, 2 * m + 1) = 1.0;
    j(2 * m + 1, 2 * m) = 1.0;   // J(real unit) = imaginary unit
    j(2 * m, 2 * m + 1) = -1.0;  // J(imaginary unit) = -real unit
  }
  return make_cr_data(std::move(g), RMat(), std::move(h), std::move(j));
}

namespace {

// Staircase matrix of the tower algebra: subdiagonal 2m-1 carries z_m at
// odd columns and conj(z_m) at even columns, subdiagonal 2m carries
// alpha_m at odd columns and -alpha_m at even columns (1-based columns).
CMat tett_matrix(int n, const CVec& z, const CVec& alpha) {
  CMat m = CMat::Zero(n, n);
  for (int diag = 1; diag < n; ++diag) {
    const int idx = (diag - 1) / 2;
    for (int col = 0; col + diag < n; ++col) {
      const bool odd_col = col % 2 == 0;  // 1-based odd
      if (diag % 2 == 1)
        m(col + diag, col) = odd_col ? z(idx) : std::conj(z(idx));
      else
        m(col + diag, col) = odd_col ? alpha(idx) : -alpha(idx);
    }
  }
  return m;
}

}  // namespace

CRAlgebraData build_tett(int n, int d) {
  if (d < 1 || n <= d || 2 * d > n)
    throw DomainError("build_tett needs n > d >= 1 and d <= n/2");
  const int n_z = (n - 1 + 1) / 2;     // odd subdiagonals
  const int n_alpha = (n - 1) / 2;     // even subdiagonals
  std::vector<CMat> basis;
  CVec z = CVec::Zero(n_z), alpha = CVec::Zero(n_alpha);
  for (int m = 0; m < n_z; ++m) {
    z(m) = 1.0;
    basis.push_back(tett_matrix(n, z, alpha));
    z(m) = cxd(0, 1);
    basis.push_back(tett_matrix(n, z, alpha));
    z(m) = 0.0;
  }
  for (int m = 0; m < n_alpha; ++m) {
    alpha(m) = cxd(0, 1);
    basis.push_back(tett_matrix(n, z, alpha));
    alpha(m) = 0.0;
  }
  auto g = MatrixLieAlgebra::from_basis(n, std::move(basis));
  RMat h = RMat::Zero(g.dim(), 2 * d);
  RMat j = RMat::Zero(2 * d, 2 * d);
  for (int m = 0; m < d; ++m) {
    h(2 * m, 2 * m) = 1.0;
    h(2 * m + 1, 2 * m + 1) = 1.0;
    j(2 * m + 1, 2 * m) = 1.0;
    j(2 * m, 2 * m + 1) = -1.0;
  }
  return make_cr_data(std::move(g), RMat(), std::move(h), std::move(j));
}

SuSigmaData build_su_sigma(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("build_su_sigma needs p, q >= 1");
  const int n = p + q;
  std::vector<CMat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      basis.push_back(unit_matrix(n, i, j, 1.0) - unit_matrix(n, j, i, 1.0));
      basis.push_back(unit_matrix(n, i, j, cxd(0, 1)) +
                      unit_matrix(n, j, i, cxd(0, 1)));
    }
  for (int k = 0; k + 1 < n; ++k)
    basis.push_back(unit_matrix(n, k, k, cxd(0, 1)) -
                    unit_matrix(n, k + 1, k + 1, cxd(0, 1)));
  auto g = MatrixLieAlgebra::from_basis(n, std::move(basis));

  CMat s = CMat::Identity(n, n);
  for (int k = p; k < n; ++k) s(k, k) = -1.0;
  const auto tau =
      InvolutionData::from_map(g, [&](const CMat& x) { return CMat(s * x * s); });
  auto fix = fix_decompose(g, tau);

  // J on m = {(0 b; c 0)}: b -> ib, c -> -ic.
  const RMat& m_basis = fix.m.basis();
  RMat j(m_basis.cols(), m_basis.cols());
  for (int i = 0; i < m_basis.cols(); ++i) {
    const CMat x = g.matrix(m_basis.col(i));
    CMat jx = CMat::Zero(n, n);
    jx.topRightCorner(p, q) = cxd(0, 1) * x.topRightCorner(p, q);
    jx.bottomLeftCorner(q, p) = cxd(0, -1) * x.bottomLeftCorner(q, p);
    double res = 0.0;
    const RVec coords = g.coordinates(jx, &res);
    if (res > 1e-9) throw DomainError("J does not stay in the algebra");
    j.col(i) = m_basis.transpose() * coords;
    if ((m_basis * j.col(i) - coords).norm() > 1e-9)
      throw DomainError("J does not preserve m");
  }

  SuSigmaData out{make_cr_data(g, fix.l.basis(), m_basis, j), fix, 0.0};
  const Subspace full = Subspace::span(g.dim(), RMat::Identity(g.dim(), g.dim()));
  out.m_generates_residual = fix.a.containment_residual(full);
  return out;
}

LieReport analyze(const CRAlgebraData& data) {
  LieReport report;
  report.ambient = data.g.ambient_size();
  report.dim_g = data.g.dim();
  report.dim_h = data.dim_h();
  report.closure_residual = data.g.closure_residual();
  report.jacobi_residual = data.g.jacobi_residual();
  const auto filt = filtration(data.g, data.h_basis, data.k_basis);
  report.chain = filt.dims;
  report.kappa = filt.kappa;
  report.trr_codim = filt.trr_codim;
  report.minimal = filt.minimal;
  const auto integ = integrability_check(data);
  report.integrable = integ.integrable;
  report.integrability_residual = integ.residual;
  return report;
}

}  // namespace shilov
