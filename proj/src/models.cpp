#include "shilov/models.hpp"

namespace shilov {

// --- Sphere family -------------------------------------------------------

CVec sphere_symmetry(const CVec& a, const CVec& z, double tol) {
  if (std::abs(a.norm() - 1.0) > tol)
    throw DomainError("sphere symmetry needs a unit base point");
  if (z.size() != a.size()) throw DimensionError("dimension mismatch");
  return 2.0 * a.dot(z) * a - z;
}

double dual_sphere_residual(cxd t, const CVec& v) {
  return std::abs(std::norm(t) - v.squaredNorm() - 1.0);
}

bool dual_sphere_membership(cxd t, const CVec& v, double tol) {
  return dual_sphere_residual(t, v) <= tol;
}

DualPoint sphere_to_dual(cxd t, const CVec& v, double tol) {
  if (std::abs(std::norm(t) + v.squaredNorm() - 1.0) > tol)
    throw DomainError("point is not on the sphere");
  if (std::abs(t) <= tol) throw DomainError("t = 0 is outside the chart U");
  return {1.0 / t, v / t};
}

SphereCayleyImage sphere_cayley(const CVec& v, cxd t, double tol) {
  if (std::abs(std::norm(t) + v.squaredNorm() - 1.0) > tol)
    throw DomainError("point is not on the sphere");
  if (std::abs(t - 1.0) <= tol)
    throw DomainError("t = 1 is the deleted point of the Cayley chart");
  const cxd d = 1.0 - t;
  return {std::sqrt(2.0) * v / d, (1.0 + t) / d};
}

double heisenberg_sphere_residual(const CVec& v, cxd t) {
  return std::abs(t + std::conj(t) - v.squaredNorm());
}

// --- Generalized Heisenberg quadric --------------------------------------

QuadricModel::QuadricModel(std::vector<CMat> phi_matrices, CMat conjugation)
    : phi_(std::move(phi_matrices)), conj_(std::move(conjugation)) {
  dim_f_ = static_cast<int>(phi_.size());
  if (dim_f_ == 0) throw DimensionError("quadric model needs dim F >= 1");
  dim_e_ = static_cast<int>(phi_[0].rows());
  for (const auto& m : phi_)
    if (m.rows() != dim_e_ || m.cols() != dim_e_)
      throw DimensionError("Phi coefficient matrices must be dim E x dim E");
  if (conj_.rows() != dim_f_ || conj_.cols() != dim_f_)
    throw DimensionError("conjugation must act on F");
  // Involutive conjugate-linear isometry: C conj(C) = 1 and C unitary.
  if ((conj_ * conj_.conjugate() - CMat::Identity(dim_f_, dim_f_)).norm() >
          1e-12 ||
      (conj_.adjoint() * conj_ - CMat::Identity(dim_f_, dim_f_)).norm() > 1e-12)
    throw DomainError("conjugation is not an involutive isometry");
  // Hermitian with respect to the conjugation: Phi(v,u) = Phi(u,v)^*.
  Rng rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    const CVec u = rng.cgaussian_vector(dim_e_);
    const CVec v = rng.cgaussian_vector(dim_e_);
    if ((phi(v, u) - star(phi(u, v))).norm() >
        1e-10 * (1.0 + u.norm() * v.norm()))
      throw DomainError("Phi is not Hermitian w.r.t. the conjugation");
  }
}

QuadricModel QuadricModel::heisenberg() {
  std::vector<CMat> phi{CMat::Identity(1, 1)};
  return QuadricModel(std::move(phi), CMat::Identity(1, 1));
}

QuadricModel QuadricModel::flat(int dim_e, int dim_f) {
  std::vector<CMat> phi(dim_f, CMat::Zero(dim_e, dim_e));
  return QuadricModel(std::move(phi), CMat::Identity(dim_f, dim_f));
}

QuadricModel QuadricModel::random_instance(int dim_e, int dim_f,
                                           std::uint64_t seed) {
  Rng rng(mix_seed(seed, "quadric"));
  std::vector<CMat> phi;
  for (int k = 0; k < dim_f; ++k) {
    const CMat g = rng.cgaussian_matrix(dim_e, dim_e);
    phi.push_back(0.5 * (g + g.adjoint()));
  }
  return QuadricModel(std::move(phi), CMat::Identity(dim_f, dim_f));
}

CVec QuadricModel::phi(const CVec& u, const CVec& v) const {
  CVec out(dim_f_);
  for (int k = 0; k < dim_f_; ++k) out(k) = u.dot(phi_[k] * v);
  return out;
}

bool QuadricModel::in_v(const CVec& w, double tol) const {
  return (w + star(w)).norm() <= tol * rel_scale(w.norm());
}

double QuadricModel::membership_residual(const CVec& z, const CVec& w) const {
  return (w + star(w) - phi(z, z)).norm();
}

QuadricPoint QuadricModel::make_point(const CVec& z, const CVec& v_free) const {
  if (!in_v(v_free))
    throw DomainError("free part must lie in V = {w + w* = 0}");
  QuadricPoint p{z, v_free + 0.5 * phi(z, z), 0.0};
  p.residual = membership_residual(p.z, p.w);
  return p;
}

QuadricPoint QuadricModel::action(const CVec& e, const CVec& v_center,
                                  const QuadricPoint& p, double tol) const {
  if (!in_v(v_center, tol)) throw DomainError("center shift must lie in V");
  if (membership_residual(p.z, p.w) > tol * rel_scale(p.w.norm()))
    throw DomainError("input point is off the quadric");
  QuadricPoint out;
  out.z = p.z + e;
  out.w = p.w + phi(e, p.z) + 0.5 * phi(e, e) + v_center;
  out.residual = membership_residual(out.z, out.w);
  return out;
}

QuadricPoint QuadricModel::symmetry(const QuadricPoint& a,
                                    const QuadricPoint& p, double tol) const {
  if (membership_residual(a.z, a.w) > tol * rel_scale(a.w.norm()) ||
      membership_residual(p.z, p.w) > tol * rel_scale(p.w.norm()))
    throw DomainError("symmetry needs base point and argument on the quadric");
  QuadricPoint out;
  out.z = 2.0 * a.z - p.z;
  out.w = p.w + phi(2.0 * a.z, a.z - p.z);
  out.residual = membership_residual(out.z, out.w);
  return out;
}

namespace {

// Real-affine vector field p -> c + L p over stacked real coordinates
// (Re, Im); exact brackets stay in this class: [X,Y] has constant part
// L_Y c_X - L_X c_Y and linear part L_Y L_X - L_X L_Y.
struct AffineField {
  RVec c;
  RMat lin;

  AffineField bracket(const AffineField& other) const {
    return {other.lin * c - lin * other.c,
            other.lin * lin - lin * other.lin};
  }
  RVec at(const RVec& p) const { return c + lin * p; }
};

RVec to_real(const CVec& z) {
  RVec r(2 * z.size());
  r << z.real(), z.imag();
  return r;
}

CVec to_complex(const RVec& r) {
  const int n = static_cast<int>(r.size()) / 2;
  CVec z(n);
  for (int i = 0; i < n; ++i) z(i) = cxd(r(i), r(n + i));
  return z;
}

// Real representation of w = A u + B conj(u).
RMat real_linear(const CMat& a, const CMat& b) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  RMat out(2 * m, 2 * n);
  out.topLeftCorner(m, n) = a.real() + b.real();
  out.topRightCorner(m, n) = -a.imag() + b.imag();
  out.bottomLeftCorner(m, n) = a.imag() + b.imag();
  out.bottomRightCorner(m, n) = a.real() - b.real();
  return out;
}

}  // namespace

QuadricModel::LeviReport QuadricModel::levi_check() const {
  LeviReport report;
  const int ne = dim_e_;
  const int nf = dim_f_;
  const int dim = 2 * (ne + nf);

  // X^xi(z,w) = (xi, Phi(z,xi)): constant xi plus the conjugate-linear map
  // z -> B conj(z) with B_k = (M_k xi)^T.
  auto field = [&](const CVec& xi) {
    CMat b(nf, ne);
    for (int k = 0; k < nf; ++k) b.row(k) = (phi_[k] * xi).transpose();
    AffineField f{RVec::Zero(dim), RMat::Zero(dim, dim)};
    f.c.segment(0, ne) = xi.real();
    f.c.segment(ne + nf, ne) = xi.imag();
    const RMat lin_zw = real_linear(CMat::Zero(nf, ne), b);
    // Rows of the w component sit at [ne, ne+nf) and [2ne+nf, dim).
    f.lin.block(ne, 0, nf, ne) = lin_zw.block(0, 0, nf, ne);
    f.lin.block(ne, ne + nf, nf, ne) = lin_zw.block(0, ne, nf, ne);
    f.lin.block(2 * ne + nf, 0, nf, ne) = lin_zw.block(nf, 0, nf, ne);
    f.lin.block(2 * ne + nf, ne + nf, nf, ne) = lin_zw.block(nf, ne, nf, ne);
    return f;
  };

  auto omega = [&](const CVec& x, const CVec& y) {
    const RVec val = field(x).bracket(field(y)).at(RVec::Zero(dim));
    CVec zc(ne), wc(nf);
    for (int i = 0; i < ne; ++i) zc(i) = cxd(val(i), val(ne + nf + i));
    for (int k = 0; k < nf; ++k) wc(k) = cxd(val(ne + k), val(2 * ne + nf + k));
    if (zc.norm() > 1e-12)
      throw CertificationError("quadric bracket left the fibre direction");
    return CVec(0.5 * (wc - star(wc)));  // projection onto V
  };

  const cxd i1(0, 1);
  for (int a = 0; a < ne; ++a) {
    for (int b = 0; b < ne; ++b) {
      CVec x = CVec::Zero(ne), y = CVec::Zero(ne);
      x(a) = 1.0;
      y(b) = 1.0;
      const CVec levi = 0.25 * ((omega(x, y) + omega(i1 * x, i1 * y)) +
                                i1 * (omega(i1 * x, y) - omega(x, i1 * y)));
      report.model_deviation =
          std::max(report.model_deviation, (levi - phi(x, y)).norm());
    }
  }

  // Embedded sphere in C^2 at a = (1,0): the tangent field
  // X(z,w) = (-conj(w), conj(z)) gives [JX,X]_a = 2ia and L_a(e,e) = -a.
  {
    CMat swap(2, 2);
    swap << 0, -1, 1, 0;
    AffineField x{RVec::Zero(4), real_linear(CMat::Zero(2, 2), swap)};
    AffineField jx = x;
    // J multiplies field values by i.
    RMat mul_i = real_linear(i1 * CMat::Identity(2, 2), CMat::Zero(2, 2));
    jx.lin = mul_i * x.lin;
    CVec a(2), e(2);
    a << 1, 0;
    e << 0, 1;
    const CVec beta = to_complex(jx.bracket(x).at(to_real(a)));
    report.sphere_bracket_residual = (beta - 2.0 * i1 * a).norm();
    // omega_a(ie, e) is the projection of the bracket onto i R a; then
    // 2 L_a(e,e) = i omega_a(ie, e).
    const cxd coef = (i1 * a).dot(beta);  // real inner product coefficient
    const CVec omega_val = coef.real() * (i1 * a);
    const CVec levi = 0.5 * i1 * omega_val;
    report.sphere_levi_residual = (levi + a).norm();
  }
  return report;
}

QuadricModel::LinearCheck QuadricModel::linear_check(const CMat& eta,
                                                     const CMat& eps,
                                                     int samples,
                                                     std::uint64_t seed,
                                                     double tol) const {
  LinearCheck out;
  Rng rng(mix_seed(seed, "quadric_linear"));
  // Spanning sample: basis vectors, pairwise sums with phases, and noise.
  std::vector<CVec> probes;
  for (int i = 0; i < dim_e_; ++i) {
    CVec b = CVec::Zero(dim_e_);
    b(i) = 1.0;
    probes.push_back(b);
    for (int j = 0; j < i; ++j) {
      CVec c = CVec::Zero(dim_e_);
      c(i) = 1.0;
      c(j) = 1.0;
      probes.push_back(c);
      c(j) = cxd(0, 1);
      probes.push_back(c);
    }
  }
  for (int s = 0; s < 4; ++s) probes.push_back(rng.cgaussian_vector(dim_e_));
  for (const CVec& z : probes)
    out.compat_residual = std::max(
        out.compat_residual,
        (phi(eta * z, eta * z) - eps * phi(z, z)).norm());
  out.compatible = out.compat_residual <= tol * 1e1;
  if (!out.compatible) return out;

  for (int s = 0; s < samples; ++s) {
    const CVec z = rng.cgaussian_vector(dim_e_);
    CVec v = rng.cgaussian_vector(dim_f_);
    v = 0.5 * (v - star(v));
    const QuadricPoint p = make_point(z, v);
    out.membership_residual = std::max(
        out.membership_residual, membership_residual(eta * p.z, eps * p.w));
  }
  out.preserves = out.membership_residual <= tol * 1e2;
  return out;
}

// --- 3-step nilpotent group ----------------------------------------------

double heis3_residual(const Heis3Point& p) {
  const double r1 = std::abs(p.w.imag() - std::norm(p.z));
  const double r2 = std::abs(p.v.imag() - (p.w * std::conj(p.z)).imag());
  return std::max(r1, r2);
}

bool heis3_membership(const Heis3Point& p, double tol) {
  const double scale = rel_scale(std::abs(p.z) + std::abs(p.w) + std::abs(p.v));
  return heis3_residual(p) <= tol * scale;
}

Heis3Point heis3_product(const Heis3Point& g, const Heis3Point& x, double tol) {
  if (!heis3_membership(g, tol) || !heis3_membership(x, tol))
    throw DomainError("group product needs points on the manifold");
  const cxd a = g.z, b = g.w, c = g.v;
  const cxd ab = std::conj(a), bb = std::conj(b);
  const cxd i2(0, 2);
  return {x.z + a, x.w + i2 * ab * x.z + b,
          x.v + (i2 * ab * ab - bb) * x.z + (a + 2.0 * ab) * x.w + c};
}

Heis3Point heis3_symmetry(const Heis3Point& x) { return {-x.z, x.w, -x.v}; }

Heis3Point heis3_dilation(double t, const Heis3Point& x) {
  if (t == 0.0) throw DomainError("dilations need t != 0");
  return {t * x.z, t * t * x.w, t * t * t * x.v};
}

Heis3Point heis3_sample(cxd z, double beta, double gamma) {
  const cxd w(beta, std::norm(z));
  const cxd wz = w * std::conj(z);
  return {z, w, cxd(gamma, wz.imag())};
}

// --- n = 5 realization ----------------------------------------------------

namespace {

cxd syin5_v1(cxd z, cxd w, cxd v2) {
  const cxd zz = z * std::conj(z);
  return std::conj(v2) + zz * (z - std::conj(z)) / 6.0 + std::conj(w) * z;
}

double syin5_u_real(cxd z, cxd w, cxd v1) {
  const double quart = std::norm(z) * std::norm(z) / 4.0;
  return 0.5 * (std::norm(w) + 2.0 * (z * std::conj(v1)).real() + quart);
}

}  // namespace

double syin5_residual(const Syin5Point& p) {
  const double r1 = std::abs(p.w + std::conj(p.w) - p.z * std::conj(p.z));
  const double r2 = std::abs(p.v1 - std::conj(p.v2) -
                             (p.z * std::conj(p.z) * (p.z - std::conj(p.z)) / 6.0 +
                              std::conj(p.w) * p.z));
  const double r3 =
      std::abs(p.u + std::conj(p.u) -
               (p.w * std::conj(p.w) +
                (p.z * std::conj(p.v1) + std::conj(p.z) * p.v1) +
                p.z * std::conj(p.z) * p.z * std::conj(p.z) / 4.0));
  return std::max({r1, r2, r3});
}

bool syin5_membership(const Syin5Point& p, double tol) {
  const double scale = rel_scale(std::abs(p.z) + std::abs(p.w) +
                                 std::abs(p.v1) + std::abs(p.v2) +
                                 std::abs(p.u));
  return syin5_residual(p) <= tol * scale * scale;
}

Syin5Point syin5_sample(cxd z, double beta, cxd v2, double gamma) {
  const cxd w(0.5 * std::norm(z), beta);
  const cxd v1 = syin5_v1(z, w, v2);
  return {z, w, v1, v2, cxd(syin5_u_real(z, w, v1), gamma)};
}

Syin5Point syin5_symmetry(const Syin5Point& p) {
  return {-p.z, p.w, -p.v1, -p.v2, p.u};
}

}  // namespace shilov
