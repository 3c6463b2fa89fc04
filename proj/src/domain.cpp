#include "shilov/domain.hpp"

#include <Eigen/QR>

namespace shilov {

namespace {

void require_halfspace(const PeirceDecomposition& pd, const Element& u,
                       double tol) {
  if ((u - pd.project12(u)).norm() > tol * rel_scale(u.norm()))
    throw DomainError("element is not in the Peirce space E_1/2");
}

}  // namespace

Element levi_phi(const Tripotent& e, const Element& u, const Element& v,
                 double tol) {
  const auto pd = peirce_decompose(e);
  require_halfspace(pd, u, tol);
  require_halfspace(pd, v, tol);
  return triple_product(e.element(), u, v) * cxd(2.0, 0.0);
}

Element foll_field(const Tripotent& e, const Element& u, const Element& a,
                   double tol) {
  require_halfspace(peirce_decompose(e), u, tol);
  const Element inner = triple_product(a, a, u);
  return inner * cxd(4.0, 0.0) -
         triple_product(a, a, inner) * cxd(4.0, 0.0);
}

namespace {

// Frechet derivative of a -> X^u_a at the tripotent e, applied to w.
// Expanding both occurrences of `a` multilinearly (the inner slot is
// conjugate-linear, which real differentiation keeps intact):
//   D(a -> {aau})|_e (w)       = {weu} + {ewu}
//   D(a -> {aa{aau}})|_e (w)   = {we{eeu}} + {ew{eeu}} + {ee{weu}} + {ee{ewu}}
Element foll_field_derivative(const Element& e, const Element& u,
                              const Element& w) {
  const Element eeu = triple_product(e, e, u);
  const Element weu = triple_product(w, e, u);
  const Element ewu = triple_product(e, w, u);
  Element d = (weu + ewu) * cxd(4.0, 0.0);
  d = d - (triple_product(w, e, eeu) + triple_product(e, w, eeu) +
           triple_product(e, e, weu) + triple_product(e, e, ewu)) *
              cxd(4.0, 0.0);
  return d;
}

}  // namespace

Element foll_bracket(const Tripotent& e, const Element& u, const Element& v,
                     double tol) {
  const auto pd = peirce_decompose(e);
  require_halfspace(pd, u, tol);
  require_halfspace(pd, v, tol);
  // [X, Y]_e = DY|_e(X_e) - DX|_e(Y_e) and X^u_e = u on the tripotent
  // manifold.
  return foll_field_derivative(e.element(), v, u) -
         foll_field_derivative(e.element(), u, v);
}

Element foll_bracket_rhs(const Tripotent& e, const Element& u,
                         const Element& v) {
  return (triple_product(e.element(), v, u) -
          triple_product(e.element(), u, v)) *
         cxd(2.0, 0.0);
}

RVec nnls(const RMat& a, const RVec& b, int max_iter) {
  const int n = a.cols();
  if (max_iter <= 0) max_iter = 3 * n + 30;
  RVec x = RVec::Zero(n);
  std::vector<bool> passive(n, false);
  RVec w = a.transpose() * (b - a * x);

  for (int iter = 0; iter < max_iter; ++iter) {
    int best = -1;
    double best_w = 1e-12;
    for (int j = 0; j < n; ++j)
      if (!passive[j] && w(j) > best_w) {
        best_w = w(j);
        best = j;
      }
    if (best < 0) break;
    passive[best] = true;

    for (;;) {
      std::vector<int> idx;
      for (int j = 0; j < n; ++j)
        if (passive[j]) idx.push_back(j);
      RMat ap(a.rows(), idx.size());
      for (std::size_t c = 0; c < idx.size(); ++c) ap.col(c) = a.col(idx[c]);
      const RVec zp = ap.colPivHouseholderQr().solve(b);

      if ((zp.array() > 0).all()) {
        x.setZero();
        for (std::size_t c = 0; c < idx.size(); ++c) x(idx[c]) = zp(c);
        break;
      }
      // Step back to the feasible boundary and drop the blocking columns.
      double alpha = 1.0;
      for (std::size_t c = 0; c < idx.size(); ++c)
        if (zp(c) <= 0) alpha = std::min(alpha, x(idx[c]) / (x(idx[c]) - zp(c)));
      for (std::size_t c = 0; c < idx.size(); ++c) {
        const int j = idx[c];
        x(j) += alpha * (zp(c) - x(j));
        if (x(j) <= 1e-14) {
          x(j) = 0.0;
          passive[j] = false;
        }
      }
    }
    w = a.transpose() * (b - a * x);
  }
  return x;
}

LeviConeReport levi_cone_probe(const Tripotent& e, int sample_count,
                               std::uint64_t seed, double residual_tol) {
  LeviConeReport report;
  const auto tube = classify_tube(e.system());
  for (std::size_t i = 0; i < tube.size(); ++i)
    if (tube[i]) {
      report.reason = "factor " + std::to_string(i) +
                      " is of tube type (E_1/2 = 0 along it)";
      return report;
    }
  const auto pd = peirce_decompose(e);
  if (pd.dims[2] != 0) {
    report.reason = "tripotent is not maximal";
    return report;
  }

  // Sample Phi(u,u) with u in E_1/2 and certify each frame member of e as
  // a nonnegative combination (scaling turns nonnegative combinations
  // into convex combinations of Phi values). The frame members are
  // extreme rays of the cone, reached through the refined spaces E_{j0},
  // so the sampler alternates between generic directions and the E_{j0}.
  const auto sd = spectral_decompose(e.element());
  const auto rp = refined_peirce(sd.frame);
  const int rank = sd.frame.length();
  Rng rng(mix_seed(seed, "levi_cone_probe"));
  const int dim = e.system().dim();
  RMat atoms(2 * dim, sample_count);
  for (int s = 0; s < sample_count; ++s) {
    const Element g = Element::from_coordinates(e.system(),
                                                rng.cgaussian_vector(dim));
    const Element u = s % 2 == 0
                          ? pd.project12(g)
                          : apply_operator(rp.projector(0, 1 + (s / 2) % rank), g);
    const CVec phi = levi_phi(e, u, u).coordinates();
    atoms.col(s) << phi.real(), phi.imag();
  }

  for (int j = 0; j < sd.frame.length(); ++j) {
    const CVec target = sd.frame.member(j).element().coordinates();
    RVec b(2 * dim);
    b << target.real(), target.imag();
    const RVec coeff = nnls(atoms, b);
    const double res = (atoms * coeff - b).norm();
    report.max_residual = std::max(report.max_residual, res);
    if (res > residual_tol) {
      report.reason = "frame member " + std::to_string(j) +
                      " missed the sampled cone (residual " +
                      std::to_string(res) + ")";
      return report;
    }
  }
  report.ok = true;
  return report;
}

SiegelPoint cayley(const JordanContext& ctx, const Element& z) {
  const auto& pd = ctx.peirce();
  if (pd.dims[2] != 0)
    throw DomainError("the Cayley transform needs a maximal tripotent");
  const Element e = ctx.unit().element();
  const Element t = pd.project1(z);
  const Element v = pd.project12(z);
  if (!ctx.is_invertible(e - t))
    throw DomainError("e - t is singular: z is outside the Cayley domain");
  const Element inv = ctx.jordan_inverse(e - t);
  return {ctx.jordan_product(inv, e + t), ctx.halfspace_action(inv, v) *
                                              cxd(std::sqrt(2.0), 0.0)};
}

namespace {

Element siegel_defect(const JordanContext& ctx, const SiegelPoint& sp) {
  return sp.t + ctx.involution(sp.t) -
         levi_phi(ctx.unit(), sp.v, sp.v);
}

}  // namespace

SiegelClass siegel_membership(const JordanContext& ctx, const SiegelPoint& sp,
                              double margin) {
  switch (ctx.omega_membership(siegel_defect(ctx, sp), margin)) {
    case OmegaClass::Omega:
      return SiegelClass::Interior;
    case OmegaClass::BoundaryY:
      return SiegelClass::OnN;
    default:
      return SiegelClass::Outside;
  }
}

double siegel_n_residual(const JordanContext& ctx, const SiegelPoint& sp) {
  return siegel_defect(ctx, sp).norm();
}

HullSplit hull_split(const TripleSystem& sys) {
  HullSplit split;
  const auto tube = classify_tube(sys);
  for (int i = 0; i < sys.num_factors(); ++i)
    (tube[i] ? split.tube_factors : split.nontube_factors).push_back(i);
  return split;
}

bool hull_membership(const Element& z, HullKind kind, double tol) {
  if (kind != HullKind::Rational) return spectral_norm(z) <= 1.0 + tol;
  const auto split = hull_split(z.system());
  for (const int i : split.tube_factors)
    if (!shilov_membership(project_factor(z, i), tol)) return false;
  for (const int i : split.nontube_factors)
    if (spectral_norm(project_factor(z, i)) > 1.0 + tol) return false;
  return true;
}

RuppReport rupp_symmetry_check(const Tripotent& e, int sample_count,
                               std::uint64_t seed) {
  const auto pd = peirce_decompose(e);
  if (pd.dims[1] == 0)
    throw DomainError("totally real case: E_1/2 = 0, the reflection is trivial");
  const CMat rho = peirce_reflection(pd);

  RuppReport report;
  report.fix_residual =
      (apply_operator(rho, e.element()) - e.element()).norm();
  report.half_space_residual = (rho * pd.p12 + pd.p12).norm();

  int rank = 0;
  for (const double l : spectral_decompose(e.element()).lambdas)
    if (l > 0.5) ++rank;
  for (int s = 0; s < sample_count; ++s) {
    const Tripotent c =
        random_tripotent(e.system(), rank, mix_seed(seed, std::uint64_t(s)));
    const auto t = is_tripotent(apply_operator(rho, c.element()));
    report.tripotent_residual = std::max(report.tripotent_residual, t.residual);
  }
  return report;
}

}  // namespace shilov
