#include "shilov/triple.hpp"

namespace shilov {

Element triple_product(const Element& x, const Element& y, const Element& z) {
  require_same_system(x, y);
  require_same_system(x, z);
  std::vector<CMat> blocks;
  blocks.reserve(x.num_blocks());
  for (int i = 0; i < x.num_blocks(); ++i) {
    const CMat ys = y.block(i).adjoint();
    blocks.push_back(0.5 * (x.block(i) * ys * z.block(i) +
                            z.block(i) * ys * x.block(i)));
  }
  return Element(x.system(), std::move(blocks));
}

CMat mult_operator(const Element& e) {
  const TripleSystem& sys = e.system();
  const int n = sys.dim();
  CMat op(n, n);
  for (int k = 0; k < n; ++k) {
    const Element b = Element::basis_element(sys, k);
    op.col(k) = triple_product(e, e, b).coordinates();
  }
  return op;
}

TripotentTest is_tripotent(const Element& a, double tol) {
  const double r = (triple_product(a, a, a) - a).norm();
  return {r <= tol * rel_scale(a.norm()), r};
}

Tripotent Tripotent::certify(const Element& e, double tol) {
  const auto t = is_tripotent(e, tol);
  if (!t.ok)
    throw CertificationError("element is not a tripotent (residual " +
                             std::to_string(t.residual) + ")");
  return Tripotent(e, t.residual);
}

bool are_orthogonal(const Tripotent& e, const Tripotent& c, double tol) {
  require_same_system(e.element(), c.element());
  const double scale = rel_scale(std::max(e.element().norm(), c.element().norm()));
  const double r = triple_product(e.element(), e.element(), c.element()).norm();
  if (r > tol * scale) return false;
  // Orthogonality is symmetric and sums of orthogonal tripotents are
  // tripotents; a violation here means the inputs were mis-certified.
  const double rs =
      triple_product(c.element(), c.element(), e.element()).norm();
  if (rs > tol * scale)
    throw CertificationError("orthogonality is not symmetric (residual " +
                             std::to_string(rs) + ")");
  for (const double sign : {1.0, -1.0}) {
    const Element s = e.element() + c.element() * cxd(sign, 0.0);
    const auto t = is_tripotent(s, tol);
    if (!t.ok)
      throw CertificationError("e +- c failed the tripotent test (residual " +
                               std::to_string(t.residual) + ")");
  }
  return true;
}

}  // namespace shilov
