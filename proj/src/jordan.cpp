#include "shilov/jordan.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace shilov {

JordanContext::JordanContext(const Tripotent& e)
    : e_(e), sys_(e.system()), pd_(peirce_decompose(e)) {
  tube_ = true;
  for (int i = 0; i < sys_.num_factors(); ++i) {
    const auto& f = sys_.factor(i);
    if (f.kind != FactorSpec::Kind::CartanII) {
      tube_ = tube_ && f.p == f.q;
    } else {
      throw UnsupportedScopeError(
          "Jordan contexts are supported on type I factors only");
    }
    const CMat& b = e.element().block(i);
    if (b.norm() == 0.0) {
      u_.push_back(CMat::Identity(f.p, f.p));
      v_.push_back(CMat::Identity(f.q, f.q));
      ranks_.push_back(0);
      continue;
    }
    Eigen::JacobiSVD<CMat> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    int k = 0;
    for (const double s : svd.singularValues())
      if (s > 0.5) ++k;
    u_.push_back(svd.matrixU());
    v_.push_back(svd.matrixV());
    ranks_.push_back(k);
  }
}

bool JordanContext::in_E1(const Element& z, double tol) const {
  return (z - pd_.project1(z)).norm() <= tol * rel_scale(z.norm());
}

void JordanContext::require_in_E1(const Element& z) const {
  if (!in_E1(z))
    throw DomainError("element is not in the Peirce space E_1 of the unit");
}

std::vector<CMat> JordanContext::to_blocks(const Element& z) const {
  std::vector<CMat> out;
  for (int i = 0; i < sys_.num_factors(); ++i) {
    const int k = ranks_[i];
    out.push_back(
        (u_[i].adjoint() * z.block(i) * v_[i]).topLeftCorner(k, k).eval());
  }
  return out;
}

Element JordanContext::from_blocks(const std::vector<CMat>& blocks) const {
  std::vector<CMat> full;
  for (int i = 0; i < sys_.num_factors(); ++i) {
    const auto& f = sys_.factor(i);
    CMat m = CMat::Zero(f.p, f.q);
    m.topLeftCorner(ranks_[i], ranks_[i]) = blocks.at(i);
    full.push_back(u_[i] * m * v_[i].adjoint());
  }
  return Element(sys_, std::move(full));
}

Element JordanContext::jordan_product(const Element& a, const Element& b) const {
  require_in_E1(a);
  require_in_E1(b);
  return triple_product(a, e_.element(), b);
}

Element JordanContext::involution(const Element& z) const {
  require_in_E1(z);
  return triple_product(e_.element(), z, e_.element());
}

Element JordanContext::real_part(const Element& z) const {
  return (z + involution(z)) * cxd(0.5, 0.0);
}

bool JordanContext::is_selfadjoint(const Element& z, double tol) const {
  if (!in_E1(z, tol)) return false;
  return (involution(z) - z).norm() <= tol * rel_scale(z.norm());
}

bool JordanContext::is_invertible(const Element& t) const {
  for (const CMat& blk : to_blocks(t)) {
    if (blk.rows() == 0) continue;
    Eigen::JacobiSVD<CMat> svd(blk);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-12 * rel_scale(sv(0))) return false;
  }
  return true;
}

Element JordanContext::jordan_inverse(const Element& t) const {
  require_in_E1(t);
  if (!is_invertible(t))
    throw DomainError("element is singular in the Jordan algebra E_1");
  std::vector<CMat> inv;
  for (const CMat& blk : to_blocks(t)) inv.push_back(blk.inverse());
  return from_blocks(inv);
}

cxd JordanContext::generic_norm(const Element& z) const {
  require_in_E1(z);
  cxd n = 1.0;
  for (int i = 0; i < sys_.num_factors(); ++i) {
    const auto& f = sys_.factor(i);
    if (f.p != f.q || ranks_[i] != f.q)
      throw UnsupportedScopeError(
          "generic norm needs a maximal unit of a tube type I factor");
  }
  for (const CMat& blk : to_blocks(z)) n *= blk.determinant();
  return n;
}

OmegaClass JordanContext::omega_membership(const Element& x,
                                           double margin) const {
  if (!in_E1(x) || !is_selfadjoint(x)) return OmegaClass::Outside;
  double min_eig = std::numeric_limits<double>::infinity();
  for (const CMat& blk : to_blocks(x)) {
    if (blk.rows() == 0) continue;
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (blk + blk.adjoint()),
                                           Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, es.eigenvalues()(0));
  }
  if (min_eig == std::numeric_limits<double>::infinity()) min_eig = 0.0;
  if (min_eig > margin) return OmegaClass::Omega;
  if (min_eig >= -margin) return OmegaClass::BoundaryY;
  return OmegaClass::Outside;
}

Element JordanContext::exp_A(const Element& a) const {
  require_in_E1(a);
  if (!is_selfadjoint(a))
    throw DomainError("exp_A expects a selfadjoint element of E_1");
  std::vector<CMat> out;
  for (const CMat& blk : to_blocks(a)) {
    if (blk.rows() == 0) {
      out.push_back(blk);
      continue;
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (blk + blk.adjoint()));
    out.push_back(es.eigenvectors() *
                  es.eigenvalues().array().exp().matrix().asDiagonal() *
                  es.eigenvectors().adjoint());
  }
  return from_blocks(out);
}

bool JordanContext::shilov_by_norm(const Element& z, double tol) const {
  if (!tube_)
    throw UnsupportedScopeError("|N| = 1 characterizes S on tube contexts only");
  if (spectral_norm(z) > 1.0 + tol)
    throw DomainError("shilov_by_norm expects a point of the closed domain");
  return std::abs(std::abs(generic_norm(z)) - 1.0) <= tol;
}

Element JordanContext::halfspace_action(const Element& x, const Element& v) const {
  require_in_E1(x);
  return triple_product(x, e_.element(), v) * cxd(2.0, 0.0);
}

}  // namespace shilov
