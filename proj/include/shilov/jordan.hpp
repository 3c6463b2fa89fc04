#pragma once

#include <optional>
#include <vector>

#include "shilov/peirce.hpp"
#include "shilov/spectral.hpp"

namespace shilov {

enum class OmegaClass { Omega, BoundaryY, Outside };

// The unital Jordan algebra E_1(e) of a tripotent e, with product
// a o b = {aeb}, involution z -> {eze}, selfadjoint part A and symmetric
// cone Omega. Supported on type I factors, where E_1 identifies with the
// leading k x k block after the unitary change of frame given by an SVD of
// e; type II factors are out of scope here and rejected loudly.
class JordanContext {
 public:
  explicit JordanContext(const Tripotent& e);

  const Tripotent& unit() const { return e_; }
  const TripleSystem& system() const { return sys_; }
  const PeirceDecomposition& peirce() const { return pd_; }
  bool is_tube() const { return tube_; }
  int block_size(int factor) const { return static_cast<int>(ranks_.at(factor)); }

  bool in_E1(const Element& z, double tol = kEqTol) const;
  // Identified Hermitian-block data of the factor components of z in E_1.
  std::vector<CMat> to_blocks(const Element& z) const;
  Element from_blocks(const std::vector<CMat>& blocks) const;

  Element jordan_product(const Element& a, const Element& b) const;
  Element involution(const Element& z) const;
  Element real_part(const Element& z) const;
  bool is_selfadjoint(const Element& z, double tol = kEqTol) const;

  // Jordan inverse; throws DomainError when the spectral test fails.
  Element jordan_inverse(const Element& t) const;
  bool is_invertible(const Element& t) const;

  // Degree-r generic norm, defined concretely on tube type I factors only
  // (factor-wise determinant in the block identification).
  cxd generic_norm(const Element& z) const;

  OmegaClass omega_membership(const Element& x,
                              double margin = kPsdMargin) const;
  Element exp_A(const Element& a) const;

  // |N(z)| = 1 test for points of the closed domain of a tube context.
  bool shilov_by_norm(const Element& z, double tol = kEqTol) const;

  // Action of E_1 on the halfspace E_1/2: (x, v) -> 2{xev}; the unit acts
  // as the identity.
  Element halfspace_action(const Element& x, const Element& v) const;

 private:
  void require_in_E1(const Element& z) const;

  Tripotent e_;
  TripleSystem sys_;
  PeirceDecomposition pd_;
  std::vector<CMat> u_, v_;  // per-factor SVD change of frame
  std::vector<int> ranks_;
  bool tube_ = false;
};

}  // namespace shilov
