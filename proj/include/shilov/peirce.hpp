#pragma once

#include <array>
#include <map>
#include <vector>

#include "shilov/triple.hpp"

namespace shilov {

// Eigen-projectors of the triple multiplication operator of a tripotent,
// built from the polynomials P1 = mu(2mu-1), P1/2 = 4mu(1-mu),
// P0 = (1-mu)(1-2mu).
struct PeirceDecomposition {
  Tripotent e;
  CMat p1, p12, p0;
  std::array<int, 3> dims;  // complex dimensions of E_1, E_1/2, E_0

  Element project1(const Element& z) const { return apply_operator(p1, z); }
  Element project12(const Element& z) const { return apply_operator(p12, z); }
  Element project0(const Element& z) const { return apply_operator(p0, z); }
};

// Throws CertificationError when the spectrum of mu_e is not within
// spectrum_tol of {0, 1/2, 1}.
PeirceDecomposition peirce_decompose(const Tripotent& e,
                                     double spectrum_tol = kClusterTol);

// rho = exp(2 pi i mu) = P1 - P1/2 + P0; involutive triple automorphism.
CMat peirce_reflection(const PeirceDecomposition& pd);
CMat peirce_reflection(const Tripotent& e);

// sigma = -exp(pi i mu_a) = P1 - i P1/2 - P0; the affine-symmetry operator
// certifying tripotents geometrically.
CMat char_sigma(const PeirceDecomposition& pd);
CMat char_sigma(const Tripotent& a);

class Frame;  // spectral.hpp

// Joint eigenprojectors of the commuting family {mu_{e_k}}: z lies in E_ij
// iff 2{e_k e_k z} = (delta_ik + delta_kj) z for all k, 0 <= i <= j <= r.
struct RefinedPeirce {
  int rank = 0;
  std::map<std::pair<int, int>, CMat> projectors;
  std::map<std::pair<int, int>, int> dims;

  const CMat& projector(int i, int j) const;
  int dim(int i, int j) const;
};

RefinedPeirce refined_peirce(const Frame& frame);

// Per-factor tube classification: I_{p,q} is tube type iff p = q; II_p is
// never tube type. verify = true cross-checks via dim E_1/2 of a maximal
// tripotent and via the refined criterion E_{i0} != 0.
std::vector<bool> classify_tube(const TripleSystem& sys, bool verify = false);

int projector_rank(const CMat& p);

}  // namespace shilov
