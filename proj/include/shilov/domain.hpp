#pragma once

#include <string>

#include "shilov/jordan.hpp"

namespace shilov {

// Levi form of the tripotent manifold at e: Phi(u,v) = 2{euv}, a
// sesquilinear map E_1/2 x E_1/2 -> E_1 (conjugate-linear in u).
Element levi_phi(const Tripotent& e, const Element& u, const Element& v,
                 double tol = kEqTol);

// Tangent field X^u_a = 4{aau} - 4{aa{aau}} of the tripotent manifold.
Element foll_field(const Tripotent& e, const Element& u, const Element& a,
                   double tol = kEqTol);

// [X^u, X^v]_e computed by exact Frechet differentiation of the polynomial
// fields (multilinear expansion, no finite differences).
Element foll_bracket(const Tripotent& e, const Element& u, const Element& v,
                     double tol = kEqTol);
// Closed form 2{evu} - 2{euv} that the bracket must reproduce.
Element foll_bracket_rhs(const Tripotent& e, const Element& u, const Element& v);

// Probabilistic certificate that the sampled set {Phi(u,u)} spans a cone
// with the frame elements of e inside: each e_j must be a nonnegative
// combination of samples within `residual_tol`.
struct LeviConeReport {
  bool ok = false;
  std::string reason;
  double max_residual = 0.0;
};
LeviConeReport levi_cone_probe(const Tripotent& e, int sample_count,
                               std::uint64_t seed,
                               double residual_tol = 1e-6);

// Nonnegative least squares (Lawson-Hanson active set), used by the cone
// probe and exposed for tests.
RVec nnls(const RMat& a, const RVec& b, int max_iter = 0);

// Point of the Siegel domain H = {(t,v) : t + t* - Phi(v,v) in Omega}
// attached to a maximal tripotent e.
struct SiegelPoint {
  Element t;
  Element v;
};

// Cayley transform gamma(t,v) = ((e-t)^{-1} o (e+t), sqrt(2) (e-t)^{-1} o v)
// where o is the E_1 Jordan product on the first component and the unit-
// normalized halfspace action on the second.
SiegelPoint cayley(const JordanContext& ctx, const Element& z);

enum class SiegelClass { Interior, OnN, Outside };
SiegelClass siegel_membership(const JordanContext& ctx, const SiegelPoint& sp,
                              double margin = kPsdMargin);
// |t + t* - Phi(v,v)|, the defining residual of the CR-submanifold N.
double siegel_n_residual(const JordanContext& ctx, const SiegelPoint& sp);

// Canonical splitting of a product system into its tube part and its
// no-tube-factor part.
struct HullSplit {
  std::vector<int> tube_factors;
  std::vector<int> nontube_factors;
};
HullSplit hull_split(const TripleSystem& sys);

enum class HullKind { Convex, Polynomial, Rational };
// Convex and polynomial hulls of the Shilov boundary coincide with the
// closed domain; the rational hull is S_1 x closed(D_2) along the split.
bool hull_membership(const Element& z, HullKind kind, double tol = kEqTol);

// Checks that the Peirce reflection of e fixes e, maps sampled tripotents
// of the same rank to tripotents, and equals -id on E_1/2.
struct RuppReport {
  double fix_residual = 0.0;
  double tripotent_residual = 0.0;
  double half_space_residual = 0.0;
};
RuppReport rupp_symmetry_check(const Tripotent& e, int sample_count,
                               std::uint64_t seed);

}  // namespace shilov
