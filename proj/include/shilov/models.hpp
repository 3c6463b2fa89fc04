#pragma once

#include <vector>

#include "shilov/core.hpp"

namespace shilov {

// --- Sphere family -------------------------------------------------------

// z -> 2(a|z)a - z, the symmetry of the unit sphere at a (|a| = 1).
CVec sphere_symmetry(const CVec& a, const CVec& z, double tol = kEqTol);

// Dual unit sphere R = {(t,v) : t conj(t) - (v|v) = 1}.
double dual_sphere_residual(cxd t, const CVec& v);
bool dual_sphere_membership(cxd t, const CVec& v, double tol = kEqTol);

// CR-diffeomorphism U -> R, (t,v) -> (1/t, v/t) on the sphere chart t != 0.
struct DualPoint {
  cxd t;
  CVec v;
};
DualPoint sphere_to_dual(cxd t, const CVec& v, double tol = kEqTol);

// Cayley transform of the punctured sphere onto
// N = {(v,t) : t + conj(t) = (v|v)}: (v,t) -> (sqrt(2) v/(1-t), (1+t)/(1-t)).
struct SphereCayleyImage {
  CVec v;
  cxd t;
};
SphereCayleyImage sphere_cayley(const CVec& v, cxd t, double tol = kEqTol);
double heisenberg_sphere_residual(const CVec& v, cxd t);

// --- Generalized Heisenberg quadric --------------------------------------

struct QuadricPoint {
  CVec z;
  CVec w;
  double residual = 0.0;
};

// M = {(z,w) in E + F : w + w* = Phi(z,z)} for an Hermitian map
// Phi(u,v)_k = u^H M_k v and a conjugation w* = C conj(w) on F.
class QuadricModel {
 public:
  QuadricModel(std::vector<CMat> phi_matrices, CMat conjugation);

  static QuadricModel heisenberg();             // E = F = C, Phi(u,v) = conj(u) v
  static QuadricModel flat(int dim_e, int dim_f);  // Phi = 0 (Levi flat)
  static QuadricModel random_instance(int dim_e, int dim_f, std::uint64_t seed);

  int dim_e() const { return dim_e_; }
  int dim_f() const { return dim_f_; }

  CVec phi(const CVec& u, const CVec& v) const;
  CVec star(const CVec& w) const { return conj_ * w.conjugate(); }
  bool in_v(const CVec& w, double tol = kEqTol) const;

  double membership_residual(const CVec& z, const CVec& w) const;
  QuadricPoint make_point(const CVec& z, const CVec& v_free) const;

  // Group action (z,w) -> (z+e, w + Phi(e,z) + Phi(e,e)/2 + v).
  QuadricPoint action(const CVec& e, const CVec& v_center,
                      const QuadricPoint& p, double tol = kEqTol) const;
  // Symmetry at a = (e,c): (z,w) -> (2e - z, w + Phi(2e, e-z)).
  QuadricPoint symmetry(const QuadricPoint& a, const QuadricPoint& p,
                        double tol = kEqTol) const;

  // Levi form from exact brackets of the tangent fields X(z,w) =
  // (xi, Phi(z,xi)), compared against Phi; bundles the embedded-sphere
  // cross-check in C^2 ([JX,X]_a = 2ia and L_a(e,e) = -a).
  struct LeviReport {
    double model_deviation = 0.0;
    double sphere_bracket_residual = 0.0;
    double sphere_levi_residual = 0.0;
  };
  LeviReport levi_check() const;

  // Easy direction of the linear-map criterion: if Phi(eta z, eta z) =
  // eps Phi(z,z) on a spanning sample, (z,w) -> (eta z, eps w) preserves M.
  struct LinearCheck {
    bool compatible = false;
    bool preserves = false;
    double compat_residual = 0.0;
    double membership_residual = 0.0;
  };
  LinearCheck linear_check(const CMat& eta, const CMat& eps, int samples,
                           std::uint64_t seed, double tol = kEqTol) const;

 private:
  std::vector<CMat> phi_;  // one dim_e x dim_e matrix per F coordinate
  CMat conj_;
  int dim_e_ = 0;
  int dim_f_ = 0;
};

// --- 3-step nilpotent group (Example of class 3) --------------------------

struct Heis3Point {
  cxd z, w, v;
};

double heis3_residual(const Heis3Point& p);
bool heis3_membership(const Heis3Point& p, double tol = kEqTol);
// Group product (a,b,c) . (z,w,v).
Heis3Point heis3_product(const Heis3Point& a, const Heis3Point& x,
                         double tol = kEqTol);
Heis3Point heis3_symmetry(const Heis3Point& x);  // (z,w,v) -> (-z, w, -v)
Heis3Point heis3_dilation(double t, const Heis3Point& x);
Heis3Point heis3_sample(cxd z, double beta, double gamma);

// --- n = 5 realization of the integrable tower ---------------------------

struct Syin5Point {
  cxd z, w, v1, v2, u;
};

double syin5_residual(const Syin5Point& p);
bool syin5_membership(const Syin5Point& p, double tol = kEqTol);
// Solves the three defining equations from the free data (z, beta, v2,
// gamma), beta and gamma being the imaginary freedoms of w and u.
Syin5Point syin5_sample(cxd z, double beta, cxd v2, double gamma);
Syin5Point syin5_symmetry(const Syin5Point& p);

}  // namespace shilov
