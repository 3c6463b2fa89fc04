#pragma once

#include <functional>
#include <vector>

#include "shilov/core.hpp"

namespace shilov {

// Linear subspace of R^N kept as an orthonormal column basis; ranks come
// from singular values against the cluster tolerance.
class Subspace {
 public:
  static Subspace span(int ambient, const RMat& vectors,
                       double tol = kClusterTol);
  static Subspace zero(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const RMat& basis() const { return basis_; }

  double distance(const RVec& v) const;
  bool contains(const RVec& v, double tol = kClusterTol) const;
  // Max distance of the other basis from this span.
  double containment_residual(const Subspace& other) const;
  Subspace sum(const Subspace& other, double tol = kClusterTol) const;

 private:
  int ambient_ = 0;
  RMat basis_;
};

// A real Lie algebra of complex matrices: a linearly independent real
// basis together with the structure constants solved from the ambient
// commutators. Closure is certified, not assumed.
class MatrixLieAlgebra {
 public:
  static MatrixLieAlgebra from_basis(int ambient_size,
                                     std::vector<CMat> basis);

  int ambient_size() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const CMat& basis(int i) const { return basis_.at(i); }

  // Real coordinates w.r.t. the basis (least squares); the optional
  // residual reports the distance from the span.
  RVec coordinates(const CMat& x, double* residual = nullptr) const;
  CMat matrix(const RVec& coords) const;

  // Coordinate bracket through the structure constants (real bilinear).
  RVec bracket_coords(const RVec& x, const RVec& y) const;
  // Complex-bilinear bracket of the abstract complexification g + ig.
  CVec complexified_bracket(const CVec& x, const CVec& y) const;

  // Max distance of an ambient commutator of basis pairs from the span.
  double closure_residual() const { return closure_residual_; }
  bool is_closed(double tol = kClusterTol) const {
    return closure_residual_ <= tol;
  }
  double jacobi_residual() const;

 private:
  int n_ = 0;
  std::vector<CMat> basis_;
  RMat coord_matrix_;  // 2 n^2 x N stacked real coordinates
  Eigen::ColPivHouseholderQR<RMat> solver_;
  std::vector<std::vector<RVec>> c_;
  double closure_residual_ = 0.0;
};

// Bracket-respecting linear involution, stored as its coordinate matrix.
struct InvolutionData {
  RMat coord_matrix;

  static InvolutionData from_map(const MatrixLieAlgebra& g,
                                 const std::function<CMat(const CMat&)>& tau,
                                 double tol = 1e-9);
};

// g = l + m with l = Fix(tau), m = Fix(-tau); m is a Lie triple system and
// a = [m,m] + m is an ideal.
struct FixDecomposition {
  Subspace l, m, a;
  double ll_residual = 0.0;  // [l,l] in l
  double lm_residual = 0.0;  // [l,m] in m
  double mm_residual = 0.0;  // [m,m] in l
  double ideal_residual = 0.0;
};
FixDecomposition fix_decompose(const MatrixLieAlgebra& g,
                               const InvolutionData& tau);

// Data of the Lie-theoretic construction: subalgebra coordinates of k and
// h inside g plus a complex structure J on h (expressed in the h basis).
struct CRAlgebraData {
  MatrixLieAlgebra g;
  RMat k_basis;  // N x dim k (zero columns allowed)
  RMat h_basis;  // N x dim h
  RMat j_on_h;   // dim h x dim h

  int dim_h() const { return static_cast<int>(h_basis.cols()); }
  int dim_k() const { return static_cast<int>(k_basis.cols()); }
};
// Validates J^2 = -id, the ambient norm isometry of J and h disjoint
// from k; throws DomainError otherwise.
CRAlgebraData make_cr_data(MatrixLieAlgebra g, RMat k_basis, RMat h_basis,
                           RMat j_on_h);

// Chain h^k = h^{k-1} + [h, h^{k-1}] with its growth length kappa, the
// codimension of the stable term (totally real defect) and the minimality
// test g = k + b for the subalgebra b generated by h.
struct Filtration {
  std::vector<int> dims;
  int kappa = 0;
  int trr_codim = 0;
  bool minimal = false;
};
Filtration filtration(const MatrixLieAlgebra& g, const RMat& h_basis,
                      const RMat& k_basis = RMat());

// Integrability criterion [h^-, h^-] in complexified k, where
// h^- = {Jx - ix : x in h}.
struct IntegrabilityResult {
  bool integrable = false;
  double residual = 0.0;
};
IntegrabilityResult integrability_check(const CRAlgebraData& data,
                                        double tol = kEqTol);

// Strictly lower triangular matrices with h the first subdiagonal:
// symmetric, minimal, never integrable for n >= 3.
CRAlgebraData build_vorh(int n);

// Nilpotent tower algebra of the staircase pattern (z_k complex on odd
// subdiagonals, purely imaginary alpha_k on even ones) with h cut off at
// depth d: integrable with kappa = floor((n-1)/(2d-1)).
CRAlgebraData build_tett(int n, int d);

// su(p+q) with the block-sign involution; h = m are the off-diagonal
// blocks with J the block rotation (b, c) -> (ib, -ic), k = l.
struct SuSigmaData {
  CRAlgebraData data;
  FixDecomposition fix;
  double m_generates_residual;  // m + [m,m] = g
};
SuSigmaData build_su_sigma(int p, int q);

// Summary used by the CLI and the test suites.
struct LieReport {
  int ambient = 0;
  int dim_g = 0;
  int dim_h = 0;
  std::vector<int> chain;
  int kappa = 0;
  int trr_codim = 0;
  bool minimal = false;
  bool integrable = false;
  double closure_residual = 0.0;
  double integrability_residual = 0.0;
  double jacobi_residual = 0.0;
};
LieReport analyze(const CRAlgebraData& data);

}  // namespace shilov
