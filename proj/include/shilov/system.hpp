#pragma once

#include <string>
#include <vector>

#include "shilov/core.hpp"

namespace shilov {

// A classical Cartan factor. Type I_{p,q} lives on complex p x q matrices
// and has rank q; type II_p (p = 2q+1 odd, p > 3) lives on antisymmetric
// p x p matrices and has rank q.
struct FactorSpec {
  enum class Kind { CartanI, CartanII };
  Kind kind;
  int p = 0;
  int q = 0;

  int rank() const { return q; }
  int dim() const;  // complex dimension of the ambient space
  int rows() const { return p; }
  int cols() const { return kind == Kind::CartanI ? q : p; }
  bool operator==(const FactorSpec&) const = default;
};

// A triple system is an ordered product of Cartan factors. Simple systems
// are products with one factor; nested products flatten in declared order.
class TripleSystem {
 public:
  TripleSystem() = default;

  static TripleSystem cartan_I(int p, int q);
  static TripleSystem cartan_II(int p);
  static TripleSystem product(const std::vector<TripleSystem>& factors);

  // Grammar: "I:<p>,<q>" | "II:<p>" | specs joined by 'x'.
  static TripleSystem parse(std::string_view spec);
  std::string to_string() const;

  int num_factors() const { return static_cast<int>(factors_.size()); }
  const FactorSpec& factor(int i) const { return factors_.at(i); }
  const std::vector<FactorSpec>& factors() const { return factors_; }

  int rank() const;
  int dim() const;  // complex dimension
  // Offset of factor i in the coordinate flattening.
  int factor_offset(int i) const;

  bool operator==(const TripleSystem&) const = default;

 private:
  std::vector<FactorSpec> factors_;
};

// A point of the ambient space E, stored as one complex matrix per factor.
// Elements are immutable values: all operations return new elements.
class Element {
 public:
  Element() = default;
  // Validates shapes; CartanII blocks are antisymmetrized when the
  // residual is below kRepairTol and rejected otherwise.
  Element(TripleSystem sys, std::vector<CMat> blocks);

  static Element zero(const TripleSystem& sys);

  const TripleSystem& system() const { return sys_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const CMat& block(int i) const { return blocks_.at(i); }

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(cxd scalar) const;

  // Frobenius inner product (u|v) = sum_i tr(u_i^* v_i), conjugate-linear
  // in *this.
  cxd inner(const Element& rhs) const;
  double norm() const;
  bool is_zero(double tol = kEqTol) const;

  // Column-major coordinates w.r.t. the fixed basis of E (type I: matrix
  // units; type II: normalized antisymmetric units E_ij - E_ji, i > j).
  CVec coordinates() const;
  static Element from_coordinates(const TripleSystem& sys, const CVec& c);
  static int coordinate_dim(const TripleSystem& sys) { return sys.dim(); }
  // k-th basis element of E.
  static Element basis_element(const TripleSystem& sys, int k);

 private:
  TripleSystem sys_;
  std::vector<CMat> blocks_;
};

inline Element operator*(cxd scalar, const Element& e) { return e * scalar; }

void require_same_system(const Element& a, const Element& b);

// Artifact plumbing for direct products.
Element embed_factor(const TripleSystem& sys, int index, const Element& x);
Element project_factor(const Element& z, int index);
TripleSystem factor_system(const TripleSystem& sys, int index);

// Apply an operator given in coordinate form (dim x dim) to an element.
Element apply_operator(const CMat& op, const Element& x);

}  // namespace shilov
