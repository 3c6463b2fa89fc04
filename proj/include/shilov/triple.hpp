#pragma once

#include "shilov/system.hpp"

namespace shilov {

// {xyz} = (x y^* z + z y^* x)/2, applied factor-wise. Symmetric bilinear in
// the outer variables (x,z), conjugate-linear in the inner variable y.
Element triple_product(const Element& x, const Element& y, const Element& z);

// Coordinate matrix of the triple multiplication operator z -> {eez}.
CMat mult_operator(const Element& e);

struct TripotentTest {
  bool ok;
  double residual;  // |{aaa} - a|
};
TripotentTest is_tripotent(const Element& a, double tol = kEqTol);

// A tripotent certified by its residual |{eee} - e| <= tol * max(1, |e|).
class Tripotent {
 public:
  static Tripotent certify(const Element& e, double tol = kEqTol);

  const Element& element() const { return elem_; }
  double residual() const { return residual_; }
  const TripleSystem& system() const { return elem_.system(); }
  bool is_zero(double tol = kEqTol) const { return elem_.is_zero(tol); }

 private:
  Tripotent(Element e, double r) : elem_(std::move(e)), residual_(r) {}
  Element elem_;
  double residual_;
};

// True iff {eec} = 0 within tolerance. When true, asserts the paper's
// consequences: e lies in the zero Peirce space of c and e +- c are again
// tripotents.
bool are_orthogonal(const Tripotent& e, const Tripotent& c,
                    double tol = kEqTol);

}  // namespace shilov
