#pragma once

#include <vector>

#include "shilov/peirce.hpp"
#include "shilov/triple.hpp"

namespace shilov {

// Ordered family (e_1, ..., e_r) of pairwise orthogonal minimal tripotents
// whose length equals the rank of the system.
class Frame {
 public:
  Frame(TripleSystem sys, std::vector<Tripotent> members);

  const TripleSystem& system() const { return sys_; }
  int length() const { return static_cast<int>(members_.size()); }
  const Tripotent& member(int j) const { return members_.at(j); }
  const std::vector<Tripotent>& members() const { return members_; }

  // Checks minimality, pairwise orthogonality and length; throws FrameError.
  void validate(double tol = kEqTol) const;

 private:
  TripleSystem sys_;
  std::vector<Tripotent> members_;
};

// a = lambda_1 e_1 + ... + lambda_r e_r with descending lambda >= 0.
struct SpectralDecomposition {
  Frame frame;
  RVec lambdas;
  double residual;  // |a - sum lambda_j e_j|

  Element reconstruct() const;
};

// Type I factors decompose by SVD (minimal tripotents u_j v_j^*); type II
// factors by the canonical antisymmetric pair form (minimal tripotents of
// matrix rank 2). Product systems merge factor decompositions and sort.
SpectralDecomposition spectral_decompose(const Element& a);

double spectral_norm(const Element& a);

enum class Membership { Interior, Boundary, Exterior };
Membership domain_membership(const Element& a, double tol = kEqTol);

// True iff all singular values equal 1 within tol.
bool shilov_membership(const Element& z, double tol = kEqTol);

// Unique splitting a = e + u with e tripotent and u in D cap E_0(e).
// Singular values within snap_tol of 1 are treated as exactly 1.
struct TripotentPart {
  Tripotent e;
  Element u;
};
TripotentPart tripotent_part(const Element& a, double tol = kEqTol,
                             double snap_tol = kClusterTol);

enum class RankClass { Zero, Minimal, Intermediate, Maximal };
RankClass tripotent_rank_class(const Tripotent& e);

// Deterministic seeded tripotent of the requested rank: in products, ranks
// fill factors greedily in declared order.
Tripotent random_tripotent(const TripleSystem& sys, int rank,
                           std::uint64_t seed);

// Gaussian test point (coordinates i.i.d. complex normal times scale).
Element random_element(const TripleSystem& sys, std::uint64_t seed,
                       double scale = 1.0);

// Seeded point with prescribed singular values over a random frame.
Element random_with_singular_values(const TripleSystem& sys, const RVec& lambdas,
                                    std::uint64_t seed);

}  // namespace shilov
