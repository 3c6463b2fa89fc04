#include "shilov/peirce.hpp"

#include <Eigen/Eigenvalues>

#include "shilov/spectral.hpp"

namespace shilov {

namespace {

void check_spectrum(const CMat& mu, double tol) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (mu + mu.adjoint()),
                                         Eigen::EigenvaluesOnly);
  for (const double ev : es.eigenvalues()) {
    const double d = std::min({std::abs(ev), std::abs(ev - 0.5), std::abs(ev - 1.0)});
    if (d > tol)
      throw CertificationError(
          "spectrum of the multiplication operator is not within " +
          std::to_string(tol) + " of {0, 1/2, 1} (eigenvalue " +
          std::to_string(ev) + ")");
  }
}

}  // namespace

PeirceDecomposition peirce_decompose(const Tripotent& e, double spectrum_tol) {
  const CMat mu = mult_operator(e.element());
  check_spectrum(mu, spectrum_tol);
  const int n = mu.rows();
  const CMat id = CMat::Identity(n, n);
  PeirceDecomposition pd{e,
                         mu * (2.0 * mu - id),
                         4.0 * mu * (id - mu),
                         (id - mu) * (id - 2.0 * mu),
                         {0, 0, 0}};
  pd.dims = {projector_rank(pd.p1), projector_rank(pd.p12), projector_rank(pd.p0)};
  return pd;
}

CMat peirce_reflection(const PeirceDecomposition& pd) {
  return pd.p1 - pd.p12 + pd.p0;
}

CMat peirce_reflection(const Tripotent& e) {
  return peirce_reflection(peirce_decompose(e));
}

CMat char_sigma(const PeirceDecomposition& pd) {
  return pd.p1 - cxd(0, 1) * pd.p12 - pd.p0;
}

CMat char_sigma(const Tripotent& a) { return char_sigma(peirce_decompose(a)); }

int projector_rank(const CMat& p) {
  // A numerically clean projector has trace equal to its rank.
  const double tr = p.trace().real();
  const int r = static_cast<int>(std::lround(tr));
  if (std::abs(tr - r) > 1e-6)
    throw CertificationError("projector trace " + std::to_string(tr) +
                             " is not near an integer");
  return r;
}

const CMat& RefinedPeirce::projector(int i, int j) const {
  const auto it = projectors.find({std::min(i, j), std::max(i, j)});
  if (it == projectors.end())
    throw DimensionError("refined Peirce index out of range");
  return it->second;
}

int RefinedPeirce::dim(int i, int j) const {
  return dims.at({std::min(i, j), std::max(i, j)});
}

RefinedPeirce refined_peirce(const Frame& frame) {
  frame.validate();
  const int r = frame.length();
  const int n = frame.system().dim();
  const CMat id = CMat::Identity(n, n);

  // Spectral projectors of each mu_{e_k} onto eigenvalues 1, 1/2, 0.
  std::vector<std::array<CMat, 3>> spec(r);
  for (int k = 0; k < r; ++k) {
    const auto pd = peirce_decompose(frame.member(k));
    spec[k] = {pd.p1, pd.p12, pd.p0};
  }

  RefinedPeirce out;
  out.rank = r;
  for (int i = 0; i <= r; ++i) {
    for (int j = i; j <= r; ++j) {
      CMat p = id;
      for (int k = 1; k <= r; ++k) {
        const int twice = (i == k ? 1 : 0) + (k == j ? 1 : 0);
        p = p * spec[k - 1][2 - twice];  // eigenvalue twice/2
      }
      out.dims[{i, j}] = projector_rank(p);
      out.projectors[{i, j}] = std::move(p);
    }
  }
  return out;
}

std::vector<bool> classify_tube(const TripleSystem& sys, bool verify) {
  std::vector<bool> flags;
  for (const auto& f : sys.factors())
    flags.push_back(f.kind == FactorSpec::Kind::CartanI && f.p == f.q);

  if (verify) {
    for (int i = 0; i < sys.num_factors(); ++i) {
      const TripleSystem sub = factor_system(sys, i);
      // Criterion 1: the Shilov boundary is totally real iff E_1/2 of a
      // maximal tripotent vanishes.
      const Tripotent emax = random_tripotent(sub, sub.rank(), 17);
      const auto pd = peirce_decompose(emax);
      const bool tube_by_half = pd.dims[1] == 0;
      // Criterion 2: no tube factor iff E_{i0} != 0 for all 1 <= i <= r.
      const auto rp = refined_peirce(spectral_decompose(emax.element()).frame);
      bool all_nonzero = true;
      for (int k = 1; k <= sub.rank(); ++k)
        if (rp.dim(0, k) == 0) all_nonzero = false;
      if (tube_by_half != flags[i] || all_nonzero == flags[i])
        throw CertificationError(
            "tube classification criteria disagree on factor " +
            std::to_string(i));
    }
  }
  return flags;
}

}  // namespace shilov
