#include "shilov/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <numeric>

namespace shilov {

namespace {

struct FactorDecomp {
  std::vector<double> lambdas;
  std::vector<CMat> trips;
};

FactorDecomp decompose_cartan_I(const FactorSpec& f, const CMat& z) {
  FactorDecomp out;
  CMat u, v;
  RVec sv;
  if (z.norm() == 0.0) {
    // Canonical standard frame: diagonal matrix units.
    u = CMat::Identity(f.p, f.p);
    v = CMat::Identity(f.q, f.q);
    sv = RVec::Zero(f.q);
  } else {
    Eigen::JacobiSVD<CMat> svd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
    u = svd.matrixU();
    v = svd.matrixV();
    sv = svd.singularValues();
  }
  for (int j = 0; j < f.q; ++j) {
    out.lambdas.push_back(sv(j));
    out.trips.push_back(u.col(j) * v.col(j).adjoint());
  }
  return out;
}

// Canonical pair form of an antisymmetric matrix: repeatedly take the top
// eigenpair of (rem rem^*), build the partner b = rem conj(v)/lambda, emit
// the rank-2 tripotent b v^T - v b^T and deflate. The zero eigenvalue part
// is completed with standard-basis pairs.
FactorDecomp decompose_cartan_II(const FactorSpec& f, const CMat& z) {
  FactorDecomp out;
  const double scale = rel_scale(z.norm());
  const double lambda_floor = 1e-10 * scale;

  CMat rem = z;
  std::vector<CVec> used;
  while (static_cast<int>(out.lambdas.size()) < f.q) {
    Eigen::SelfAdjointEigenSolver<CMat> es(rem * rem.adjoint());
    const int top = f.p - 1;  // eigenvalues ascend
    const double lambda = std::sqrt(std::max(0.0, es.eigenvalues()(top)));
    if (lambda <= lambda_floor) break;
    const CVec v = es.eigenvectors().col(top);
    CVec b = rem * v.conjugate() / lambda;
    b -= v * v.dot(b);
    const double bn = b.norm();
    if (bn < 0.5)
      throw CertificationError("antisymmetric pair extraction failed");
    b /= bn;
    const CMat e = b * v.transpose() - v * b.transpose();
    rem -= lambda * e;
    out.lambdas.push_back(lambda);
    out.trips.push_back(e);
    used.push_back(v);
    used.push_back(b);
  }

  // Complete the frame with zero singular values from the orthocomplement.
  int cursor = 0;
  auto next_unit = [&]() {
    while (cursor < f.p) {
      CVec w = CVec::Zero(f.p);
      w(cursor++) = 1.0;
      for (const auto& x : used) w -= x * x.dot(w);
      const double n = w.norm();
      if (n > 0.5) {
        w /= n;
        used.push_back(w);
        return w;
      }
    }
    throw CertificationError("antisymmetric frame completion failed");
  };
  while (static_cast<int>(out.lambdas.size()) < f.q) {
    const CVec v = next_unit();
    const CVec b = next_unit();
    out.lambdas.push_back(0.0);
    out.trips.push_back(b * v.transpose() - v * b.transpose());
  }
  return out;
}

}  // namespace

Frame::Frame(TripleSystem sys, std::vector<Tripotent> members)
    : sys_(std::move(sys)), members_(std::move(members)) {
  for (const auto& m : members_)
    if (!(m.system() == sys_))
      throw FrameError("frame member belongs to a different system");
}

void Frame::validate(double tol) const {
  if (length() != sys_.rank())
    throw FrameError("frame length " + std::to_string(length()) +
                     " differs from system rank " + std::to_string(sys_.rank()));
  for (int j = 0; j < length(); ++j) {
    const auto pd = peirce_decompose(members_[j]);
    if (pd.dims[0] != 1)
      throw FrameError("frame member " + std::to_string(j) +
                       " is not minimal (dim E_1 = " +
                       std::to_string(pd.dims[0]) + ")");
  }
  for (int i = 0; i < length(); ++i)
    for (int j = i + 1; j < length(); ++j)
      if (!are_orthogonal(members_[i], members_[j], tol))
        throw FrameError("frame members " + std::to_string(i) + " and " +
                         std::to_string(j) + " are not orthogonal");
}

Element SpectralDecomposition::reconstruct() const {
  Element acc = Element::zero(frame.system());
  for (int j = 0; j < frame.length(); ++j)
    acc = acc + frame.member(j).element() * cxd(lambdas(j), 0.0);
  return acc;
}

SpectralDecomposition spectral_decompose(const Element& a) {
  const TripleSystem& sys = a.system();
  struct Entry {
    double lambda;
    Element trip;
  };
  std::vector<Entry> entries;
  for (int i = 0; i < sys.num_factors(); ++i) {
    const auto& f = sys.factor(i);
    const FactorDecomp fd = f.kind == FactorSpec::Kind::CartanI
                                ? decompose_cartan_I(f, a.block(i))
                                : decompose_cartan_II(f, a.block(i));
    const TripleSystem sub = factor_system(sys, i);
    for (std::size_t j = 0; j < fd.lambdas.size(); ++j)
      entries.push_back(
          {fd.lambdas[j], embed_factor(sys, i, Element(sub, {fd.trips[j]}))});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.lambda > y.lambda; });

  std::vector<Tripotent> members;
  RVec lambdas(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) {
    lambdas(static_cast<int>(j)) = entries[j].lambda;
    members.push_back(Tripotent::certify(entries[j].trip));
  }
  SpectralDecomposition sd{Frame(sys, std::move(members)), lambdas, 0.0};
  sd.residual = (a - sd.reconstruct()).norm();
  return sd;
}

double spectral_norm(const Element& a) {
  double best = 0.0;
  for (int i = 0; i < a.num_blocks(); ++i) {
    const CMat& b = a.block(i);
    if (b.norm() == 0.0) continue;
    Eigen::JacobiSVD<CMat> svd(b);
    best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

Membership domain_membership(const Element& a, double tol) {
  const double n = spectral_norm(a);
  if (n < 1.0 - tol) return Membership::Interior;
  if (n <= 1.0 + tol) return Membership::Boundary;
  return Membership::Exterior;
}

bool shilov_membership(const Element& z, double tol) {
  const auto sd = spectral_decompose(z);
  for (const double l : sd.lambdas)
    if (std::abs(l - 1.0) > tol) return false;
  return true;
}

TripotentPart tripotent_part(const Element& a, double tol, double snap_tol) {
  if (spectral_norm(a) > 1.0 + tol)
    throw DomainError("tripotent_part requires a point of the closed domain");
  const auto sd = spectral_decompose(a);
  Element e = Element::zero(a.system());
  for (int j = 0; j < sd.frame.length(); ++j)
    if (sd.lambdas(j) >= 1.0 - snap_tol)
      e = e + sd.frame.member(j).element();
  return {Tripotent::certify(e), a - e};
}

RankClass tripotent_rank_class(const Tripotent& e) {
  if (e.is_zero()) return RankClass::Zero;
  const auto pd = peirce_decompose(e);
  if (pd.dims[2] == 0) return RankClass::Maximal;
  if (pd.dims[0] == 1) return RankClass::Minimal;
  return RankClass::Intermediate;
}

Tripotent random_tripotent(const TripleSystem& sys, int rank,
                           std::uint64_t seed) {
  if (rank < 0 || rank > sys.rank())
    throw DomainError("requested tripotent rank " + std::to_string(rank) +
                      " outside 0.." + std::to_string(sys.rank()));
  Rng rng(mix_seed(seed, "random_tripotent"));
  Element acc = Element::zero(sys);
  int remaining = rank;
  for (int i = 0; i < sys.num_factors(); ++i) {
    const auto& f = sys.factor(i);
    const int k = std::min(remaining, f.rank());
    remaining -= k;
    CMat g = rng.cgaussian_matrix(f.rows(), f.cols());
    if (f.kind == FactorSpec::Kind::CartanII)
      g = 0.5 * (g - g.transpose().eval());
    if (k == 0) continue;
    const TripleSystem sub = factor_system(sys, i);
    const auto sd = spectral_decompose(Element(sub, {g}));
    Element e = Element::zero(sub);
    for (int j = 0; j < k; ++j) e = e + sd.frame.member(j).element();
    acc = acc + embed_factor(sys, i, e);
  }
  return Tripotent::certify(acc);
}

Element random_element(const TripleSystem& sys, std::uint64_t seed,
                       double scale) {
  Rng rng(mix_seed(seed, "random_element"));
  CVec c = rng.cgaussian_vector(sys.dim()) * scale;
  return Element::from_coordinates(sys, c);
}

Element random_with_singular_values(const TripleSystem& sys, const RVec& lambdas,
                                    std::uint64_t seed) {
  if (lambdas.size() != sys.rank())
    throw DimensionError("need one singular value per rank slot");
  const Element g = random_element(sys, mix_seed(seed, "frame_carrier"));
  const auto sd = spectral_decompose(g);
  Element acc = Element::zero(sys);
  for (int j = 0; j < sd.frame.length(); ++j)
    acc = acc + sd.frame.member(j).element() * cxd(lambdas(j), 0.0);
  return acc;
}

}  // namespace shilov
