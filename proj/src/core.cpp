#include "shilov/core.hpp"

namespace shilov {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : tag) {
    h ^= c;
    h *= kFnvPrime;
  }
  return splitmix(seed ^ h);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix(seed + 0x632be59bd9b4e019ull * (index + 1));
}

int Rng::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(gen_);
}

cxd Rng::unit_phase() {
  const double theta = uniform(0.0, 2.0 * M_PI);
  return cxd(std::cos(theta), std::sin(theta));
}

CMat Rng::cgaussian_matrix(int rows, int cols) {
  CMat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cgaussian();
  return m;
}

CVec Rng::cgaussian_vector(int n) {
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = cgaussian();
  return v;
}

CVec Rng::unit_vector(int n) {
  CVec v = cgaussian_vector(n);
  double norm = v.norm();
  while (norm < 1e-12) {
    v = cgaussian_vector(n);
    norm = v.norm();
  }
  return v / norm;
}

CMat Rng::haar_unitary(int n) {
  const CMat g = cgaussian_matrix(n, n);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (int j = 0; j < n; ++j) {
    cxd d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0 ? d / a : cxd(1, 0));
  }
  return q;
}

}  // namespace shilov
