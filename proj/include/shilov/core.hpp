#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shilov {

using cxd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Default tolerances. Equality gates are relative to max(1, |input|); the
// cluster tolerance drives eigenvalue snapping and all numeric rank
// decisions; the PSD margin separates cone interior from cone boundary.
inline constexpr double kEqTol = 1e-9;
inline constexpr double kClusterTol = 1e-7;
inline constexpr double kPsdMargin = 1e-9;
// Antisymmetry repair gate for type-II input data: below this residual the
// input is symmetrized silently, above it the input is rejected.
inline constexpr double kRepairTol = 1e-12;

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double rel_scale(double norm) { return norm > 1.0 ? norm : 1.0; }

// Deterministic seed derivation: checks are seeded by (seed, name) and
// samples by (check seed, index), so results cannot depend on scheduling.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed ^ 0x9e3779b97f4a7c15ull) {}

  double gaussian() { return normal_(gen_); }
  double uniform() { return unif_(gen_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi);  // inclusive bounds

  cxd cgaussian() { return cxd(gaussian(), gaussian()) / std::sqrt(2.0); }
  cxd unit_phase();

  CMat cgaussian_matrix(int rows, int cols);
  CVec cgaussian_vector(int n);
  CVec unit_vector(int n);
  // Haar-distributed unitary via QR of a Ginibre matrix.
  CMat haar_unitary(int n);

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

}  // namespace shilov
