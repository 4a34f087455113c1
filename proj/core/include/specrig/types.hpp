#ifndef SPECRIG_TYPES_HPP
#define SPECRIG_TYPES_HPP

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace specrig {

using Complex = std::complex<double>;

// Small spatial vector; dimensions stay tiny so keep storage on the stack.
constexpr int kMaxDim = 8;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

inline Vec vec1(double x) {
  Vec v(1);
  v << x;
  return v;
}
inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

// Base space R^d or Z^d; the dual space is R^d resp. T^d (angles in [-pi,pi)).
enum class Space { continuous, discrete };

struct DomainTag {
  Space kind = Space::continuous;
  int dim = 1;

  bool operator==(const DomainTag&) const = default;
  bool dual_is_torus() const { return kind == Space::discrete; }
};

struct Box {
  Vec lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
  double side(int l) const { return hi[l] - lo[l]; }
  bool contains(const Vec& x) const {
    for (int l = 0; l < dim(); ++l)
      if (x[l] < lo[l] || x[l] >= hi[l]) return false;
    return true;
  }
};

// Regular grid: points origin + step * k, k in [0, extent_l) per axis.
struct GridSpec {
  Vec origin;
  double step = 1.0;
  std::vector<int> extent;

  int dim() const { return static_cast<int>(extent.size()); }
  std::int64_t size() const {
    std::int64_t n = 1;
    for (int e : extent) n *= e;
    return n;
  }
  Vec point(std::int64_t flat) const {
    Vec x = origin;
    for (int l = dim() - 1; l >= 0; --l) {
      x[l] += step * static_cast<double>(flat % extent[l]);
      flat /= extent[l];
    }
    return x;
  }
};

struct Atom {
  Vec loc;
  double weight = 0.0;
};

// ---- error types used across the modules ----

struct QuadratureDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularGram : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ApproximantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ClusteredZeros : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmbeddingNotPSD : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IOFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- seeding ----

// splitmix64, used to derive independent per-cell seeds from (seed, index)
// so parallel sweeps give the same results as sequential ones.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double fold_to_pi(double theta) {
  // representative in [-pi, pi)
  double t = std::remainder(theta, 2.0 * M_PI);
  if (t >= M_PI) t -= 2.0 * M_PI;
  if (t < -M_PI) t += 2.0 * M_PI;
  return t;
}

}  // namespace specrig

#endif
