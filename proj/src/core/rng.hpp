#ifndef PLD_CORE_RNG_HPP
#define PLD_CORE_RNG_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string_view>

namespace pld {

// Reproducible uniform sampling. The uint64 -> double conversion is done by
// hand so that streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Eigen::VectorXd point(int dim, double lo, double hi) {
    Eigen::VectorXd x(dim);
    for (int i = 0; i < dim; ++i) x[i] = uniform(lo, hi);
    return x;
  }

 private:
  std::mt19937_64 gen_;
};

// FNV-1a; used to derive independent per-check streams from one CLI seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace pld

#endif
