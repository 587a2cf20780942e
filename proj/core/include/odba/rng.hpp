#ifndef ODBA_RNG_HPP
#define ODBA_RNG_HPP

#include <cstdint>
#include <random>

#include "odba/types.hpp"

namespace odba {

// Deterministic RNG used everywhere a sample is drawn.  Doubles are derived
// from the raw 64-bit stream directly so that an identical seed yields an
// identical sample sequence on every platform (std::uniform_real_distribution
// is not specified bit-exactly).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on the complex disk |z| < radius.
  Cplx disk(double radius) {
    for (;;) {
      const double x = uniform(-1.0, 1.0);
      const double y = uniform(-1.0, 1.0);
      if (x * x + y * y < 1.0) return radius * Cplx(x, y);
    }
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace odba

#endif
