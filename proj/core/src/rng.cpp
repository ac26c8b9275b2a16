#include "ionsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ionsim {

unsigned Rng::poisson(double mean) {
  if (mean < 0.0) throw std::invalid_argument("poisson: mean must be >= 0");
  unsigned total = 0;
  while (mean > 64.0) {
    total += poisson(64.0);
    mean -= 64.0;
  }
  const double limit = std::exp(-mean);
  double product = 1.0;
  unsigned k = 0;
  for (;;) {
    product *= uniform();
    if (product <= limit) return total + k;
    ++k;
  }
}

} // namespace ionsim
