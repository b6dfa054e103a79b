#include "lcsm/rng.hpp"

#include <cmath>
#include <numbers>

namespace lcsm {

double Rng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag, std::uint64_t index) {
  Rng mix(root ^ (tag * 0xD6E8FEB86659FD93ull) ^ (index * 0xA0761D6478BD642Full));
  mix.next_u64();
  return mix.next_u64();
}

}  // namespace lcsm
