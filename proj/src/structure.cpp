#include "garside/structure.hpp"

namespace garside {

Simple GarsideStructure::tau_power(Simple s, long k) const {
  const long order = tau_order();
  k %= order;
  if (k < 0) k += order;
  if (2 * k > order) {
    for (long i = k; i < order; ++i) s = tau_inverse(s);
  } else {
    for (long i = 0; i < k; ++i) s = tau(s);
  }
  return s;
}

ReverseStructure::ReverseStructure(const GarsideStructure& base)
    : base_(base), name_(std::string(base.name()) + "-reverse") {}

}  // namespace garside
