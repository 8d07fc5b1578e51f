#include "pairops/field.hpp"

#include <stdexcept>

namespace pairops {

namespace {
bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " is not prime");
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  // extended Euclid
  long long t = 0, newt = 1;
  long long r = p_, newr = a % p_;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

}  // namespace pairops
