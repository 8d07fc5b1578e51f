#ifndef PAIROPS_FIELD_HPP
#define PAIROPS_FIELD_HPP

#include <cstdint>
#include <vector>

namespace pairops {

// Arithmetic in Z/p for a small prime p.  Elements are canonical
// representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(uint32_t p);  // throws std::invalid_argument unless p is prime

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b) % p_; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t inv(uint32_t a) const;  // throws std::domain_error on 0

  // Canonical representative of an arbitrary signed integer.
  uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

using Row = std::vector<uint32_t>;

}  // namespace pairops

#endif
