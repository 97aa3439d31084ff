#ifndef STSOLVE_FIELD_HPP
#define STSOLVE_FIELD_HPP

// Exact arithmetic in a prime field F_p for a runtime-chosen word-sized prime,
// 2 < p < 2^62. Elements are canonical residues stored in uint64_t; products
// go through a 128-bit accumulator, so everything is exact.

#include <cstdint>
#include <vector>

#include "stsolve/errors.hpp"

namespace stsolve {

bool is_prime_u64(uint64_t n);

class FieldCtx {
 public:
  explicit FieldCtx(uint64_t p);

  uint64_t p() const { return p_; }

  uint64_t reduce(uint64_t a) const { return a % p_; }
  uint64_t reduce_signed(long long a) const {
    long long r = a % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<uint64_t>(r);
  }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;  // no overflow: a, b < 2^62
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p_);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  // Modular inverse; throws ZeroInverse for a = 0.
  uint64_t inv(uint64_t a) const;

  // Montgomery trick: invert all entries with a single field inversion.
  // Throws ZeroInverse if any entry is zero.
  void batch_inv(std::vector<uint64_t>& a) const;

  // 2-adic structure of the multiplicative group, used by the NTT path:
  // p - 1 = odd * 2^two_adicity, ntt_root has multiplicative order
  // 2^two_adicity.
  unsigned two_adicity() const { return two_adicity_; }
  uint64_t ntt_root() const { return ntt_root_; }

 private:
  uint64_t p_;
  unsigned two_adicity_;
  uint64_t ntt_root_;
};

}  // namespace stsolve

#endif
