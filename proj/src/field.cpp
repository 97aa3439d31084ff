#include "stsolve/field.hpp"

namespace stsolve {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; this base set is known to be exact for all
// 64-bit inputs.
bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 0; i + 1 < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldCtx::FieldCtx(uint64_t p) : p_(p) {
  if (p <= 2 || p >= (1ull << 62)) throw Error("modulus out of range (need 2 < p < 2^62)");
  if (!is_prime_u64(p)) throw Error("modulus is not prime");
  uint64_t d = p - 1;
  two_adicity_ = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++two_adicity_;
  }
  // Find an element of order 2^two_adicity: take g^odd for the first g that
  // is a quadratic non-residue (deterministic probe over small integers).
  ntt_root_ = 1;
  for (uint64_t g = 2; g < p; ++g) {
    if (powmod_u64(g, (p - 1) / 2, p) == p - 1) {
      ntt_root_ = powmod_u64(g, d, p);
      break;
    }
  }
}

uint64_t FieldCtx::pow(uint64_t a, uint64_t e) const { return powmod_u64(a % p_, e, p_); }

uint64_t FieldCtx::inv(uint64_t a) const {
  a %= p_;
  if (a == 0) throw ZeroInverse();
  return pow(a, p_ - 2);
}

void FieldCtx::batch_inv(std::vector<uint64_t>& a) const {
  if (a.empty()) return;
  std::vector<uint64_t> prefix(a.size());
  uint64_t acc = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] % p_ == 0) throw ZeroInverse();
    prefix[i] = acc;
    acc = mul(acc, a[i]);
  }
  uint64_t inv_acc = inv(acc);
  for (size_t i = a.size(); i-- > 0;) {
    uint64_t ai = a[i];
    a[i] = mul(inv_acc, prefix[i]);
    inv_acc = mul(inv_acc, ai);
  }
}

}  // namespace stsolve
