#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "cylspec/algebra/scalar.hpp"

namespace cylspec::modular {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1u) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1u;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

/// The `count` largest primes below 2^62, descending. Cached process-wide.
inline std::vector<std::uint64_t> large_primes(std::size_t count) {
  static std::mutex m;
  static std::vector<std::uint64_t> cache;
  std::lock_guard<std::mutex> lock(m);
  std::uint64_t candidate = cache.empty() ? (1ull << 62) - 1 : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

/// Incremental Chinese remaindering into the symmetric range (-M/2, M/2].
class CrtAccumulator {
 public:
  void add(const std::vector<std::uint64_t>& residues, std::uint64_t p) {
    if (modulus_ == 0) {
      values_.resize(residues.size());
      for (std::size_t i = 0; i < residues.size(); ++i) values_[i] = Integer(static_cast<unsigned long>(residues[i]));
      modulus_ = Integer(static_cast<unsigned long>(p));
      return;
    }
    const Integer pz(static_cast<unsigned long>(p));
    Integer mmod = modulus_ % pz;
    const std::uint64_t m_inv = inverse(mmod.get_ui(), p);
    for (std::size_t i = 0; i < residues.size(); ++i) {
      Integer cur = values_[i] % pz;
      if (cur < 0) cur += pz;
      std::uint64_t diff = (residues[i] + p - cur.get_ui()) % p;
      std::uint64_t t = mulmod(diff, m_inv, p);
      values_[i] += modulus_ * Integer(static_cast<unsigned long>(t));
    }
    modulus_ *= pz;
  }

  const Integer& modulus() const { return modulus_; }

  std::vector<Integer> symmetric() const {
    std::vector<Integer> out = values_;
    Integer half = modulus_ / 2;
    for (auto& v : out) {
      v %= modulus_;
      if (v < 0) v += modulus_;
      if (v > half) v -= modulus_;
    }
    return out;
  }

 private:
  Integer modulus_ = 0;
  std::vector<Integer> values_;
};

}  // namespace cylspec::modular
