#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcmlab {

// splitmix64, used to fork independent RNG streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// FNV-1a over bytes; stable across platforms, used for instance hashes.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  return fnv1a64(s.data(), s.size(), h);
}

// Exact C(n, k) over the integers; throws on overflow rather than wrapping.
inline long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    if (r > (long long)4e17 / (n - k + i))
      throw std::overflow_error("binom overflow");
    r = r * (n - k + i) / i;  // divides exactly: r is C(n-k+i-1, i-1) scaled
  }
  return r;
}

inline long long factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  long long r = 1;
  for (int i = 2; i <= n; ++i) {
    if (r > (long long)4e17 / i) throw std::overflow_error("factorial overflow");
    r *= i;
  }
  return r;
}

}  // namespace gcmlab
