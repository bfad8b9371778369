#include "gcmlab/hilbert.hpp"

#include <stdexcept>

namespace gcmlab {

namespace {
constexpr int kFirstWindow = 6;
constexpr int kWindowStep = 2;
constexpr int kWindowLimit = 40;

std::vector<long long> differences(const std::vector<long long>& v) {
  std::vector<long long> d;
  if (v.size() < 2) return d;
  d.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(v[i + 1] - v[i]);
  return d;
}

// The last `tail` entries are all zero (and there are at least that many).
bool zero_tail(const std::vector<long long>& v, std::size_t tail) {
  if (v.size() < tail) return false;
  for (std::size_t i = v.size() - tail; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}
}  // namespace

long long HilbertData::poly_at(long long n) const {
  long long s = 0;
  for (int i = 0; i <= degree; ++i) {
    long long c = e[(std::size_t)i] * binom_conv(n + degree - i, degree - i);
    s += (i % 2 == 0) ? c : -c;
  }
  return s;
}

HilbertData fit_hilbert(const std::function<long long(int)>& h) {
  HilbertData out;
  for (int n = 0; n <= kFirstWindow; ++n) out.values.push_back(h(n));

  for (;;) {
    // smallest k whose (k+1)-st difference table has a firmly zero tail
    int found = -1;
    std::vector<long long> table = out.values;
    for (int k = 0; (std::size_t)k + 1 < out.values.size(); ++k) {
      std::vector<long long> next = differences(table);
      if (zero_tail(next, 3)) {
        found = k;
        break;
      }
      table = std::move(next);
    }
    if (found >= 0) {
      int d = found;
      // peel coefficients off via iterated tail differences:
      // r_0 = h, e_i = last value of the (d-i)-th difference of r_i,
      // r_{i+1}(n) = e_i C(n+d-i, d-i) - r_i(n)
      std::vector<long long> e;
      std::vector<long long> r = out.values;
      for (int i = 0; i <= d; ++i) {
        std::vector<long long> t = r;
        for (int k = 0; k < d - i; ++k) t = differences(t);
        if (t.empty()) throw std::logic_error("difference table exhausted");
        e.push_back(t.back());
        std::vector<long long> nr(r.size());
        for (std::size_t n = 0; n < r.size(); ++n)
          nr[n] = e.back() * binom_conv((long long)n + d - i, d - i) - r[n];
        r = std::move(nr);
      }
      // the alternating subtraction in the peel already bakes in the signs
      // of P(n) = sum (-1)^i e_i C(n+d-i, d-i), so e is usable as-is
      out.degree = d;
      out.e = e;

      // exactness check: the fit must reproduce two values beyond the window
      bool ok = true;
      int base = (int)out.values.size();
      for (int extra = 0; extra < 2; ++extra) {
        int n = base + extra;
        long long v = h(n);
        if (v != out.poly_at(n)) {
          ok = false;
          break;
        }
        out.values.push_back(v);
      }
      if (ok) {
        int post = 0;
        for (int n = (int)out.values.size() - 1; n >= 0; --n) {
          if (out.values[(std::size_t)n] != out.poly_at(n)) {
            post = n + 1;
            break;
          }
        }
        out.postulation = post;
        return out;
      }
      // mismatch: the tail was not yet polynomial, widen and retry
      out.e.clear();
      out.degree = 0;
    }
    int have = (int)out.values.size() - 1;
    if (have >= kWindowLimit)
      throw std::runtime_error(
          "numerical function did not become polynomial within the sampling "
          "window");
    for (int n = have + 1; n <= have + kWindowStep; ++n)
      out.values.push_back(h(n));
  }
}

}  // namespace gcmlab
