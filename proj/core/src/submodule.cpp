#include "gcmlab/submodule.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gcmlab {

namespace {
constexpr int kMaxLocalCap = 96;
constexpr int kMaxSaturationRounds = 64;
constexpr int kMaxHomogeneousLayers = 512;

bool vec_homogeneous(const Vec& v) {
  if (v.is_zero()) return true;
  int d = v.terms().front().m.degree();
  for (const auto& t : v.terms())
    if (t.m.degree() != d) return false;
  return true;
}
}  // namespace

struct Submodule::Cache {
  std::mutex mu;
  bool have_gb = false;
  std::vector<Vec> gb;
  int homogeneous = -1;
  std::map<int, long long> capped;
  long long local_len = -1;
};

Submodule::Submodule(Ring ring, int rank, std::vector<Vec> gens)
    : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<Cache>()) {
  if (rank < 1) throw std::invalid_argument("module rank must be positive");
  for (auto& g : gens) {
    if (!g.ring().compatible(ring_) || g.rank() != rank_)
      throw std::invalid_argument("generator from a different module");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Vec>& Submodule::groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->have_gb) {
    cache_->gb = buchberger(ring_, rank_, gens_, GBOptions{}).basis;
    cache_->have_gb = true;
  }
#ifndef NDEBUG
  else {
    for (const auto& g : gens_)
      if (!normal_form(g, cache_->gb, MonomialOrder::degrevlex()).is_zero())
        throw std::logic_error("module cache is inconsistent");
  }
#endif
  return cache_->gb;
}

Vec Submodule::reduce(const Vec& v) const {
  return normal_form(v, groebner(), MonomialOrder::degrevlex());
}

bool Submodule::contains(const Submodule& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Submodule::same_module(const Submodule& other) const {
  return groebner() == other.groebner();
}

std::vector<Vec> Submodule::syzygies() const {
  GBOptions opt;
  opt.track_syzygies = true;
  return buchberger(ring_, rank_, gens_, opt).syzygies;
}

long long Submodule::capped_quotient_length(int cap) const {
  if (cap < 0) throw std::invalid_argument("negative degree cutoff");
  if (cap == 0) return 0;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->capped.find(cap);
    if (it != cache_->capped.end()) return it->second;
  }
  bool homog;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->homogeneous < 0) {
      bool h = true;
      for (const auto& g : gens_)
        if (!vec_homogeneous(g)) {
          h = false;
          break;
        }
      cache_->homogeneous = h ? 1 : 0;
    }
    homog = cache_->homogeneous == 1;
  }
  long long n;
  if (homog) {
    n = count_standard_below(ring_, rank_, groebner(), cap);
  } else {
    GBOptions opt;
    opt.modulo_degree = cap;
    n = count_standard_below(ring_, rank_, buchberger(ring_, rank_, gens_, opt).basis,
                             cap);
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->capped[cap] = n;
  return n;
}

long long Submodule::local_quotient_length() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->local_len >= 0) return cache_->local_len;
  }
  long long prev = capped_quotient_length(1);
  long long result = -1;
  for (int c = 2; c <= kMaxLocalCap; ++c) {
    long long cur = capped_quotient_length(c);
    if (cur == prev) {
      result = prev;
      break;
    }
    prev = cur;
  }
  if (result < 0)
    throw std::runtime_error(
        "local length did not stabilize: quotient not of finite length at the "
        "origin");
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->local_len = result;
  return result;
}

std::vector<long long> Submodule::quotient_length_sequence(int count) const {
  std::vector<long long> out;
  for (int n = 0; n < count; ++n) out.push_back(capped_quotient_length(n + 1));
  return out;
}

Submodule Submodule::colon_by_ideal(const std::vector<Poly>& ideal_gens) const {
  int q = (int)ideal_gens.size();
  if (q == 0)
    // colon by the zero ideal is everything
    return Submodule(ring_, rank_, [&] {
      std::vector<Vec> units;
      for (int c = 0; c < rank_; ++c) units.push_back(Vec::unit(ring_, rank_, c));
      return units;
    }());
  // kernel of S^rank -> (S^rank / this)^q, v -> (a_j v)_j
  int big = rank_ * q;
  std::vector<Vec> images;
  for (int i = 0; i < rank_; ++i) {
    Vec img(ring_, big);
    for (int j = 0; j < q; ++j) {
      Vec part = Vec::embed(ideal_gens[(std::size_t)j], big, j * rank_ + i);
      img = img + part;
    }
    images.push_back(std::move(img));
  }
  std::vector<Vec> w;
  for (const auto& u : gens_)
    for (int j = 0; j < q; ++j) {
      std::vector<VTerm> ts;
      ts.reserve(u.terms().size());
      for (const auto& t : u.terms())
        ts.push_back(VTerm{t.c, t.m, t.comp + j * rank_});
      w.emplace_back(ring_, big, std::move(ts));
    }
  return Submodule(ring_, rank_, kernel_into_quotient(ring_, big, images, w));
}

Submodule Submodule::saturate_by_maximal() const {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ring_.nvars(); ++i) vars.push_back(ring_.var(i));
  Submodule prev = *this;
  for (int round = 0; round < kMaxSaturationRounds; ++round) {
    Submodule next = prev.colon_by_ideal(vars);
    if (next.same_module(prev)) return prev;
    prev = std::move(next);
  }
  throw std::runtime_error("saturation did not stabilize within 64 rounds");
}

std::vector<Vec> kernel_into_quotient(const Ring& ring, int rank_g,
                                      const std::vector<Vec>& images,
                                      const std::vector<Vec>& w_gens) {
  std::vector<Vec> all = images;
  all.insert(all.end(), w_gens.begin(), w_gens.end());
  GBOptions opt;
  opt.track_syzygies = true;
  GBResult r = buchberger(ring, rank_g, all, opt);
  std::vector<Vec> out;
  for (const auto& s : r.syzygies) {
    Vec head = s.head_components((int)images.size());
    if (!head.is_zero()) out.push_back(std::move(head));
  }
  return out;
}

std::vector<Vec> subquotient_relations(const Ring& ring, int ambient_rank,
                                       const std::vector<Vec>& k_gens,
                                       const std::vector<Vec>& w_gens) {
  return kernel_into_quotient(ring, ambient_rank, k_gens, w_gens);
}

std::vector<Vec> transpose_map(const Ring& ring, const std::vector<Vec>& cols,
                               int target_rank) {
  int src = (int)cols.size();
  std::vector<Vec> out;
  out.reserve((std::size_t)target_rank);
  for (int g = 0; g < target_rank; ++g) {
    std::vector<VTerm> ts;
    for (int f = 0; f < src; ++f) {
      Poly entry = cols[(std::size_t)f].component(g);
      for (const auto& t : entry.terms()) ts.push_back(VTerm{t.c, t.m, f});
    }
    out.emplace_back(ring, src, std::move(ts));
  }
  return out;
}

}  // namespace gcmlab
