#include "gcmlab/homology.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

namespace gcmlab {

namespace {

using Col = std::vector<Poly>;  // one column, indexed by target component
using Mat = std::vector<Col>;

// maps[k] is d_(k+1): columns indexed by a basis of F_(k+1), entries by a
// basis of F_k. rank0 is the rank of F_0; every other rank is a column
// count. The prefix is exact at every interior position by construction,
// and stays so through pruning.
struct Chain {
  int rank0 = 0;
  std::vector<Mat> maps;
  bool complete = false;
  bool started = false;
};

int chain_rank(const Chain& ch, int j) {
  if (j == 0) return ch.rank0;
  if (j <= (int)ch.maps.size()) return (int)ch.maps[(std::size_t)j - 1].size();
  return 0;
}

Mat to_mat(const std::vector<Vec>& cols, int rows) {
  Mat m;
  m.reserve(cols.size());
  for (const auto& v : cols) {
    Col c;
    c.reserve((std::size_t)rows);
    for (int i = 0; i < rows; ++i) c.push_back(v.component(i));
    m.push_back(std::move(c));
  }
  return m;
}

std::vector<Vec> to_vecs(const Ring& r, const Mat& m, int rows) {
  std::vector<Vec> out;
  out.reserve(m.size());
  for (const auto& c : m) {
    std::vector<VTerm> ts;
    for (int i = 0; i < rows; ++i)
      for (const auto& t : c[(std::size_t)i].terms())
        ts.push_back(VTerm{t.c, t.m, i});
    out.emplace_back(r, rows, std::move(ts));
  }
  return out;
}

bool is_unit_entry(const Poly& p) { return !p.is_zero() && p.degree() == 0; }

// Split off the trivial summand at a unit pivot: entry (row, col) of
// maps[k]. Column operations transfer to row operations one map up, row
// operations to column operations one map down; afterwards the pivot row
// and column are deleted together with the provably zero row above and
// column below.
void eliminate(const Ring& ring, Chain& ch, int k, int c, int r) {
  const auto& F = ring.field();
  Mat& D = ch.maps[(std::size_t)k];
  coeff_t winv = F.inv(D[(std::size_t)c][(std::size_t)r].terms()[0].c);
  int rows = chain_rank(ch, k);

  for (int c2 = 0; c2 < (int)D.size(); ++c2) {
    if (c2 == c) continue;
    Poly q = D[(std::size_t)c2][(std::size_t)r];
    if (q.is_zero()) continue;
    Poly f = q.scaled(winv);
    for (int r2 = 0; r2 < rows; ++r2)
      D[(std::size_t)c2][(std::size_t)r2] =
          D[(std::size_t)c2][(std::size_t)r2] -
          f * D[(std::size_t)c][(std::size_t)r2];
    if (k + 1 < (int)ch.maps.size())
      for (auto& col : ch.maps[(std::size_t)k + 1])
        col[(std::size_t)c] = col[(std::size_t)c] + f * col[(std::size_t)c2];
  }

  for (int r2 = 0; r2 < rows; ++r2) {
    if (r2 == r) continue;
    Poly p = D[(std::size_t)c][(std::size_t)r2];
    if (p.is_zero()) continue;
    Poly f = p.scaled(winv);
    D[(std::size_t)c][(std::size_t)r2] = ring.zero();
    if (k >= 1) {
      Mat& B = ch.maps[(std::size_t)k - 1];
      int brows = chain_rank(ch, k - 1);
      for (int rr = 0; rr < brows; ++rr)
        B[(std::size_t)r][(std::size_t)rr] =
            B[(std::size_t)r][(std::size_t)rr] +
            f * B[(std::size_t)r2][(std::size_t)rr];
    }
  }

  if (k + 1 < (int)ch.maps.size()) {
    for (auto& col : ch.maps[(std::size_t)k + 1]) {
      if (!col[(std::size_t)c].is_zero())
        throw std::logic_error("pruned generator still occurs one map up");
      col.erase(col.begin() + c);
    }
  }
  if (k >= 1) {
    Mat& B = ch.maps[(std::size_t)k - 1];
    for (const auto& e : B[(std::size_t)r])
      if (!e.is_zero())
        throw std::logic_error("pruned target still hit one map down");
    B.erase(B.begin() + r);
  } else {
    ch.rank0 -= 1;
  }
  D.erase(D.begin() + c);
  for (auto& col : D) col.erase(col.begin() + r);
}

void prune(const Ring& ring, Chain& ch) {
  bool again = true;
  while (again) {
    again = false;
    for (int k = 0; k < (int)ch.maps.size() && !again; ++k) {
      const Mat& D = ch.maps[(std::size_t)k];
      int rows = chain_rank(ch, k);
      for (int c = 0; c < (int)D.size() && !again; ++c)
        for (int r = 0; r < rows && !again; ++r)
          if (is_unit_entry(D[(std::size_t)c][(std::size_t)r])) {
            eliminate(ring, ch, k, c, r);
            again = true;
          }
    }
  }
  // a map emptied by elimination ends the resolution; anything stacked on a
  // zero target carries nothing
  for (std::size_t k = 0; k < ch.maps.size(); ++k)
    if (ch.maps[k].empty()) {
      ch.maps.resize(k);
      ch.complete = true;
      break;
    }
}

}  // namespace

struct LocalModule::Cache {
  std::mutex mu;
  std::optional<Submodule> rel;
  Chain chain;
  std::map<int, LocalModule> ext;
  std::optional<HilbertData> hs;
  std::optional<long long> len;
  std::map<int, long long> lc;
  std::optional<int> dim;
  std::optional<int> depth;
};

LocalModule::LocalModule(Ring ring, int rank, std::vector<Vec> relations)
    : ring_(std::move(ring)),
      rank_(rank),
      relations_(std::move(relations)),
      cache_(std::make_shared<Cache>()) {
  if (rank_ < 0) throw std::invalid_argument("negative rank");
  for (const auto& v : relations_)
    if (!v.ring().compatible(ring_) || v.rank() != rank_)
      throw std::invalid_argument("relation from a different module");
}

LocalModule LocalModule::cyclic(const IdealHandle& ideal) {
  std::vector<Vec> rels;
  for (const auto& g : ideal.effective_gens())
    if (!g.is_zero()) rels.push_back(Vec::embed(g, 1, 0));
  return LocalModule(ideal.ring().ambient(), 1, std::move(rels));
}

const Submodule& LocalModule::relation_module() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->rel) cache_->rel = Submodule(ring_, rank_, relations_);
  return *cache_->rel;
}

namespace {

void extend_chain(const Ring& ring, const Submodule& rel, Chain& ch,
                  int steps) {
  if (!ch.started) {
    ch.started = true;
    const auto& gb = rel.groebner();
    if (gb.empty()) {
      ch.complete = true;
    } else {
      ch.maps.push_back(to_mat(gb, ch.rank0));
      prune(ring, ch);
    }
  }
  while (!ch.complete && (int)ch.maps.size() < steps) {
    int k = (int)ch.maps.size();
    int rows = chain_rank(ch, k - 1);
    auto cols = to_vecs(ring, ch.maps.back(), rows);
    auto syz = Submodule(ring, rows, cols).syzygies();
    std::vector<Vec> keep;
    for (auto& s : syz)
      if (!s.is_zero()) keep.push_back(std::move(s));
    if (keep.empty()) {
      ch.complete = true;
      break;
    }
    // the pairwise relations are redundant as a generating set; the reduced
    // basis of the module they span is the canonical trimmed choice
    Submodule trimmed(ring, (int)cols.size(), keep);
    ch.maps.push_back(to_mat(trimmed.groebner(), (int)cols.size()));
    prune(ring, ch);
  }
}

LocalModule zero_module(const Ring& ring) {
  return LocalModule(ring, 1, {Vec::unit(ring, 1, 0)});
}

}  // namespace

Resolution free_resolution(const LocalModule& m, int steps) {
  if (steps < 0) throw std::invalid_argument("negative resolution length");
  if (steps > m.ring().nvars())
    throw std::invalid_argument("resolution length exceeds the variable count");
  auto cache = m.cache_;
  std::lock_guard<std::mutex> lock(cache->mu);
  if (!cache->rel) cache->rel = Submodule(m.ring(), m.rank(), m.relations());
  if (!cache->chain.started) cache->chain.rank0 = m.rank();
  // one probe past the request so a resolution ending exactly at `steps`
  // reports itself complete
  extend_chain(m.ring(), *cache->rel, cache->chain, steps + 1);

  const Chain& ch = cache->chain;
  Resolution res;
  res.complete = ch.complete && (int)ch.maps.size() <= steps;
  int have = std::min(steps, (int)ch.maps.size());
  res.ranks.push_back(ch.rank0);
  for (int k = 0; k < have; ++k) {
    res.maps.push_back(
        to_vecs(m.ring(), ch.maps[(std::size_t)k], chain_rank(ch, k)));
    res.ranks.push_back(chain_rank(ch, k + 1));
  }
  return res;
}

LocalModule ext_module(const LocalModule& m, int j) {
  if (j < 0) throw std::invalid_argument("negative ext index");
  auto cache = m.cache_;
  std::lock_guard<std::mutex> lock(cache->mu);
  auto it = cache->ext.find(j);
  if (it != cache->ext.end()) return it->second;

  if (!cache->rel) cache->rel = Submodule(m.ring(), m.rank(), m.relations());
  if (!cache->chain.started) cache->chain.rank0 = m.rank();
  extend_chain(m.ring(), *cache->rel, cache->chain, j + 1);
  const Chain& ch = cache->chain;
  const Ring& ring = m.ring();

  LocalModule result;
  int rj = chain_rank(ch, j);
  if (rj == 0) {
    result = zero_module(ring);
  } else {
    int rj1 = chain_rank(ch, j + 1);
    std::vector<Vec> kernel;
    if (rj1 == 0) {
      for (int i = 0; i < rj; ++i) kernel.push_back(Vec::unit(ring, rj, i));
    } else {
      auto dT = transpose_map(
          ring, to_vecs(ring, ch.maps[(std::size_t)j], rj), rj);
      std::vector<Vec> raw;
      for (auto& s : Submodule(ring, rj1, dT).syzygies())
        if (!s.is_zero()) raw.push_back(std::move(s));
      if (!raw.empty()) {
        Submodule trimmed(ring, rj, raw);
        kernel = trimmed.groebner();
      }
    }
    if (kernel.empty()) {
      result = zero_module(ring);
    } else {
      std::vector<Vec> image;
      if (j > 0) {
        int prev = chain_rank(ch, j - 1);
        image = transpose_map(
            ring, to_vecs(ring, ch.maps[(std::size_t)j - 1], prev), prev);
      }
      auto rels = subquotient_relations(ring, rj, kernel, image);
      result = LocalModule(ring, (int)kernel.size(), rels);
    }
  }
  cache->ext.emplace(j, result);
  return result;
}

HilbertData module_hilbert(const LocalModule& m) {
  {
    std::lock_guard<std::mutex> lock(m.cache_->mu);
    if (m.cache_->hs) return *m.cache_->hs;
  }
  const Submodule& rel = m.relation_module();
  auto fit =
      fit_hilbert([&](int n) { return rel.capped_quotient_length(n + 1); });
  std::lock_guard<std::mutex> lock(m.cache_->mu);
  if (!m.cache_->hs) m.cache_->hs = fit;
  return *m.cache_->hs;
}

long long finite_length(const LocalModule& m) {
  {
    std::lock_guard<std::mutex> lock(m.cache_->mu);
    if (m.cache_->len) return *m.cache_->len;
  }
  long long out = -2;
  if (m.rank() == 0) out = 0;
  const Submodule& rel = m.relation_module();
  if (out == -2) {
    // cheap stabilization scan before the full polynomial fit
    long long prev = rel.capped_quotient_length(1);
    for (int c = 2; c <= 12; ++c) {
      long long cur = rel.capped_quotient_length(c);
      if (cur == prev) {
        out = cur;
        break;
      }
      prev = cur;
    }
  }
  if (out == -2) {
    auto fit = module_hilbert(m);
    out = fit.degree == 0 ? fit.e[0] : -1;
  }
  std::lock_guard<std::mutex> lock(m.cache_->mu);
  if (!m.cache_->len) m.cache_->len = out;
  return *m.cache_->len;
}

long long lc_length(const LocalModule& m, int i) {
  if (i < 0 || i > m.ring().nvars())
    throw std::invalid_argument("local cohomology index out of range");
  {
    std::lock_guard<std::mutex> lock(m.cache_->mu);
    auto it = m.cache_->lc.find(i);
    if (it != m.cache_->lc.end()) return it->second;
  }
  long long out = finite_length(ext_module(m, m.ring().nvars() - i));
  std::lock_guard<std::mutex> lock(m.cache_->mu);
  m.cache_->lc.emplace(i, out);
  return out;
}

int module_dim(const LocalModule& m) {
  {
    std::lock_guard<std::mutex> lock(m.cache_->mu);
    if (m.cache_->dim) return *m.cache_->dim;
  }
  auto fit = module_hilbert(m);
  int d = (fit.degree == 0 && fit.e[0] == 0) ? -1 : fit.degree;
  std::lock_guard<std::mutex> lock(m.cache_->mu);
  if (!m.cache_->dim) m.cache_->dim = d;
  return *m.cache_->dim;
}

int module_depth(const LocalModule& m) {
  {
    std::lock_guard<std::mutex> lock(m.cache_->mu);
    if (m.cache_->depth) return *m.cache_->depth;
  }
  int d = module_dim(m);
  int out = d;
  if (d < 0) {
    out = -1;
  } else {
    for (int i = 0; i < d; ++i)
      if (lc_length(m, i) != 0) {
        out = i;
        break;
      }
  }
  std::lock_guard<std::mutex> lock(m.cache_->mu);
  if (!m.cache_->depth) m.cache_->depth = out;
  return *m.cache_->depth;
}

LocalModule gamma_m(const LocalModule& m) {
  const Submodule& rel = m.relation_module();
  auto sat = rel.saturate_by_maximal();
  if (sat.gens().empty()) return zero_module(m.ring());
  auto rels =
      subquotient_relations(m.ring(), m.rank(), sat.gens(), m.relations());
  return LocalModule(m.ring(), (int)sat.gens().size(), rels);
}

}  // namespace gcmlab
