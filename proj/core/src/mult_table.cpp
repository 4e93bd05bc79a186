#include "rootcomp/mult_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace rootcomp {

namespace {

long long isqrt_ll(long long v) {
  if (v < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

long long to_ll_checked(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
  return static_cast<long long>(v);
}

struct IntWeight {
  IntVec fund;     // finite fundamental coordinates
  long long level = 0;
  long long s = 0;
};

IntWeight to_int_weight(const CartanData& cd, const Weight& w, const char* ctx) {
  IntWeight out;
  out.level = w.level;
  if (!q_is_integer(w.s)) throw std::invalid_argument(std::string(ctx) + ": delta coefficient must be an integer here");
  out.s = q_to_ll(w.s);
  out.fund.resize(cd.rank());
  for (int i = 0; i < cd.rank(); ++i) {
    if (!q_is_integer(w.finite[i]))
      throw std::invalid_argument(std::string(ctx) + ": weight must be integral");
    out.fund[i] = q_to_ll(w.finite[i]);
  }
  return out;
}

// Candidate finite parts at one delta-level: all integer fundamental vectors
// inside the scaled norm ball that differ from `base` by a nonnegative
// element of the finite root cone. dominant_only restricts to coords >= 0.
template <typename Fn>
void scan_level(const CartanData& cd, const IntVec& base, long long r2_scaled,
                bool dominant_only, Fn&& fn) {
  const int l = cd.rank();
  IntVec m(l, 0), lo(l, 0), hi(l, 0);
  for (int i = 0; i < l; ++i) {
    const long long u = isqrt_ll(r2_scaled / cd.fw_gram_scaled()[i][i]);
    hi[i] = u;
    lo[i] = dominant_only ? 0 : -u;
    if (lo[i] > hi[i]) return;
    m[i] = lo[i];
  }
  IntVec g(l), c(l);
  for (;;) {
    if (cd.fw_norm_scaled(m, m) <= r2_scaled) {
      for (int i = 0; i < l; ++i) g[i] = base[i] - m[i];
      if (cd.solve_finite_cartan(g, c) &&
          std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; }))
        fn(m, c);
    }
    int pos = l - 1;
    while (pos >= 0 && m[pos] == hi[pos]) m[pos] = lo[pos], --pos;
    if (pos < 0) return;
    ++m[pos];
  }
}

}  // namespace

long long MultTable::mult_at(const IntVec& fund_coords, long long t) const {
  if (t < 0) return 0;
  if (t > depth_)
    throw WindowError("multiplicity query at delta-degree " + std::to_string(t) +
                      " exceeds the certified table depth " + std::to_string(depth_));
  const auto& m = by_level_[static_cast<std::size_t>(t)];
  const auto it = m.find(fund_coords);
  return it == m.end() ? 0 : it->second;
}

long long MultTable::mult(const Weight& nu) const {
  if (nu.level != level_) return 0;
  if (!q_is_integer(nu.s)) return 0;
  const long long t = -q_to_ll(nu.s);  // highest weight is normalized to s = 0
  if (t < 0) return 0;
  IntVec f(cd_->rank());
  for (int i = 0; i < cd_->rank(); ++i) {
    if (!q_is_integer(nu.finite[i])) return 0;
    f[i] = q_to_ll(nu.finite[i]);
  }
  return mult_at(f, t);
}

long long MultTable::graded_dim(long long t) const {
  if (t < 0) return 0;
  if (t > depth_) throw WindowError("graded dimension query exceeds the table depth");
  return graded_[static_cast<std::size_t>(t)];
}

Weight MultTable::weight_of(const Entry& e) const {
  Weight w = zero_weight(*cd_);
  for (int i = 0; i < cd_->rank(); ++i) w.finite[i] = q_of(e.fund_coords[i]);
  w.level = level_;
  w.s = q_of(-e.t);
  return w;
}

class FreudenthalBuilder {
 public:
  FreudenthalBuilder(std::shared_ptr<const CartanData> cd, const Weight& lambda,
                     long long depth, const FreudenthalOptions& opts)
      : cd_(std::move(cd)), lambda_(lambda), depth_(depth), opts_(opts) {}

  std::shared_ptr<const MultTable> build() {
    const CartanData& cd = *cd_;
    if (depth_ < 0) throw std::invalid_argument("table depth must be >= 0");
    if (!is_integral(cd, lambda_) || !is_dominant(cd, lambda_))
      throw std::invalid_argument("freudenthal_mults: lambda must be dominant integral");
    if (lambda_.s != 0)
      throw std::invalid_argument("freudenthal_mults: normalize lambda(d) = 0 first");
    const IntWeight lam = to_int_weight(cd, lambda_, "freudenthal_mults");
    if (lam.level == 0) {
      const bool zero = std::all_of(lam.fund.begin(), lam.fund.end(),
                                    [](long long x) { return x == 0; });
      if (!zero)
        throw std::invalid_argument(
            "freudenthal_mults: level-0 highest weights other than multiples of delta are "
            "unsupported");
    }

    auto table = std::make_shared<MultTable>();
    table->highest_ = lambda_;
    table->depth_ = depth_;
    table->level_ = lam.level;
    table->highest_fund_ = lam.fund;
    table->cd_ = cd_;
    table->by_level_.resize(static_cast<std::size_t>(depth_) + 1);
    table->graded_.assign(static_cast<std::size_t>(depth_) + 1, 0);

    struct Cand {
      IntVec f;
      IntVec c;  // finite cone coordinates
      long long t;
      long long height;
    };
    std::vector<Cand> cands;
    const long long base_norm = cd.fw_norm_scaled(lam.fund, lam.fund);
    for (long long t = 0; t <= depth_; ++t) {
      const long long r2 = base_norm + 2 * lam.level * t * cd.mscale();
      IntVec shifted = lam.fund;
      for (int j = 0; j < cd.rank(); ++j) shifted[j] += t * cd.theta_pairings()[j];
      scan_level(cd, shifted, r2, false, [&](const IntVec& m, const IntVec& c) {
        const long long h = t + std::accumulate(c.begin(), c.end(), 0LL);
        cands.push_back({m, c, t, h});
      });
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.t != b.t) return a.t < b.t;
      if (a.height != b.height) return a.height < b.height;
      return a.f < b.f;
    });

    // Positive real roots as (simple-root coords of the finite part, k);
    // replayed for every k <= depth. The iteration order must not matter.
    std::vector<const IntVec*> finite_all, finite_pos;
    for (const auto& g : cd.finite_roots()) finite_all.push_back(&g);
    for (const auto& g : cd.finite_positive_roots()) finite_pos.push_back(&g);
    if (opts_.reverse_root_order) {
      std::reverse(finite_all.begin(), finite_all.end());
      std::reverse(finite_pos.begin(), finite_pos.end());
    }

    const long long dscale = cd.dscale();
    const long long mscale = cd.mscale();
    const long long hd = cd.dual_coxeter();
    IntVec lam_rho = lam.fund;
    for (auto& x : lam_rho) x += 1;
    const long long lam_rho_norm = cd.fw_norm_scaled(lam_rho, lam_rho);

    // d_j-weighted pairing numerators (x_bar | gamma_bar) * dscale for gamma
    // in simple-root coordinates.
    auto root_pair_scaled = [&](const IntVec& fund, const IntVec& gamma) {
      __int128 acc = 0;
      for (int j = 0; j < cd.rank(); ++j)
        if (gamma[j] != 0)
          acc += static_cast<__int128>(fund[j]) * gamma[j] * cd.sym_scaled()[j + 1];
      return acc;
    };

    IntVec f_up(cd.rank()), q_up(cd.rank() + 1);
    for (const Cand& cand : cands) {
      const bool is_top = cand.t == 0 && cand.f == lam.fund;
      if (is_top) {
        table->by_level_[0][cand.f] = 1;
        continue;
      }
      __int128 num = 0;  // scaled by dscale
      auto string_sum = [&](const IntVec& gamma_fund_step, const IntVec& gamma_coords,
                            long long k, long long root_mult) {
        // Walk nu + j*(gamma + k*delta), j = 1, 2, ... while inside the cone.
        IntVec f = cand.f;
        IntVec qc(cd.rank() + 1);
        qc[0] = cand.t;
        for (int i = 0; i < cd.rank(); ++i) qc[i + 1] = cand.c[i];
        for (long long j = 1;; ++j) {
          qc[0] -= k;
          if (qc[0] < 0) break;
          bool ok = true;
          for (int i = 0; i < cd.rank(); ++i) {
            qc[i + 1] -= k * cd.theta()[i] + gamma_coords[i];
            if (qc[i + 1] < 0) ok = false;
          }
          if (!ok) break;
          for (int i = 0; i < cd.rank(); ++i) f[i] += gamma_fund_step[i];
          const long long mult_up = table->mult_at(f, qc[0]);
          if (mult_up == 0) continue;
          const __int128 pair =
              root_pair_scaled(f, gamma_coords) + static_cast<__int128>(lam.level) * k * dscale;
          num += static_cast<__int128>(root_mult) * mult_up * pair;
        }
      };

      IntVec zero_gamma(cd.rank(), 0);
      for (long long k = 0; k <= cand.t; ++k) {
        const auto& gammas = (k == 0) ? finite_pos : finite_all;
        for (const IntVec* gp : gammas) {
          IntVec step(cd.rank());
          for (int j = 0; j < cd.rank(); ++j) step[j] = cd.finite_pairing(*gp, j + 1);
          string_sum(step, *gp, k, 1);
        }
        if (k >= 1) string_sum(IntVec(cd.rank(), 0), zero_gamma, k, cd.rank());
      }

      if (num == 0) continue;
      num *= 2;
      IntVec nu_rho = cand.f;
      for (auto& x : nu_rho) x += 1;
      const long long denom =  // ((lambda+rho|lambda+rho) - (nu+rho|nu+rho)) * mscale
          lam_rho_norm - cd.fw_norm_scaled(nu_rho, nu_rho) +
          2 * (lam.level + hd) * cand.t * mscale;
      if (denom <= 0)
        throw std::logic_error("freudenthal_mults: nonpositive recursion denominator (data bug)");
      const __int128 scaled = num * mscale;
      const __int128 div = static_cast<__int128>(denom) * dscale;
      if (scaled % div != 0)
        throw std::logic_error("freudenthal_mults: non-integral multiplicity (data bug)");
      const long long mult = to_ll_checked(scaled / div, "multiplicity overflow");
      if (mult < 0) throw std::logic_error("freudenthal_mults: negative multiplicity (data bug)");
      if (mult > 0) table->by_level_[static_cast<std::size_t>(cand.t)][cand.f] = mult;
    }

    for (const Cand& cand : cands) {
      const auto& lvl = table->by_level_[static_cast<std::size_t>(cand.t)];
      const auto it = lvl.find(cand.f);
      if (it == lvl.end()) continue;
      IntVec qc(cd.rank() + 1);
      qc[0] = cand.t;
      for (int i = 0; i < cd.rank(); ++i) qc[i + 1] = cand.c[i];
      table->entries_.push_back({cand.f, cand.t, qc, it->second});
      table->graded_[static_cast<std::size_t>(cand.t)] += it->second;
    }
    return table;
  }

 private:
  std::shared_ptr<const CartanData> cd_;
  Weight lambda_;
  long long depth_;
  FreudenthalOptions opts_;
};

std::shared_ptr<const MultTable> freudenthal_mults(std::shared_ptr<const CartanData> cd,
                                                   const Weight& lambda, long long depth,
                                                   const FreudenthalOptions& opts) {
  return FreudenthalBuilder(std::move(cd), lambda, depth, opts).build();
}

namespace {

struct CacheKey {
  std::string type;
  IntVec fund;
  long long level;

  bool operator<(const CacheKey& o) const {
    if (type != o.type) return type < o.type;
    if (level != o.level) return level < o.level;
    return fund < o.fund;
  }
};

}  // namespace

std::shared_ptr<const MultTable> cached_mult_table(std::shared_ptr<const CartanData> cd,
                                                   const Weight& lambda, long long depth) {
  static std::mutex mu;
  static std::map<CacheKey, std::shared_ptr<const MultTable>> cache;

  IntVec fund(cd->rank());
  for (int i = 0; i < cd->rank(); ++i) fund[i] = q_to_ll(lambda.finite[i]);
  const CacheKey key{cd->type().label(), fund, lambda.level};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->depth() >= depth) return it->second;
  }
  auto table = freudenthal_mults(cd, lambda, depth);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end() || it->second->depth() < depth) cache[key] = table;
    return cache[key];
  }
}

std::vector<Weight> dominant_weights_below(const CartanData& cd, const Weight& w,
                                           long long depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (!is_integral(cd, w) || !is_dominant(cd, w))
    throw std::invalid_argument("dominant_weights_below: base weight must be dominant integral");
  const IntWeight base = to_int_weight(cd, w, "dominant_weights_below");

  struct Item {
    IntVec f;
    long long t;
    long long height;
  };
  std::vector<Item> items;
  const long long base_norm = cd.fw_norm_scaled(base.fund, base.fund);
  for (long long t = 0; t <= depth; ++t) {
    const long long r2 = base_norm + 2 * base.level * t * cd.mscale();
    IntVec shifted = base.fund;
    for (int j = 0; j < cd.rank(); ++j) shifted[j] += t * cd.theta_pairings()[j];
    scan_level(cd, shifted, r2, true, [&](const IntVec& m, const IntVec& c) {
      long long theta_pair = 0;
      for (int j = 0; j < cd.rank(); ++j) theta_pair += cd.comarks()[j + 1] * m[j];
      if (base.level - theta_pair < 0) return;  // fails dominance at the affine node
      items.push_back({m, t, t + std::accumulate(c.begin(), c.end(), 0LL)});
    });
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.height != b.height) return a.height < b.height;
    return a.f < b.f;
  });
  std::vector<Weight> out;
  out.reserve(items.size());
  for (const auto& it : items) {
    Weight nu = zero_weight(cd);
    for (int i = 0; i < cd.rank(); ++i) nu.finite[i] = q_of(it.f[i]);
    nu.level = base.level;
    nu.s = q_of(base.s - it.t);
    out.push_back(nu);
  }
  return out;
}

}  // namespace rootcomp
