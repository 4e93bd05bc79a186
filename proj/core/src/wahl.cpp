#include "rootcomp/wahl.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootcomp {

WahlCheck is_wahl_triple(const CartanData& cd, const Weight& lambda, const Weight& mu,
                         const Root& beta) {
  if (!is_integral(cd, lambda) || !is_dominant(cd, lambda))
    throw std::invalid_argument("lambda must be dominant integral");
  if (!is_integral(cd, mu) || !is_dominant(cd, mu))
    throw std::invalid_argument("mu must be dominant integral");
  if (!is_positive_root(cd, beta))
    throw std::invalid_argument("beta must be a positive root");

  const Weight target = lambda + mu - root_weight(cd, beta);
  for (int i = 0; i <= cd.rank(); ++i) {
    if (pairing(cd, target, i) < 0)
      return {false, "P1: lambda+mu-beta not dominant (fails at node " + std::to_string(i) + ")"};
  }
  const IndexSet f = f_set(cd, beta);
  for (int i = 0; i <= cd.rank(); ++i) {
    if (pairing(cd, lambda, i) == 0 || pairing(cd, mu, i) == 0) {
      if (!f.contains(i))
        return {false, "P2: beta-alpha_" + std::to_string(i) +
                           " lies in Phi u {0} while lambda or mu vanishes there"};
    }
  }
  return {true, ""};
}

namespace {

// Dominant integral weights with s = 0, each fundamental coordinate bounded
// by coord_bound and level <= max_level, in lexicographic coordinate order.
std::vector<Weight> dominant_grid(const CartanData& cd, long long max_level,
                                  long long coord_bound) {
  std::vector<Weight> out;
  const int n = cd.rank() + 1;
  IntVec coords(n, 0);
  for (;;) {
    long long level = 0;
    for (int i = 0; i < n; ++i) level += coords[i] * cd.comarks()[i];
    if (level <= max_level) {
      Weight w = zero_weight(cd);
      for (int i = 0; i < n; ++i)
        if (coords[i] != 0) w = w + q_of(coords[i]) * fundamental_weight(cd, i);
      out.push_back(w);
    }
    int pos = n - 1;
    while (pos >= 0 && coords[pos] == coord_bound) coords[pos--] = 0;
    if (pos < 0) break;
    ++coords[pos];
  }
  return out;
}

}  // namespace

std::vector<WahlTriple> enumerate_wahl_triples(const CartanData& cd, long long max_level,
                                               long long max_k, long long coord_bound) {
  if (max_level < 0 || max_k < 0 || coord_bound < 0)
    throw std::invalid_argument("enumeration bounds must be >= 0");
  std::vector<Root> betas;
  for (long long k = 0; k <= max_k; ++k)
    for (const IntVec& gamma : cd.finite_roots()) {
      const Root beta{gamma, k};
      if (is_positive_root(cd, beta)) betas.push_back(beta);
    }
  for (long long k = 1; k <= max_k; ++k) betas.push_back(Root{IntVec(cd.rank(), 0), k});
  std::sort(betas.begin(), betas.end());

  const auto grid = dominant_grid(cd, max_level, coord_bound);
  std::vector<WahlTriple> out;
  for (const Weight& lambda : grid)
    for (const Weight& mu : grid)
      for (const Root& beta : betas)
        if (is_wahl_triple(cd, lambda, mu, beta).ok) out.push_back({lambda, mu, beta});
  return out;
}

bool is_s_regular(const CartanData& cd, const Weight& w, const IndexSet& s) {
  if (!is_integral(cd, w) || !is_dominant(cd, w))
    throw std::invalid_argument("S-regularity is defined for dominant integral weights");
  return zero_pairing_set(cd, w) == s;
}

}  // namespace rootcomp
