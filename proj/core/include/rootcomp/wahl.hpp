#pragma once

#include <string>
#include <vector>

#include "rootcomp/root.hpp"
#include "rootcomp/weight.hpp"

namespace rootcomp {

struct WahlCheck {
  bool ok = false;
  std::string reason;  // names the first failing condition when !ok
};

// Wahl triple test: (P1) lambda+mu-beta dominant integral, (P2) every node i
// where lambda or mu vanishes lies in F_beta. lambda, mu must be dominant
// integral and beta a positive root.
WahlCheck is_wahl_triple(const CartanData& cd, const Weight& lambda, const Weight& mu,
                         const Root& beta);

struct WahlTriple {
  Weight lambda;
  Weight mu;
  Root beta;
};

// All Wahl triples with lambda, mu dominant integral, s = 0, every fundamental
// coordinate <= coord_bound, level <= max_level, and beta = gamma + k*delta
// with 0 <= k <= max_k (real) or k*delta with 1 <= k <= max_k (imaginary).
// Deterministic lexicographic order.
std::vector<WahlTriple> enumerate_wahl_triples(const CartanData& cd, long long max_level,
                                               long long max_k, long long coord_bound);

// Dominant weights with lambda, mu vanishing exactly on S.
bool is_s_regular(const CartanData& cd, const Weight& w, const IndexSet& s);

}  // namespace rootcomp
