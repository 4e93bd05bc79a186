#pragma once

#include <string>

#include "rootcomp/root.hpp"
#include "rootcomp/weight.hpp"

namespace rootcomp {

// Central charge of the coset Virasoro action on V(lambda) (x) V(mu) for
// levels l, m >= 1:
//   dim(g0) * ( l/(l+h^vee) + m/(m+h^vee) - (l+m)/(l+m+h^vee) ).
Q central_charge(const CartanData& cd, long long l, long long m);

// Scalar by which L_0 acts on a component V(nu) of V(lambda) (x) V(mu):
//   1/2 ( (la|la+2rho)/(l+h) + (mu|mu+2rho)/(m+h) - (nu|nu+2rho)/(l+m+h) ).
// nu must have level l+m.
Q l0_scalar(const CartanData& cd, const Weight& lambda, const Weight& mu, const Weight& nu);

enum class SeriesKind {
  AllK,            // m_k >= 1 for all k >= 0
  GapAtOne,        // m_1 = 0 and m_k >= 1 for k = 0 and k >= 2
  OneDimensional,  // central charge and L_0 both zero (never at levels >= 1)
};

std::string series_kind_name(SeriesKind k);

struct SeriesPrediction {
  SeriesKind kind = SeriesKind::AllK;
  Q l0;
  Q charge;
};

// Prediction for the delta-string below a delta-maximal component V(nu).
// Caller certifies delta-maximality; this is a pure formula.
SeriesPrediction predict_series(const CartanData& cd, const Weight& lambda, const Weight& mu,
                                const Weight& nu);

// L_0 scalar on V(lambda+mu-beta) for a Wahl triple with real beta; the
// contract asserts strict positivity and throws when the triple is not Wahl
// or the scalar fails to be positive.
Q wahl_positivity(const CartanData& cd, const Weight& lambda, const Weight& mu,
                  const Root& beta);

}  // namespace rootcomp
