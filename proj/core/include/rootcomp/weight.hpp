#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rootcomp/cartan.hpp"
#include "rootcomp/root.hpp"

namespace rootcomp {

// Element of h^* in the coordinates (finite part on the fundamental weights
// of the finite subalgebra, level = value on K, s = coefficient of delta).
// All entries are exact rationals; equality is exact componentwise equality.
struct Weight {
  std::vector<Q> finite;  // finite[i-1] = lambda(alpha_i^vee), i = 1..l
  long long level = 0;
  Q s = 0;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.level == b.level && a.s == b.s && a.finite == b.finite;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b);  // lexicographic; for ordered maps
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Q& c, const Weight& a);

// Constructors for the standard weights.
Weight zero_weight(const CartanData& cd);
Weight fundamental_weight(const CartanData& cd, int i);  // Lambda_i, 0 <= i <= l
Weight rho(const CartanData& cd);                        // sum of all Lambda_i; s = 0
Weight delta_weight(const CartanData& cd);               // level 0, s = 1
Weight simple_root_weight(const CartanData& cd, int i);  // alpha_i as an element of h^*
Weight root_weight(const CartanData& cd, const Root& beta);

// lambda(alpha_i^vee) for 0 <= i <= l; i = 0 uses alpha_0^vee = K - theta^vee.
Q pairing(const CartanData& cd, const Weight& w, int i);

// Normalized invariant form on h^*.
Q inv_form(const CartanData& cd, const Weight& a, const Weight& b);

bool is_integral(const CartanData& cd, const Weight& w);
bool is_dominant(const CartanData& cd, const Weight& w);  // all l+1 pairings >= 0
// Node indices where the pairing vanishes (meaningful for dominant weights).
IndexSet zero_pairing_set(const CartanData& cd, const Weight& w);

// Simple reflection s_i(w) = w - w(alpha_i^vee) alpha_i.
Weight reflect(const CartanData& cd, int i, const Weight& w);

struct WeylWord {
  std::vector<int> letters;  // each in 0..l, leftmost letter applied last
};

// Applies the word as written: w = s_a s_b ... means s_a acts last.
Weight apply_word(const CartanData& cd, const WeylWord& word, const Weight& w);

WeylWord parse_weyl_word(const std::string& text, int rank);  // "s1s2s1" or "1,2,1"
std::string weyl_word_str(const WeylWord& w);

// rho_beta: sum of Lambda_i over i not in F_beta. beta must be a positive root.
Weight rho_beta(const CartanData& cd, const Root& beta);

// Weight literals: "L0+2*L1-3*d" (L_i = Lambda_i, d = delta), rational
// coefficients like "1/2*d"; the '*' is optional on input.
Weight parse_weight(const CartanData& cd, const std::string& text);
std::string weight_str(const CartanData& cd, const Weight& w);

// The difference as a nonnegative integer combination of simple roots, if it
// is one: returns coords (c_0..c_l) with hi - lo = sum c_i alpha_i.
std::optional<IntVec> q_plus_coords(const CartanData& cd, const Weight& hi, const Weight& lo);

}  // namespace rootcomp
