#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rootcomp/cartan.hpp"

namespace rootcomp {

// Element gamma + k*delta of the root lattice slice, gamma in simple-root
// coordinates of the finite system (may be zero or not a root at all; use
// classify_root to find out).
struct Root {
  IntVec gamma;      // length l
  long long delta_k = 0;

  friend bool operator==(const Root& a, const Root& b) {
    return a.delta_k == b.delta_k && a.gamma == b.gamma;
  }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b);
};

enum class RootClass { Real, Imaginary, NotRoot };

struct RootClassification {
  RootClass cls = RootClass::NotRoot;
  long long multiplicity = 0;  // 1 for real, l for imaginary, 0 otherwise
};

RootClassification classify_root(const CartanData& cd, const Root& v);

bool is_root(const CartanData& cd, const Root& v);
bool is_positive_root(const CartanData& cd, const Root& v);

// v - alpha_i as lattice elements; i = 0 uses alpha_0 = delta - theta.
Root subtract_simple(const CartanData& cd, const Root& v, int i);
Root negate(const Root& v);

bool is_zero(const Root& v);

// Coordinates of v in the simple-root basis (c_0, ..., c_l); c_0 is the
// delta-degree. Exists for any lattice element.
IntVec simple_root_coords(const CartanData& cd, const Root& v);

// Subset of node indices {0..l}, kept as a bitmask.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  void insert(int i) { bits_ |= (1u << i); }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool subset_of(const IndexSet& other) const { return (bits_ & ~other.bits_) == 0; }
  int size() const;
  std::uint32_t bits() const { return bits_; }
  std::vector<int> members() const;
  std::string str() const;  // "{0,2,4}"

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

 private:
  std::uint32_t bits_ = 0;
};

// F_beta = { 0 <= i <= l : beta - alpha_i is neither a root nor zero }.
// beta must be a positive root.
IndexSet f_set(const CartanData& cd, const Root& beta);

// One scan hit of the exceptional-component table: a finite positive root
// gamma and the unique finite node j with (delta - gamma) - 2*alpha_j a
// positive root.
struct ExceptionalRow {
  IntVec gamma;
  int j = 0;

  friend bool operator==(const ExceptionalRow& a, const ExceptionalRow& b) {
    return a.gamma == b.gamma && a.j == b.j;
  }
};

// Exhaustive scan over gamma in the finite positive roots and j in 1..l.
// Empty for the simply-laced and A-type systems. Sorted by (height(gamma),
// lex(gamma), j).
std::vector<ExceptionalRow> exceptional_roots(const CartanData& cd);

struct LemmaRootViolation {
  Root beta;
  int i = 0;
  int j = 0;
  std::string what;  // which of the two excluded memberships failed
};

// For every real positive beta = gamma + k*delta with 0 <= k <= k_max and
// every i with beta - 2*alpha_i a root, reports any j != i for which
// beta - 2*alpha_j or beta - 2*alpha_j - alpha_i lands in Phi or {0}.
// Expected empty for every supported type.
std::vector<LemmaRootViolation> lemma_root_scan(const CartanData& cd, long long k_max);

std::string root_str(const CartanData& cd, const Root& v);
std::ostream& operator<<(std::ostream& os, const Root& v);

}  // namespace rootcomp
