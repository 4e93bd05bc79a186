#pragma once

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rootcomp/weight.hpp"

namespace rootcomp {

// Raised when a caller asks a multiplicity question past the certified
// truncation window of a table.
struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Depth-truncated weight multiplicities of one integrable highest-weight
// module V(lambda), lambda(d) = 0. The table is complete per delta-level:
// for every t <= depth it retains every weight nu with mult > 0 and
// delta-degree(lambda - nu) = t (the finite window per level is certified by
// the norm bound (nu|nu) <= (lambda|lambda)). Immutable once built.
class MultTable {
 public:
  const Weight& highest() const { return highest_; }
  long long depth() const { return depth_; }
  long long level() const { return level_; }

  // Multiplicity of the weight with the given finite fundamental coordinates
  // at delta-degree t below lambda. Throws WindowError for t > depth; returns
  // 0 for anything inside the window that is not a weight.
  long long mult_at(const IntVec& fund_coords, long long t) const;

  // Multiplicity of an arbitrary weight (0 when it is not of the form
  // lambda - Q^+ at all). Throws WindowError past the window.
  long long mult(const Weight& nu) const;

  // Sum of multiplicities at delta-degree t (graded dimension of the level-t
  // slice relative to lambda).
  long long graded_dim(long long t) const;

  struct Entry {
    IntVec fund_coords;  // finite part, fundamental coordinates
    long long t = 0;     // delta-degree of lambda - nu
    IntVec q_coords;     // lambda - nu in simple-root coordinates (c_0..c_l)
    long long mult = 0;
  };
  // Deterministic order: (t, height of lambda - nu, lex fund coords).
  const std::vector<Entry>& entries() const { return entries_; }

  Weight weight_of(const Entry& e) const;

 private:
  friend class FreudenthalBuilder;
  Weight highest_;
  long long depth_ = 0;
  long long level_ = 0;
  IntVec highest_fund_;
  std::vector<std::unordered_map<IntVec, long long, VecHash>> by_level_;
  std::vector<long long> graded_;
  std::vector<Entry> entries_;
  std::shared_ptr<const CartanData> cd_;
};

struct FreudenthalOptions {
  // Iterate the positive-root sum in reversed order; the result must not
  // depend on it (exercised by tests).
  bool reverse_root_order = false;
};

// Freudenthal recursion with affine root multiplicities, exact arithmetic.
// lambda must be dominant integral of level >= 1 with lambda(d) = 0 (level 0
// is accepted only for multiples of delta, giving the one-dimensional table).
std::shared_ptr<const MultTable> freudenthal_mults(std::shared_ptr<const CartanData> cd,
                                                   const Weight& lambda, long long depth,
                                                   const FreudenthalOptions& opts = {});

// Process-wide cache keyed by (type, lambda, depth); a deeper table satisfies
// shallower requests. Safe for concurrent use.
std::shared_ptr<const MultTable> cached_mult_table(std::shared_ptr<const CartanData> cd,
                                                   const Weight& lambda, long long depth);

// All dominant integral nu = w - sum c_i alpha_i with c_i >= 0, c_0 <= depth,
// finite part inside the norm window of level(w). Sorted by (delta-degree,
// height, lex). w must be dominant integral with integer s.
std::vector<Weight> dominant_weights_below(const CartanData& cd, const Weight& w,
                                           long long depth);

}  // namespace rootcomp
