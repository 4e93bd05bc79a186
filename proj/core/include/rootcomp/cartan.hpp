#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "rootcomp/affine_type.hpp"
#include "rootcomp/rational.hpp"

namespace rootcomp {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

// Static data of one untwisted affine root system, immutable after
// construction and safe for concurrent reads. Index 0 is the affine node;
// finite nodes are 1..rank in Bourbaki numbering.
//
// Conventions fixed here and relied on everywhere else:
//   - affine Cartan matrix entries a[i][j] = alpha_j(alpha_i^vee);
//   - the invariant form is normalized so the highest root has (theta|theta)=2;
//   - finite roots are stored as integer vectors in the simple-root basis.
class CartanData {
 public:
  explicit CartanData(AffineType type);

  const AffineType& type() const { return type_; }
  int rank() const { return rank_; }

  // (l+1)x(l+1) affine Cartan matrix, row/col 0 = affine node.
  const IntMat& affine_cartan() const { return affine_cartan_; }
  // l x l finite Cartan matrix.
  const IntMat& finite_cartan() const { return finite_cartan_; }

  // Symmetrizers d_i = (alpha_i|alpha_i)/2 for i = 0..l; d_0 = 1.
  const std::vector<Q>& symmetrizers() const { return sym_; }

  // Highest root of the finite system in simple-root coordinates.
  const IntVec& theta() const { return theta_; }
  // theta(alpha_j^vee) for j = 1..l.
  const IntVec& theta_pairings() const { return theta_pairings_; }

  // Marks a_i (coefficients of delta) and comarks a_i^vee, i = 0..l; a_0 = a_0^vee = 1.
  const IntVec& marks() const { return marks_; }
  const IntVec& comarks() const { return comarks_; }

  long long dual_coxeter() const { return h_dual_; }
  long long dim_finite() const { return dim_g0_; }

  // Gram matrix (alpha_i|alpha_j) of the finite simple roots, i,j = 1..l.
  const std::vector<std::vector<Q>>& finite_gram() const { return finite_gram_; }

  // Gram matrix (Lambda_i|Lambda_j) of the finite fundamental weights.
  const std::vector<std::vector<Q>>& fundamental_gram() const { return fw_gram_; }

  // All finite roots / the positive ones, in simple-root coordinates, sorted
  // by (height, lex).
  const std::vector<IntVec>& finite_roots() const { return finite_roots_; }
  const std::vector<IntVec>& finite_positive_roots() const { return finite_positive_; }

  bool is_finite_root(const IntVec& gamma) const {
    return finite_root_set_.count(gamma) > 0;
  }

  // Solves A_fin * c = f exactly; returns false when the solution is not
  // integral. Used for membership of finite weights in the root lattice cone.
  bool solve_finite_cartan(const IntVec& fund_coords, IntVec& root_coords) const;

  // gamma(alpha_j^vee) for a finite vector in simple-root coordinates.
  long long finite_pairing(const IntVec& gamma, int j) const;

  // --- scaled-integer kernels used by the multiplicity engines ---

  // Common denominator of the symmetrizers and dscale*d_i as integers (i=0..l).
  long long dscale() const { return dscale_; }
  const IntVec& sym_scaled() const { return sym_scaled_; }

  // Common denominator of the fundamental-weight Gram matrix and the scaled
  // integer matrix mscale*(Lambda_i|Lambda_j).
  long long mscale() const { return mscale_; }
  const IntMat& fw_gram_scaled() const { return fw_gram_scaled_; }

  // mscale * (x|y) for finite parts given by fundamental coordinates.
  long long fw_norm_scaled(const IntVec& f, const IntVec& g) const;

 private:
  AffineType type_;
  int rank_;
  IntMat affine_cartan_;
  IntMat finite_cartan_;
  std::vector<Q> sym_;
  IntVec theta_;
  IntVec theta_pairings_;
  IntVec marks_;
  IntVec comarks_;
  long long h_dual_ = 0;
  long long dim_g0_ = 0;
  std::vector<std::vector<Q>> finite_gram_;
  std::vector<std::vector<Q>> fw_gram_;
  std::vector<IntVec> finite_roots_;
  std::vector<IntVec> finite_positive_;
  std::unordered_set<IntVec, VecHash> finite_root_set_;

  IntMat finite_adjugate_;  // adj(A_fin), so A_fin^-1 = adj/det
  long long finite_det_ = 0;

  long long dscale_ = 1;
  IntVec sym_scaled_;
  long long mscale_ = 1;
  IntMat fw_gram_scaled_;
};

// Builds (and internally validates) the root datum for a type. The result is
// shared and cached per type; repeated calls are cheap.
std::shared_ptr<const CartanData> build_cartan(AffineType type);
std::shared_ptr<const CartanData> build_cartan(const std::string& label);

}  // namespace rootcomp
