#include "rootcomp/cartan.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace rootcomp {

namespace {

// Finite Cartan matrix a[i][j] = alpha_{j+1}(alpha_{i+1}^vee), Bourbaki
// numbering, plus the highest-root coordinates (the marks).
struct FiniteDatum {
  IntMat cartan;
  IntVec theta;
  long long dim = 0;
};

void bond(IntMat& a, int i, int j) { a[i][j] = -1; a[j][i] = -1; }

FiniteDatum finite_datum(const AffineType& t) {
  const int l = t.rank();
  FiniteDatum d;
  d.cartan.assign(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i) d.cartan[i][i] = 2;
  switch (t.family()) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) bond(d.cartan, i, i + 1);
      d.theta.assign(l, 1);
      d.dim = static_cast<long long>(l) * (l + 2);
      break;
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) bond(d.cartan, i, i + 1);
      d.cartan[l - 1][l - 2] = -2;  // alpha_{l-1}(alpha_l^vee), alpha_l short
      d.theta.assign(l, 2);
      d.theta[0] = 1;
      d.dim = static_cast<long long>(l) * (2 * l + 1);
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) bond(d.cartan, i, i + 1);
      d.cartan[l - 2][l - 1] = -2;  // alpha_l(alpha_{l-1}^vee), alpha_l long
      d.theta.assign(l, 2);
      d.theta[l - 1] = 1;
      d.dim = static_cast<long long>(l) * (2 * l + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < l - 1; ++i) bond(d.cartan, i, i + 1);
      bond(d.cartan, l - 3, l - 1);
      d.theta.assign(l, 2);
      d.theta[0] = 1;
      d.theta[l - 2] = 1;
      d.theta[l - 1] = 1;
      d.dim = static_cast<long long>(l) * (2 * l - 1);
      break;
    case Family::E: {
      // Chain 1-3-4-5-..., node 2 attached to node 4.
      bond(d.cartan, 0, 2);
      bond(d.cartan, 1, 3);
      for (int i = 2; i + 1 < l; ++i) bond(d.cartan, i, i + 1);
      if (l == 6) { d.theta = {1, 2, 2, 3, 2, 1}; d.dim = 78; }
      if (l == 7) { d.theta = {2, 2, 3, 4, 3, 2, 1}; d.dim = 133; }
      if (l == 8) { d.theta = {2, 3, 4, 6, 5, 4, 3, 2}; d.dim = 248; }
      break;
    }
    case Family::F:
      bond(d.cartan, 0, 1);
      bond(d.cartan, 2, 3);
      d.cartan[1][2] = -1;  // alpha_3(alpha_2^vee), alpha_3 short
      d.cartan[2][1] = -2;
      d.theta = {2, 3, 4, 2};
      d.dim = 52;
      break;
    case Family::G:
      d.cartan[0][1] = -3;  // alpha_2(alpha_1^vee), alpha_1 short
      d.cartan[1][0] = -1;
      d.theta = {3, 2};
      d.dim = 14;
      break;
  }
  return d;
}

// Exact inverse via Gauss-Jordan; throws on a singular matrix.
std::vector<std::vector<Q>> invert(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = q_of(m[i][j]);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular matrix in root datum setup");
    std::swap(a[col], a[piv]);
    const Q inv_p = Q(1) / a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv_p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Q f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Q>> out(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

long long det_int(const IntMat& m) {
  auto a = m;
  const int n = static_cast<int>(a.size());
  // Fraction-free elimination would be overkill at these sizes; use Q.
  std::vector<std::vector<Q>> q(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = q_of(a[i][j]);
  Q det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (q[r][col] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) { std::swap(q[col], q[piv]); det = -det; }
    det *= q[col][col];
    const Q inv_p = Q(1) / q[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (q[r][col] == 0) continue;
      const Q f = q[r][col] * inv_p;
      for (int j = col; j < n; ++j) q[r][j] -= f * q[col][j];
    }
  }
  return q_to_ll(det);
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace

CartanData::CartanData(AffineType type) : type_(type), rank_(type.rank()) {
  const int l = rank_;
  const FiniteDatum fin = finite_datum(type_);
  finite_cartan_ = fin.cartan;
  theta_ = fin.theta;
  dim_g0_ = fin.dim;

  // Symmetrizers by propagation over the Dynkin graph, normalized so the
  // long roots get d = 1 (i.e. length^2 = 2).
  std::vector<Q> dfin(l, 0);
  dfin[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (i == j || finite_cartan_[i][j] == 0) continue;
        if (dfin[i] != 0 && dfin[j] == 0) {
          dfin[j] = dfin[i] * q_of(finite_cartan_[i][j]) / q_of(finite_cartan_[j][i]);
          changed = true;
        }
      }
  }
  Q dmax = dfin[0];
  for (const Q& d : dfin) dmax = std::max(dmax, d);
  for (Q& d : dfin) d /= dmax;

  finite_gram_.assign(l, std::vector<Q>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) finite_gram_[i][j] = dfin[i] * q_of(finite_cartan_[i][j]);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (finite_gram_[i][j] != finite_gram_[j][i])
        throw std::logic_error("asymmetric Gram matrix in root datum setup");

  // (theta|theta) = 2 pins the normalization.
  Q tt = 0;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) tt += q_of(theta_[i]) * q_of(theta_[j]) * finite_gram_[i][j];
  if (tt != 2) throw std::logic_error("(theta|theta) != 2 in root datum setup");

  theta_pairings_.assign(l, 0);
  for (int j = 0; j < l; ++j) {
    long long p = 0;
    for (int i = 0; i < l; ++i) p += finite_cartan_[j][i] * theta_[i];
    theta_pairings_[j] = p;
  }

  // Affine Cartan matrix from alpha_0 = delta - theta.
  affine_cartan_.assign(l + 1, IntVec(l + 1, 0));
  affine_cartan_[0][0] = 2;
  for (int j = 1; j <= l; ++j) {
    Q v = 0;  // alpha_j(alpha_0^vee) = -(alpha_j | theta) under d_0 = 1
    for (int i = 0; i < l; ++i) v -= q_of(theta_[i]) * finite_gram_[i][j - 1];
    affine_cartan_[0][j] = q_to_ll(v);
    affine_cartan_[j][0] = -theta_pairings_[j - 1];
    for (int k = 1; k <= l; ++k) affine_cartan_[j][k] = finite_cartan_[j - 1][k - 1];
  }

  sym_.assign(l + 1, 0);
  sym_[0] = 1;
  for (int i = 1; i <= l; ++i) sym_[i] = dfin[i - 1];

  marks_.assign(l + 1, 0);
  marks_[0] = 1;
  for (int i = 1; i <= l; ++i) marks_[i] = theta_[i - 1];
  comarks_.assign(l + 1, 0);
  for (int i = 0; i <= l; ++i) comarks_[i] = q_to_ll(q_of(marks_[i]) * sym_[i]);
  h_dual_ = std::accumulate(comarks_.begin(), comarks_.end(), 0LL);

  // The marks span ker A and the comarks span ker A^T; both are asserted.
  for (int i = 0; i <= l; ++i) {
    long long row = 0, col = 0;
    for (int j = 0; j <= l; ++j) {
      row += affine_cartan_[i][j] * marks_[j];
      col += affine_cartan_[j][i] * comarks_[j];
    }
    if (row != 0 || col != 0) throw std::logic_error("marks/comarks kernel check failed");
  }

  // Finite root system by closure from the simple roots.
  std::vector<IntVec> positives;
  std::unordered_set<IntVec, VecHash> seen;
  for (int i = 0; i < l; ++i) {
    IntVec e(l, 0);
    e[i] = 1;
    positives.push_back(e);
    seen.insert(e);
  }
  for (std::size_t head = 0; head < positives.size(); ++head) {
    const IntVec r = positives[head];
    for (int i = 0; i < l; ++i) {
      long long p = 0;  // depth of the alpha_i string below r
      IntVec down = r;
      for (;;) {
        down[i] -= 1;
        bool nonneg = true, zero = true;
        for (long long c : down) {
          if (c < 0) nonneg = false;
          if (c != 0) zero = false;
        }
        if (zero || (nonneg && seen.count(down))) { ++p; continue; }
        break;
      }
      long long pair = 0;
      for (int j = 0; j < l; ++j) pair += finite_cartan_[i][j] * r[j];
      if (p - pair > 0) {
        IntVec up = r;
        up[i] += 1;
        if (seen.insert(up).second) positives.push_back(up);
      }
    }
  }
  std::sort(positives.begin(), positives.end(), [](const IntVec& a, const IntVec& b) {
    const long long ha = std::accumulate(a.begin(), a.end(), 0LL);
    const long long hb = std::accumulate(b.begin(), b.end(), 0LL);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  finite_positive_ = positives;
  finite_roots_ = positives;
  for (const auto& r : positives) {
    IntVec neg(l);
    for (int i = 0; i < l; ++i) neg[i] = -r[i];
    finite_roots_.push_back(neg);
  }
  for (const auto& r : finite_roots_) finite_root_set_.insert(r);
  if (static_cast<long long>(finite_roots_.size()) != dim_g0_ - l)
    throw std::logic_error("|finite roots| != dim - rank in root datum setup");

  // Exact inverse data for the finite Cartan matrix.
  const auto inv = invert(finite_cartan_);
  finite_det_ = det_int(finite_cartan_);
  if (finite_det_ <= 0) throw std::logic_error("finite Cartan determinant not positive");
  finite_adjugate_.assign(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      finite_adjugate_[i][j] = q_to_ll(inv[i][j] * q_of(finite_det_));

  // Fundamental-weight Gram matrix M = A^{-T} G A^{-1}.
  fw_gram_.assign(l, std::vector<Q>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Q v = 0;
      for (int p = 0; p < l; ++p)
        for (int q = 0; q < l; ++q) v += inv[p][i] * finite_gram_[p][q] * inv[q][j];
      fw_gram_[i][j] = v;
    }

  dscale_ = 1;
  for (const Q& d : sym_) dscale_ = lcm_ll(dscale_, q_to_ll(Q(d.get_den())));
  sym_scaled_.assign(l + 1, 0);
  for (int i = 0; i <= l; ++i) sym_scaled_[i] = q_to_ll(sym_[i] * q_of(dscale_));

  mscale_ = 1;
  for (const auto& row : fw_gram_)
    for (const Q& v : row) mscale_ = lcm_ll(mscale_, q_to_ll(Q(v.get_den())));
  fw_gram_scaled_.assign(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) fw_gram_scaled_[i][j] = q_to_ll(fw_gram_[i][j] * q_of(mscale_));
}

bool CartanData::solve_finite_cartan(const IntVec& f, IntVec& c) const {
  const int l = rank_;
  c.assign(l, 0);
  for (int i = 0; i < l; ++i) {
    __int128 acc = 0;
    for (int j = 0; j < l; ++j)
      acc += static_cast<__int128>(finite_adjugate_[i][j]) * f[j];
    if (acc % finite_det_ != 0) return false;
    const __int128 v = acc / finite_det_;
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("cone coordinates overflow");
    c[i] = static_cast<long long>(v);
  }
  return true;
}

long long CartanData::finite_pairing(const IntVec& gamma, int j) const {
  long long p = 0;
  for (int i = 0; i < rank_; ++i) p += finite_cartan_[j - 1][i] * gamma[i];
  return p;
}

long long CartanData::fw_norm_scaled(const IntVec& f, const IntVec& g) const {
  __int128 acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (f[i] == 0) continue;
    __int128 row = 0;
    for (int j = 0; j < rank_; ++j) row += static_cast<__int128>(fw_gram_scaled_[i][j]) * g[j];
    acc += static_cast<__int128>(f[i]) * row;
  }
  if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("norm accumulator overflow");
  return static_cast<long long>(acc);
}

std::shared_ptr<const CartanData> build_cartan(AffineType type) {
  static std::mutex mu;
  static std::map<AffineType, std::shared_ptr<const CartanData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it != cache.end()) return it->second;
  auto cd = std::make_shared<const CartanData>(type);
  cache.emplace(type, cd);
  return cd;
}

std::shared_ptr<const CartanData> build_cartan(const std::string& label) {
  return build_cartan(AffineType::parse(label));
}

}  // namespace rootcomp
