#include "rootcomp/root.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rootcomp {

bool operator<(const Root& a, const Root& b) {
  if (a.delta_k != b.delta_k) return a.delta_k < b.delta_k;
  return a.gamma < b.gamma;
}

bool is_zero(const Root& v) {
  if (v.delta_k != 0) return false;
  return std::all_of(v.gamma.begin(), v.gamma.end(), [](long long c) { return c == 0; });
}

RootClassification classify_root(const CartanData& cd, const Root& v) {
  if (static_cast<int>(v.gamma.size()) != cd.rank())
    throw std::invalid_argument("root vector of wrong rank");
  const bool gamma_zero =
      std::all_of(v.gamma.begin(), v.gamma.end(), [](long long c) { return c == 0; });
  if (gamma_zero) {
    if (v.delta_k == 0) return {RootClass::NotRoot, 0};
    return {RootClass::Imaginary, cd.rank()};
  }
  if (cd.is_finite_root(v.gamma)) return {RootClass::Real, 1};
  return {RootClass::NotRoot, 0};
}

bool is_root(const CartanData& cd, const Root& v) {
  return classify_root(cd, v).cls != RootClass::NotRoot;
}

bool is_positive_root(const CartanData& cd, const Root& v) {
  const auto c = classify_root(cd, v);
  if (c.cls == RootClass::NotRoot) return false;
  if (v.delta_k != 0) return v.delta_k > 0;
  // k = 0: positive iff the finite part is a positive root.
  for (long long x : v.gamma) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

Root subtract_simple(const CartanData& cd, const Root& v, int i) {
  Root out = v;
  if (i == 0) {
    // alpha_0 = delta - theta
    out.delta_k -= 1;
    for (int j = 0; j < cd.rank(); ++j) out.gamma[j] += cd.theta()[j];
  } else {
    out.gamma[i - 1] -= 1;
  }
  return out;
}

Root negate(const Root& v) {
  Root out = v;
  out.delta_k = -out.delta_k;
  for (auto& c : out.gamma) c = -c;
  return out;
}

IntVec simple_root_coords(const CartanData& cd, const Root& v) {
  IntVec c(cd.rank() + 1, 0);
  c[0] = v.delta_k;
  for (int i = 0; i < cd.rank(); ++i) c[i + 1] = v.gamma[i] + v.delta_k * cd.theta()[i];
  return c;
}

int IndexSet::size() const { return __builtin_popcount(bits_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

IndexSet f_set(const CartanData& cd, const Root& beta) {
  if (!is_positive_root(cd, beta))
    throw std::invalid_argument("f_set requires a positive root, got " + root_str(cd, beta));
  IndexSet out;
  for (int i = 0; i <= cd.rank(); ++i) {
    const Root down = subtract_simple(cd, beta, i);
    if (is_zero(down)) continue;
    if (classify_root(cd, down).cls == RootClass::NotRoot) out.insert(i);
  }
  return out;
}

std::vector<ExceptionalRow> exceptional_roots(const CartanData& cd) {
  std::vector<ExceptionalRow> out;
  for (const IntVec& gamma : cd.finite_positive_roots()) {
    for (int j = 1; j <= cd.rank(); ++j) {
      // beta = delta - gamma; beta - 2 alpha_j is the real vector
      // (-(gamma + 2 alpha_j)) + delta, positive iff gamma + 2 alpha_j is a
      // finite root.
      IntVec probe = gamma;
      probe[j - 1] += 2;
      if (cd.is_finite_root(probe)) out.push_back({gamma, j});
    }
  }
  std::sort(out.begin(), out.end(), [](const ExceptionalRow& a, const ExceptionalRow& b) {
    const long long ha = std::accumulate(a.gamma.begin(), a.gamma.end(), 0LL);
    const long long hb = std::accumulate(b.gamma.begin(), b.gamma.end(), 0LL);
    if (ha != hb) return ha < hb;
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    return a.j < b.j;
  });
  return out;
}

namespace {

bool in_phi_or_zero(const CartanData& cd, const Root& v) {
  return is_zero(v) || classify_root(cd, v).cls != RootClass::NotRoot;
}

Root subtract_simple_n(const CartanData& cd, const Root& v, int i, int n) {
  Root out = v;
  for (int k = 0; k < n; ++k) out = subtract_simple(cd, out, i);
  return out;
}

}  // namespace

std::vector<LemmaRootViolation> lemma_root_scan(const CartanData& cd, long long k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  std::vector<LemmaRootViolation> out;
  for (long long k = 0; k <= k_max; ++k) {
    for (const IntVec& gamma : cd.finite_roots()) {
      const Root beta{gamma, k};
      if (!is_positive_root(cd, beta)) continue;
      for (int i = 0; i <= cd.rank(); ++i) {
        const Root bi = subtract_simple_n(cd, beta, i, 2);
        if (classify_root(cd, bi).cls == RootClass::NotRoot) continue;
        for (int j = 0; j <= cd.rank(); ++j) {
          if (j == i) continue;
          const Root bj = subtract_simple_n(cd, beta, j, 2);
          if (in_phi_or_zero(cd, bj))
            out.push_back({beta, i, j, "beta-2a_j in Phi u {0}"});
          const Root bji = subtract_simple(cd, bj, i);
          if (in_phi_or_zero(cd, bji))
            out.push_back({beta, i, j, "beta-2a_j-a_i in Phi u {0}"});
        }
      }
    }
  }
  return out;
}

std::string root_str(const CartanData& cd, const Root& v) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < cd.rank(); ++i) {
    const long long c = v.gamma[i];
    if (c == 0) continue;
    if (any && c > 0) os << "+";
    if (c == -1) os << "-";
    else if (c != 1) os << c << "*";
    os << "a" << (i + 1);
    any = true;
  }
  if (v.delta_k != 0) {
    if (any && v.delta_k > 0) os << "+";
    if (v.delta_k == -1) os << "-";
    else if (v.delta_k != 1) os << v.delta_k << "*";
    os << "d";
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Root& v) {
  os << "(";
  for (std::size_t i = 0; i < v.gamma.size(); ++i) {
    if (i) os << ",";
    os << v.gamma[i];
  }
  os << ";" << v.delta_k << ")";
  return os;
}

}  // namespace rootcomp
