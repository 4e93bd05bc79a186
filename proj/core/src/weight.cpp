#include "rootcomp/weight.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rootcomp {

bool operator<(const Weight& a, const Weight& b) {
  if (a.level != b.level) return a.level < b.level;
  if (a.s != b.s) return a.s < b.s;
  return std::lexicographical_compare(a.finite.begin(), a.finite.end(), b.finite.begin(),
                                      b.finite.end());
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight out = a;
  out.level += b.level;
  out.s += b.s;
  for (std::size_t i = 0; i < out.finite.size(); ++i) out.finite[i] += b.finite[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight out = a;
  out.level -= b.level;
  out.s -= b.s;
  for (std::size_t i = 0; i < out.finite.size(); ++i) out.finite[i] -= b.finite[i];
  return out;
}

Weight operator*(const Q& c, const Weight& a) {
  Weight out = a;
  out.level = q_to_ll(c * q_of(a.level));
  out.s *= c;
  for (auto& f : out.finite) f *= c;
  return out;
}

Weight zero_weight(const CartanData& cd) {
  return Weight{std::vector<Q>(cd.rank(), 0), 0, 0};
}

Weight fundamental_weight(const CartanData& cd, int i) {
  if (i < 0 || i > cd.rank()) throw std::invalid_argument("fundamental weight index out of range");
  Weight w = zero_weight(cd);
  if (i == 0) {
    w.level = 1;
  } else {
    w.finite[i - 1] = 1;
    w.level = cd.comarks()[i];
  }
  return w;
}

Weight rho(const CartanData& cd) {
  Weight w = zero_weight(cd);
  for (int i = 0; i <= cd.rank(); ++i) w = w + fundamental_weight(cd, i);
  // s(rho) is a convention, fixed to 0; the scalar formulas are insensitive
  // to it at the lambda(d)=0 normalization.
  w.s = 0;
  return w;
}

Weight delta_weight(const CartanData& cd) {
  Weight w = zero_weight(cd);
  w.s = 1;
  return w;
}

Weight simple_root_weight(const CartanData& cd, int i) {
  Weight w = zero_weight(cd);
  if (i < 0 || i > cd.rank()) throw std::invalid_argument("simple root index out of range");
  if (i == 0) {
    w.s = 1;
    for (int j = 1; j <= cd.rank(); ++j) w.finite[j - 1] = q_of(-cd.theta_pairings()[j - 1]);
  } else {
    for (int j = 1; j <= cd.rank(); ++j) w.finite[j - 1] = q_of(cd.finite_cartan()[j - 1][i - 1]);
  }
  return w;
}

Weight root_weight(const CartanData& cd, const Root& beta) {
  Weight w = zero_weight(cd);
  w.s = q_of(beta.delta_k);
  for (int j = 1; j <= cd.rank(); ++j) w.finite[j - 1] = q_of(cd.finite_pairing(beta.gamma, j));
  return w;
}

Q pairing(const CartanData& cd, const Weight& w, int i) {
  if (i < 0 || i > cd.rank()) throw std::invalid_argument("pairing index out of range");
  if (i > 0) return w.finite[i - 1];
  // alpha_0^vee = K - theta^vee, theta^vee = sum comark_i alpha_i^vee.
  Q v = q_of(w.level);
  for (int j = 1; j <= cd.rank(); ++j) v -= q_of(cd.comarks()[j]) * w.finite[j - 1];
  return v;
}

Q inv_form(const CartanData& cd, const Weight& a, const Weight& b) {
  Q v = 0;
  const auto& g = cd.fundamental_gram();
  for (int i = 0; i < cd.rank(); ++i) {
    if (a.finite[i] == 0) continue;
    for (int j = 0; j < cd.rank(); ++j) v += a.finite[i] * g[i][j] * b.finite[j];
  }
  v += q_of(a.level) * b.s + q_of(b.level) * a.s;
  return v;
}

bool is_integral(const CartanData& cd, const Weight& w) {
  for (const Q& f : w.finite)
    if (!q_is_integer(f)) return false;
  return true;
}

bool is_dominant(const CartanData& cd, const Weight& w) {
  for (int i = 0; i <= cd.rank(); ++i)
    if (pairing(cd, w, i) < 0) return false;
  return true;
}

IndexSet zero_pairing_set(const CartanData& cd, const Weight& w) {
  IndexSet out;
  for (int i = 0; i <= cd.rank(); ++i)
    if (pairing(cd, w, i) == 0) out.insert(i);
  return out;
}

Weight reflect(const CartanData& cd, int i, const Weight& w) {
  const Q p = pairing(cd, w, i);
  if (p == 0) return w;
  return w - p * simple_root_weight(cd, i);
}

Weight apply_word(const CartanData& cd, const WeylWord& word, const Weight& w) {
  Weight out = w;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = reflect(cd, *it, out);
  return out;
}

WeylWord parse_weyl_word(const std::string& text, int rank) {
  WeylWord out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == 's'))
      ++i;
  };
  skip();
  if (i == text.size() && (text == "e" || text == "id" || text.empty())) return out;
  if (text == "e" || text == "id") return out;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad Weyl word '" + text + "'");
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    const int letter = std::stoi(text.substr(i, j - i));
    if (letter < 0 || letter > rank)
      throw std::invalid_argument("Weyl word letter out of range in '" + text + "'");
    out.letters.push_back(letter);
    i = j;
    skip();
  }
  return out;
}

std::string weyl_word_str(const WeylWord& w) {
  if (w.letters.empty()) return "e";
  std::string s;
  for (int i : w.letters) s += "s" + std::to_string(i);
  return s;
}

Weight rho_beta(const CartanData& cd, const Root& beta) {
  const IndexSet f = f_set(cd, beta);
  Weight w = zero_weight(cd);
  for (int i = 0; i <= cd.rank(); ++i)
    if (!f.contains(i)) w = w + fundamental_weight(cd, i);
  return w;
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
};

}  // namespace

Weight parse_weight(const CartanData& cd, const std::string& text) {
  // Sum of terms [coef][*] (L<i> | d), e.g. "L0+2*L1-3*d", "1/2*d".
  Weight out = zero_weight(cd);
  Scanner sc{text};
  bool any = false;
  while (!sc.done()) {
    int sign = 1;
    if (sc.s[sc.i] == '+' || sc.s[sc.i] == '-') {
      sign = sc.s[sc.i] == '-' ? -1 : 1;
      ++sc.i;
      sc.skip();
    } else if (any) {
      throw std::invalid_argument("expected '+' or '-' in weight literal '" + text + "'");
    }
    Q coef = 1;
    if (sc.i < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.i]))) {
      std::size_t j = sc.i;
      while (j < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[j]))) ++j;
      std::string num = sc.s.substr(sc.i, j - sc.i);
      sc.i = j;
      sc.skip();
      if (sc.i < sc.s.size() && sc.s[sc.i] == '/') {
        ++sc.i;
        sc.skip();
        std::size_t k = sc.i;
        while (k < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[k]))) ++k;
        if (k == sc.i) throw std::invalid_argument("bad rational in weight literal '" + text + "'");
        num += "/" + sc.s.substr(sc.i, k - sc.i);
        sc.i = k;
        sc.skip();
      }
      const auto q = q_parse(num);
      if (!q) throw std::invalid_argument("bad coefficient in weight literal '" + text + "'");
      coef = *q;
      if (sc.i < sc.s.size() && sc.s[sc.i] == '*') {
        ++sc.i;
        sc.skip();
      }
    }
    coef *= sign;
    if (sc.i >= sc.s.size())
      throw std::invalid_argument("dangling coefficient in weight literal '" + text + "'");
    const char c = sc.s[sc.i];
    if (c == 'd' || c == 'D') {
      ++sc.i;
      out.s += coef;
    } else if (c == 'L' || c == 'l') {
      ++sc.i;
      std::size_t j = sc.i;
      while (j < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[j]))) ++j;
      if (j == sc.i) throw std::invalid_argument("missing index after 'L' in '" + text + "'");
      const int idx = std::stoi(sc.s.substr(sc.i, j - sc.i));
      sc.i = j;
      if (idx < 0 || idx > cd.rank())
        throw std::invalid_argument("fundamental weight index out of range in '" + text + "'");
      const Weight fw = fundamental_weight(cd, idx);
      out.level += q_to_ll(coef * q_of(fw.level));
      if (idx > 0) out.finite[idx - 1] += coef;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                  "' in weight literal '" + text + "'");
    }
    any = true;
  }
  if (!any) throw std::invalid_argument("empty weight literal");
  return out;
}

std::string weight_str(const CartanData& cd, const Weight& w) {
  std::ostringstream os;
  bool any = false;
  auto term = [&](const Q& coef, const std::string& atom) {
    if (coef == 0) return;
    if (any && coef > 0) os << "+";
    if (coef == -1) os << "-";
    else if (coef != 1) os << q_str(coef) << "*";
    os << atom;
    any = true;
  };
  term(pairing(cd, w, 0), "L0");
  for (int i = 1; i <= cd.rank(); ++i) term(w.finite[i - 1], "L" + std::to_string(i));
  term(w.s, "d");
  if (!any) return "0";
  return os.str();
}

std::optional<IntVec> q_plus_coords(const CartanData& cd, const Weight& hi, const Weight& lo) {
  const Weight diff = hi - lo;
  if (diff.level != 0) return std::nullopt;
  if (!q_is_integer(diff.s)) return std::nullopt;
  const long long c0 = q_to_ll(diff.s);
  if (c0 < 0) return std::nullopt;
  // finite part: diff_bar + c0*theta must be a Z>=0 combination of simple roots
  IntVec f(cd.rank());
  for (int j = 0; j < cd.rank(); ++j) {
    const Q v = diff.finite[j] + q_of(c0 * cd.theta_pairings()[j]);
    if (!q_is_integer(v)) return std::nullopt;
    f[j] = q_to_ll(v);
  }
  IntVec cfin;
  if (!cd.solve_finite_cartan(f, cfin)) return std::nullopt;
  IntVec out(cd.rank() + 1);
  out[0] = c0;
  for (int i = 0; i < cd.rank(); ++i) {
    if (cfin[i] < 0) return std::nullopt;
    out[i + 1] = cfin[i];
  }
  return out;
}

}  // namespace rootcomp
