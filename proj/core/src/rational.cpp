#include "rootcomp/rational.hpp"

#include <cctype>

namespace rootcomp {

std::optional<Q> q_parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;
  // mpq_class(string) aborts on garbage, so validate the shape first.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t j = digits(i);
  if (j == i) return std::nullopt;
  if (j < s.size()) {
    if (s[j] != '/') return std::nullopt;
    std::size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size()) return std::nullopt;
  }
  Q q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::size_t q_hash(const Q& q) {
  const std::size_t a = mpz_fdiv_ui(q.get_num().get_mpz_t(), 2305843009213693951ull);
  const std::size_t b = mpz_fdiv_ui(q.get_den().get_mpz_t(), 2305843009213693951ull);
  std::size_t h = a * 1099511628211ull;
  h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace rootcomp
