#include "rootcomp/affine_type.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace rootcomp {

namespace {

void check_rank(Family f, int rank) {
  auto fail = [&](const char* constraint) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                std::string(1, static_cast<char>(f)) + " (" + constraint + ")");
  };
  switch (f) {
    case Family::A:
      if (rank < 1) fail("A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) fail("B requires rank >= 2");
      break;
    case Family::C:
      if (rank < 2) fail("C requires rank >= 2");
      break;
    case Family::D:
      if (rank < 4) fail("D requires rank >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("E requires rank in {6,7,8}");
      break;
    case Family::F:
      if (rank != 4) fail("F requires rank 4");
      break;
    case Family::G:
      if (rank != 2) fail("G requires rank 2");
      break;
  }
}

}  // namespace

AffineType::AffineType(Family family, int rank) : family_(family), rank_(rank) {
  check_rank(family, rank);
  if (family_ == Family::B && rank_ == 2) family_ = Family::C;  // B2 == C2
}

std::string AffineType::label() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_) + "~";
}

AffineType AffineType::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty type label");
  const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (fam < 'A' || fam > 'G' || fam == 'E' + 1)
    throw std::invalid_argument("unknown family in type label '" + text + "'");
  std::size_t i = 1, j = 1;
  while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
  if (j == i) throw std::invalid_argument("missing rank in type label '" + text + "'");
  const int rank = std::stoi(text.substr(i, j - i));
  const std::string tail = text.substr(j);
  if (!(tail.empty() || tail == "~" || tail == "^(1)" || tail == "(1)"))
    throw std::invalid_argument("unsupported (twisted?) type label '" + text +
                                "'; only untwisted '<X><l>~' labels are accepted");
  return AffineType(static_cast<Family>(fam), rank);
}

std::ostream& operator<<(std::ostream& os, const AffineType& t) { return os << t.label(); }

}  // namespace rootcomp
