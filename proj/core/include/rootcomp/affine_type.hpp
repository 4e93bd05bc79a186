#pragma once

#include <iosfwd>
#include <string>

namespace rootcomp {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Label of an untwisted affine type X_l^(1). Twisted types are not
// representable. B2 is canonicalized to C2 on construction so that each
// isomorphism class has exactly one label.
class AffineType {
 public:
  AffineType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  // "C2~" style; '~' marks the untwisted affinization.
  std::string label() const;

  // Accepts "C2~", "C2^(1)" and plain "C2". Throws std::invalid_argument on
  // unknown families, invalid ranks or twisted labels.
  static AffineType parse(const std::string& text);

  friend bool operator==(const AffineType& a, const AffineType& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }
  friend bool operator!=(const AffineType& a, const AffineType& b) { return !(a == b); }
  friend bool operator<(const AffineType& a, const AffineType& b) {
    if (a.family_ != b.family_) return a.family_ < b.family_;
    return a.rank_ < b.rank_;
  }

 private:
  Family family_;
  int rank_;
};

std::ostream& operator<<(std::ostream& os, const AffineType& t);

}  // namespace rootcomp
