#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "solenoid/rational.hpp"

namespace solenoid {

/// Default truncation depth of the factorial tower (8! = 40320).
inline constexpr std::size_t kDefaultDepth = 8;
inline constexpr std::size_t kMaxDepth = 64;

/// m! for 0 <= m <= kMaxDepth.
const Integer& factorial(std::size_t m);

/// An element of the profinite integers truncated to depth M, stored as the
/// compatible residue tower (r_1, ..., r_M) with r_m = class mod m!.
///
/// The factorial chain is cofinal in the divisibility order, so the class
/// mod n is recoverable for every n dividing M!. Values are immutable.
class ProfiniteInt {
 public:
  /// Zero at the given depth.
  explicit ProfiniteInt(std::size_t depth = kDefaultDepth);

  /// Validates range and compatibility of an explicit tower.
  static ProfiniteInt from_residues(std::vector<Integer> residues);
  static ProfiniteInt embed(const Integer& t, std::size_t depth = kDefaultDepth);

  std::size_t depth() const noexcept { return residues_.size(); }
  const std::vector<Integer>& residues() const noexcept { return residues_; }
  const Integer& top() const noexcept { return residues_.back(); }

  /// True iff n divides M!.
  bool supports(const Integer& n) const;

  /// Class mod n in [0, n); throws DepthExceeded if n does not divide M!.
  Integer residue(const Integer& n) const;

  /// Drops the finest levels.
  ProfiniteInt truncated(std::size_t depth) const;

  ProfiniteInt operator-() const;

  /// "(r1, r2, ..., rM) @ depth M"
  std::string to_string() const;
  /// Accepts the rendering above, with or without the "@ depth M" suffix.
  static ProfiniteInt parse(std::string_view text);

  friend ProfiniteInt operator+(const ProfiniteInt& a, const ProfiniteInt& b);
  friend ProfiniteInt operator-(const ProfiniteInt& a, const ProfiniteInt& b) {
    return a + (-b);
  }
  friend bool operator==(const ProfiniteInt& a, const ProfiniteInt& b) {
    return a.residues_ == b.residues_;
  }

 private:
  explicit ProfiniteInt(std::vector<Integer> residues, int /*unchecked*/)
      : residues_(std::move(residues)) {}

  std::vector<Integer> residues_;
};

inline ProfiniteInt embed_int(const Integer& t, std::size_t depth = kDefaultDepth) {
  return ProfiniteInt::embed(t, depth);
}

/// Group law; mixed depths truncate to the smaller one.
inline ProfiniteInt pf_add(const ProfiniteInt& a, const ProfiniteInt& b) { return a + b; }
inline ProfiniteInt pf_neg(const ProfiniteInt& a) { return -a; }
inline Integer residue(const ProfiniteInt& a, const Integer& n) { return a.residue(n); }

/// sum_{m=1..M} 2^-m [r_m(a) != r_m(b)]; an ultrametric with values in [0,1).
Rational pf_dist(const ProfiniteInt& a, const ProfiniteInt& b);

}  // namespace solenoid
