#pragma once

#include <string>
#include <string_view>

#include "solenoid/error.hpp"
#include "solenoid/profinite.hpp"
#include "solenoid/rational.hpp"

namespace solenoid {

// Two number models share the solenoid code: exact rationals (the default,
// used wherever identities are checked) and binary64 for exploratory runs
// with analytic maps.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Distance = Rational;
  static constexpr bool kExact = true;
  static Integer floor(const Rational& x) { return solenoid::floor(x); }
  static Rational from_integer(const Integer& n) { return Rational(n); }
  static Rational mod(const Rational& x, const Integer& n) { return solenoid::mod(x, n); }
  static Rational arc(const Rational& a, const Rational& b, const Integer& n) {
    return circle_distance(a, b, n);
  }
};

template <>
struct ScalarTraits<double> {
  using Distance = double;
  static constexpr bool kExact = false;
  static Integer floor(double x) { return floor_real(x); }
  static double from_integer(const Integer& n) { return n.get_d(); }
  static double mod(double x, const Integer& n) { return solenoid::mod(x, n.get_d()); }
  static double arc(double a, double b, const Integer& n) {
    return circle_distance(a, b, n.get_d());
  }
};

/// A pair (x, k) in the covering space R x Zhat, before quotienting.
template <class Scalar>
struct CoverPair {
  Scalar x;
  ProfiniteInt k;

  friend bool operator==(const CoverPair& a, const CoverPair& b) {
    return a.x == b.x && a.k == b.k;
  }
};

/// A point of R/nZ with value in [0, n).
template <class Scalar>
struct CirclePointModN {
  Integer modulus;
  Scalar value;

  friend bool operator==(const CirclePointModN& a, const CirclePointModN& b) {
    return a.modulus == b.modulus && a.value == b.value;
  }
};

/// Class of (x, k) under t.(x, k) = (x + t, k - t), stored through its unique
/// representative with leaf coordinate in [0, 1).
template <class Scalar>
class BasicSolenoidPoint {
 public:
  using Traits = ScalarTraits<Scalar>;

  static BasicSolenoidPoint canonicalize(const Scalar& x, const ProfiniteInt& k) {
    Integer t = Traits::floor(x);
    Scalar leaf = x - Traits::from_integer(t);
    // Binary64 subtraction can land exactly on 1 for x just below an integer.
    if constexpr (!Traits::kExact) {
      if (leaf >= 1.0) {
        leaf -= 1.0;
        t += 1;
      }
    }
    return BasicSolenoidPoint(std::move(leaf), k + ProfiniteInt::embed(t, k.depth()));
  }

  static BasicSolenoidPoint zero(std::size_t depth = kDefaultDepth) {
    return BasicSolenoidPoint(Scalar(0), ProfiniteInt(depth));
  }

  const Scalar& leaf() const noexcept { return x_; }
  const ProfiniteInt& fiber() const noexcept { return k_; }
  std::size_t depth() const noexcept { return k_.depth(); }
  static constexpr bool is_exact() { return Traits::kExact; }

  CoverPair<Scalar> cover() const { return {x_, k_}; }

  friend bool operator==(const BasicSolenoidPoint& a, const BasicSolenoidPoint& b) {
    return a.x_ == b.x_ && a.k_ == b.k_;
  }

 private:
  BasicSolenoidPoint(Scalar x, ProfiniteInt k) : x_(std::move(x)), k_(std::move(k)) {}

  Scalar x_;
  ProfiniteInt k_;
};

using SolenoidPoint = BasicSolenoidPoint<Rational>;
using RealSolenoidPoint = BasicSolenoidPoint<double>;

template <class Scalar>
BasicSolenoidPoint<Scalar> canonicalize(const Scalar& x, const ProfiniteInt& k) {
  return BasicSolenoidPoint<Scalar>::canonicalize(x, k);
}

template <class Scalar>
BasicSolenoidPoint<Scalar> canonicalize(const CoverPair<Scalar>& p) {
  return BasicSolenoidPoint<Scalar>::canonicalize(p.x, p.k);
}

template <class Scalar>
BasicSolenoidPoint<Scalar> sol_add(const BasicSolenoidPoint<Scalar>& a,
                                   const BasicSolenoidPoint<Scalar>& b) {
  return canonicalize<Scalar>(a.leaf() + b.leaf(), a.fiber() + b.fiber());
}

template <class Scalar>
BasicSolenoidPoint<Scalar> sol_neg(const BasicSolenoidPoint<Scalar>& a) {
  return canonicalize<Scalar>(-a.leaf(), -a.fiber());
}

template <class Scalar>
BasicSolenoidPoint<Scalar> sol_sub(const BasicSolenoidPoint<Scalar>& a,
                                   const BasicSolenoidPoint<Scalar>& b) {
  return sol_add(a, sol_neg(b));
}

/// The dense one-parameter subgroup R -> S.
inline SolenoidPoint sigma(const Rational& t, std::size_t depth = kDefaultDepth) {
  return canonicalize<Rational>(t, ProfiniteInt(depth));
}

inline RealSolenoidPoint sigma_real(double t, std::size_t depth = kDefaultDepth) {
  return canonicalize<double>(t, ProfiniteInt(depth));
}

/// pi_n: S -> R/nZ, value (x + residue(k, n)) mod n. Throws DepthExceeded
/// unless n divides M!.
template <class Scalar>
CirclePointModN<Scalar> project(const BasicSolenoidPoint<Scalar>& s, const Integer& n) {
  using Traits = ScalarTraits<Scalar>;
  Integer r = s.fiber().residue(n);
  return {n, Traits::mod(s.leaf() + Traits::from_integer(r), n)};
}

/// T_t(x, k) = (x + t, k - t) on covering coordinates.
template <class Scalar>
CoverPair<Scalar> deck(const CoverPair<Scalar>& p, const Integer& t) {
  using Traits = ScalarTraits<Scalar>;
  return {p.x + Traits::from_integer(t), p.k + ProfiniteInt::embed(-t, p.k.depth())};
}

/// sum_{m=1..M} 2^-m d(pi_{m!}(s), pi_{m!}(s')) with d the arc metric.
template <class Scalar>
typename ScalarTraits<Scalar>::Distance sol_dist(const BasicSolenoidPoint<Scalar>& a,
                                                 const BasicSolenoidPoint<Scalar>& b) {
  using Traits = ScalarTraits<Scalar>;
  using Distance = typename Traits::Distance;
  if (a.depth() != b.depth()) {
    throw Error(ErrorKind::kInvalidArgument, "sol_dist requires equal depths");
  }
  Distance total(0);
  Distance weight(1);
  for (std::size_t m = 1; m <= a.depth(); ++m) {
    weight /= 2;
    const Integer& n = factorial(m);
    total += weight * Traits::arc(project(a, n).value, project(b, n).value, n);
  }
  return total;
}

RealSolenoidPoint to_real(const SolenoidPoint& s);

/// "x=p/q; k=(r1,...,rM)"
std::string to_literal(const SolenoidPoint& s);
/// Parses the literal above; the leaf coordinate is canonicalized if it lies
/// outside [0, 1).
SolenoidPoint parse_point(std::string_view text);

}  // namespace solenoid
