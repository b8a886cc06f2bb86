#pragma once

// Hand-rolled random generators for property tests. Everything draws raw
// engine output so sequences are stable across standard libraries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "solenoid/circlemaps.hpp"
#include "solenoid/induced.hpp"
#include "solenoid/point.hpp"
#include "solenoid/profinite.hpp"

namespace solenoid::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (rng_() & 1u) != 0; }

  Integer integer(std::int64_t lo, std::int64_t hi) { return Integer(static_cast<long>(between(lo, hi))); }

  /// a/b with b in [1, max_den] and value in [lo, hi).
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 64) {
    const std::int64_t b = between(1, max_den);
    const std::int64_t a = between(lo * b, hi * b - 1);
    Rational r(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)));
    r.canonicalize();
    return r;
  }

  ProfiniteInt profinite(std::size_t depth = kDefaultDepth) {
    Integer t(static_cast<unsigned long>(rng_()));
    return ProfiniteInt::embed(t, depth);
  }

  SolenoidPoint point(std::size_t depth = kDefaultDepth) {
    return canonicalize<Rational>(rational(0, 1), profinite(depth));
  }

  /// Random strictly increasing degree-n PL lift with 1..max_knots knots.
  PlLift pl_lift(std::int64_t n, std::size_t max_knots = 6) {
    const std::int64_t den = between(1, 12) * 2;
    const auto slots = static_cast<std::uint64_t>(n * den);
    const std::size_t m = 1 + static_cast<std::size_t>(below(std::min<std::uint64_t>(max_knots, slots)));
    std::vector<std::int64_t> xs;
    while (xs.size() < m) {
      const auto x = static_cast<std::int64_t>(below(slots));
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<std::int64_t> weights;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      weights.push_back(between(1, 9));
      total += weights.back();
    }
    Rational y = rational(-1, 1, 16);
    std::vector<Knot> knots;
    for (std::size_t i = 0; i < m; ++i) {
      knots.push_back({Rational(Integer(static_cast<long>(xs[i])), Integer(static_cast<long>(den))), y});
      y += Rational(Integer(static_cast<long>(weights[i] * n)), Integer(static_cast<long>(total)));
    }
    for (Knot& k : knots) {
      k.x.canonicalize();
      k.y.canonicalize();
    }
    return PlLift(n, knots);
  }

  /// Degree-n lift whose displacement has period t (t | n).
  PlLift periodic_lift(std::int64_t n, std::int64_t t) { return embed_degree(pl_lift(t), n); }

  std::int64_t divisor_of(std::int64_t n) {
    std::vector<std::int64_t> ds = divisors(n);
    return ds[below(ds.size())];
  }

  /// Exact induced map of degree n with displacement of random period T | n.
  InducedHomeo induced(std::int64_t n) {
    return induce(CircleLift(periodic_lift(n, divisor_of(n))), integer(-2, 2));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace solenoid::testing
