#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "solenoid/circlemaps.hpp"
#include "solenoid/induced.hpp"
#include "solenoid/point.hpp"

namespace solenoid {

/// Interval [lo, hi] containing the translation number, from q iterates.
///
/// For a degree-n lift |F^q(x) - x - q tau| < n, so the interval has width
/// exactly 2n/q. `certified` is false when the iterate was computed in
/// binary64 (analytic maps); lo/hi are then the exact rational values of the
/// rounded iterate.
struct RotationEnclosure {
  Rational lo;
  Rational hi;
  std::int64_t iterations = 0;
  bool certified = true;
  /// p/q' with a witness x* satisfying F^q'(x*) = x* + p exactly.
  std::optional<Rational> exact;
  std::optional<Rational> witness;
  /// Largest denominator fully searched for an exact value (0: no search).
  std::int64_t searched_denominator = 0;

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
};

RotationEnclosure translation_enclosure(const CircleLift& f, std::int64_t q,
                                        const Rational& x0 = 0);
/// Enclosures for every q in [1, q_max] from a single orbit.
std::vector<RotationEnclosure> translation_enclosure_sweep(const CircleLift& f,
                                                           std::int64_t q_max,
                                                           const Rational& x0 = 0);

/// Leftmost x* in [0, n) with F^q(x*) = x* + p, if any. Requires q >= 1 and
/// gcd(p, q) = 1; throws BreakpointCapExceeded when F^q is too large.
std::optional<Rational> certify_rational(const PlLift& f, const Integer& p, std::int64_t q,
                                         std::size_t cap = kMaxBreakpoints);

/// Enclosure from q iterates plus a search for an exact rational value
/// p/q' inside it, denominators q' = 1..max_denominator in increasing order
/// (PL only; analytic maps get the enclosure alone).
RotationEnclosure certify_rotation(const CircleLift& f, std::int64_t q, const Rational& x0 = 0,
                                   std::int64_t max_denominator = 64);

/// Translation-number enclosure of the leaf map F0 + offset.
RotationEnclosure rho_of_induced(const InducedHomeo& f, std::int64_t q, const Rational& x0 = 0);

bool is_fiber_periodic(const InducedHomeo& f, const SolenoidPoint& s, const Integer& p,
                       std::int64_t q);

/// A point s with f^q(s) = s + sigma(p); throws NoSuchOrbit if none exists.
SolenoidPoint find_fiber_periodic(const InducedHomeo& f, const Integer& p, std::int64_t q,
                                  std::size_t depth = kDefaultDepth);

struct OrbitSample {
  std::int64_t iterate;
  SolenoidPoint point;
  /// sol_dist(f^j(s), f^j(target)).
  Rational distance;
};

struct FiberPeriodic {
  Integer p;
  std::int64_t q;
  SolenoidPoint point;
};

struct AsymptoticToFiber {
  Integer p;
  std::int64_t q;
  SolenoidPoint target;
  Rational distance;
  std::int64_t iterations;
};

struct Inconclusive {
  std::string reason;
};

struct OrbitClassification {
  std::variant<FiberPeriodic, AsymptoticToFiber, Inconclusive> verdict;
  std::vector<OrbitSample> trace;

  bool fiber_periodic() const { return std::holds_alternative<FiberPeriodic>(verdict); }
  bool asymptotic() const { return std::holds_alternative<AsymptoticToFiber>(verdict); }
  bool inconclusive() const { return std::holds_alternative<Inconclusive>(verdict); }
};

/// Classifies the orbit of s under f assuming rho(f) = p/q. The target is
/// the fiber-periodic point on the same fiber toward which the leafwise
/// return map y -> (F0 + offset)^q(y) - p moves; iteration stops at the
/// first multiple of q where the distance to the target's orbit is < tol.
/// At most max_iters applications of f are performed.
OrbitClassification classify_orbit(const InducedHomeo& f, const SolenoidPoint& s,
                                   const Integer& p, std::int64_t q, std::int64_t max_iters,
                                   const Rational& tol, bool keep_trace = false);

}  // namespace solenoid
