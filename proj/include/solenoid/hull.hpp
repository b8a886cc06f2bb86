#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "solenoid/circlemaps.hpp"
#include "solenoid/dynamics.hpp"
#include "solenoid/induced.hpp"
#include "solenoid/point.hpp"

namespace solenoid {

/// Orbit closure of a T-periodic displacement under the translation flow,
/// represented parametrically: t mod T names delta^t(x) = delta(x + t). For
/// minimal T the parametrization R/TZ -> Omega(delta) is a homeomorphism.
///
/// A hull built from a limit-periodic truncation carries its level and the
/// certified sup-norm error against the untruncated displacement.
class Hull {
 public:
  /// PL displacement; T is its minimal period.
  static std::shared_ptr<const Hull> of_displacement(const Displacement& d);
  /// Raw displacement function; throws NotIncreasing unless id + delta is.
  static std::shared_ptr<const Hull> of_function(const PlFunction& delta);
  /// Displacement of f at fiber 0 (F0 + offset - id).
  static std::shared_ptr<const Hull> of_induced(const InducedHomeo& f);
  static std::shared_ptr<const Hull> of_truncation(const LimitPeriodicHomeo& h,
                                                   std::size_t level);

  std::int64_t period() const noexcept { return lift_.degree(); }
  /// id + delta as a degree-T lift.
  const PlLift& lift() const noexcept { return lift_; }
  Rational eval(const Rational& x) const { return lift_.displacement().eval(x); }
  std::optional<std::size_t> level() const noexcept { return level_; }
  const Rational& error_bound() const noexcept { return error_bound_; }

  bool same(const Hull& other) const;

 private:
  Hull(PlLift lift, std::optional<std::size_t> level, Rational error_bound)
      : lift_(std::move(lift)), level_(level), error_bound_(std::move(error_bound)) {}

  PlLift lift_;
  std::optional<std::size_t> level_;
  Rational error_bound_;
};

using HullRef = std::shared_ptr<const Hull>;

class HullPoint {
 public:
  HullPoint(HullRef hull, const Rational& parameter);

  const HullRef& hull() const noexcept { return hull_; }
  /// Canonical parameter in [0, T).
  const Rational& parameter() const noexcept { return parameter_; }

  friend bool operator==(const HullPoint& a, const HullPoint& b) {
    return a.hull_->same(*b.hull_) && a.parameter_ == b.parameter_;
  }

 private:
  HullRef hull_;
  Rational parameter_;
};

HullPoint hull_neutral(const HullRef& hull);
HullPoint hull_translate(const HullRef& hull, const Rational& t);
/// delta^t(x) = delta(x + t).
Rational hull_point_eval(const HullPoint& hp, const Rational& x);
/// delta^a * delta^b = delta^(a+b); throws MixedHulls for different hulls.
HullPoint hull_mul(const HullPoint& a, const HullPoint& b);
HullPoint hull_inverse(const HullPoint& a);
/// Arc distance of parameters on R/TZ.
Rational hull_distance(const HullPoint& a, const HullPoint& b);
/// sup_x |delta^a(x) - delta^b(x)|, computed exactly over the joint knots.
Rational hull_sup_distance(const HullPoint& a, const HullPoint& b);

/// K: S -> Omega(delta), the homomorphism with K(sigma(t)) = delta^t; its
/// parameter is pi_T(s). Throws DepthExceeded unless T divides M!.
HullPoint K_map(const SolenoidPoint& s, const HullRef& hull);

/// g(delta^t) = delta^t * delta^(delta^t(0)), i.e. t -> t + delta(t) mod T.
struct QuotientMap {
  HullRef hull;
  /// Degree-T lift of the parameter map.
  PlLift lift;
};

QuotientMap quotient_map(const HullRef& hull);
HullPoint g_apply(const QuotientMap& g, const HullPoint& hp);
/// G(c, delta^t) = delta^(t + c delta(t)); c in [0, 1].
HullPoint isotopy_eval(const HullRef& hull, const Rational& c, const HullPoint& hp);
/// Rotation number of g, via the translation number of id + delta.
RotationEnclosure quotient_rotation(const QuotientMap& g, std::int64_t q,
                                    std::int64_t max_denominator = 64);

struct SemiconjugacyReport {
  Rational max_error;
  bool exact = false;
  std::size_t samples = 0;
  std::int64_t period = 0;
};

/// Compares K(f(s)) with g(K(s)) on every sample.
SemiconjugacyReport check_semiconjugacy(const InducedHomeo& f,
                                        std::span<const SolenoidPoint> samples);
/// Same, against a caller-supplied quotient map (fault injection).
SemiconjugacyReport check_semiconjugacy(const InducedHomeo& f,
                                        std::span<const SolenoidPoint> samples,
                                        const QuotientMap& g);

struct Periodic {
  Rational period;
};
struct LimitPeriodicCertified {
  std::vector<std::int64_t> tower;
  std::vector<Rational> bounds;
};
struct UnknownPeriodicity {
  std::string reason;
};
using PeriodicityVerdict = std::variant<Periodic, LimitPeriodicCertified, UnknownPeriodicity>;

/// Values on the uniform grid start + i * step.
struct RawSamples {
  Rational start;
  Rational step;
  std::vector<double> values;
};

inline constexpr double kRawPeriodTolerance = 1e-9;

PeriodicityVerdict periodicity_classify(const Displacement& d);
PeriodicityVerdict periodicity_classify(const InducedHomeo& f);
PeriodicityVerdict periodicity_classify(const LimitPeriodicHomeo& h);
/// Heuristic: the first candidate T (an integer number of grid steps) with
/// |v_i - v_{i+T/step}| <= tol for all overlapping samples.
PeriodicityVerdict periodicity_classify(const RawSamples& samples,
                                        const std::vector<Rational>& candidates,
                                        double tol = kRawPeriodTolerance);

}  // namespace solenoid
