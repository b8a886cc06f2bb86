#include "solenoid/hull.hpp"

#include <cmath>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

Integer as_integer(std::int64_t n) { return Integer(static_cast<long>(n)); }

void check_same_hull(const HullPoint& a, const HullPoint& b) {
  if (!a.hull()->same(*b.hull())) {
    throw Error(ErrorKind::kMixedHulls, "hull points belong to different hulls");
  }
}

}  // namespace

HullRef Hull::of_displacement(const Displacement& d) {
  const PlLift& lift = d.lift().pl();
  const std::int64_t t = minimal_period(d);
  return HullRef(new Hull(reduce_degree(lift, t), std::nullopt, Rational(0)));
}

HullRef Hull::of_function(const PlFunction& delta) {
  if (!(delta.min_slope() > -1)) {
    throw Error(ErrorKind::kNotIncreasing, "id + delta is not strictly increasing");
  }
  return of_displacement(Displacement(CircleLift(PlLift(delta))));
}

HullRef Hull::of_induced(const InducedHomeo& f) {
  return of_displacement(Displacement(CircleLift(f.base_leaf_map())));
}

HullRef Hull::of_truncation(const LimitPeriodicHomeo& h, std::size_t level) {
  PlLift lift(h.partial_sum(level));
  const std::int64_t t = minimal_period(Displacement(CircleLift(lift)));
  return HullRef(new Hull(reduce_degree(lift, t), level, h.bound(level)));
}

bool Hull::same(const Hull& other) const {
  if (this == &other) return true;
  return level_ == other.level_ && error_bound_ == other.error_bound_ &&
         same_map(lift_, other.lift_);
}

HullPoint::HullPoint(HullRef hull, const Rational& parameter)
    : hull_(std::move(hull)), parameter_(mod(parameter, as_integer(hull_->period()))) {}

HullPoint hull_neutral(const HullRef& hull) { return HullPoint(hull, Rational(0)); }

HullPoint hull_translate(const HullRef& hull, const Rational& t) { return HullPoint(hull, t); }

Rational hull_point_eval(const HullPoint& hp, const Rational& x) {
  return hp.hull()->eval(x + hp.parameter());
}

HullPoint hull_mul(const HullPoint& a, const HullPoint& b) {
  check_same_hull(a, b);
  return HullPoint(a.hull(), a.parameter() + b.parameter());
}

HullPoint hull_inverse(const HullPoint& a) { return HullPoint(a.hull(), -a.parameter()); }

Rational hull_distance(const HullPoint& a, const HullPoint& b) {
  check_same_hull(a, b);
  return circle_distance(a.parameter(), b.parameter(), as_integer(a.hull()->period()));
}

Rational hull_sup_distance(const HullPoint& a, const HullPoint& b) {
  check_same_hull(a, b);
  const PlFunction& delta = a.hull()->lift().displacement();
  return (delta.shifted(a.parameter()) - delta.shifted(b.parameter())).sup_norm();
}

HullPoint K_map(const SolenoidPoint& s, const HullRef& hull) {
  return HullPoint(hull, project(s, as_integer(hull->period())).value);
}

QuotientMap quotient_map(const HullRef& hull) { return QuotientMap{hull, hull->lift()}; }

HullPoint g_apply(const QuotientMap& g, const HullPoint& hp) {
  if (!hp.hull()->same(*g.hull)) {
    throw Error(ErrorKind::kMixedHulls, "quotient map and point use different hulls");
  }
  return HullPoint(hp.hull(), g.lift.eval(hp.parameter()));
}

HullPoint isotopy_eval(const HullRef& hull, const Rational& c, const HullPoint& hp) {
  if (c < 0 || c > 1) throw Error(ErrorKind::kInvalidArgument, "isotopy parameter outside [0, 1]");
  if (!hp.hull()->same(*hull)) throw Error(ErrorKind::kMixedHulls, "point from another hull");
  const Rational& t = hp.parameter();
  return HullPoint(hull, t + c * hull->eval(t));
}

RotationEnclosure quotient_rotation(const QuotientMap& g, std::int64_t q,
                                    std::int64_t max_denominator) {
  return certify_rotation(CircleLift(g.lift), q, Rational(0), max_denominator);
}

SemiconjugacyReport check_semiconjugacy(const InducedHomeo& f,
                                        std::span<const SolenoidPoint> samples) {
  return check_semiconjugacy(f, samples, quotient_map(Hull::of_induced(f)));
}

SemiconjugacyReport check_semiconjugacy(const InducedHomeo& f,
                                        std::span<const SolenoidPoint> samples,
                                        const QuotientMap& g) {
  SemiconjugacyReport report;
  report.period = g.hull->period();
  report.samples = samples.size();
  report.max_error = 0;
  for (const SolenoidPoint& s : samples) {
    HullPoint lhs = K_map(apply(f, s), g.hull);
    HullPoint rhs = g_apply(g, K_map(s, g.hull));
    Rational err = hull_distance(lhs, rhs);
    if (err > report.max_error) report.max_error = err;
  }
  report.exact = report.max_error == 0;
  return report;
}

PeriodicityVerdict periodicity_classify(const Displacement& d) {
  return Periodic{Rational(minimal_period(d))};
}

PeriodicityVerdict periodicity_classify(const InducedHomeo& f) {
  if (f.is_pl()) return periodicity_classify(Displacement(CircleLift(f.base_leaf_map())));
  return periodicity_classify(Displacement(f.base()));
}

PeriodicityVerdict periodicity_classify(const LimitPeriodicHomeo& h) {
  return LimitPeriodicCertified{h.tower(), h.bounds()};
}

PeriodicityVerdict periodicity_classify(const RawSamples& samples,
                                        const std::vector<Rational>& candidates, double tol) {
  if (!(samples.step > 0)) throw Error(ErrorKind::kInvalidArgument, "grid step must be positive");
  const std::size_t count = samples.values.size();
  for (const Rational& t : candidates) {
    if (!(t > 0)) continue;
    Rational steps = t / samples.step;
    if (steps.get_den() != 1) continue;
    const Integer& s = steps.get_num();
    if (s >= static_cast<unsigned long>(count)) continue;
    const std::size_t shift = s.get_ui();
    bool fits = true;
    for (std::size_t i = 0; i + shift < count && fits; ++i) {
      const double a = samples.values[i];
      const double b = samples.values[i + shift];
      fits = std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= tol;
    }
    if (fits) return Periodic{t};
  }
  return UnknownPeriodicity{"no candidate period matches the samples within tolerance"};
}

}  // namespace solenoid
