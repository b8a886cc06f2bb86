#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "solenoid/rational.hpp"

namespace solenoid {

/// Upper bound on knots produced by composition or materialized powers.
inline constexpr std::size_t kMaxBreakpoints = 1'000'000;

struct Knot {
  Rational x;
  Rational y;

  friend bool operator==(const Knot& a, const Knot& b) { return a.x == b.x && a.y == b.y; }
};

/// P-periodic piecewise-linear function with rational knots (x_i, v_i),
/// 0 <= x_0 < ... < x_{m-1} < P, linear between consecutive knots and across
/// the wrap from x_{m-1} to x_0 + P.
class PlFunction {
 public:
  PlFunction(std::int64_t period, std::vector<Knot> knots);

  static PlFunction constant(std::int64_t period, const Rational& value);

  std::int64_t period() const noexcept { return period_; }
  const std::vector<Knot>& knots() const noexcept { return knots_; }

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// Slope of segment i (from knot i to knot i+1, the last one wrapping).
  std::vector<Rational> slopes() const;
  Rational min_slope() const;
  /// Exact sup norm: the maximum of |v_i| over knots.
  Rational sup_norm() const;

  /// Same function, viewed with period m (a multiple of the current one).
  PlFunction with_period(std::int64_t m) const;
  /// x -> f(x + shift).
  PlFunction shifted(const Rational& shift) const;
  /// Drops knots joining segments of equal slope; an affine (constant)
  /// function keeps a single knot at 0.
  PlFunction simplified() const;

  friend PlFunction operator+(const PlFunction& a, const PlFunction& b);
  friend PlFunction operator-(const PlFunction& a, const PlFunction& b);
  PlFunction operator+(const Rational& c) const;

 private:
  std::int64_t period_;
  std::vector<Knot> knots_;
  std::vector<double> xs_;
  std::vector<double> vs_;
};

/// Strictly increasing lift F = id + delta with F(x + n) = F(x) + n, exact
/// piecewise linear.
class PlLift {
 public:
  /// Validates knots (x_i, F(x_i)): x sorted strictly in [0, n), F strictly
  /// increasing including the wrap y_{m-1} < y_0 + n.
  PlLift(std::int64_t degree, const std::vector<Knot>& knots);
  explicit PlLift(PlFunction displacement);

  std::int64_t degree() const noexcept { return disp_.period(); }
  /// Knots as (x_i, F(x_i)).
  std::vector<Knot> knots() const;
  const PlFunction& displacement() const noexcept { return disp_; }
  std::size_t size() const noexcept { return disp_.knots().size(); }

  Rational eval(const Rational& x) const { return x + disp_.eval(x); }
  double eval(double x) const { return x + disp_.eval(x); }

  PlLift simplified() const { return PlLift(disp_.simplified()); }

  /// Knot-for-knot equality after simplification.
  friend bool same_map(const PlLift& a, const PlLift& b);

 private:
  PlFunction disp_;
};

struct AnalyticTerm {
  double amplitude;
  double period;
};

/// F(x) = x + alpha + sum_j a_j sin(2 pi x / T_j), binary64. Requires each
/// T_j to divide the degree and sum_j |a_j| 2 pi / T_j < 1.
class AnalyticLift {
 public:
  AnalyticLift(std::int64_t degree, double alpha, std::vector<AnalyticTerm> terms);

  std::int64_t degree() const noexcept { return degree_; }
  double alpha() const noexcept { return alpha_; }
  const std::vector<AnalyticTerm>& terms() const noexcept { return terms_; }

  double eval(double x) const;
  double displacement(double x) const { return eval(x) - x; }
  double sup_bound() const;

 private:
  std::int64_t degree_;
  double alpha_;
  std::vector<AnalyticTerm> terms_;
};

/// Either variant of a degree-n circle lift.
class CircleLift {
 public:
  CircleLift(PlLift pl) : impl_(std::move(pl)) {}  // NOLINT(implicit)
  CircleLift(AnalyticLift a) : impl_(std::move(a)) {}  // NOLINT(implicit)

  std::int64_t degree() const;
  bool is_pl() const noexcept { return std::holds_alternative<PlLift>(impl_); }
  /// Throws AnalyticExactUnsupported for the analytic variant.
  const PlLift& pl() const;
  const AnalyticLift* analytic() const { return std::get_if<AnalyticLift>(&impl_); }

  Rational eval(const Rational& x) const { return pl().eval(x); }
  double eval(double x) const;

 private:
  std::variant<PlLift, AnalyticLift> impl_;
};

/// delta = F - id as a view of a lift.
class Displacement {
 public:
  explicit Displacement(CircleLift lift) : lift_(std::move(lift)) {}

  const CircleLift& lift() const noexcept { return lift_; }
  std::int64_t degree() const { return lift_.degree(); }

  Rational eval(const Rational& x) const { return lift_.eval(x) - x; }
  double eval(double x) const { return lift_.eval(x) - x; }
  /// Exact sup norm (PL only).
  Rational sup_norm() const;
  /// Sup norm for PL, a guaranteed upper bound for the analytic variant.
  double sup_bound() const;

 private:
  CircleLift lift_;
};

PlLift pl_new(std::int64_t degree, const std::vector<Knot>& knots);
PlLift rotation(const Rational& alpha, std::int64_t degree = 1);
PlLift identity_lift(std::int64_t degree = 1);
/// x -> F(x) + m.
PlLift translate(const PlLift& f, const Integer& m);

Rational lift_eval(const CircleLift& f, const Rational& x);
double lift_eval(const CircleLift& f, double x);
/// F o G; throws DegreeMismatch or AnalyticExactUnsupported.
PlLift lift_compose(const CircleLift& f, const CircleLift& g);
PlLift lift_compose(const PlLift& f, const PlLift& g);
PlLift lift_inverse(const CircleLift& f);
PlLift lift_inverse(const PlLift& f);
/// F^q(x) by pointwise iteration; q = 0 is the identity.
Rational lift_iterate_eval(const CircleLift& f, Rational x, std::int64_t q);
double lift_iterate_eval(const CircleLift& f, double x, std::int64_t q);
/// Materialized F^q; throws BreakpointCapExceeded above `cap` knots.
PlLift lift_power(const PlLift& f, std::int64_t q, std::size_t cap = kMaxBreakpoints);

/// The same map seen as a degree-m lift; requires degree | m.
PlLift embed_degree(const PlLift& f, std::int64_t m);
CircleLift embed_degree(const CircleLift& f, std::int64_t m);
/// The same map seen as a degree-t lift; requires t | degree and a
/// t-periodic displacement (throws InvalidArgument otherwise).
PlLift reduce_degree(const PlLift& f, std::int64_t t);

Displacement displacement_of(const CircleLift& f);

std::vector<std::int64_t> divisors(std::int64_t n);

/// True iff delta(x + t) = delta(x) for all x (exact for PL, decided on
/// parameters for the analytic family).
bool has_period(const Displacement& d, const Rational& t);

/// Smallest divisor T of the degree with delta T-periodic.
std::int64_t minimal_period(const Displacement& d);

}  // namespace solenoid
