#include "solenoid/circlemaps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

bool knot_x_less(const Knot& a, const Knot& b) { return a.x < b.x; }

void sort_unique_x(std::vector<Rational>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap) {
    throw Error(ErrorKind::kBreakpointCapExceeded,
                std::to_string(size) + " knots exceed the cap of " + std::to_string(cap));
  }
}

bool is_integer_ratio(double num, double den) {
  double q = num / den;
  return std::abs(q - std::round(q)) <= 1e-12 * std::max(1.0, std::abs(q));
}

}  // namespace

// ---------------------------------------------------------------- PlFunction

PlFunction::PlFunction(std::int64_t period, std::vector<Knot> knots)
    : period_(period), knots_(std::move(knots)) {
  if (period_ < 1) throw Error(ErrorKind::kInvalidArgument, "period must be a positive integer");
  if (knots_.empty()) throw Error(ErrorKind::kEmptyBreakpoints, "at least one knot is required");
  const Rational p(period_);
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const Rational& x = knots_[i].x;
    if (x < 0 || x >= p) {
      throw Error(ErrorKind::kInvalidArgument,
                  "knot x = " + to_string(x) + " outside [0, " + std::to_string(period_) + ")");
    }
    if (i > 0 && !(knots_[i - 1].x < x)) {
      throw Error(ErrorKind::kInvalidArgument, "knot abscissae must be strictly increasing");
    }
  }
  xs_.reserve(knots_.size());
  vs_.reserve(knots_.size());
  for (const Knot& k : knots_) {
    xs_.push_back(k.x.get_d());
    vs_.push_back(k.y.get_d());
  }
}

PlFunction PlFunction::constant(std::int64_t period, const Rational& value) {
  return PlFunction(period, {Knot{Rational(0), value}});
}

Rational PlFunction::eval(const Rational& x) const {
  const Rational& x0 = knots_.front().x;
  const Rational p(period_);
  Rational u = x - Rational(floor((x - x0) / p)) * p;
  if (knots_.size() == 1) return knots_.front().y;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), u,
                             [](const Rational& v, const Knot& k) { return v < k.x; });
  const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  const Knot& lo = knots_[i];
  if (u == lo.x) return lo.y;
  Rational next_x = i + 1 < knots_.size() ? knots_[i + 1].x : knots_.front().x + p;
  const Rational& next_v = i + 1 < knots_.size() ? knots_[i + 1].y : knots_.front().y;
  return lo.y + (next_v - lo.y) * (u - lo.x) / (next_x - lo.x);
}

double PlFunction::eval(double x) const {
  const double x0 = xs_.front();
  const double p = static_cast<double>(period_);
  double u = x - std::floor((x - x0) / p) * p;
  if (u < x0) u = x0;
  if (xs_.size() == 1) return vs_.front();
  auto it = std::upper_bound(xs_.begin(), xs_.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double next_x = i + 1 < xs_.size() ? xs_[i + 1] : x0 + p;
  const double next_v = i + 1 < vs_.size() ? vs_[i + 1] : vs_.front();
  return vs_[i] + (next_v - vs_[i]) * (u - xs_[i]) / (next_x - xs_[i]);
}

std::vector<Rational> PlFunction::slopes() const {
  std::vector<Rational> out;
  out.reserve(knots_.size());
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const bool wrap = i + 1 == knots_.size();
    Rational next_x = wrap ? knots_.front().x + Rational(period_) : knots_[i + 1].x;
    const Rational& next_v = wrap ? knots_.front().y : knots_[i + 1].y;
    out.push_back((next_v - knots_[i].y) / (next_x - knots_[i].x));
  }
  return out;
}

Rational PlFunction::min_slope() const {
  auto s = slopes();
  return *std::min_element(s.begin(), s.end());
}

Rational PlFunction::sup_norm() const {
  Rational best = 0;
  for (const Knot& k : knots_) best = std::max(best, Rational(abs(k.y)));
  return best;
}

PlFunction PlFunction::with_period(std::int64_t m) const {
  if (m < 1 || m % period_ != 0) {
    throw Error(ErrorKind::kNotMultiple,
                std::to_string(m) + " is not a multiple of " + std::to_string(period_));
  }
  std::vector<Knot> out;
  out.reserve(knots_.size() * static_cast<std::size_t>(m / period_));
  for (std::int64_t j = 0; j < m / period_; ++j) {
    const Rational shift(j * period_);
    for (const Knot& k : knots_) out.push_back({k.x + shift, k.y});
  }
  return PlFunction(m, std::move(out));
}

PlFunction PlFunction::shifted(const Rational& shift) const {
  const Integer p(static_cast<long>(period_));
  std::vector<Knot> out;
  out.reserve(knots_.size());
  for (const Knot& k : knots_) out.push_back({mod(k.x - shift, p), k.y});
  std::sort(out.begin(), out.end(), knot_x_less);
  return PlFunction(period_, std::move(out));
}

PlFunction PlFunction::simplified() const {
  if (knots_.size() == 1) return constant(period_, knots_.front().y);
  auto s = slopes();
  std::vector<Knot> keep;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const Rational& before = s[i == 0 ? s.size() - 1 : i - 1];
    if (before != s[i]) keep.push_back(knots_[i]);
  }
  if (keep.empty()) return constant(period_, knots_.front().y);
  return PlFunction(period_, std::move(keep));
}

PlFunction operator+(const PlFunction& a, const PlFunction& b) {
  const std::int64_t p = lcm(a.period(), b.period());
  PlFunction ea = a.with_period(p);
  PlFunction eb = b.with_period(p);
  std::vector<Rational> xs;
  xs.reserve(ea.knots().size() + eb.knots().size());
  for (const Knot& k : ea.knots()) xs.push_back(k.x);
  for (const Knot& k : eb.knots()) xs.push_back(k.x);
  sort_unique_x(xs);
  std::vector<Knot> out;
  out.reserve(xs.size());
  for (const Rational& x : xs) out.push_back({x, ea.eval(x) + eb.eval(x)});
  return PlFunction(p, std::move(out));
}

PlFunction operator-(const PlFunction& a, const PlFunction& b) {
  std::vector<Knot> neg = b.knots();
  for (Knot& k : neg) k.y = -k.y;
  return a + PlFunction(b.period(), std::move(neg));
}

PlFunction PlFunction::operator+(const Rational& c) const {
  std::vector<Knot> out = knots_;
  for (Knot& k : out) k.y += c;
  return PlFunction(period_, std::move(out));
}

// -------------------------------------------------------------------- PlLift

namespace {

PlFunction displacement_from_knots(std::int64_t degree, const std::vector<Knot>& knots) {
  if (knots.empty()) throw Error(ErrorKind::kEmptyBreakpoints, "at least one knot is required");
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i].y < knots[i + 1].y)) {
      throw Error(ErrorKind::kNotMonotone,
                  "F(" + to_string(knots[i + 1].x) + ") = " + to_string(knots[i + 1].y) +
                      " does not exceed F(" + to_string(knots[i].x) + ") = " +
                      to_string(knots[i].y));
    }
  }
  if (!(knots.back().y < knots.front().y + Rational(degree))) {
    throw Error(ErrorKind::kNotMonotone, "wrap-around segment is not increasing");
  }
  std::vector<Knot> d;
  d.reserve(knots.size());
  for (const Knot& k : knots) d.push_back({k.x, k.y - k.x});
  return PlFunction(degree, std::move(d));
}

}  // namespace

PlLift::PlLift(std::int64_t degree, const std::vector<Knot>& knots)
    : disp_(displacement_from_knots(degree, knots)) {}

PlLift::PlLift(PlFunction displacement) : disp_(std::move(displacement)) {
  if (!(disp_.min_slope() > -1)) {
    throw Error(ErrorKind::kNotMonotone, "id + delta is not strictly increasing");
  }
}

std::vector<Knot> PlLift::knots() const {
  std::vector<Knot> out;
  out.reserve(disp_.knots().size());
  for (const Knot& k : disp_.knots()) out.push_back({k.x, k.x + k.y});
  return out;
}

bool same_map(const PlLift& a, const PlLift& b) {
  if (a.degree() != b.degree()) return false;
  return a.simplified().displacement().knots() == b.simplified().displacement().knots();
}

// -------------------------------------------------------------- AnalyticLift

AnalyticLift::AnalyticLift(std::int64_t degree, double alpha, std::vector<AnalyticTerm> terms)
    : degree_(degree), alpha_(alpha), terms_(std::move(terms)) {
  if (degree_ < 1) throw Error(ErrorKind::kInvalidArgument, "degree must be positive");
  if (!std::isfinite(alpha_)) throw Error(ErrorKind::kInvalidArgument, "alpha must be finite");
  double lipschitz = 0;
  for (const AnalyticTerm& t : terms_) {
    if (!(t.period > 0) || !std::isfinite(t.amplitude)) {
      throw Error(ErrorKind::kInvalidArgument, "terms need finite amplitude and positive period");
    }
    if (!is_integer_ratio(static_cast<double>(degree_), t.period)) {
      throw Error(ErrorKind::kInvalidArgument, "term period must divide the degree");
    }
    lipschitz += std::abs(t.amplitude) * 2 * std::numbers::pi / t.period;
  }
  if (!(lipschitz < 1)) {
    throw Error(ErrorKind::kNotMonotone, "sum |a_j| 2 pi / T_j must be < 1");
  }
}

double AnalyticLift::eval(double x) const {
  double v = x + alpha_;
  for (const AnalyticTerm& t : terms_) v += t.amplitude * std::sin(2 * std::numbers::pi * x / t.period);
  return v;
}

double AnalyticLift::sup_bound() const {
  double b = std::abs(alpha_);
  for (const AnalyticTerm& t : terms_) b += std::abs(t.amplitude);
  return b;
}

// ---------------------------------------------------------------- CircleLift

std::int64_t CircleLift::degree() const {
  return std::visit([](const auto& f) { return f.degree(); }, impl_);
}

const PlLift& CircleLift::pl() const {
  if (const auto* p = std::get_if<PlLift>(&impl_)) return *p;
  throw Error(ErrorKind::kAnalyticExactUnsupported,
              "exact operation requested on an analytic lift");
}

double CircleLift::eval(double x) const {
  return std::visit([x](const auto& f) { return f.eval(x); }, impl_);
}

Rational Displacement::sup_norm() const { return lift_.pl().displacement().sup_norm(); }

double Displacement::sup_bound() const {
  if (const auto* a = lift_.analytic()) return a->sup_bound();
  return sup_norm().get_d();
}

// ---------------------------------------------------------------- operations

PlLift pl_new(std::int64_t degree, const std::vector<Knot>& knots) {
  return PlLift(degree, knots);
}

PlLift rotation(const Rational& alpha, std::int64_t degree) {
  return PlLift(PlFunction::constant(degree, alpha));
}

PlLift identity_lift(std::int64_t degree) { return rotation(Rational(0), degree); }

PlLift translate(const PlLift& f, const Integer& m) {
  return PlLift(f.displacement() + Rational(m));
}

Rational lift_eval(const CircleLift& f, const Rational& x) { return f.eval(x); }
double lift_eval(const CircleLift& f, double x) { return f.eval(x); }

PlLift lift_inverse(const PlLift& f) {
  const Integer n(static_cast<long>(f.degree()));
  std::vector<Knot> out;
  out.reserve(f.size());
  for (const Knot& k : f.knots()) {
    Rational y = mod(k.y, n);
    out.push_back({y, k.x + (y - k.y)});
  }
  std::sort(out.begin(), out.end(), knot_x_less);
  return PlLift(f.degree(), out);
}

PlLift lift_inverse(const CircleLift& f) { return lift_inverse(f.pl()); }

PlLift lift_compose(const PlLift& f, const PlLift& g) {
  if (f.degree() != g.degree()) {
    throw Error(ErrorKind::kDegreeMismatch, "cannot compose lifts of degree " +
                                                std::to_string(f.degree()) + " and " +
                                                std::to_string(g.degree()));
  }
  const Integer n(static_cast<long>(f.degree()));
  PlLift g_inv = lift_inverse(g);
  std::vector<Rational> xs;
  xs.reserve(f.size() + g.size());
  for (const Knot& k : g.displacement().knots()) xs.push_back(k.x);
  for (const Knot& k : f.displacement().knots()) xs.push_back(mod(g_inv.eval(k.x), n));
  sort_unique_x(xs);
  std::vector<Knot> d;
  d.reserve(xs.size());
  for (const Rational& x : xs) d.push_back({x, f.eval(g.eval(x)) - x});
  return PlLift(PlFunction(f.degree(), std::move(d)).simplified());
}

PlLift lift_compose(const CircleLift& f, const CircleLift& g) {
  return lift_compose(f.pl(), g.pl());
}

Rational lift_iterate_eval(const CircleLift& f, Rational x, std::int64_t q) {
  if (q < 0) {
    PlLift inv = lift_inverse(f);
    for (std::int64_t i = 0; i < -q; ++i) x = inv.eval(x);
    return x;
  }
  const PlLift& p = f.pl();
  for (std::int64_t i = 0; i < q; ++i) x = p.eval(x);
  return x;
}

double lift_iterate_eval(const CircleLift& f, double x, std::int64_t q) {
  if (q < 0) throw Error(ErrorKind::kInvalidArgument, "negative iterates need the exact model");
  for (std::int64_t i = 0; i < q; ++i) x = f.eval(x);
  return x;
}

PlLift lift_power(const PlLift& f, std::int64_t q, std::size_t cap) {
  if (q < 0) return lift_power(lift_inverse(f), -q, cap);
  PlLift result = identity_lift(f.degree());
  PlLift base = f.simplified();
  check_cap(base.size(), cap);
  while (q > 0) {
    if (q & 1) {
      result = lift_compose(result, base);
      check_cap(result.size(), cap);
    }
    q >>= 1;
    if (q > 0) {
      base = lift_compose(base, base);
      check_cap(base.size(), cap);
    }
  }
  return result;
}

PlLift embed_degree(const PlLift& f, std::int64_t m) {
  return PlLift(f.displacement().with_period(m));
}

CircleLift embed_degree(const CircleLift& f, std::int64_t m) {
  if (f.is_pl()) return CircleLift(embed_degree(f.pl(), m));
  const AnalyticLift& a = *f.analytic();
  if (m < 1 || m % a.degree() != 0) {
    throw Error(ErrorKind::kNotMultiple,
                std::to_string(m) + " is not a multiple of " + std::to_string(a.degree()));
  }
  return CircleLift(AnalyticLift(m, a.alpha(), a.terms()));
}

PlLift reduce_degree(const PlLift& f, std::int64_t t) {
  if (t < 1 || f.degree() % t != 0) {
    throw Error(ErrorKind::kInvalidArgument,
                std::to_string(t) + " does not divide the degree " + std::to_string(f.degree()));
  }
  Displacement d{CircleLift(f)};
  if (!has_period(d, Rational(t))) {
    throw Error(ErrorKind::kInvalidArgument,
                "displacement is not " + std::to_string(t) + "-periodic");
  }
  const Integer tt(static_cast<long>(t));
  std::vector<Rational> xs;
  for (const Knot& k : f.displacement().knots()) xs.push_back(mod(k.x, tt));
  sort_unique_x(xs);
  std::vector<Knot> out;
  out.reserve(xs.size());
  for (const Rational& x : xs) out.push_back({x, f.displacement().eval(x)});
  return PlLift(PlFunction(t, std::move(out)));
}

Displacement displacement_of(const CircleLift& f) { return Displacement(f); }

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "divisors of a non-positive integer");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool has_period(const Displacement& d, const Rational& t) {
  if (const auto* a = d.lift().analytic()) {
    const double td = t.get_d();
    return std::all_of(a->terms().begin(), a->terms().end(), [td](const AnalyticTerm& term) {
      return term.amplitude == 0 || is_integer_ratio(td, term.period);
    });
  }
  const PlFunction& delta = d.lift().pl().displacement();
  const Integer n(static_cast<long>(delta.period()));
  // Two PL functions that agree on the union of their knot sets agree
  // everywhere; the point 0 covers the knot-free (constant) case.
  std::vector<Rational> probes{Rational(0)};
  for (const Knot& k : delta.knots()) {
    probes.push_back(k.x);
    probes.push_back(mod(k.x - t, n));
  }
  return std::all_of(probes.begin(), probes.end(),
                     [&](const Rational& p) { return delta.eval(p + t) == delta.eval(p); });
}

std::int64_t minimal_period(const Displacement& d) {
  for (std::int64_t t : divisors(d.degree())) {
    if (has_period(d, Rational(t))) return t;
  }
  return d.degree();
}

}  // namespace solenoid
