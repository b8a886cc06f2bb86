#include "solenoid/dynamics.hpp"

#include <algorithm>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

Integer as_integer(std::int64_t n) { return Integer(static_cast<long>(n)); }

std::vector<Rational> scan_points(const PlFunction& g, const Rational& a, const Rational& b) {
  const Rational n(g.period());
  std::vector<Rational> pts{a, b};
  const Integer j_lo = floor(a / n) - 1;
  const Integer j_hi = floor(b / n) + 1;
  for (Integer j = j_lo; j <= j_hi; ++j) {
    for (const Knot& k : g.knots()) {
      Rational x = k.x + Rational(j) * n;
      if (a < x && x < b) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Rational segment_root(const Rational& a, const Rational& ga, const Rational& b,
                      const Rational& gb) {
  return a - ga * (b - a) / (gb - ga);
}

/// Leftmost zero of the continuous PL function g on [a, b].
std::optional<Rational> first_zero(const PlFunction& g, const Rational& a, const Rational& b) {
  auto pts = scan_points(g, a, b);
  Rational prev_v = g.eval(pts.front());
  if (prev_v == 0) return pts.front();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Rational v = g.eval(pts[i]);
    if (v == 0) return pts[i];
    if (sgn(v) != sgn(prev_v)) return segment_root(pts[i - 1], prev_v, pts[i], v);
    prev_v = std::move(v);
  }
  return std::nullopt;
}

/// Rightmost zero of g on [a, b].
std::optional<Rational> last_zero(const PlFunction& g, const Rational& a, const Rational& b) {
  auto pts = scan_points(g, a, b);
  Rational next_v = g.eval(pts.back());
  if (next_v == 0) return pts.back();
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    Rational v = g.eval(pts[i]);
    if (v == 0) return pts[i];
    if (sgn(v) != sgn(next_v)) return segment_root(pts[i], v, pts[i + 1], next_v);
    next_v = std::move(v);
  }
  return std::nullopt;
}

/// x -> F^q(x) - x - p as a periodic PL function.
PlFunction return_gap(const PlLift& f, const Integer& p, std::int64_t q, std::size_t cap) {
  return lift_power(f, q, cap).displacement() + Rational(-p);
}

void check_reduced(const Integer& p, std::int64_t q) {
  if (q < 1) throw Error(ErrorKind::kInvalidArgument, "q must be >= 1");
  if (gcd(p, as_integer(q)) != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                p.get_str() + "/" + std::to_string(q) + " is not in lowest terms");
  }
}

CircleLift leaf_lift(const InducedHomeo& f) {
  if (f.is_pl()) return CircleLift(f.base_leaf_map());
  const AnalyticLift& a = *f.base().analytic();
  return CircleLift(AnalyticLift(a.degree(), a.alpha() + f.offset().get_d(), a.terms()));
}

RotationEnclosure enclosure_from_iterate(const Rational& value, const Rational& x0,
                                         std::int64_t n, std::int64_t q, bool certified) {
  RotationEnclosure e;
  const Rational moved = value - x0;
  e.lo = (moved - Rational(n)) / Rational(q);
  e.hi = (moved + Rational(n)) / Rational(q);
  e.iterations = q;
  e.certified = certified;
  return e;
}

}  // namespace

RotationEnclosure translation_enclosure(const CircleLift& f, std::int64_t q, const Rational& x0) {
  if (q < 1) throw Error(ErrorKind::kInvalidArgument, "q must be >= 1");
  if (f.is_pl()) {
    return enclosure_from_iterate(lift_iterate_eval(f, x0, q), x0, f.degree(), q, true);
  }
  const double start = x0.get_d();
  const double end = lift_iterate_eval(f, start, q);
  return enclosure_from_iterate(from_double(end), from_double(start), f.degree(), q, false);
}

std::vector<RotationEnclosure> translation_enclosure_sweep(const CircleLift& f,
                                                           std::int64_t q_max,
                                                           const Rational& x0) {
  if (q_max < 1) throw Error(ErrorKind::kInvalidArgument, "q_max must be >= 1");
  std::vector<RotationEnclosure> out;
  out.reserve(static_cast<std::size_t>(q_max));
  if (f.is_pl()) {
    const PlLift& p = f.pl();
    Rational x = x0;
    for (std::int64_t q = 1; q <= q_max; ++q) {
      x = p.eval(x);
      out.push_back(enclosure_from_iterate(x, x0, f.degree(), q, true));
    }
    return out;
  }
  const double start = x0.get_d();
  const Rational start_exact = from_double(start);
  double x = start;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    x = f.eval(x);
    out.push_back(enclosure_from_iterate(from_double(x), start_exact, f.degree(), q, false));
  }
  return out;
}

std::optional<Rational> certify_rational(const PlLift& f, const Integer& p, std::int64_t q,
                                         std::size_t cap) {
  check_reduced(p, q);
  PlFunction gap = return_gap(f, p, q, cap);
  const Rational n(f.degree());
  auto zero = first_zero(gap, Rational(0), n);
  // gap(n) = gap(0), so a zero at n was already reported at 0.
  if (zero && *zero < n) return zero;
  return std::nullopt;
}

RotationEnclosure certify_rotation(const CircleLift& f, std::int64_t q, const Rational& x0,
                                   std::int64_t max_denominator) {
  RotationEnclosure e = translation_enclosure(f, q, x0);
  if (!f.is_pl()) return e;
  const PlLift& lift = f.pl();
  for (std::int64_t den = 1; den <= max_denominator; ++den) {
    const Rational d(den);
    Integer num = -floor(-e.lo * d);  // ceil
    const Integer num_hi = floor(e.hi * d);
    try {
      for (; num <= num_hi; ++num) {
        if (gcd(num, as_integer(den)) != 1) continue;
        if (auto w = certify_rational(lift, num, den)) {
          e.exact = Rational(num, as_integer(den));
          e.exact->canonicalize();
          e.witness = *w;
          e.searched_denominator = den;
          return e;
        }
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kBreakpointCapExceeded) throw;
      return e;
    }
    e.searched_denominator = den;
  }
  return e;
}

RotationEnclosure rho_of_induced(const InducedHomeo& f, std::int64_t q, const Rational& x0) {
  return translation_enclosure(leaf_lift(f), q, x0);
}

bool is_fiber_periodic(const InducedHomeo& f, const SolenoidPoint& s, const Integer& p,
                       std::int64_t q) {
  if (q < 1) throw Error(ErrorKind::kInvalidArgument, "q must be >= 1");
  return apply_iterate(f, s, q) == sol_add(s, sigma(Rational(p), s.depth()));
}

SolenoidPoint find_fiber_periodic(const InducedHomeo& f, const Integer& p, std::int64_t q,
                                  std::size_t depth) {
  ProfiniteInt zero(depth);
  if (!zero.supports(as_integer(f.degree()))) {
    throw Error(ErrorKind::kDepthExceeded, "degree " + std::to_string(f.degree()) +
                                               " does not divide " + std::to_string(depth) + "!");
  }
  auto x = certify_rational(f.base_leaf_map(), p, q);
  if (!x) {
    throw Error(ErrorKind::kNoSuchOrbit, "no x with F^" + std::to_string(q) + "(x) = x + " +
                                             p.get_str());
  }
  return canonicalize<Rational>(*x, zero);
}

OrbitClassification classify_orbit(const InducedHomeo& f, const SolenoidPoint& s,
                                   const Integer& p, std::int64_t q, std::int64_t max_iters,
                                   const Rational& tol, bool keep_trace) {
  if (q < 1) throw Error(ErrorKind::kInvalidArgument, "q must be >= 1");
  if (max_iters < 0) throw Error(ErrorKind::kInvalidArgument, "max_iters must be >= 0");
  if (tol < 0) throw Error(ErrorKind::kInvalidArgument, "tol must be >= 0");

  OrbitClassification out{Inconclusive{"iteration budget below q"}, {}};
  if (max_iters < q) return out;

  const SolenoidPoint shifted = sol_add(s, sigma(Rational(p), s.depth()));
  {
    SolenoidPoint cur = s;
    for (std::int64_t j = 1; j <= q; ++j) {
      cur = apply(f, cur);
      if (keep_trace) out.trace.push_back({j, cur, Rational(0)});
    }
    if (cur == shifted) {
      out.verdict = FiberPeriodic{p, q, s};
      return out;
    }
    out.trace.clear();
  }

  // Move s to the covering fiber with r(k) = 0, where the leaf map is F0 + offset.
  const Rational r(s.fiber().residue(as_integer(f.degree())));
  const Rational y0 = s.leaf() + r;
  PlFunction gap = PlFunction::constant(1, Rational(0));
  try {
    gap = return_gap(f.base_leaf_map(), p, q, kMaxBreakpoints);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kBreakpointCapExceeded) throw;
    out.verdict = Inconclusive{"return map exceeds the breakpoint cap"};
    return out;
  }
  const Rational n(f.degree());
  const Rational g0 = gap.eval(y0);
  auto fixed = g0 > 0 ? first_zero(gap, y0, y0 + n) : last_zero(gap, y0 - n, y0);
  if (!fixed) {
    out.verdict = Inconclusive{"return map has no fixed point; rotation number is not p/q"};
    return out;
  }
  const SolenoidPoint target = canonicalize<Rational>(*fixed - r, s.fiber());

  SolenoidPoint cur = s;
  SolenoidPoint image = target;
  for (std::int64_t j = 1; j <= max_iters; ++j) {
    cur = apply(f, cur);
    image = apply(f, image);
    Rational d = sol_dist(cur, image);
    if (keep_trace) out.trace.push_back({j, cur, d});
    if (j % q == 0 && d < tol) {
      out.verdict = AsymptoticToFiber{p, q, target, d, j};
      return out;
    }
  }
  out.verdict = Inconclusive{"max_iters exhausted"};
  return out;
}

}  // namespace solenoid
