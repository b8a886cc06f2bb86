#include "solenoid/induced.hpp"

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

Integer as_integer(std::int64_t n) { return Integer(static_cast<long>(n)); }

CircleLift normalized_base(const CircleLift& base, Integer& offset) {
  if (base.is_pl()) {
    const PlLift& f = base.pl();
    Integer m = floor(f.eval(Rational(0)));
    offset += m;
    return m == 0 ? base : CircleLift(translate(f, -m));
  }
  const AnalyticLift& a = *base.analytic();
  Integer m = floor_real(a.eval(0.0));
  offset += m;
  return CircleLift(AnalyticLift(a.degree(), a.alpha() - m.get_d(), a.terms()));
}

}  // namespace

InducedHomeo::InducedHomeo(CircleLift base, Integer offset)
    : base_(normalized_base(base, offset)), offset_(std::move(offset)) {}

Rational InducedHomeo::leaf_eval(const ProfiniteInt& k, const Rational& x) const {
  const Rational r(k.residue(as_integer(degree())));
  return base_.eval(x + r) - r + Rational(offset_);
}

double InducedHomeo::leaf_eval(const ProfiniteInt& k, double x) const {
  const double r = k.residue(as_integer(degree())).get_d();
  return base_.eval(x + r) - r + offset_.get_d();
}

PlLift InducedHomeo::base_leaf_map() const { return translate(base_.pl(), offset_); }

InducedHomeo induce(const CircleLift& base, const Integer& offset) {
  return InducedHomeo(base, offset);
}

InducedHomeo integer_translation(const Integer& m) { return induce(identity_lift(1), m); }

bool same_homeo(const InducedHomeo& f, const InducedHomeo& g) {
  const std::int64_t n = lcm(f.degree(), g.degree());
  return f.offset() == g.offset() &&
         same_map(embed_degree(f.base().pl(), n), embed_degree(g.base().pl(), n));
}

CoverPair<Rational> apply_cover(const InducedHomeo& f, const CoverPair<Rational>& p) {
  return {f.leaf_eval(p.k, p.x), p.k};
}

SolenoidPoint apply(const InducedHomeo& f, const SolenoidPoint& s) {
  return canonicalize<Rational>(f.leaf_eval(s.fiber(), s.leaf()), s.fiber());
}

RealSolenoidPoint apply(const InducedHomeo& f, const RealSolenoidPoint& s) {
  return canonicalize<double>(f.leaf_eval(s.fiber(), s.leaf()), s.fiber());
}

SolenoidPoint apply_iterate(const InducedHomeo& f, SolenoidPoint s, std::int64_t q) {
  if (q < 0) throw Error(ErrorKind::kInvalidArgument, "apply_iterate needs q >= 0");
  for (std::int64_t i = 0; i < q; ++i) s = apply(f, s);
  return s;
}

Displacement displacement_at(const InducedHomeo& f, const ProfiniteInt& k) {
  const Rational r(k.residue(as_integer(f.degree())));
  PlFunction d = f.base().pl().displacement().shifted(r) + Rational(f.offset());
  return Displacement(CircleLift(PlLift(std::move(d))));
}

std::optional<PlLift> circle_factor(const InducedHomeo& f, std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::kInvalidArgument, "circle factor level must be positive");
  PlLift leaf = f.base_leaf_map();
  const std::int64_t t = minimal_period(Displacement(CircleLift(leaf)));
  if (d % t != 0) return std::nullopt;
  return embed_degree(reduce_degree(leaf, t), d);
}

Rational circle_map_eval(const PlLift& factor, const Rational& y) {
  return mod(factor.eval(y), as_integer(factor.degree()));
}

InducedHomeo embed_degree(const InducedHomeo& f, std::int64_t m) {
  if (m < 1 || m % f.degree() != 0) {
    throw Error(ErrorKind::kNotMultiple,
                std::to_string(m) + " is not a multiple of " + std::to_string(f.degree()));
  }
  return InducedHomeo(embed_degree(f.base(), m), f.offset());
}

InducedHomeo compose_induced(const InducedHomeo& f, const InducedHomeo& g) {
  // (f o g)_k(x) = F0(G0(x + r) + b) - r + a for f = (F0, a), g = (G0, b).
  const std::int64_t n = lcm(f.degree(), g.degree());
  PlLift outer = embed_degree(f.base().pl(), n);
  PlLift inner = translate(embed_degree(g.base().pl(), n), g.offset());
  return InducedHomeo(CircleLift(lift_compose(outer, inner)), f.offset());
}

InducedHomeo invert_induced(const InducedHomeo& f) {
  // f^-1_k(x) = F0^-1(x + r - a) - r.
  const PlLift& base = f.base().pl();
  PlLift shift = rotation(Rational(-f.offset()), base.degree());
  return InducedHomeo(CircleLift(lift_compose(lift_inverse(base), shift)), Integer(0));
}

// -------------------------------------------------------- LimitPeriodicHomeo

LimitPeriodicHomeo::LimitPeriodicHomeo(std::vector<std::int64_t> tower,
                                       std::vector<PlFunction> summands, Rational tail_bound)
    : tower_(std::move(tower)), summands_(std::move(summands)), tail_bound_(std::move(tail_bound)) {
  if (tower_.empty()) throw Error(ErrorKind::kNotDivisorChain, "tower must be non-empty");
  if (tower_.size() != summands_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "one summand per tower level is required");
  }
  for (std::size_t i = 0; i < tower_.size(); ++i) {
    if (tower_[i] < 1 || (i > 0 && tower_[i] % tower_[i - 1] != 0)) {
      throw Error(ErrorKind::kNotDivisorChain, "tower periods must form a divisor chain");
    }
  }
  if (tail_bound_ < 0) throw Error(ErrorKind::kInvalidArgument, "tail bound must be >= 0");

  partial_.push_back(PlFunction::constant(1, Rational(0)));
  for (std::size_t i = 0; i < tower_.size(); ++i) {
    if (tower_[i] % summands_[i].period() != 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "summand " + std::to_string(i + 1) + " period does not divide T_" +
                      std::to_string(i + 1));
    }
    summands_[i] = summands_[i].with_period(tower_[i]);
    PlFunction next = (partial_.back() + summands_[i]).with_period(tower_[i]).simplified();
    if (!(next.min_slope() > -1)) {
      throw Error(ErrorKind::kNotHomeomorphism,
                  "partial sum through level " + std::to_string(i + 1) +
                      " has slope <= -1; id + delta is not increasing");
    }
    partial_.push_back(std::move(next));
  }
  bounds_.assign(tower_.size() + 1, tail_bound_);
  for (std::size_t j = tower_.size(); j-- > 0;) bounds_[j] = bounds_[j + 1] + summands_[j].sup_norm();
}

const Rational& LimitPeriodicHomeo::bound(std::size_t level) const {
  if (level > levels()) throw Error(ErrorKind::kInvalidArgument, "level beyond the tower");
  return bounds_[level];
}

const PlFunction& LimitPeriodicHomeo::partial_sum(std::size_t level) const {
  if (level > levels()) throw Error(ErrorKind::kInvalidArgument, "level beyond the tower");
  return partial_[level];
}

LimitPeriodicHomeo lp_build(std::vector<std::int64_t> tower, std::vector<PlFunction> summands,
                            const Rational& tail_bound) {
  return LimitPeriodicHomeo(std::move(tower), std::move(summands), tail_bound);
}

LpTruncation lp_truncate(const LimitPeriodicHomeo& h, std::size_t level) {
  return {induce(CircleLift(PlLift(h.partial_sum(level))), 0), h.bound(level)};
}

}  // namespace solenoid
