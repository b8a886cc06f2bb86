#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "solenoid/circlemaps.hpp"
#include "solenoid/point.hpp"

namespace solenoid {

/// Induced homeomorphism of degree n: lift (x, k) -> (F_k(x), k) with
///
///   F_k(x) = F0(x + r(k)) - r(k) + offset,   r(k) = residue(k, n),
///
/// i.e. displacement delta_k(x) = delta0(x + r(k)) + offset. The integer
/// offset is the translation by sigma(offset) and is kept apart from F0.
/// On construction the integer part of F0(0) is moved into the offset so
/// that F0(0) lies in [0, 1); this makes the representation unique.
class InducedHomeo {
 public:
  InducedHomeo(CircleLift base, Integer offset);

  std::int64_t degree() const { return base_.degree(); }
  const CircleLift& base() const noexcept { return base_; }
  const Integer& offset() const noexcept { return offset_; }
  bool is_pl() const noexcept { return base_.is_pl(); }

  /// F_k(x) on covering coordinates.
  Rational leaf_eval(const ProfiniteInt& k, const Rational& x) const;
  double leaf_eval(const ProfiniteInt& k, double x) const;

  /// The leaf map F0 + offset on fibers with r(k) = 0 (PL only).
  PlLift base_leaf_map() const;

 private:
  CircleLift base_;
  Integer offset_;
};

InducedHomeo induce(const CircleLift& base, const Integer& offset = 0);
/// Translation by sigma(m), an element of the integer-translation subgroup.
InducedHomeo integer_translation(const Integer& m);

/// Equal as solenoid maps (compared at the common degree).
bool same_homeo(const InducedHomeo& f, const InducedHomeo& g);

CoverPair<Rational> apply_cover(const InducedHomeo& f, const CoverPair<Rational>& p);
SolenoidPoint apply(const InducedHomeo& f, const SolenoidPoint& s);
RealSolenoidPoint apply(const InducedHomeo& f, const RealSolenoidPoint& s);
/// f^q(s), q >= 0.
SolenoidPoint apply_iterate(const InducedHomeo& f, SolenoidPoint s, std::int64_t q);

/// delta_k as the displacement of the PL lift F_k (PL only).
Displacement displacement_at(const InducedHomeo& f, const ProfiniteInt& k);

/// Lift of the circle map f_d on R/dZ with pi_d o f = f_d o pi_d, when it
/// exists: exactly when the displacement of F0 is d-periodic. Returned as a
/// degree-d lift (PL only).
std::optional<PlLift> circle_factor(const InducedHomeo& f, std::int64_t d);
/// f_d(y) in [0, d) for a lift returned by circle_factor.
Rational circle_map_eval(const PlLift& factor, const Rational& y);

/// The inclusion of degree-n induced maps into degree-m ones (n | m).
InducedHomeo embed_degree(const InducedHomeo& f, std::int64_t m);

/// f o g at degree lcm(n_f, n_g).
InducedHomeo compose_induced(const InducedHomeo& f, const InducedHomeo& g);
InducedHomeo invert_induced(const InducedHomeo& f);

/// Finite certified tower of a limit-periodic displacement. Summand j is
/// T_j-periodic; bound(j) >= sup |sum_{i>j} delta^(i)|, including the
/// declared tail beyond the last stored level.
class LimitPeriodicHomeo {
 public:
  LimitPeriodicHomeo(std::vector<std::int64_t> tower, std::vector<PlFunction> summands,
                     Rational tail_bound);

  std::size_t levels() const noexcept { return tower_.size(); }
  const std::vector<std::int64_t>& tower() const noexcept { return tower_; }
  const std::vector<PlFunction>& summands() const noexcept { return summands_; }
  const Rational& tail_bound() const noexcept { return tail_bound_; }
  /// B_j for j in [0, levels()].
  const Rational& bound(std::size_t level) const;
  const std::vector<Rational>& bounds() const noexcept { return bounds_; }
  /// sum_{i <= j} delta^(i) with period T_j (the constant 0 of period 1 at j = 0).
  const PlFunction& partial_sum(std::size_t level) const;

 private:
  std::vector<std::int64_t> tower_;
  std::vector<PlFunction> summands_;
  Rational tail_bound_;
  std::vector<Rational> bounds_;
  std::vector<PlFunction> partial_;
};

/// Validates the divisor chain (NotDivisorChain) and that every partial sum is
/// the displacement of a homeomorphism (NotHomeomorphism).
LimitPeriodicHomeo lp_build(std::vector<std::int64_t> tower, std::vector<PlFunction> summands,
                            const Rational& tail_bound = 0);

struct LpTruncation {
  InducedHomeo homeo;
  Rational bound;
};

/// The degree-T_j induced map with displacement sum_{i<=j} delta^(i) and the
/// certified bound B_j on the discarded tail.
LpTruncation lp_truncate(const LimitPeriodicHomeo& h, std::size_t level);

}  // namespace solenoid
