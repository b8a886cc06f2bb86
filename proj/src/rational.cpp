#include "solenoid/rational.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

#include "solenoid/error.hpp"

namespace solenoid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDepthExceeded: return "DepthExceeded";
    case ErrorKind::kNotMonotone: return "NotMonotone";
    case ErrorKind::kEmptyBreakpoints: return "EmptyBreakpoints";
    case ErrorKind::kDegreeMismatch: return "DegreeMismatch";
    case ErrorKind::kAnalyticExactUnsupported: return "AnalyticExactUnsupported";
    case ErrorKind::kBreakpointCapExceeded: return "BreakpointCapExceeded";
    case ErrorKind::kNoSuchOrbit: return "NoSuchOrbit";
    case ErrorKind::kNotMultiple: return "NotMultiple";
    case ErrorKind::kNotHomeomorphism: return "NotHomeomorphism";
    case ErrorKind::kNotDivisorChain: return "NotDivisorChain";
    case ErrorKind::kNotIncreasing: return "NotIncreasing";
    case ErrorKind::kMixedHulls: return "MixedHulls";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void parse_fail(std::string_view text) {
  throw Error(ErrorKind::kParse,
              "malformed rational '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Rational parse_decimal(std::string_view original, std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) parse_fail(original);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) parse_fail(original);
  if (!int_part.empty() && !all_digits(int_part)) parse_fail(original);
  if (!frac_part.empty() && !all_digits(frac_part)) parse_fail(original);
  digits.append(int_part).append(frac_part);
  exponent -= static_cast<long>(frac_part.size());

  Integer mantissa(digits.empty() ? std::string("0") : digits, 10);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational result = exponent >= 0 ? Rational(mantissa * scale)
                                  : Rational(mantissa, scale);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) parse_fail(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, s);

  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) parse_fail(text);
  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  Integer n(num_str, 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  Rational result(n, d);
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

Integer floor(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

Integer floor_real(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite leaf coordinate");
  }
  return Integer(std::floor(value));
}

Rational mod(const Rational& x, const Integer& n) {
  Rational q = x / n;
  return x - Rational(floor(q) * n);
}

double mod(double x, double n) {
  double r = std::fmod(x, n);
  if (r < 0) r += n;
  if (r >= n) r -= n;
  return r;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite value has no rational form");
  }
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

double to_double(const Rational& value) { return value.get_d(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Rational circle_distance(const Rational& a, const Rational& b, const Integer& n) {
  Rational d = mod(a - b, n);
  Rational other = Rational(n) - d;
  return d < other ? d : other;
}

double circle_distance(double a, double b, double n) {
  double d = mod(a - b, n);
  return std::min(d, n - d);
}

}  // namespace solenoid
