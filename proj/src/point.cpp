#include "solenoid/point.hpp"

#include <sstream>

namespace solenoid {

RealSolenoidPoint to_real(const SolenoidPoint& s) {
  return canonicalize<double>(to_double(s.leaf()), s.fiber());
}

std::string to_literal(const SolenoidPoint& s) {
  std::ostringstream out;
  out << "x=" << to_string(s.leaf()) << "; k=(";
  const auto& r = s.fiber().residues();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out << ',';
    out << r[i].get_str();
  }
  out << ')';
  return out.str();
}

SolenoidPoint parse_point(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::kParse, "point literal '" + std::string(text) + "': " + why);
  };
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw fail("expected 'x=p/q; k=(...)'");
  std::string_view xs = text.substr(0, semi);
  std::string_view ks = text.substr(semi + 1);
  auto xeq = xs.find('=');
  auto keq = ks.find('=');
  if (xeq == std::string_view::npos || keq == std::string_view::npos) {
    throw fail("expected 'x=' and 'k=' fields");
  }
  auto name_of = [](std::string_view s) {
    std::string out;
    for (char c : s) {
      if (c != ' ' && c != '\t') out.push_back(c);
    }
    return out;
  };
  if (name_of(xs.substr(0, xeq)) != "x" || name_of(ks.substr(0, keq)) != "k") {
    throw fail("fields must be named x and k");
  }
  Rational x = parse_rational(xs.substr(xeq + 1));
  ProfiniteInt k = ProfiniteInt::parse(ks.substr(keq + 1));
  return canonicalize<Rational>(x, k);
}

}  // namespace solenoid
