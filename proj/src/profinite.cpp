#include "solenoid/profinite.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

const std::vector<Integer>& factorial_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kMaxDepth + 1);
    t[0] = 1;
    for (std::size_t m = 1; m <= kMaxDepth; ++m) t[m] = t[m - 1] * static_cast<unsigned long>(m);
    return t;
  }();
  return table;
}

void check_depth(std::size_t depth) {
  if (depth < 1 || depth > kMaxDepth) {
    throw Error(ErrorKind::kInvalidArgument,
                "depth must lie in [1, " + std::to_string(kMaxDepth) + "], got " +
                    std::to_string(depth));
  }
}

Integer floor_mod(const Integer& a, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

const Integer& factorial(std::size_t m) {
  if (m > kMaxDepth) {
    throw Error(ErrorKind::kInvalidArgument, "factorial index beyond kMaxDepth");
  }
  return factorial_table()[m];
}

ProfiniteInt::ProfiniteInt(std::size_t depth) {
  check_depth(depth);
  residues_.assign(depth, Integer(0));
}

ProfiniteInt ProfiniteInt::from_residues(std::vector<Integer> residues) {
  check_depth(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const Integer& modulus = factorial(i + 1);
    if (residues[i] < 0 || residues[i] >= modulus) {
      throw Error(ErrorKind::kInvalidArgument,
                  "residue r_" + std::to_string(i + 1) + " = " + residues[i].get_str() +
                      " outside [0, " + modulus.get_str() + ")");
    }
    if (i > 0 && floor_mod(residues[i], factorial(i)) != residues[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "incompatible tower at level " + std::to_string(i + 1));
    }
  }
  return ProfiniteInt(std::move(residues), 0);
}

ProfiniteInt ProfiniteInt::embed(const Integer& t, std::size_t depth) {
  check_depth(depth);
  std::vector<Integer> r(depth);
  for (std::size_t m = 1; m <= depth; ++m) r[m - 1] = floor_mod(t, factorial(m));
  return ProfiniteInt(std::move(r), 0);
}

bool ProfiniteInt::supports(const Integer& n) const {
  if (n <= 0) return false;
  return mpz_divisible_p(factorial(depth()).get_mpz_t(), n.get_mpz_t()) != 0;
}

Integer ProfiniteInt::residue(const Integer& n) const {
  if (!supports(n)) {
    throw Error(ErrorKind::kDepthExceeded,
                n.get_str() + " does not divide " + std::to_string(depth()) + "!");
  }
  // r_M is congruent to every coarser level, so it reduces correctly mod n.
  return floor_mod(top(), n);
}

ProfiniteInt ProfiniteInt::truncated(std::size_t depth) const {
  check_depth(depth);
  if (depth > this->depth()) {
    throw Error(ErrorKind::kDepthExceeded, "cannot extend a truncated profinite integer");
  }
  return ProfiniteInt(std::vector<Integer>(residues_.begin(), residues_.begin() + depth), 0);
}

ProfiniteInt ProfiniteInt::operator-() const {
  std::vector<Integer> r(depth());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(-residues_[i], factorial(i + 1));
  return ProfiniteInt(std::move(r), 0);
}

ProfiniteInt operator+(const ProfiniteInt& a, const ProfiniteInt& b) {
  const std::size_t depth = std::min(a.depth(), b.depth());
  std::vector<Integer> r(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    r[i] = a.residues_[i] + b.residues_[i];
    if (r[i] >= factorial(i + 1)) r[i] -= factorial(i + 1);
  }
  return ProfiniteInt(std::move(r), 0);
}

std::string ProfiniteInt::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) out << ", ";
    out << residues_[i].get_str();
  }
  out << ") @ depth " << depth();
  return out.str();
}

ProfiniteInt ProfiniteInt::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::kParse, "profinite literal '" + std::string(text) + "': " + why);
  };
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw fail("expected '(r1, ..., rM)'");
  }
  std::vector<Integer> residues;
  std::string body(text.substr(open + 1, close - open - 1));
  std::stringstream items(body);
  std::string item;
  while (std::getline(items, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw fail("empty residue");
    item = item.substr(b, e - b + 1);
    if (!std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw fail("residues must be nonnegative integers");
    }
    residues.emplace_back(item, 10);
  }
  std::string_view rest = text.substr(close + 1);
  if (auto at = rest.find('@'); at != std::string_view::npos) {
    std::string tail(rest.substr(at + 1));
    std::istringstream in(tail);
    std::string word;
    std::size_t depth = 0;
    if (!(in >> word) || word != "depth" || !(in >> depth)) throw fail("bad '@ depth M' suffix");
    if (depth != residues.size()) throw fail("depth does not match residue count");
  }
  try {
    return from_residues(std::move(residues));
  } catch (const Error& e) {
    throw fail(e.what());
  }
}

Rational pf_dist(const ProfiniteInt& a, const ProfiniteInt& b) {
  if (a.depth() != b.depth()) {
    throw Error(ErrorKind::kInvalidArgument, "pf_dist requires equal depths");
  }
  Rational total = 0;
  Rational weight(1, 2);
  for (std::size_t i = 0; i < a.depth(); ++i) {
    if (a.residues()[i] != b.residues()[i]) total += weight;
    weight /= 2;
  }
  return total;
}

}  // namespace solenoid
