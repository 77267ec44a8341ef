#include "padic/rational.hpp"

#include <cctype>

namespace padic {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  auto is_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string body = text;
  bool neg = false;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body.erase(0, 1);
  }
  std::string num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den))
    throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
  Int n(num), d(den);
  if (neg) n = -n;
  return make_rat(n, d);
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const ExtVal& v) {
  return v.is_finite() ? to_string(v.value()) : std::string("inf");
}

bool is_prime(long p) {
  if (p < 2) return false;
  Int n(p);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long vp(const Int& n, long p) {
  if (n == 0) throw std::invalid_argument("vp: valuation of integer 0");
  Int factor(p), reduced;
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), factor.get_mpz_t()));
}

ExtVal vp(const Rat& x, long p) {
  if (x == 0) return ExtVal::infinity();
  long v = vp(Int(x.get_num()), p);
  if (x.get_den() != 1) v -= vp(Int(x.get_den()), p);
  return ExtVal(Rat(v));
}

unsigned long vp_factorial(unsigned long n, long p) {
  unsigned long total = 0;
  unsigned long q = n;
  while (q > 0) {
    q /= static_cast<unsigned long>(p);
    total += q;
  }
  return total;
}

}  // namespace padic
