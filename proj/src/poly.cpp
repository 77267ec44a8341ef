#include "padic/poly.hpp"

#include <atomic>

namespace padic {

namespace {
std::atomic<long> g_degree_cap{512};

// Content (gcd of coefficients, signed by the leading term) of an integer
// coefficient vector.
Int content_z(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return Int(1);
  if (v.back() < 0) g = -g;
  return g;
}

void trim_z(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Scales a rational polynomial to a primitive integer polynomial with a
// positive leading coefficient; only the T-root structure matters to gcd.
std::vector<Int> to_primitive_z(const Poly& f) {
  Int l = 1;
  for (const Rat& c : f.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> v;
  v.reserve(f.coeffs().size());
  for (const Rat& c : f.coeffs()) v.push_back(Int(c.get_num() * (l / c.get_den())));
  Int cont = content_z(v);
  for (Int& x : v) x /= cont;
  return v;
}

// In-place pseudo-remainder of a by b (b nonzero), kept primitive.
void prem_primitive(std::vector<Int>& a, const std::vector<Int>& b) {
  const Int& lb = b.back();
  const size_t db = b.size() - 1;
  while (a.size() >= b.size() && !a.empty()) {
    Int la = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i + 1 < a.size(); ++i) {
      a[i] *= lb;
      if (i >= shift && i - shift < db) a[i] -= la * b[i - shift];
    }
    a.pop_back();
    trim_z(a);
  }
  if (!a.empty()) {
    Int cont = content_z(a);
    for (Int& x : a) x /= cont;
  }
}
}  // namespace

DegreeCapError::DegreeCapError(long d)
    : std::runtime_error("polynomial degree " + std::to_string(d) +
                         " exceeds the configured cap " +
                         std::to_string(poly_degree_cap())),
      degree(d) {}

long poly_degree_cap() { return g_degree_cap.load(); }

void set_poly_degree_cap(long cap) {
  if (cap < 1) throw std::invalid_argument("degree cap must be positive");
  g_degree_cap.store(cap);
}

Poly::Poly(Rat c) {
  if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(Rat(1), 1); }

Poly Poly::monomial(Rat c, long k) {
  Poly f;
  if (c == 0) return f;
  if (k > poly_degree_cap()) throw DegreeCapError(k);
  f.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
  f.c_.back() = std::move(c);
  return f;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rat& Poly::coeff(long i) const {
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw std::logic_error("Poly: leading coefficient of 0");
  return c_.back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  long d = degree() + o.degree();
  if (d > poly_degree_cap()) throw DegreeCapError(d);
  std::vector<Rat> v(static_cast<size_t>(d) + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (Rat& c : r.c_) c *= s;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  Rat inv = 1 / leading();
  return *this * inv;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::dilate(long p) const {
  if (is_zero()) return Poly();
  long d = degree() * p;
  if (d > poly_degree_cap()) throw DegreeCapError(d);
  std::vector<Rat> v(static_cast<size_t>(d) + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i * static_cast<size_t>(p)] = c_[i];
  return Poly(std::move(v));
}

std::vector<Poly> Poly::split_residues(long p) const {
  std::vector<std::vector<Rat>> parts(static_cast<size_t>(p));
  for (size_t i = 0; i < c_.size(); ++i) {
    size_t k = i % static_cast<size_t>(p);
    size_t q = i / static_cast<size_t>(p);
    auto& part = parts[k];
    if (part.size() <= q) part.resize(q + 1, Rat(0));
    part[q] = c_[i];
  }
  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& part : parts) out.emplace_back(Poly(std::move(part)));
  return out;
}

void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  std::vector<Rat> rem(a.coeffs());
  long db = b.degree();
  long dq = a.degree() - db;
  if (dq < 0) {
    q = Poly();
    r = a;
    return;
  }
  std::vector<Rat> quo(static_cast<size_t>(dq) + 1, Rat(0));
  Rat inv_lead = 1 / b.leading();
  for (long i = static_cast<long>(rem.size()) - 1; i >= db;) {
    if (rem[static_cast<size_t>(i)] == 0) {
      --i;
      continue;
    }
    Rat f = rem[static_cast<size_t>(i)] * inv_lead;
    long shift = i - db;
    quo[static_cast<size_t>(shift)] = f;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<size_t>(shift + j)] -= f * b.coeff(j);
    --i;
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly exact_div(const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("exact_div: division is not exact");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Int> f = to_primitive_z(a);
  std::vector<Int> g = to_primitive_z(b);
  if (f.size() < g.size()) f.swap(g);
  while (!g.empty()) {
    prem_primitive(f, g);
    f.swap(g);
  }
  std::vector<Rat> v(f.size());
  for (size_t i = 0; i < f.size(); ++i) v[i] = Rat(f[i]);
  return Poly(std::move(v)).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return exact_div(a * b, gcd(a, b)).monic();
}

Poly pow(const Poly& base, unsigned long e) {
  Poly acc(1), sq = base;
  while (e > 0) {
    if (e & 1UL) acc *= sq;
    e >>= 1UL;
    if (e > 0) sq *= sq;
  }
  return acc;
}

}  // namespace padic
