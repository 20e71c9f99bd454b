#include "cwb/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace cwb {

struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  mpz_class modulus = 0;
  // Poly / PolyQuot: the coefficient field (PrimeField or Rationals).
  std::shared_ptr<const RingDescriptor> field;
  std::string var;
  PolyElem poly_mod;  // PolyQuot
  AlgebraTable algebra;

  bool rational_coeffs() const { return field->kind == RingKind::Rationals; }
  const mpz_class& coeff_p() const { return field->modulus; }
};

namespace {

bool same(const RingDescriptor& a, const RingDescriptor& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::Modular:
    case RingKind::PrimeField:
      return a.modulus == b.modulus;
    case RingKind::Poly:
      return a.var == b.var && same(*a.field, *b.field);
    case RingKind::PolyQuot:
      return a.var == b.var && same(*a.field, *b.field) && a.poly_mod == b.poly_mod;
    case RingKind::FiniteAlgebra:
      return a.modulus == b.modulus && a.algebra == b.algebra;
  }
  return false;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InvalidArgument("element is not invertible");
  return r;
}

// ---- coefficient field helpers (F_p stored as integral mpq in [0, p)) ----

struct CoeffField {
  bool rational;
  mpz_class p;

  mpq_class norm(const mpq_class& a) const {
    if (rational) {
      mpq_class r = a;
      r.canonicalize();
      return r;
    }
    mpz_class num = mod_pos(a.get_num(), p);
    mpz_class den = mod_pos(a.get_den(), p);
    return mpq_class(mod_pos(num * inv_mod(den, p), p));
  }
  mpq_class inv(const mpq_class& a) const {
    if (rational) return 1 / a;
    return mpq_class(inv_mod(a.get_num(), p));
  }
};

CoeffField coeff_field_of(const RingDescriptor& d) {
  return CoeffField{d.rational_coeffs(), d.rational_coeffs() ? mpz_class(0) : d.coeff_p()};
}

// ---- dense polynomial helpers ----

void trim(PolyElem& a) {
  while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
}

long deg(const PolyElem& a) { return static_cast<long>(a.coeffs.size()) - 1; }

PolyElem p_add(const CoeffField& F, const PolyElem& a, const PolyElem& b) {
  PolyElem r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  for (auto& c : r.coeffs) c = F.norm(c);
  trim(r);
  return r;
}

PolyElem p_scale(const CoeffField& F, const PolyElem& a, const mpq_class& s) {
  PolyElem r;
  r.coeffs.reserve(a.coeffs.size());
  for (const auto& c : a.coeffs) r.coeffs.push_back(F.norm(c * s));
  trim(r);
  return r;
}

PolyElem p_neg(const CoeffField& F, const PolyElem& a) { return p_scale(F, a, mpq_class(-1)); }

PolyElem p_sub(const CoeffField& F, const PolyElem& a, const PolyElem& b) {
  return p_add(F, a, p_neg(F, b));
}

PolyElem p_mul(const CoeffField& F, const PolyElem& a, const PolyElem& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  PolyElem r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  for (auto& c : r.coeffs) c = F.norm(c);
  trim(r);
  return r;
}

PolyElem p_const(const CoeffField& F, const mpq_class& c) {
  PolyElem r;
  r.coeffs.push_back(F.norm(c));
  trim(r);
  return r;
}

PolyElem p_monomial(const CoeffField& F, const mpq_class& c, std::size_t k) {
  PolyElem r;
  r.coeffs.assign(k + 1, mpq_class(0));
  r.coeffs[k] = F.norm(c);
  trim(r);
  return r;
}

std::pair<PolyElem, PolyElem> p_divmod(const CoeffField& F, const PolyElem& a, const PolyElem& b) {
  if (b.coeffs.empty()) throw InvalidArgument("polynomial division by zero");
  PolyElem q, r = a;
  const mpq_class lead_inv = F.inv(b.coeffs.back());
  if (deg(r) >= deg(b)) q.coeffs.assign(static_cast<std::size_t>(deg(r) - deg(b) + 1), mpq_class(0));
  while (!r.coeffs.empty() && deg(r) >= deg(b)) {
    const auto shift = static_cast<std::size_t>(deg(r) - deg(b));
    const mpq_class c = F.norm(r.coeffs.back() * lead_inv);
    q.coeffs[shift] = c;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      r.coeffs[i + shift] = F.norm(r.coeffs[i + shift] - c * b.coeffs[i]);
    trim(r);
  }
  trim(q);
  return {q, r};
}

PolyElem p_mod(const CoeffField& F, const PolyElem& a, const PolyElem& m) {
  if (deg(a) < deg(m)) return a;
  return p_divmod(F, a, m).second;
}

PolyElem p_monic(const CoeffField& F, const PolyElem& a) {
  if (a.coeffs.empty()) return a;
  return p_scale(F, a, F.inv(a.coeffs.back()));
}

// (g, s, t) with s a + t b = g, g monic (or zero).
std::tuple<PolyElem, PolyElem, PolyElem> p_gcdext(const CoeffField& F, const PolyElem& a,
                                                  const PolyElem& b) {
  PolyElem r0 = a, r1 = b, s0 = p_const(F, 1), s1, t0, t1 = p_const(F, 1);
  while (!r1.coeffs.empty()) {
    auto [q, r] = p_divmod(F, r0, r1);
    PolyElem s2 = p_sub(F, s0, p_mul(F, q, s1));
    PolyElem t2 = p_sub(F, t0, p_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.coeffs.empty()) {
    const mpq_class li = F.inv(r0.coeffs.back());
    r0 = p_scale(F, r0, li);
    s0 = p_scale(F, s0, li);
    t0 = p_scale(F, t0, li);
  }
  return {r0, s0, t0};
}

PolyElem p_gcd(const CoeffField& F, const PolyElem& a, const PolyElem& b) {
  return std::get<0>(p_gcdext(F, a, b));
}

PolyElem p_derivative(const CoeffField& F, const PolyElem& a) {
  PolyElem r;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    r.coeffs.push_back(F.norm(a.coeffs[i] * static_cast<long>(i)));
  trim(r);
  return r;
}

PolyElem p_powmod(const CoeffField& F, PolyElem base, mpz_class e, const PolyElem& m) {
  PolyElem result = p_mod(F, p_const(F, 1), m);
  base = p_mod(F, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = p_mod(F, p_mul(F, result, base), m);
    base = p_mod(F, p_mul(F, base, base), m);
    e >>= 1;
  }
  return result;
}

std::string format_q(const mpq_class& q) { return q.get_str(); }

std::string format_poly(const PolyElem& a, const std::string& var) {
  if (a.coeffs.empty()) return "0";
  std::string out;
  for (long k = deg(a); k >= 0; --k) {
    const mpq_class& c = a.coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::string term;
    if (k == 0) {
      term = format_q(c);
    } else {
      std::string mono = var;
      if (k > 1) mono += "^" + std::to_string(k);
      if (c == 1)
        term = mono;
      else if (c == -1)
        term = "-" + mono;
      else
        term = format_q(c) + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

// ---- finite algebra helpers ----

AlgElem a_norm(const mpz_class& p, AlgElem a) {
  for (auto& c : a.coords) c = mod_pos(c, p);
  return a;
}

AlgElem a_mul(const RingDescriptor& d, const AlgElem& a, const AlgElem& b) {
  const std::size_t n = d.algebra.names.size();
  AlgElem r;
  r.coords.assign(n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords[j] == 0) continue;
      const mpz_class c = a.coords[i] * b.coords[j];
      for (std::size_t k = 0; k < n; ++k)
        if (d.algebra.product[i][j][k] != 0) r.coords[k] += c * d.algebra.product[i][j][k];
    }
  }
  return a_norm(d.modulus, r);
}

// Solve A x = b over F_p by Gauss-Jordan; A is n x n given column-major by
// the action of multiplication. Returns nullopt when inconsistent.
std::optional<std::vector<mpz_class>> solve_mod_p(std::vector<std::vector<mpz_class>> A,
                                                  std::vector<mpz_class> b, const mpz_class& p) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (mod_pos(A[i][c], p) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    const mpz_class inv = inv_mod(mod_pos(A[r][c], p), p);
    for (auto& v : A[r]) v = mod_pos(v * inv, p);
    b[r] = mod_pos(b[r] * inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpz_class f = mod_pos(A[i][c], p);
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) A[i][k] = mod_pos(A[i][k] - f * A[r][k], p);
      b[i] = mod_pos(b[i] - f * b[r], p);
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (mod_pos(b[i], p) != 0) return std::nullopt;
  std::vector<mpz_class> x(cols, mpz_class(0));
  for (std::size_t i = 0; i < r; ++i) x[static_cast<std::size_t>(pivot_col[i])] = b[i];
  return x;
}

// ---- integer factorization ----

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const mpz_class& v) { return mod_pos(v * v + c, n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod_pos(q * abs(mpz_class(x - y)), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = abs(mpz_class(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

std::size_t omega_integer(mpz_class n) {
  n = abs(n);
  std::size_t count = 0;
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++count;
    }
  }
  std::function<std::size_t(const mpz_class&)> split = [&](const mpz_class& m) -> std::size_t {
    if (m == 1) return 0;
    if (is_prime(m)) return 1;
    const mpz_class d = pollard_brent(m);
    return split(d) + split(m / d);
  };
  return count + split(n);
}

// Omega of a nonzero polynomial over F_p via distinct-degree splitting.
std::size_t omega_poly_fp(const CoeffField& F, PolyElem h) {
  h = p_monic(F, h);
  std::size_t count = 0;
  PolyElem x = p_monomial(F, 1, 1);
  PolyElem frob = x;  // x^(p^d) mod h
  for (long d = 1; deg(h) > 0; ++d) {
    if (2 * d > deg(h)) {
      ++count;  // what remains is irreducible
      break;
    }
    frob = p_powmod(F, frob, F.p, h);
    PolyElem g = p_gcd(F, p_sub(F, frob, x), h);
    while (deg(g) > 0) {
      PolyElem c = p_gcd(F, g, h);
      if (deg(c) <= 0) break;
      count += static_cast<std::size_t>(deg(c) / d);
      h = p_divmod(F, h, c).first;
      g = c;
    }
    frob = p_mod(F, frob, h.coeffs.empty() ? p_const(F, 1) : h);
  }
  return count;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > 1000000) throw UnsupportedRing("rational root search: coefficient too large");
  std::vector<mpz_class> out;
  const long v = n.get_si();
  for (long d = 1; d <= v; ++d)
    if (v % d == 0) out.emplace_back(d);
  return out;
}

std::optional<mpq_class> rational_root(const PolyElem& h) {
  if (h.coeffs.empty()) return std::nullopt;
  if (h.coeffs[0] == 0) return mpq_class(0);
  mpz_class lcm = 1;
  for (const auto& c : h.coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : h.coeffs) ic.push_back(mpz_class(c * lcm));
  for (const auto& num : divisors(ic.front()))
    for (const auto& den : divisors(ic.back()))
      for (int sign : {1, -1}) {
        const mpq_class r(sign * num, den);
        mpq_class acc = 0;
        for (auto it = h.coeffs.rbegin(); it != h.coeffs.rend(); ++it) acc = acc * r + *it;
        if (acc == 0) {
          mpq_class rc = r;
          rc.canonicalize();
          return rc;
        }
      }
  return std::nullopt;
}

std::size_t omega_poly_q(const CoeffField& F, PolyElem h) {
  std::size_t count = 0;
  h = p_monic(F, h);
  while (deg(h) > 0) {
    auto root = rational_root(h);
    if (!root) break;
    PolyElem lin;
    lin.coeffs = {mpq_class(-*root), mpq_class(1)};
    h = p_divmod(F, h, lin).first;
    ++count;
  }
  if (deg(h) <= 0) return count;
  PolyElem g = p_gcd(F, h, p_derivative(F, h));
  if (deg(g) > 0) return count + omega_poly_q(F, g) + omega_poly_q(F, p_divmod(F, h, g).first);
  if (deg(h) <= 3) return count + 1;
  throw UnsupportedRing("irreducible factor count over Q[x] beyond degree 3 is not supported");
}

// ---- expression parser ----

class Parser {
 public:
  Parser(const Ring& ring, std::string text) : ring_(ring), s_(std::move(text)) {}

  Elem run() {
    Elem v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse '" + s_ + "' over " + ring_.name() + ": " + what +
                          " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Elem expr() {
    Elem v = term();
    for (;;) {
      if (eat('+'))
        v = ring_.add(v, term());
      else if (eat('-'))
        v = ring_.sub(v, term());
      else
        return v;
    }
  }
  Elem term() {
    Elem v = unary();
    for (;;) {
      if (eat('*')) {
        v = ring_.mul(v, unary());
      } else if (eat('/')) {
        Elem d = unary();
        auto q = ring_.divide(v, d);
        if (!q) fail("inexact division");
        v = *q;
      } else {
        return v;
      }
    }
  }
  Elem unary() {
    if (eat('-')) return ring_.neg(unary());
    if (eat('+')) return unary();
    return power();
  }
  Elem power() {
    Elem base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = ring_.pow(base, std::stoul(s_.substr(start, pos_ - start)));
    }
    return base;
  }
  Elem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      Elem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ring_.from_mpz(mpz_class(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return name(s_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }
  Elem name(const std::string& id) {
    const RingKind k = ring_.kind();
    if ((k == RingKind::Poly || k == RingKind::PolyQuot) && id == ring_.variable_name())
      return ring_.variable();
    if (k == RingKind::FiniteAlgebra) {
      const auto& names = ring_.algebra().names;
      for (std::size_t j = 0; j < names.size(); ++j)
        if (names[j] == id) return ring_.basis_element(j);
    }
    fail("unknown name '" + id + "'");
  }

  const Ring& ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::Integers: return "integers";
    case RingKind::Modular: return "modular";
    case RingKind::PrimeField: return "prime_field";
    case RingKind::Rationals: return "rationals";
    case RingKind::Poly: return "poly";
    case RingKind::PolyQuot: return "poly_quot";
    case RingKind::FiniteAlgebra: return "finite_algebra";
  }
  return "?";
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// ---------------------------------------------------------------- factories

Ring Ring::integers() {
  static const auto d = std::make_shared<const RingDescriptor>(RingDescriptor{});
  return Ring(d);
}

Ring Ring::rationals() {
  static const auto d = [] {
    RingDescriptor r;
    r.kind = RingKind::Rationals;
    return std::make_shared<const RingDescriptor>(r);
  }();
  return Ring(d);
}

Ring Ring::modular(const mpz_class& m) {
  if (m < 2) throw InvalidArgument("Modular(m) requires m >= 2, got " + m.get_str());
  RingDescriptor r;
  r.kind = RingKind::Modular;
  r.modulus = m;
  return Ring(std::make_shared<const RingDescriptor>(r));
}

Ring Ring::prime_field(const mpz_class& p) {
  if (!is_prime(p)) throw InvalidArgument("PrimeField(p) requires p prime, got " + p.get_str());
  RingDescriptor r;
  r.kind = RingKind::PrimeField;
  r.modulus = p;
  return Ring(std::make_shared<const RingDescriptor>(r));
}

Ring Ring::poly(const Ring& field, std::string var) {
  if (field.kind() != RingKind::PrimeField && field.kind() != RingKind::Rationals)
    throw InvalidArgument("polynomial coefficients must come from a field");
  if (var.empty() || !std::isalpha(static_cast<unsigned char>(var[0])))
    throw InvalidArgument("invalid variable name '" + var + "'");
  RingDescriptor r;
  r.kind = RingKind::Poly;
  r.field = field.d_;
  r.var = std::move(var);
  return Ring(std::make_shared<const RingDescriptor>(r));
}

Ring Ring::poly_quot(const Ring& poly, const Elem& modulus) {
  if (poly.kind() != RingKind::Poly) throw InvalidArgument("PolyQuot needs a polynomial base ring");
  const auto* f = std::get_if<PolyElem>(&modulus);
  if (f == nullptr || deg(*f) < 1) throw InvalidArgument("PolyQuot modulus must have degree >= 1");
  if (f->coeffs.back() != 1) throw InvalidArgument("PolyQuot modulus must be monic");
  RingDescriptor r;
  r.kind = RingKind::PolyQuot;
  r.field = poly.desc().field;
  r.var = poly.desc().var;
  r.poly_mod = *f;
  return Ring(std::make_shared<const RingDescriptor>(r));
}

Ring Ring::finite_algebra(const mpz_class& p, AlgebraTable table) {
  if (!is_prime(p)) throw InvalidArgument("finite algebra needs a prime field, got " + p.get_str());
  const std::size_t n = table.names.size();
  if (n == 0) throw InvalidArgument("finite algebra needs a nonempty basis");
  if (table.product.size() != n) throw InvalidArgument("multiplication table has wrong size");
  for (const auto& row : table.product) {
    if (row.size() != n) throw InvalidArgument("multiplication table has wrong size");
    for (const auto& v : row)
      if (v.size() != n) throw InvalidArgument("multiplication table has wrong size");
  }
  const long pl = p.fits_slong_p() ? p.get_si() : 0;
  for (auto& row : table.product)
    for (auto& v : row)
      for (auto& c : v) c = pl ? ((c % pl) + pl) % pl : c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // identity and commutativity
      for (std::size_t k = 0; k < n; ++k) {
        if (table.product[i][j][k] != table.product[j][i][k])
          throw InvalidArgument("finite algebra table is not commutative");
        const long e = (k == j) ? 1 : 0;
        if (table.product[0][j][k] != e)
          throw InvalidArgument("basis element 0 must be the identity");
      }
    }
  RingDescriptor r;
  r.kind = RingKind::FiniteAlgebra;
  r.modulus = p;
  r.algebra = std::move(table);
  Ring ring(std::make_shared<const RingDescriptor>(r));
  // associativity on basis triples
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Elem bi = ring.basis_element(i), bj = ring.basis_element(j), bk = ring.basis_element(k);
        if (!(ring.mul(ring.mul(bi, bj), bk) == ring.mul(bi, ring.mul(bj, bk))))
          throw InvalidArgument("finite algebra table is not associative");
      }
  return ring;
}

Ring make_ring(const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::Integers: return Ring::integers();
    case RingKind::Modular: return Ring::modular(spec.modulus);
    case RingKind::PrimeField: return Ring::prime_field(spec.modulus);
    case RingKind::Rationals: return Ring::rationals();
    case RingKind::Poly:
    case RingKind::PolyQuot: {
      const Ring field = spec.field_p > 0 ? Ring::prime_field(spec.field_p) : Ring::rationals();
      const Ring poly = Ring::poly(field, spec.var);
      if (spec.kind == RingKind::Poly) return poly;
      return Ring::poly_quot(poly, poly.parse(spec.poly_modulus));
    }
    case RingKind::FiniteAlgebra: return Ring::finite_algebra(spec.modulus, spec.algebra);
  }
  throw InvalidArgument("unknown ring kind");
}

bool operator==(const Ring& a, const Ring& b) { return same(*a.d_, *b.d_); }

// ---------------------------------------------------------------- queries

RingKind Ring::kind() const { return desc().kind; }

bool Ring::is_euclidean() const {
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
    case RingKind::Rationals:
    case RingKind::Poly:
      return true;
    default:
      return false;
  }
}

bool Ring::is_field() const {
  return kind() == RingKind::PrimeField || kind() == RingKind::Rationals ||
         (kind() == RingKind::FiniteAlgebra && algebra_dim() == 1);
}

bool Ring::is_finite() const { return cardinality() != 0; }

mpz_class Ring::cardinality() const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Modular:
    case RingKind::PrimeField:
      return d.modulus;
    case RingKind::PolyQuot: {
      if (d.rational_coeffs()) return 0;
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), d.coeff_p().get_mpz_t(), static_cast<unsigned long>(deg(d.poly_mod)));
      return r;
    }
    case RingKind::FiniteAlgebra: {
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), d.modulus.get_mpz_t(), d.algebra.names.size());
      return r;
    }
    default:
      return 0;
  }
}

mpz_class Ring::characteristic() const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Modular:
    case RingKind::PrimeField:
    case RingKind::FiniteAlgebra:
      return d.modulus;
    case RingKind::Poly:
    case RingKind::PolyQuot:
      return d.rational_coeffs() ? mpz_class(0) : d.coeff_p();
    default:
      return 0;
  }
}

Elem Ring::zero() const { return from_int(0); }
Elem Ring::one() const { return from_int(1); }
Elem Ring::from_int(long v) const { return from_mpz(mpz_class(v)); }

Elem Ring::from_mpz(const mpz_class& v) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: return v;
    case RingKind::Modular:
    case RingKind::PrimeField: return mod_pos(v, d.modulus);
    case RingKind::Rationals: return mpq_class(v);
    case RingKind::Poly:
    case RingKind::PolyQuot: return p_const(coeff_field_of(d), mpq_class(v));
    case RingKind::FiniteAlgebra: {
      AlgElem a;
      a.coords.assign(d.algebra.names.size(), mpz_class(0));
      a.coords[0] = v;
      return a_norm(d.modulus, a);
    }
  }
  throw InvalidArgument("bad ring");
}

Elem Ring::variable() const {
  if (kind() != RingKind::Poly && kind() != RingKind::PolyQuot)
    throw UnsupportedRing("ring " + name() + " has no polynomial variable");
  return canonical(p_monomial(coeff_field_of(desc()), 1, 1));
}

Elem Ring::basis_element(std::size_t j) const {
  if (kind() != RingKind::FiniteAlgebra) throw UnsupportedRing("not a finite algebra");
  AlgElem a;
  a.coords.assign(algebra_dim(), mpz_class(0));
  a.coords.at(j) = 1;
  return a;
}

// ---------------------------------------------------------------- arithmetic

Elem Ring::add(const Elem& a, const Elem& b) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: return mpz_class(std::get<mpz_class>(a) + std::get<mpz_class>(b));
    case RingKind::Modular:
    case RingKind::PrimeField:
      return mod_pos(std::get<mpz_class>(a) + std::get<mpz_class>(b), d.modulus);
    case RingKind::Rationals: return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
    case RingKind::Poly:
    case RingKind::PolyQuot:
      return p_add(coeff_field_of(d), std::get<PolyElem>(a), std::get<PolyElem>(b));
    case RingKind::FiniteAlgebra: {
      AlgElem r = std::get<AlgElem>(a);
      const auto& bb = std::get<AlgElem>(b);
      for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += bb.coords[i];
      return a_norm(d.modulus, r);
    }
  }
  throw InvalidArgument("bad ring");
}

Elem Ring::neg(const Elem& a) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: return mpz_class(-std::get<mpz_class>(a));
    case RingKind::Modular:
    case RingKind::PrimeField: return mod_pos(-std::get<mpz_class>(a), d.modulus);
    case RingKind::Rationals: return mpq_class(-std::get<mpq_class>(a));
    case RingKind::Poly:
    case RingKind::PolyQuot: return p_neg(coeff_field_of(d), std::get<PolyElem>(a));
    case RingKind::FiniteAlgebra: {
      AlgElem r = std::get<AlgElem>(a);
      for (auto& c : r.coords) c = -c;
      return a_norm(d.modulus, r);
    }
  }
  throw InvalidArgument("bad ring");
}

Elem Ring::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: return mpz_class(std::get<mpz_class>(a) * std::get<mpz_class>(b));
    case RingKind::Modular:
    case RingKind::PrimeField:
      return mod_pos(std::get<mpz_class>(a) * std::get<mpz_class>(b), d.modulus);
    case RingKind::Rationals: return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
    case RingKind::Poly:
      return p_mul(coeff_field_of(d), std::get<PolyElem>(a), std::get<PolyElem>(b));
    case RingKind::PolyQuot: {
      const CoeffField F = coeff_field_of(d);
      return p_mod(F, p_mul(F, std::get<PolyElem>(a), std::get<PolyElem>(b)), d.poly_mod);
    }
    case RingKind::FiniteAlgebra: return a_mul(d, std::get<AlgElem>(a), std::get<AlgElem>(b));
  }
  throw InvalidArgument("bad ring");
}

Elem Ring::pow(const Elem& a, unsigned long e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

bool Ring::is_zero(const Elem& a) const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>)
          return v == 0;
        else if constexpr (std::is_same_v<T, PolyElem>)
          return v.coeffs.empty();
        else
          return std::all_of(v.coords.begin(), v.coords.end(), [](const mpz_class& c) { return c == 0; });
      },
      a);
}
bool Ring::is_one(const Elem& a) const { return a == one(); }

bool Ring::is_unit(const Elem& a) const { return inverse(a).has_value(); }

std::optional<Elem> Ring::inverse(const Elem& a) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: {
      const auto& v = std::get<mpz_class>(a);
      if (v == 1 || v == -1) return Elem(v);
      return std::nullopt;
    }
    case RingKind::Modular:
    case RingKind::PrimeField: {
      mpz_class r;
      const auto& v = std::get<mpz_class>(a);
      if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), d.modulus.get_mpz_t()) == 0) return std::nullopt;
      if (d.modulus == 1) return std::nullopt;
      return Elem(mod_pos(r, d.modulus));
    }
    case RingKind::Rationals: {
      const auto& v = std::get<mpq_class>(a);
      if (v == 0) return std::nullopt;
      return Elem(mpq_class(1 / v));
    }
    case RingKind::Poly: {
      const auto& v = std::get<PolyElem>(a);
      if (deg(v) != 0) return std::nullopt;
      return Elem(p_const(coeff_field_of(d), coeff_field_of(d).inv(v.coeffs[0])));
    }
    case RingKind::PolyQuot: {
      const CoeffField F = coeff_field_of(d);
      auto [g, s, t] = p_gcdext(F, std::get<PolyElem>(a), d.poly_mod);
      if (deg(g) != 0) return std::nullopt;
      return Elem(p_mod(F, s, d.poly_mod));
    }
    case RingKind::FiniteAlgebra: {
      return divide(one(), a);
    }
  }
  return std::nullopt;
}

std::optional<Elem> Ring::divide(const Elem& a, const Elem& b) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: {
      const auto& x = std::get<mpz_class>(a);
      const auto& y = std::get<mpz_class>(b);
      if (y == 0) return x == 0 ? std::optional<Elem>(Elem(mpz_class(0))) : std::nullopt;
      if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) return std::nullopt;
      return Elem(mpz_class(x / y));
    }
    case RingKind::Modular:
    case RingKind::PrimeField: {
      const auto& m = d.modulus;
      const auto& x = std::get<mpz_class>(a);
      const auto& y = std::get<mpz_class>(b);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), y.get_mpz_t(), m.get_mpz_t());
      if (!mpz_divisible_p(x.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
      const mpz_class m2 = m / g;
      if (m2 == 1) return Elem(mpz_class(0));
      return Elem(mod_pos(mpz_class(x / g) * inv_mod(mpz_class(y / g), m2), m2));
    }
    case RingKind::Rationals: {
      const auto& y = std::get<mpq_class>(b);
      if (y == 0) return is_zero(a) ? std::optional<Elem>(zero()) : std::nullopt;
      return Elem(mpq_class(std::get<mpq_class>(a) / y));
    }
    case RingKind::Poly: {
      const auto& y = std::get<PolyElem>(b);
      if (y.coeffs.empty()) return is_zero(a) ? std::optional<Elem>(zero()) : std::nullopt;
      auto [q, r] = p_divmod(coeff_field_of(d), std::get<PolyElem>(a), y);
      if (!r.coeffs.empty()) return std::nullopt;
      return Elem(q);
    }
    case RingKind::PolyQuot: {
      const CoeffField F = coeff_field_of(d);
      const auto& x = std::get<PolyElem>(a);
      const auto& y = std::get<PolyElem>(b);
      PolyElem g = p_gcd(F, y, d.poly_mod);
      auto [xq, xr] = p_divmod(F, x, g);
      if (!xr.coeffs.empty()) return std::nullopt;
      const PolyElem m2 = p_divmod(F, d.poly_mod, g).first;
      if (deg(m2) == 0) return zero();
      const PolyElem y2 = p_divmod(F, y, g).first;
      auto [g2, s, t] = p_gcdext(F, y2, m2);
      (void)t;
      (void)g2;
      return Elem(p_mod(F, p_mod(F, p_mul(F, xq, s), m2), d.poly_mod));
    }
    case RingKind::FiniteAlgebra: {
      const std::size_t n = algebra_dim();
      std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n));
      for (std::size_t j = 0; j < n; ++j) {
        const auto col = std::get<AlgElem>(mul(b, basis_element(j)));
        for (std::size_t i = 0; i < n; ++i) A[i][j] = col.coords[i];
      }
      auto x = solve_mod_p(A, std::get<AlgElem>(a).coords, d.modulus);
      if (!x) return std::nullopt;
      return Elem(AlgElem{*x});
    }
  }
  return std::nullopt;
}

Elem Ring::canonical(const Elem& a) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: return std::get<mpz_class>(a);
    case RingKind::Modular:
    case RingKind::PrimeField: return mod_pos(std::get<mpz_class>(a), d.modulus);
    case RingKind::Rationals: {
      mpq_class q = std::get<mpq_class>(a);
      q.canonicalize();
      return q;
    }
    case RingKind::Poly:
    case RingKind::PolyQuot: {
      const CoeffField F = coeff_field_of(d);
      PolyElem p = std::get<PolyElem>(a);
      for (auto& c : p.coeffs) c = F.norm(c);
      trim(p);
      if (d.kind == RingKind::PolyQuot) p = p_mod(F, p, d.poly_mod);
      return p;
    }
    case RingKind::FiniteAlgebra: return a_norm(d.modulus, std::get<AlgElem>(a));
  }
  return a;
}

bool Ring::contains(const Elem& a) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers:
    case RingKind::Modular:
    case RingKind::PrimeField:
      if (!std::holds_alternative<mpz_class>(a)) return false;
      break;
    case RingKind::Rationals:
      if (!std::holds_alternative<mpq_class>(a)) return false;
      break;
    case RingKind::Poly:
    case RingKind::PolyQuot:
      if (!std::holds_alternative<PolyElem>(a)) return false;
      break;
    case RingKind::FiniteAlgebra:
      if (!std::holds_alternative<AlgElem>(a) ||
          std::get<AlgElem>(a).coords.size() != algebra_dim())
        return false;
      break;
  }
  return canonical(a) == a;
}

// ---------------------------------------------------------------- Euclidean

std::pair<Elem, Elem> Ring::divmod(const Elem& a, const Elem& b) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), std::get<mpz_class>(a).get_mpz_t(),
                  std::get<mpz_class>(b).get_mpz_t());
      return {q, r};
    }
    case RingKind::PrimeField:
    case RingKind::Rationals: {
      auto q = divide(a, b);
      if (!q) throw InvalidArgument("division by zero");
      return {*q, zero()};
    }
    case RingKind::Poly: {
      auto [q, r] = p_divmod(coeff_field_of(d), std::get<PolyElem>(a), std::get<PolyElem>(b));
      return {q, r};
    }
    default:
      throw UnsupportedRing("divmod requires a Euclidean ring, got " + name());
  }
}

int Ring::compare_size(const Elem& a, const Elem& b) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: {
      const int c = mpz_cmpabs(std::get<mpz_class>(a).get_mpz_t(), std::get<mpz_class>(b).get_mpz_t());
      return (c > 0) - (c < 0);
    }
    case RingKind::PrimeField:
    case RingKind::Rationals: {
      const int za = is_zero(a) ? 0 : 1, zb = is_zero(b) ? 0 : 1;
      return (za > zb) - (za < zb);
    }
    case RingKind::Poly: {
      const long da = deg(std::get<PolyElem>(a)), db = deg(std::get<PolyElem>(b));
      return (da > db) - (da < db);
    }
    default:
      throw UnsupportedRing("compare_size requires a Euclidean ring, got " + name());
  }
}

std::pair<Elem, Elem> Ring::normalize_associate(const Elem& a) const {
  const auto& d = desc();
  if (is_zero(a)) return {one(), zero()};
  switch (d.kind) {
    case RingKind::Integers: {
      const auto& v = std::get<mpz_class>(a);
      if (v < 0) return {from_int(-1), mpz_class(-v)};
      return {one(), v};
    }
    case RingKind::PrimeField:
    case RingKind::Rationals:
      return {a, one()};
    case RingKind::Poly: {
      const auto& v = std::get<PolyElem>(a);
      const CoeffField F = coeff_field_of(d);
      return {p_const(F, v.coeffs.back()), p_monic(F, v)};
    }
    default:
      throw UnsupportedRing("normalize_associate requires a Euclidean ring, got " + name());
  }
}

std::tuple<Elem, Elem, Elem> Ring::gcdext(const Elem& a, const Elem& b) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: {
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), std::get<mpz_class>(a).get_mpz_t(),
                 std::get<mpz_class>(b).get_mpz_t());
      return {g, s, t};
    }
    case RingKind::PrimeField:
    case RingKind::Rationals: {
      if (!is_zero(a)) return {one(), *inverse(a), zero()};
      if (!is_zero(b)) return {one(), zero(), *inverse(b)};
      return {zero(), one(), zero()};
    }
    case RingKind::Poly: {
      auto [g, s, t] = p_gcdext(coeff_field_of(d), std::get<PolyElem>(a), std::get<PolyElem>(b));
      return {g, s, t};
    }
    default:
      throw UnsupportedRing("gcdext requires a Euclidean ring, got " + name());
  }
}

// ---------------------------------------------------------------- cover

Ring Ring::cover() const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Modular: return integers();
    case RingKind::PolyQuot: {
      RingDescriptor r;
      r.kind = RingKind::Poly;
      r.field = d.field;
      r.var = d.var;
      return Ring(std::make_shared<const RingDescriptor>(r));
    }
    case RingKind::FiniteAlgebra: return prime_field(d.modulus);
    default: return *this;
  }
}

std::size_t Ring::cover_rank() const {
  return kind() == RingKind::FiniteAlgebra ? algebra_dim() : 1;
}

std::optional<Elem> Ring::cover_modulus() const {
  const auto& d = desc();
  if (d.kind == RingKind::Modular) return Elem(d.modulus);
  if (d.kind == RingKind::PolyQuot) return Elem(d.poly_mod);
  return std::nullopt;
}

std::vector<Elem> Ring::cover_coords(const Elem& a) const {
  if (kind() == RingKind::FiniteAlgebra) {
    std::vector<Elem> out;
    for (const auto& c : std::get<AlgElem>(a).coords) out.emplace_back(c);
    return out;
  }
  return {a};
}

Elem Ring::from_cover_coords(const std::vector<Elem>& coords) const {
  if (kind() == RingKind::FiniteAlgebra) {
    AlgElem a;
    for (const auto& c : coords) a.coords.push_back(std::get<mpz_class>(c));
    return a_norm(desc().modulus, a);
  }
  return reduce(coords.at(0));
}

Elem Ring::reduce(const Elem& c) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Modular: return mod_pos(std::get<mpz_class>(c), d.modulus);
    case RingKind::PolyQuot: return p_mod(coeff_field_of(d), std::get<PolyElem>(c), d.poly_mod);
    case RingKind::FiniteAlgebra: return from_mpz(std::get<mpz_class>(c));
    default: return c;
  }
}

std::size_t Ring::algebra_dim() const { return desc().algebra.names.size(); }
const AlgebraTable& Ring::algebra() const { return desc().algebra; }

Ring Ring::coefficient_field() const {
  if (!desc().field) throw UnsupportedRing("ring " + name() + " has no coefficient field");
  return Ring(desc().field);
}

const std::string& Ring::variable_name() const { return desc().var; }

Elem Ring::poly_modulus() const {
  if (kind() != RingKind::PolyQuot) throw UnsupportedRing("not a polynomial quotient");
  return desc().poly_mod;
}

const mpz_class& Ring::modulus() const { return desc().modulus; }

// ---------------------------------------------------------------- text

std::string Ring::format(const Elem& a) const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers:
    case RingKind::Modular:
    case RingKind::PrimeField: return std::get<mpz_class>(a).get_str();
    case RingKind::Rationals: return format_q(std::get<mpq_class>(a));
    case RingKind::Poly:
    case RingKind::PolyQuot: return format_poly(std::get<PolyElem>(a), d.var);
    case RingKind::FiniteAlgebra: {
      const auto& c = std::get<AlgElem>(a).coords;
      std::string out;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        std::string term;
        if (j == 0)
          term = c[j].get_str();
        else
          term = (c[j] == 1 ? std::string() : c[j].get_str() + "*") + d.algebra.names[j];
        if (!out.empty()) out += "+";
        out += term;
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

Elem Ring::parse(const std::string& text) const { return Parser(*this, text).run(); }

std::string Ring::name() const {
  const auto& d = desc();
  switch (d.kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Modular: return "Z/" + d.modulus.get_str();
    case RingKind::PrimeField: return "GF(" + d.modulus.get_str() + ")";
    case RingKind::Rationals: return "Q";
    case RingKind::Poly: return Ring(d.field).name() + "[" + d.var + "]";
    case RingKind::PolyQuot:
      return Ring(d.field).name() + "[" + d.var + "]/(" + format_poly(d.poly_mod, d.var) + ")";
    case RingKind::FiniteAlgebra: {
      std::string out = "GF(" + d.modulus.get_str() + ")<";
      for (std::size_t j = 0; j < d.algebra.names.size(); ++j)
        out += (j ? "," : "") + d.algebra.names[j];
      return out + ">";
    }
  }
  return "?";
}

std::vector<Elem> Ring::elements() const {
  const mpz_class card = cardinality();
  if (card == 0) throw UnsupportedRing("ring " + name() + " is infinite");
  if (card > 1000000) throw UnsupportedRing("ring " + name() + " is too large to enumerate");
  const auto& d = desc();
  std::vector<Elem> out;
  const unsigned long n = card.get_ui();
  out.reserve(n);
  switch (d.kind) {
    case RingKind::Modular:
    case RingKind::PrimeField:
      for (unsigned long i = 0; i < n; ++i) out.emplace_back(mpz_class(i));
      break;
    case RingKind::PolyQuot:
    case RingKind::FiniteAlgebra: {
      const bool quot = d.kind == RingKind::PolyQuot;
      const unsigned long p = quot ? d.coeff_p().get_ui() : d.modulus.get_ui();
      const std::size_t len = quot ? static_cast<std::size_t>(deg(d.poly_mod)) : d.algebra.names.size();
      for (unsigned long i = 0; i < n; ++i) {
        unsigned long v = i;
        std::vector<mpz_class> digits(len);
        for (std::size_t k = 0; k < len; ++k) {
          digits[k] = v % p;
          v /= p;
        }
        if (quot) {
          PolyElem e;
          for (const auto& x : digits) e.coeffs.emplace_back(x);
          trim(e);
          out.emplace_back(e);
        } else {
          out.emplace_back(AlgElem{digits});
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

// ---------------------------------------------------------------- factoring

std::size_t factor_count(const Ring& ring, const Elem& a) {
  if (ring.is_zero(a)) throw InvalidArgument("factor_count of zero");
  switch (ring.kind()) {
    case RingKind::Integers: return omega_integer(std::get<mpz_class>(a));
    case RingKind::PrimeField:
    case RingKind::Rationals: return 0;
    case RingKind::Poly: {
      const auto& p = std::get<PolyElem>(a);
      if (deg(p) == 0) return 0;
      const Ring field = ring.coefficient_field();
      const CoeffField F{field.kind() == RingKind::Rationals,
                         field.kind() == RingKind::Rationals ? mpz_class(0) : field.modulus()};
      return F.rational ? omega_poly_q(F, p) : omega_poly_fp(F, p);
    }
    default:
      throw UnsupportedRing("factor_count requires a Euclidean ring, got " + ring.name());
  }
}

}  // namespace cwb
