#include "braidvar/rational.hpp"

#include <algorithm>
#include <cctype>

#include "braidvar/errors.hpp"

namespace braidvar {

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  while (e) {
    if (e & 1U) r = (r * x) % p;
    x = (x * x) % p;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mpz_mod_u(const mpz_class& c, std::uint64_t p) {
  mpz_class r;
  mpz_class pp(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
  return r.get_ui();
}

std::uint64_t poly_eval_mod(const Polynomial& f, const std::function<std::uint64_t(Var)>& point, std::uint64_t p) {
  unsigned __int128 acc = 0;
  for (const auto& [m, c] : f.terms()) {
    unsigned __int128 t = mpz_mod_u(c, p);
    for (const auto& [v, e] : m.terms()) t = (t * mod_pow(point(v), static_cast<std::uint64_t>(e), p)) % p;
    acc = (acc + t) % p;
  }
  return static_cast<std::uint64_t>(acc);
}

RationalFunction poly_substitute(const Polynomial& f, const std::map<Var, RationalFunction>& s) {
  RationalFunction acc;
  for (const auto& [m, c] : f.terms()) {
    RationalFunction t{Polynomial(c)};
    Monomial kept;
    for (const auto& [v, e] : m.terms()) {
      auto it = s.find(v);
      if (it == s.end()) {
        kept = kept * Monomial(v, e);
      } else {
        t = t * it->second.pow(e);
      }
    }
    if (!kept.is_one()) t = t * RationalFunction(Polynomial(kept, 1));
    acc = acc + t;
  }
  return acc;
}

}  // namespace

RationalFunction::RationalFunction(long c) : num_(c) {}

RationalFunction::RationalFunction(const mpq_class& c) : num_(c.get_num()), den_const_(c.get_den()) {}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p) {}

RationalFunction::RationalFunction(Var v) : num_(v) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num) {
  absorb_denominator(den);
  reduce();
}

Polynomial RationalFunction::denominator() const {
  Polynomial d(den_const_);
  for (const auto& [f, e] : factors_) d = d * f.pow(static_cast<unsigned>(e));
  return d;
}

mpq_class RationalFunction::constant_value() const {
  mpq_class q(num_.constant_value(), den_const_);
  q.canonicalize();
  return q;
}

void RationalFunction::add_factor(const Polynomial& f, int e) {
  if (e == 0) return;
  for (auto& [g, k] : factors_) {
    if (g == f) {
      k += e;
      return;
    }
  }
  factors_.emplace_back(f, e);
}

void RationalFunction::absorb_denominator(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("division by zero");
  Monomial mono = p.monomial_content();
  Polynomial rest = mono.is_one() ? p : *p.divide_exact(Polynomial(mono, 1));
  mpz_class k = rest.content();
  rest = rest.divide_by_integer(k);
  if (rest.leading().second < 0) {
    rest = -rest;
    k = -k;
  }
  if (k < 0) {
    num_ = -num_;
    k = -k;
  }
  den_const_ *= k;
  for (const auto& [v, e] : mono.terms()) add_factor(Polynomial(v), e);
  if (!rest.is_constant()) add_factor(rest, 1);
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_const_ = 1;
    factors_.clear();
    return;
  }
  for (auto& [f, e] : factors_) {
    while (e > 0) {
      if (f.size() == 1) {
        // single-variable factor: compare against the monomial content
        const Monomial& fm = f.terms().begin()->first;
        if (!num_.monomial_content().divide(fm)) break;
      }
      auto q = num_.divide_exact(f);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  factors_.erase(std::remove_if(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second == 0; }),
                 factors_.end());
  mpz_class g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_const_.get_mpz_t());
  if (g > 1) {
    num_ = num_.divide_by_integer(g);
    den_const_ /= g;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (is_polynomial() && o.is_polynomial()) return RationalFunction(num_ + o.num_);
  RationalFunction r;
  mpz_lcm(r.den_const_.get_mpz_t(), den_const_.get_mpz_t(), o.den_const_.get_mpz_t());
  r.factors_ = factors_;
  for (const auto& [f, e] : o.factors_) {
    auto it = std::find_if(r.factors_.begin(), r.factors_.end(), [&](const Factor& g) { return g.first == f; });
    if (it == r.factors_.end()) {
      r.factors_.emplace_back(f, e);
    } else {
      it->second = std::max(it->second, e);
    }
  }
  auto lift = [&](const RationalFunction& a) {
    Polynomial t = a.num_.scaled(r.den_const_ / a.den_const_);
    for (const auto& [f, e] : r.factors_) {
      int have = 0;
      for (const auto& [g, k] : a.factors_)
        if (g == f) have = k;
      if (e > have) t = t * f.pow(static_cast<unsigned>(e - have));
    }
    return t;
  };
  r.num_ = lift(*this) + lift(o);
  r.reduce();
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  RationalFunction r;
  r.num_ = num_ * o.num_;
  r.den_const_ = den_const_ * o.den_const_;
  r.factors_ = factors_;
  for (const auto& [f, e] : o.factors_) r.add_factor(f, e);
  if (!r.factors_.empty() || r.den_const_ != 1) r.reduce();
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  RationalFunction r;
  Polynomial n(den_const_);
  for (const auto& [f, e] : factors_) n = n * f.pow(static_cast<unsigned>(e));
  r.num_ = n;
  r.absorb_denominator(num_);
  r.reduce();
  return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r(1L), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::uint64_t RationalFunction::eval_mod(const std::function<std::uint64_t(Var)>& point, std::uint64_t p) const {
  std::uint64_t n = poly_eval_mod(num_, point, p);
  unsigned __int128 d = mpz_mod_u(den_const_, p);
  for (const auto& [f, e] : factors_) d = (d * mod_pow(poly_eval_mod(f, point, p), static_cast<std::uint64_t>(e), p)) % p;
  if (d == 0) throw DomainError("denominator vanishes at evaluation point");
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(n) * mod_pow(static_cast<std::uint64_t>(d), p - 2, p)) % p);
}

RationalFunction RationalFunction::substitute(const std::map<Var, RationalFunction>& s) const {
  RationalFunction n = poly_substitute(num_, s);
  RationalFunction d{mpq_class(den_const_)};
  for (const auto& [f, e] : factors_) d = d * poly_substitute(f, s).pow(e);
  return n / d;
}

std::vector<Var> RationalFunction::variables() const {
  std::vector<Var> vs = num_.variables();
  for (const auto& [f, e] : factors_) {
    auto w = f.variables();
    vs.insert(vs.end(), w.begin(), w.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  Polynomial d = denominator();
  std::string ds = d.to_string();
  if (ds.find_first_of("*+- /") != std::string::npos) ds = "(" + ds + ")";
  return n + "/" + ds;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) return a.num_ == b.num_;
  return a.num_ * b.denominator() == b.num_ * a.denominator();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      if (eat('+')) {
        r = r + term();
      } else if (eat('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }
  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        r = r / unary();
      } else {
        return r;
      }
    }
  }
  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RationalFunction power() {
    RationalFunction b = atom();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("expected exponent");
      int e = std::stoi(s_.substr(st, i_ - st));
      return b.pow(neg ? -e : e);
    }
    return b;
  }
  RationalFunction atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      RationalFunction r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RationalFunction(Polynomial(mpz_class(s_.substr(st, i_ - st))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t st = i_++;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RationalFunction(Var::parse(s_.substr(st, i_ - st)));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

RationalFunction parse_rational(const std::string& text) { return Parser(text).parse(); }

}  // namespace braidvar
