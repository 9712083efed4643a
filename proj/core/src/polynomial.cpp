#include "braidvar/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "braidvar/errors.hpp"

namespace braidvar {

namespace {

int kind_rank(char k) {
  switch (k) {
    case 'z': return 0;
    case 'y': return 1;
    case 'x': return 2;
    case 'u': return 3;
    case 't': return 4;
    default: return 5 + static_cast<unsigned char>(k);
  }
}

}  // namespace

std::string Var::name() const {
  std::string s(1, kind);
  if (index != 0) s += std::to_string(index);
  return s;
}

Var Var::parse(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) throw ParseError("bad variable name: " + s);
  Var v{s[0], 0};
  if (s.size() > 1) {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad variable name: " + s);
    v.index = std::stoi(s.substr(1));
  }
  return v;
}

bool operator<(const Var& a, const Var& b) {
  int ra = kind_rank(a.kind), rb = kind_rank(b.kind);
  if (ra != rb) return ra < rb;
  return a.index < b.index;
}

Monomial::Monomial(Var v, int e) {
  if (e != 0) terms_.emplace_back(v, e);
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : terms_) d += e;
  return d;
}

int Monomial::exponent(Var v) const {
  for (const auto& [w, e] : terms_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      r.terms_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) r.terms_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  auto i = terms_.begin();
  for (const auto& [v, e] : o.terms_) {
    while (i != terms_.end() && i->first < v) r.terms_.push_back(*i++);
    if (i == terms_.end() || i->first != v || i->second < e) return std::nullopt;
    if (i->second > e) r.terms_.emplace_back(v, i->second - e);
    ++i;
  }
  while (i != terms_.end()) r.terms_.push_back(*i++);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      r.terms_.emplace_back(i->first, std::min(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : terms_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].first == tb[j].first) {
      if (ta[i].second != tb[j].second) return ta[i].second < tb[j].second;
      ++i;
      ++j;
    } else if (ta[i].first < tb[j].first) {
      return false;  // a has a positive exponent on an earlier variable
    } else {
      return true;
    }
  }
  return i == ta.size() && j < tb.size();
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial(), mpz_class(c));
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(Var v) { terms_.emplace(Monomial(v), mpz_class(1)); }

Polynomial::Polynomial(const Monomial& m, const mpz_class& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpz_class Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

const std::pair<const Monomial, mpz_class>& Polynomial::leading() const { return *terms_.rbegin(); }

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (c == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1L), b = *this;
  while (e) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return Polynomial();
  const auto& [dm, dc] = d.leading();
  Polynomial r = *this;
  Polynomial q;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    auto qm = rm.divide(dm);
    if (!qm) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    mpz_class qc = rc / dc;
    Monomial qmv = *qm;
    q.add_term(qmv, qc);
    for (const auto& [m, c] : d.terms_) r.add_term(m * qmv, -(c * qc));
  }
  return q;
}

Polynomial Polynomial::divide_by_integer(const mpz_class& c) const {
  Polynomial r = *this;
  for (auto& [m, k] : r.terms_) {
    mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    g = Monomial::gcd(g, m);
    if (g.is_one()) break;
  }
  return g;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.terms()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    mpz_class c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + '*';
      s += m.to_string();
    }
  }
  return s;
}

}  // namespace braidvar
