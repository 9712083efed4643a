#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidvar {

// A variable is a one-letter family plus an index: z3, y1, u12.
// Families are ordered z < y < x < u < t < (anything else, by letter).
struct Var {
  char kind = 'z';
  int index = 0;

  std::string name() const;
  static Var parse(const std::string& s);

  friend bool operator==(const Var& a, const Var& b) { return a.kind == b.kind && a.index == b.index; }
  friend bool operator!=(const Var& a, const Var& b) { return !(a == b); }
  friend bool operator<(const Var& a, const Var& b);
};

inline Var zvar(int i) { return Var{'z', i}; }
inline Var yvar(int i) { return Var{'y', i}; }
inline Var xvar(int i) { return Var{'x', i}; }
inline Var uvar(int i) { return Var{'u', i}; }

// Sparse exponent vector, sorted by variable, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v, int e = 1);

  const std::vector<std::pair<Var, int>>& terms() const { return terms_; }
  int degree() const;
  int exponent(Var v) const;
  bool is_one() const { return terms_.empty(); }

  Monomial operator*(const Monomial& o) const;
  // Quotient if o divides *this.
  std::optional<Monomial> divide(const Monomial& o) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<std::pair<Var, int>> terms_;
};

// Graded lexicographic order; `a < b` means a is the smaller monomial.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial with arbitrary-precision integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class, GrlexLess>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const mpz_class& c);
  explicit Polynomial(Var v);
  Polynomial(const Monomial& m, const mpz_class& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class constant_value() const;  // requires is_constant()
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;

  // Largest monomial in grlex order with its coefficient; requires nonzero.
  const std::pair<const Monomial, mpz_class>& leading() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpz_class& c) const;
  Polynomial pow(unsigned e) const;

  // Exact quotient in Z[vars] if d divides *this, else nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  Polynomial divide_by_integer(const mpz_class& c) const;  // must be exact

  mpz_class content() const;  // nonnegative gcd of coefficients
  Monomial monomial_content() const;

  std::vector<Var> variables() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  Terms terms_;
};

}  // namespace braidvar
