#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidvar/polynomial.hpp"

namespace braidvar {

// Element of Q(vars), kept as num / (c * prod f_k^{e_k}) with each f_k
// primitive, nonconstant and with positive leading coefficient. Common
// factors are cancelled by trial division only; no multivariate gcd.
class RationalFunction {
 public:
  using Factor = std::pair<Polynomial, int>;

  RationalFunction() = default;
  RationalFunction(long c);  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const mpq_class& c);
  explicit RationalFunction(const Polynomial& p);
  explicit RationalFunction(Var v);
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  Polynomial denominator() const;
  const mpz_class& denominator_constant() const { return den_const_; }
  const std::vector<Factor>& denominator_factors() const { return factors_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return factors_.empty() && den_const_ == 1; }
  bool is_constant() const { return factors_.empty() && num_.is_constant(); }
  mpq_class constant_value() const;  // requires is_constant()

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  // Value mod p at an integer point; throws DomainError if the
  // denominator vanishes there.
  std::uint64_t eval_mod(const std::function<std::uint64_t(Var)>& point, std::uint64_t p) const;
  RationalFunction substitute(const std::map<Var, RationalFunction>& s) const;

  std::vector<Var> variables() const;

  // Polynomial form when the denominator is a unit, otherwise (num)/(den).
  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  void add_factor(const Polynomial& f, int e);
  void absorb_denominator(const Polynomial& p);
  void reduce();

  Polynomial num_;
  mpz_class den_const_ = 1;
  std::vector<Factor> factors_;
};

// Parses expressions over + - * / ^ ( ) integers and variables, e.g.
// "z7 - z2^-1*z3*z6". Integer exponents may be negative.
RationalFunction parse_rational(const std::string& text);

}  // namespace braidvar
