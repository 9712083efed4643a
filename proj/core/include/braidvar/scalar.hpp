#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "braidvar/rational.hpp"

namespace braidvar {

// Residue mod a small prime p.
struct PrimeFieldElement {
  std::uint32_t value = 0;
  std::uint32_t p = 2;

  static PrimeFieldElement make(std::int64_t v, std::uint32_t p);
  PrimeFieldElement inverse() const;
};

bool is_prime(std::uint64_t n);

// Tagged union over the two supported coefficient fields. Rational-function
// constants act as universal constants and mix freely with residues; any
// other mixture is a DomainError.
class Scalar {
 public:
  Scalar() : v_(RationalFunction()) {}
  Scalar(long c) : v_(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction f) : v_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  Scalar(PrimeFieldElement e) : v_(e) {}  // NOLINT(google-explicit-constructor)

  static Scalar var(Var v) { return Scalar(RationalFunction(v)); }
  static Scalar mod(std::int64_t v, std::uint32_t p) { return Scalar(PrimeFieldElement::make(v, p)); }

  bool is_rational() const { return std::holds_alternative<RationalFunction>(v_); }
  bool is_prime_field() const { return std::holds_alternative<PrimeFieldElement>(v_); }
  const RationalFunction& rational() const { return std::get<RationalFunction>(v_); }
  const PrimeFieldElement& residue() const { return std::get<PrimeFieldElement>(v_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  std::variant<RationalFunction, PrimeFieldElement> v_;
};

// Residue of a prime-field element, or of a rational constant, mod p.
PrimeFieldElement to_residue(const RationalFunction& f, std::uint32_t p);
std::uint32_t residue_of(const Scalar& s, std::uint32_t p);

}  // namespace braidvar
