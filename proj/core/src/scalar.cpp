#include "braidvar/scalar.hpp"

#include "braidvar/errors.hpp"

namespace braidvar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeFieldElement PrimeFieldElement::make(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return {static_cast<std::uint32_t>(r), p};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  std::uint64_t r = 1, b = value, e = p - 2;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return {static_cast<std::uint32_t>(r), p};
}

PrimeFieldElement to_residue(const RationalFunction& f, std::uint32_t p) {
  if (!f.is_constant()) throw DomainError("cannot mix rational functions with elements of F_" + std::to_string(p));
  mpq_class q = f.constant_value();
  mpz_class pp(p), n, d;
  mpz_fdiv_r(n.get_mpz_t(), q.get_num_mpz_t(), pp.get_mpz_t());
  mpz_fdiv_r(d.get_mpz_t(), q.get_den_mpz_t(), pp.get_mpz_t());
  PrimeFieldElement den{static_cast<std::uint32_t>(d.get_ui()), p};
  PrimeFieldElement num{static_cast<std::uint32_t>(n.get_ui()), p};
  PrimeFieldElement di = den.inverse();
  return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(num.value) * di.value % p), p};
}

std::uint32_t residue_of(const Scalar& s, std::uint32_t p) {
  if (s.is_prime_field()) {
    if (s.residue().p != p) throw DomainError("mixed prime fields");
    return s.residue().value;
  }
  return to_residue(s.rational(), p).value;
}

namespace {

template <class Fr, class Fp>
Scalar binary(const Scalar& a, const Scalar& b, Fr fr, Fp fp) {
  if (a.is_rational() && b.is_rational()) return fr(a.rational(), b.rational());
  std::uint32_t p = a.is_prime_field() ? a.residue().p : b.residue().p;
  PrimeFieldElement x = a.is_prime_field() ? a.residue() : to_residue(a.rational(), p);
  PrimeFieldElement y = b.is_prime_field() ? b.residue() : to_residue(b.rational(), p);
  if (x.p != y.p) throw DomainError("mixed prime fields");
  return fp(x, y);
}

}  // namespace

bool Scalar::is_zero() const {
  if (is_rational()) return rational().is_zero();
  return residue().value == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == RationalFunction(1L);
  return residue().value == 1;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(-rational());
  const auto& r = residue();
  return Scalar(PrimeFieldElement{r.value == 0 ? 0 : r.p - r.value, r.p});
}

Scalar Scalar::operator+(const Scalar& o) const {
  return binary(
      *this, o, [](const RationalFunction& x, const RationalFunction& y) { return Scalar(x + y); },
      [](PrimeFieldElement x, PrimeFieldElement y) {
        return Scalar(PrimeFieldElement{static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.value) + y.value) % x.p), x.p});
      });
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  return binary(
      *this, o, [](const RationalFunction& x, const RationalFunction& y) { return Scalar(x * y); },
      [](PrimeFieldElement x, PrimeFieldElement y) {
        return Scalar(PrimeFieldElement{static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.value) * y.value % x.p), x.p});
      });
}

Scalar Scalar::inverse() const {
  if (is_rational()) return Scalar(rational().inverse());
  return Scalar(residue().inverse());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1L), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().to_string();
  return std::to_string(residue().value);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  return (a - b).is_zero();
}

}  // namespace braidvar
