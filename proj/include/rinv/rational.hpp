#ifndef RINV_RATIONAL_HPP
#define RINV_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace rinv {

// Arbitrary-precision rational. Always canonical: denominator > 0,
// gcd(|num|, den) = 1, zero stored as 0/1.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}
  BigRational(long n, long d);
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "n", "-n", "n/d" with optional sign; base 10.
  static BigRational from_string(std::string_view s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

  BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }
  BigRational inverse() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

// gcd of two exact integers given as BigRational (must be integral).
BigRational integer_gcd(const BigRational& a, const BigRational& b);

// binomial(n, k) as an exact rational.
BigRational binomial(unsigned n, unsigned k);

}  // namespace rinv

#endif
