#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace trb {

/// Exact rational number in lowest terms with a positive denominator.
///
/// A thin value wrapper around GMP's mpq_class. Wrapping keeps GMP's
/// expression templates out of user code, so `auto` always yields a Scalar.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral I>
  Scalar(I value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class q);

  /// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Scalar parse(std::string_view text);

  /// "p/q" in lowest terms, "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Scalar& operator+=(const Scalar& other) {
    q_ += other.q_;
    return *this;
  }
  Scalar& operator-=(const Scalar& other) {
    q_ -= other.q_;
    return *this;
  }
  Scalar& operator*=(const Scalar& other) {
    q_ *= other.q_;
    return *this;
  }
  /// Division by zero throws std::domain_error.
  Scalar& operator/=(const Scalar& other);

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class q_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
std::string to_string(const Vec& v);

}  // namespace trb
