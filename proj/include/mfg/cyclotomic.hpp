#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace mfg {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of the cyclotomic field Q(zeta_M), stored as rational
/// coordinates in the power basis 1, zeta, ..., zeta^{phi(M)-1}, reduced
/// modulo the M-th cyclotomic polynomial. Equality is structural; the
/// default order M = 4 gives the Gaussian rationals.
class Scalar {
 public:
  static Scalar zero(int order);
  static Scalar one(int order);
  static Scalar from_rational(int order, const Rational& r);
  static Scalar zeta_power(int order, long e);
  static Scalar from_coords(int order, std::vector<Rational> coords);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// z * conj(z) == 1.
  bool is_unimodular() const;
  /// The exponent e with *this == zeta^e, if *this is in the phase group.
  std::optional<int> as_zeta_exponent() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar conj() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.order_ == b.order_ && a.coords_ == b.coords_;
  }

  std::string str() const;

 private:
  Scalar(int order, std::vector<Rational> coords) : order_(order), coords_(std::move(coords)) {}

  int order_;
  std::vector<Rational> coords_;
};

int cyclotomic_degree(int order);  // phi(order)

Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

}  // namespace mfg
