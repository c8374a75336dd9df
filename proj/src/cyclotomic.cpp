#include "mfg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "mfg/error.hpp"

namespace mfg {

namespace {

using Poly = std::vector<Rational>;  // coefficients, ascending degree

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division of polynomials over Q; the remainder must vanish.
Poly poly_divide_exact(Poly num, const Poly& den) {
  Poly quot(num.size() - den.size() + 1, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = num[k + den.size() - 1] / den.back();
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  for (const auto& r : num) {
    if (r != 0) fail(Errc::ParseError, "internal: inexact polynomial division");
  }
  return quot;
}

Poly cyclotomic_raw(int m, std::map<int, Poly>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  Poly num(static_cast<std::size_t>(m) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) num = poly_divide_exact(std::move(num), cyclotomic_raw(d, memo));
  }
  memo.emplace(m, num);
  return num;
}

struct FieldData {
  int order = 0;
  int degree = 0;
  // coordinates of zeta^k for k = 0 .. max(order, 2*degree - 2)
  std::vector<std::vector<Rational>> power;
};

const FieldData& field(int order) {
  static std::mutex mtx;
  static std::map<int, FieldData> registry;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = registry.find(order);
  if (it != registry.end()) return it->second;
  if (order < 1) fail(Errc::ParseError, "phase order must be positive");

  std::map<int, Poly> memo;
  Poly phi = cyclotomic_raw(order, memo);
  FieldData data;
  data.order = order;
  data.degree = static_cast<int>(phi.size()) - 1;
  int maxpow = std::max(order, 2 * data.degree - 2);
  data.power.resize(static_cast<std::size_t>(maxpow) + 1, std::vector<Rational>(data.degree, Rational(0)));
  data.power[0][0] = 1;
  for (int k = 1; k <= maxpow; ++k) {
    // zeta^k = zeta * zeta^{k-1}, reducing the top coefficient via
    // zeta^degree = -(phi_0 + phi_1 zeta + ... )
    const auto& prev = data.power[static_cast<std::size_t>(k - 1)];
    auto& cur = data.power[static_cast<std::size_t>(k)];
    Rational top = prev[static_cast<std::size_t>(data.degree - 1)];
    for (int i = data.degree - 1; i >= 1; --i) cur[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < data.degree; ++i) cur[static_cast<std::size_t>(i)] -= top * phi[static_cast<std::size_t>(i)];
    }
  }
  return registry.emplace(order, std::move(data)).first->second;
}

}  // namespace

int cyclotomic_degree(int order) { return field(order).degree; }

Scalar Scalar::zero(int order) { return Scalar(order, std::vector<Rational>(static_cast<std::size_t>(field(order).degree), Rational(0))); }

Scalar Scalar::one(int order) {
  auto s = zero(order);
  s.coords_[0] = 1;
  return s;
}

Scalar Scalar::from_rational(int order, const Rational& r) {
  auto s = zero(order);
  s.coords_[0] = r;
  return s;
}

Scalar Scalar::zeta_power(int order, long e) {
  const auto& f = field(order);
  long m = e % order;
  if (m < 0) m += order;
  return Scalar(order, f.power[static_cast<std::size_t>(m)]);
}

Scalar Scalar::from_coords(int order, std::vector<Rational> coords) {
  if (coords.size() != static_cast<std::size_t>(field(order).degree))
    fail(Errc::ParseError, "expected " + std::to_string(field(order).degree) + " coordinates for order " +
                               std::to_string(order));
  return Scalar(order, std::move(coords));
}

bool Scalar::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const {
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

bool Scalar::is_unimodular() const { return (*this * conj()).is_one(); }

std::optional<int> Scalar::as_zeta_exponent() const {
  for (int e = 0; e < order_; ++e) {
    if (*this == zeta_power(order_, e)) return e;
  }
  return std::nullopt;
}

namespace {
void require_same_order(const Scalar& a, const Scalar& b) {
  if (a.order() != b.order()) fail(Errc::ShiftMismatch, "scalars of different phase orders");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_order(*this, o);
  auto out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coords_[i];
  return Scalar(order_, std::move(out));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_order(*this, o);
  auto out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.coords_[i];
  return Scalar(order_, std::move(out));
}

Scalar Scalar::operator-() const {
  auto out = coords_;
  for (auto& c : out) c = -c;
  return Scalar(order_, std::move(out));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_order(*this, o);
  const auto& f = field(order_);
  std::vector<Rational> acc(static_cast<std::size_t>(f.degree), Rational(0));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coords_.size(); ++j) {
      if (o.coords_[j] == 0) continue;
      Rational c = coords_[i] * o.coords_[j];
      const auto& pw = f.power[i + j];
      for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += c * pw[t];
    }
  }
  return Scalar(order_, std::move(acc));
}

Scalar Scalar::conj() const {
  const auto& f = field(order_);
  std::vector<Rational> acc(static_cast<std::size_t>(f.degree), Rational(0));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    const auto& pw = f.power[static_cast<std::size_t>((order_ - static_cast<int>(i)) % order_)];
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += coords_[i] * pw[t];
  }
  return Scalar(order_, std::move(acc));
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) os << " + ";
    os << format_rational(coords_[i]);
    if (i == 1) os << "·z";
    if (i > 1) os << "·z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational '" + s + "'");
  }
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

}  // namespace mfg
