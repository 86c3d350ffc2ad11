#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "qmana/errors.hpp"

namespace qmana {

bool is_odd_prime(long long d) noexcept;

// Odd prime local dimension d.
class PrimeDim {
 public:
  explicit PrimeDim(int d);

  int value() const noexcept { return d_; }

  // Representative of a in [0, d).
  int mod(long long a) const noexcept {
    long long r = a % d_;
    return static_cast<int>(r < 0 ? r + d_ : r);
  }

  // a^{d-2} mod d; throws SingularG for a = 0 mod d.
  int inverse(long long a) const;

  bool operator==(const PrimeDim&) const = default;

 private:
  int d_;
};

struct PhasePoint {
  int k = 0;
  int l = 0;
  bool operator==(const PhasePoint&) const = default;
};

void require_in_range(PrimeDim dim, PhasePoint pt);

inline int point_index(PrimeDim dim, PhasePoint pt) { return pt.k * dim.value() + pt.l; }
inline PhasePoint point_at(PrimeDim dim, int index) {
  return {index / dim.value(), index % dim.value()};
}

// exp(i pi m / d), with m reduced mod 2d before the single trig evaluation.
template <typename Scalar = double>
std::complex<Scalar> half_turn_power(long long m, int d) {
  const long long two_d = 2LL * d;
  m %= two_d;
  if (m < 0) m += two_d;
  if (m == 0) return {Scalar(1), Scalar(0)};
  if (m == d) return {Scalar(-1), Scalar(0)};
  const Scalar angle = std::numbers::pi_v<Scalar> * static_cast<Scalar>(m) / static_cast<Scalar>(d);
  return {std::cos(angle), std::sin(angle)};
}

// omega^e with omega = exp(2 pi i / d)
template <typename Scalar = double>
std::complex<Scalar> omega_power(PrimeDim dim, long long e) {
  return half_turn_power<Scalar>(2 * (e % dim.value()), dim.value());
}

// tau^e with tau = -exp(i pi / d) = exp(i pi (d+1) / d)
template <typename Scalar = double>
std::complex<Scalar> tau_power(PrimeDim dim, long long e) {
  const int d = dim.value();
  const long long r = e % (2LL * d);
  return half_turn_power<Scalar>(r * (d + 1), d);
}

}  // namespace qmana
