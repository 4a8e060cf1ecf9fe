#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace gaingraph {

// A unit-modulus complex number e^{i*pi*t}, stored as the angle t in units of
// pi and kept normalized to (-1, 1].
//
// Storing the angle instead of a re/im pair makes products and inverses exact
// angle additions: gains such as i (t = 1/2), -1 (t = 1) or products of
// fourth roots never drift, so balance and switching checks on such inputs
// are decided exactly. The complex value is derived on demand, with exact
// results at the quarter turns.
class UnitGain {
 public:
  constexpr UnitGain() = default;

  explicit UnitGain(double theta_pi) {
    if (!std::isfinite(theta_pi)) throw std::invalid_argument("UnitGain: angle must be finite");
    theta_pi_ = normalize(theta_pi);
  }

  static UnitGain from_radians(double theta) { return UnitGain(theta / pi()); }

  double theta_pi() const { return theta_pi_; }
  double radians() const { return theta_pi_ * pi(); }

  // Real part, exact at multiples of pi/2.
  double re() const {
    if (theta_pi_ == 0.0) return 1.0;
    if (theta_pi_ == 1.0) return -1.0;
    if (theta_pi_ == 0.5 || theta_pi_ == -0.5) return 0.0;
    return std::cos(pi() * theta_pi_);
  }

  double im() const {
    if (theta_pi_ == 0.0 || theta_pi_ == 1.0) return 0.0;
    if (theta_pi_ == 0.5) return 1.0;
    if (theta_pi_ == -0.5) return -1.0;
    return std::sin(pi() * theta_pi_);
  }

  std::complex<double> value() const { return {re(), im()}; }

  UnitGain inverse() const { return make(normalize(-theta_pi_)); }

  UnitGain operator*(UnitGain other) const { return make(normalize(theta_pi_ + other.theta_pi_)); }

  // Multiplication by -1, i.e. a half-turn.
  UnitGain negated() const { return make(normalize(theta_pi_ + 1.0)); }

  // Shortest arc between the two angles, in units of pi (range [0, 1]).
  double angular_distance(UnitGain other) const {
    return std::fabs(normalize(theta_pi_ - other.theta_pi_));
  }

  bool approx_equal(UnitGain other, double tol = 1e-12) const {
    return angular_distance(other) <= tol;
  }

  bool is_neutral(double tol = 1e-12) const { return approx_equal(UnitGain{}, tol); }

  // Exact angle comparison; used by serializer round-trip guarantees.
  bool operator==(const UnitGain&) const = default;

  static constexpr double pi() { return 3.141592653589793238462643383279502884; }

  // Reduce mod 2 into (-1, 1]. std::remainder is exact, so dyadic angles
  // stay dyadic.
  static double normalize(double t) {
    double r = std::remainder(t, 2.0);
    if (r <= -1.0) r += 2.0;
    return r;
  }

 private:
  static UnitGain make(double normalized) {
    UnitGain g;
    g.theta_pi_ = normalized;
    return g;
  }

  double theta_pi_ = 0.0;
};

}  // namespace gaingraph
