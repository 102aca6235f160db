#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "orbitlab/error.hpp"

namespace orbitlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact element of the cyclotomic field Q(zeta_p), p prime.
///
/// Stored as p rational coordinates over 1, zeta, ..., zeta^{p-1} in the
/// canonical form with the zeta^{p-1} coordinate eliminated through
/// 1 + zeta + ... + zeta^{p-1} = 0; with that convention the representation
/// is unique, so equality and rationality tests are plain coordinate checks.
class Cyclotomic {
public:
  explicit Cyclotomic(unsigned p) : p_(p), c_(p) {}

  static Cyclotomic rational(unsigned p, const BigRational& r) {
    Cyclotomic z(p);
    z.c_[0] = r;
    return z;
  }
  static Cyclotomic one(unsigned p) { return rational(p, 1); }
  /// zeta_p^a (a may be any integer).
  static Cyclotomic root_power(unsigned p, long long a) {
    Cyclotomic z(p);
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += p;
    z.c_[static_cast<unsigned>(r)] = 1;
    z.reduce();
    return z;
  }

  unsigned p() const { return p_; }
  const std::vector<BigRational>& coords() const { return c_; }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    same_p(o);
    for (unsigned i = 0; i < p_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    same_p(o);
    for (unsigned i = 0; i < p_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.same_p(b);
    Cyclotomic r(a.p_);
    // cyclic convolution mod zeta^p = 1, then canonicalize
    for (unsigned i = 0; i < a.p_; ++i) {
      if (a.c_[i] == 0) continue;
      for (unsigned j = 0; j < a.p_; ++j) {
        if (b.c_[j] == 0) continue;
        r.c_[(i + j) % a.p_] += a.c_[i] * b.c_[j];
      }
    }
    r.reduce();
    return r;
  }

  Cyclotomic& operator*=(const BigRational& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend Cyclotomic operator*(Cyclotomic a, const BigRational& s) { return a *= s; }

  /// Complex conjugation: zeta^a -> zeta^{-a}.
  Cyclotomic conj() const {
    Cyclotomic r(p_);
    for (unsigned i = 0; i < p_; ++i) r.c_[(p_ - i) % p_] = c_[i];
    r.reduce();
    return r;
  }

  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (unsigned i = 1; i < p_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  BigRational rational_value() const {
    check(is_rational(), Errc::invariant_violation, "cyclotomic value is not rational");
    return c_[0];
  }

  bool operator==(const Cyclotomic& o) const { return p_ == o.p_ && c_ == o.c_; }

  /// Floating approximation, for test-side consistency checks only.
  std::complex<double> approx() const {
    std::complex<double> s = 0;
    const double tau = 6.283185307179586476925286766559;
    for (unsigned i = 0; i < p_; ++i) {
      if (c_[i] == 0) continue;
      double x = c_[i].convert_to<double>();
      s += x * std::complex<double>(std::cos(tau * i / p_), std::sin(tau * i / p_));
    }
    return s;
  }

private:
  void same_p(const Cyclotomic& o) const {
    check(p_ == o.p_, Errc::context_mismatch, "cyclotomic order mismatch");
  }
  void reduce() {
    if (c_[p_ - 1] == 0) return;
    BigRational t = c_[p_ - 1];
    for (unsigned i = 0; i < p_; ++i) c_[i] -= t;
  }

  unsigned p_;
  std::vector<BigRational> c_;
};

}  // namespace orbitlab
