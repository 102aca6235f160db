#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orbitlab/error.hpp"

namespace orbitlab {

/// Index of a field element inside its Fq context, 0 <= e < q.
using FqElem = std::uint16_t;

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

/// Exact arithmetic context for F_q with q = p^k (p an odd prime, k <= 3).
///
/// Elements are stored as indices: index(sum_j c_j t^j) = sum_j c_j p^j where
/// t is the residue of the modulus variable.  All operations go through dense
/// tables built once at construction, so every result is exact and cheap
/// enough for the enumeration kernels.  Contexts are immutable; every
/// operation is pure and safe for concurrent use.
class Fq {
public:
  /// Prime field F_p.
  static FqPtr prime(unsigned p);

  /// Extension field F_{p^k}.  The modulus is given constant-coefficient
  /// first, length k+1, monic.  When omitted, a built-in irreducible modulus
  /// is used for (p,k) in {(3,2),(3,3),(5,2),(7,2)}; other extensions require
  /// an explicit modulus.  Irreducibility is verified by the absence of roots
  /// in F_p, which is conclusive for k <= 3; larger k is rejected.
  static FqPtr extension(unsigned p, unsigned k, std::vector<unsigned> modulus = {});

  /// Parses a field spec string: "5" (prime) or "3^2" (extension).
  static FqPtr parse(const std::string& spec,
                     const std::vector<unsigned>* custom_modulus = nullptr);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FqElem zero() const { return 0; }
  FqElem one() const { return 1; }
  /// Residue class of an integer (as a constant polynomial).
  FqElem from_int(long long v) const;
  /// Element from its coefficient vector (length <= k, coefficients mod p).
  FqElem from_coeffs(const std::vector<unsigned>& coeffs) const;
  std::vector<unsigned> coeffs(FqElem a) const;

  FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
  FqElem sub(FqElem a, FqElem b) const { return add_[a * q_ + neg_[b]]; }
  FqElem neg(FqElem a) const { return neg_[a]; }
  FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
  FqElem inv(FqElem a) const {
    check(a != 0, Errc::zero_inverse, "inverse of zero in F_" + std::to_string(q_));
    return inv_[a];
  }
  FqElem pow(FqElem a, std::uint64_t e) const;
  FqElem frobenius(FqElem a) const { return frob_[a]; }
  /// Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^{k-1}}, returned as an integer in [0, p).
  unsigned trace(FqElem a) const { return trace_[a]; }
  /// Multiplicative inverse of 2 (characteristic is always odd here).
  FqElem half() const { return half_; }

  bool same_field(const Fq& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  /// "5" or "3^2".
  std::string spec_string() const;
  std::string to_string(FqElem a) const;

private:
  Fq(unsigned p, unsigned k, std::vector<unsigned> modulus);
  void build_tables();

  unsigned p_, k_, q_;
  std::vector<unsigned> modulus_;  // constant first, monic, length k+1
  std::vector<FqElem> add_, mul_, neg_, inv_, frob_;
  std::vector<unsigned> trace_;
  FqElem half_ = 0;
};

/// Verifies two contexts describe the same field; throws ContextMismatch otherwise.
inline void require_same_field(const Fq& a, const Fq& b) {
  check(a.same_field(b), Errc::context_mismatch,
        "mixed field contexts: F_" + std::to_string(a.q()) + " vs F_" + std::to_string(b.q()));
}

}  // namespace orbitlab
