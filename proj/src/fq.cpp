#include "orbitlab/fq.hpp"

#include <algorithm>

namespace orbitlab {

namespace {

constexpr unsigned kMaxQ = 1024;  // table-based context; censuses never need more

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Built-in irreducible moduli, constant coefficient first.
std::vector<unsigned> builtin_modulus(unsigned p, unsigned k) {
  if (p == 3 && k == 2) return {1, 0, 1};     // t^2 + 1
  if (p == 3 && k == 3) return {1, 2, 0, 1};  // t^3 + 2t + 1
  if (p == 5 && k == 2) return {2, 0, 1};     // t^2 + 2
  if (p == 7 && k == 2) return {1, 0, 1};     // t^2 + 1
  return {};
}

}  // namespace

Fq::Fq(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  build_tables();
}

FqPtr Fq::prime(unsigned p) { return extension(p, 1); }

FqPtr Fq::extension(unsigned p, unsigned k, std::vector<unsigned> modulus) {
  check(is_prime(p), Errc::bad_field_spec, "characteristic " + std::to_string(p) + " is not prime");
  check(p != 2, Errc::unsupported_field, "characteristic 2 is not supported");
  check(k >= 1, Errc::bad_field_spec, "extension degree must be >= 1");
  check(k <= 3, Errc::unsupported_field,
        "extension degree " + std::to_string(k) +
            ": irreducibility cannot be certified by root checks beyond k = 3");
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    check(q <= kMaxQ, Errc::unsupported_field, "field too large for the table-based context");
  }

  if (k == 1) {
    modulus = {0, 1};  // t, by convention
  } else if (modulus.empty()) {
    modulus = builtin_modulus(p, k);
    check(!modulus.empty(), Errc::bad_field_spec,
          "no built-in modulus for p=" + std::to_string(p) + ", k=" + std::to_string(k) +
              "; supply one");
  }
  check(modulus.size() == k + 1, Errc::bad_field_spec, "modulus must have degree k");
  for (auto& c : modulus) c %= p;
  check(modulus.back() == 1, Errc::bad_field_spec, "modulus must be monic");
  if (k >= 2) {
    // Degree 2 or 3: irreducible over F_p iff it has no root there.
    for (unsigned x = 0; x < p; ++x) {
      unsigned long long val = 0, xp = 1;
      for (unsigned i = 0; i <= k; ++i) {
        val = (val + modulus[i] * xp) % p;
        xp = (xp * x) % p;
      }
      check(val != 0, Errc::reducible_modulus,
            "modulus has root " + std::to_string(x) + " in F_" + std::to_string(p));
    }
  }
  return FqPtr(new Fq(p, k, std::move(modulus)));
}

FqPtr Fq::parse(const std::string& spec, const std::vector<unsigned>* custom_modulus) {
  auto caret = spec.find('^');
  auto to_uint = [&](const std::string& s) -> unsigned {
    check(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
          Errc::bad_field_spec, "bad field spec '" + spec + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  unsigned p, k;
  if (caret == std::string::npos) {
    p = to_uint(spec);
    k = 1;
  } else {
    p = to_uint(spec.substr(0, caret));
    k = to_uint(spec.substr(caret + 1));
  }
  return extension(p, k, custom_modulus ? *custom_modulus : std::vector<unsigned>{});
}

FqElem Fq::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<FqElem>(r);
}

FqElem Fq::from_coeffs(const std::vector<unsigned>& coeffs) const {
  check(coeffs.size() <= k_, Errc::bad_field_spec, "too many coefficients for F_q element");
  unsigned idx = 0, pw = 1;
  for (unsigned i = 0; i < coeffs.size(); ++i) {
    idx += (coeffs[i] % p_) * pw;
    pw *= p_;
  }
  return static_cast<FqElem>(idx);
}

std::vector<unsigned> Fq::coeffs(FqElem a) const {
  std::vector<unsigned> c(k_);
  unsigned v = a;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FqElem Fq::pow(FqElem a, std::uint64_t e) const {
  FqElem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

void Fq::build_tables() {
  const unsigned q = q_;
  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  frob_.resize(q);
  trace_.resize(q);

  auto digits = [&](unsigned a) {
    std::vector<unsigned> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  auto index_of = [&](const std::vector<unsigned>& c) {
    unsigned idx = 0, pw = 1;
    for (unsigned i = 0; i < k_; ++i) {
      idx += (c[i] % p_) * pw;
      pw *= p_;
    }
    return idx;
  };

  for (unsigned a = 0; a < q; ++a) {
    auto ca = digits(a);
    for (auto& c : ca) c = (p_ - c) % p_;
    neg_[a] = static_cast<FqElem>(index_of(ca));
    for (unsigned b = 0; b < q; ++b) {
      auto x = digits(a), y = digits(b);
      std::vector<unsigned> s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (x[i] + y[i]) % p_;
      add_[a * q + b] = static_cast<FqElem>(index_of(s));

      // product, then synthetic division by the monic modulus
      std::vector<unsigned> prod(2 * k_ - 1, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
      for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(k_); --d) {
        unsigned c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < k_; ++i) {
          unsigned pos = d - k_ + i;
          prod[pos] = (prod[pos] + c * (p_ - modulus_[i])) % p_;
        }
      }
      prod.resize(k_);
      mul_[a * q + b] = static_cast<FqElem>(index_of(prod));
    }
  }

  for (unsigned a = 1; a < q; ++a) {
    // a^(q-2) = a^{-1}
    FqElem r = 1, base = static_cast<FqElem>(a);
    std::uint64_t e = q - 2;
    while (e) {
      if (e & 1) r = mul_[r * q + base];
      base = mul_[base * q + base];
      e >>= 1;
    }
    inv_[a] = r;
  }

  for (unsigned a = 0; a < q; ++a) {
    FqElem r = 1, base = static_cast<FqElem>(a);
    std::uint64_t e = p_;
    while (e) {
      if (e & 1) r = mul_[r * q + base];
      base = mul_[base * q + base];
      e >>= 1;
    }
    frob_[a] = r;
  }

  for (unsigned a = 0; a < q; ++a) {
    FqElem t = static_cast<FqElem>(a), s = 0;
    for (unsigned i = 0; i < k_; ++i) {
      s = add_[s * q + t];
      t = frob_[t];
    }
    // the trace lands in the prime field: index equals the coefficient
    trace_[a] = s;
  }

  half_ = inv_[from_int(2)];
}

std::string Fq::spec_string() const {
  if (k_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(k_);
}

std::string Fq::to_string(FqElem a) const {
  if (k_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::string s = "[";
  for (unsigned i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

}  // namespace orbitlab
