#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wildcert/errors.hpp"

namespace wildcert {

/// A finite field F_{p^e}: characteristic, extension degree, and the monic
/// irreducible modulus polynomial (coefficients low-to-high, length e+1).
/// An empty modulus means "use the bundled table" (p in {2,3,5,7}, e <= 4).
struct FieldSpec {
  uint32_t p = 2;
  uint32_t e = 1;
  std::vector<uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

/// Exact arithmetic in F_{p^e}. Elements are indices in [0, q): the residue
/// with base-p digits c_0..c_{e-1} (low to high) has index sum c_i * p^i.
/// The prime subfield is therefore always the index range [0, p).
///
/// Construction validates the spec: p prime, modulus monic of degree e and
/// irreducible over F_p. Instances are immutable and safe to share.
class Fq {
 public:
  static FqPtr make(const FieldSpec& spec);
  static FqPtr make(uint32_t p, uint32_t e = 1);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws on zero
  uint32_t pow(uint32_t a, uint64_t n) const;

  /// Embeds an integer via the prime subfield (n mod p).
  uint32_t from_int(long long n) const;

  bool same(const Fq& other) const { return spec_ == other.spec_; }

  std::string name() const;                  // "F_9"
  std::string elem_str(uint32_t a) const;    // "w^2+2w+1" style for e > 1

 private:
  explicit Fq(FieldSpec spec);

  uint32_t add_raw(uint32_t a, uint32_t b) const;
  uint32_t mul_raw(uint32_t a, uint32_t b) const;

  FieldSpec spec_;
  uint32_t p_ = 2, e_ = 1, q_ = 2;
  bool tables_ = false;
  std::vector<uint16_t> add_t_, mul_t_;
  std::vector<uint32_t> neg_t_, inv_t_;
};

/// True iff `modulus` (low-to-high, monic) is irreducible over F_p.
bool poly_is_irreducible(const std::vector<uint32_t>& modulus, uint32_t p);

bool is_prime(uint32_t n);

/// Bundled irreducible modulus for F_{p^e}, p in {2,3,5,7}, e in [1,4].
std::vector<uint32_t> bundled_modulus(uint32_t p, uint32_t e);

/// Factors a prime power q = p^e; throws parse_error otherwise.
FieldSpec field_spec_from_q(uint64_t q);

}  // namespace wildcert
