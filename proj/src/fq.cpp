#include "wildcert/fq.hpp"

#include <algorithm>
#include <array>

namespace wildcert {

namespace {

constexpr uint32_t kMaxTableQ = 1024;  // add/mul lookup tables below this
constexpr uint32_t kMaxDegree = 8;

using Digits = std::array<uint32_t, 2 * kMaxDegree>;

Digits decode(uint32_t a, uint32_t p, uint32_t e) {
  Digits d{};
  for (uint32_t i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

uint32_t encode(const Digits& d, uint32_t p, uint32_t e) {
  uint32_t a = 0;
  for (uint32_t i = e; i-- > 0;) a = a * p + d[i];
  return a;
}

// Remainder of `a` (degree < 2e-1) modulo the monic modulus, in place.
void reduce(Digits& a, const std::vector<uint32_t>& mod, uint32_t p,
            uint32_t e) {
  for (uint32_t i = 2 * e - 2 + 1; i-- > e;) {
    uint32_t c = a[i];
    if (c == 0) continue;
    a[i] = 0;
    for (uint32_t j = 0; j < e; ++j) {
      a[i - e + j] = (a[i - e + j] + c * (p - mod[j])) % p;
    }
  }
}

// Polynomial long division remainder: a mod b over F_p, both low-to-high.
std::vector<uint32_t> poly_rem(std::vector<uint32_t> a,
                               const std::vector<uint32_t>& b, uint32_t p) {
  auto deg = [](const std::vector<uint32_t>& v) -> int {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (v[i]) return i;
    return -1;
  };
  int db = deg(b);
  // b is monic in all call sites
  while (deg(a) >= db && db >= 0) {
    int da = deg(a);
    uint32_t c = a[da];
    for (int j = 0; j <= db; ++j) {
      a[da - db + j] = (a[da - db + j] + c * (p - b[j] % p)) % p;
    }
  }
  return a;
}

}  // namespace

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool poly_is_irreducible(const std::vector<uint32_t>& modulus, uint32_t p) {
  const uint32_t e = static_cast<uint32_t>(modulus.size()) - 1;
  if (e == 0) return false;
  if (e == 1) return true;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (uint32_t d = 1; 2 * d <= e; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t t = 0; t < count; ++t) {
      std::vector<uint32_t> div(d + 1, 0);
      uint64_t tt = t;
      for (uint32_t i = 0; i < d; ++i) {
        div[i] = static_cast<uint32_t>(tt % p);
        tt /= p;
      }
      div[d] = 1;
      auto r = poly_rem(modulus, div, p);
      if (std::all_of(r.begin(), r.end(), [](uint32_t c) { return c == 0; }))
        return false;
    }
  }
  return true;
}

std::vector<uint32_t> bundled_modulus(uint32_t p, uint32_t e) {
  if (e == 1) return {0, 1};
  switch (p) {
    case 2:
      if (e == 2) return {1, 1, 1};
      if (e == 3) return {1, 1, 0, 1};
      if (e == 4) return {1, 1, 0, 0, 1};
      break;
    case 3:
      if (e == 2) return {2, 2, 1};
      if (e == 3) return {1, 2, 0, 1};
      if (e == 4) return {2, 0, 0, 2, 1};
      break;
    case 5:
      if (e == 2) return {2, 4, 1};
      if (e == 3) return {3, 3, 0, 1};
      if (e == 4) return {2, 4, 4, 0, 1};
      break;
    case 7:
      if (e == 2) return {3, 6, 1};
      if (e == 3) return {4, 0, 6, 1};
      if (e == 4) return {3, 4, 5, 0, 1};
      break;
    default:
      break;
  }
  throw error("no bundled modulus for p=" + std::to_string(p) +
              ", e=" + std::to_string(e) + "; supply one explicitly");
}

FieldSpec field_spec_from_q(uint64_t q) {
  if (q < 2) throw parse_error("field size must be at least 2");
  for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= q || p <= q; ++p) {
    if (!is_prime(p)) continue;
    if (q % p != 0) continue;
    uint32_t e = 0;
    uint64_t t = q;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (t != 1) throw parse_error(std::to_string(q) + " is not a prime power");
    return FieldSpec{p, e, {}};
  }
  throw parse_error(std::to_string(q) + " is not a prime power");
}

Fq::Fq(FieldSpec spec) : spec_(std::move(spec)) {
  p_ = spec_.p;
  e_ = spec_.e;
  if (!is_prime(p_)) throw error("field characteristic must be prime");
  if (e_ < 1 || e_ > kMaxDegree) throw error("unsupported extension degree");
  if (spec_.modulus.empty()) spec_.modulus = bundled_modulus(p_, e_);
  if (spec_.modulus.size() != e_ + 1)
    throw error("modulus degree does not match extension degree");
  for (auto c : spec_.modulus)
    if (c >= p_) throw error("modulus coefficients must be reduced mod p");
  if (spec_.modulus.back() != 1) throw error("modulus must be monic");
  if (!poly_is_irreducible(spec_.modulus, p_))
    throw error("modulus is reducible over F_" + std::to_string(p_));

  uint64_t q = 1;
  for (uint32_t i = 0; i < e_; ++i) q *= p_;
  if (q > (1u << 24)) throw error("field too large");
  q_ = static_cast<uint32_t>(q);

  neg_t_.resize(q_);
  for (uint32_t a = 0; a < q_; ++a) {
    auto d = decode(a, p_, e_);
    for (uint32_t i = 0; i < e_; ++i) d[i] = (p_ - d[i]) % p_;
    neg_t_[a] = encode(d, p_, e_);
  }
  if (q_ <= kMaxTableQ) {
    tables_ = true;
    add_t_.resize(static_cast<size_t>(q_) * q_);
    mul_t_.resize(static_cast<size_t>(q_) * q_);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b) {
        add_t_[static_cast<size_t>(a) * q_ + b] =
            static_cast<uint16_t>(add_raw(a, b));
        mul_t_[static_cast<size_t>(a) * q_ + b] =
            static_cast<uint16_t>(mul_raw(a, b));
      }
  }
  inv_t_.resize(q_);
  inv_t_[0] = 0;
  for (uint32_t a = 1; a < q_; ++a) inv_t_[a] = pow(a, q_ - 2);
}

FqPtr Fq::make(const FieldSpec& spec) { return FqPtr(new Fq(spec)); }

FqPtr Fq::make(uint32_t p, uint32_t e) { return make(FieldSpec{p, e, {}}); }

uint32_t Fq::add_raw(uint32_t a, uint32_t b) const {
  if (e_ == 1) return (a + b) % p_;
  auto da = decode(a, p_, e_);
  auto db = decode(b, p_, e_);
  for (uint32_t i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da, p_, e_);
}

uint32_t Fq::mul_raw(uint32_t a, uint32_t b) const {
  if (e_ == 1) return (a * b) % p_;
  auto da = decode(a, p_, e_);
  auto db = decode(b, p_, e_);
  Digits prod{};
  for (uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  reduce(prod, spec_.modulus, p_, e_);
  return encode(prod, p_, e_);
}

uint32_t Fq::add(uint32_t a, uint32_t b) const {
  if (tables_) return add_t_[static_cast<size_t>(a) * q_ + b];
  return add_raw(a, b);
}

uint32_t Fq::sub(uint32_t a, uint32_t b) const { return add(a, neg_t_[b]); }

uint32_t Fq::neg(uint32_t a) const { return neg_t_[a]; }

uint32_t Fq::mul(uint32_t a, uint32_t b) const {
  if (tables_) return mul_t_[static_cast<size_t>(a) * q_ + b];
  return mul_raw(a, b);
}

uint32_t Fq::inv(uint32_t a) const {
  if (a == 0) throw error("division by zero in " + name());
  return inv_t_[a];
}

uint32_t Fq::pow(uint32_t a, uint64_t n) const {
  uint32_t r = 1, base = a;
  while (n) {
    if (n & 1) r = mul_raw(r, base);
    base = mul_raw(base, base);
    n >>= 1;
  }
  return r;
}

uint32_t Fq::from_int(long long n) const {
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<uint32_t>(m);
}

std::string Fq::name() const { return "F_" + std::to_string(q_); }

std::string Fq::elem_str(uint32_t a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  auto d = decode(a, p_, e_);
  std::string s;
  for (uint32_t i = e_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(d[i]);
    } else {
      if (d[i] != 1) s += std::to_string(d[i]);
      s += "w";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace wildcert
