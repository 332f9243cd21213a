#include "hilden/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilden {

namespace {

using Mag = std::vector<std::uint32_t>;

constexpr std::uint64_t kBase = 1ull << 32;

int bit_length(const Mag& a) {
  if (a.empty()) return 0;
  int bits = 32 * static_cast<int>(a.size() - 1);
  std::uint32_t top = a.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool get_bit(const Mag& a, int i) {
  return (a[i / 32] >> (i % 32)) & 1u;
}

// In-place r = 2r + carry_bit, keeping r trimmed.
void shift_in_bit(Mag& r, bool bit) {
  std::uint32_t carry = bit ? 1u : 0u;
  for (std::uint32_t& limb : r) {
    const std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) r.push_back(carry);
}

void trim_mag(Mag& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

void BigInt::trim() {
  trim_mag(mag_);
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Mag BigInt::add_mag(const Mag& a, const Mag& b) {
  Mag out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
    carry = sum >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
  // requires a >= b
  Mag out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(diff));
  }
  trim_mag(out);
  return out;
}

Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] +
                          static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  trim_mag(out);
  return out;
}

void BigInt::divmod_mag(const Mag& a, const Mag& b, Mag& q, Mag& r) {
  // Shift-subtract long division; b != 0.
  q.assign(a.size(), 0);
  r.clear();
  for (int i = bit_length(a) - 1; i >= 0; --i) {
    shift_in_bit(r, get_bit(a, i));
    if (compare_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q[i / 32] |= 1u << (i % 32);
    }
  }
  trim_mag(q);
  trim_mag(r);
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  // careful with LLONG_MIN
  std::uint64_t u = v > 0 ? static_cast<std::uint64_t>(v)
                          : ~static_cast<std::uint64_t>(v) + 1;
  while (u) {
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

BigInt::BigInt(std::string_view decimal) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < decimal.size() && (decimal[pos] == '-' || decimal[pos] == '+')) {
    negative = decimal[pos] == '-';
    ++pos;
  }
  if (pos == decimal.size())
    throw std::invalid_argument("BigInt: empty decimal string");
  Mag acc;
  while (pos < decimal.size()) {
    const std::size_t chunk_len = std::min<std::size_t>(9, decimal.size() - pos);
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t i = 0; i < chunk_len; ++i) {
      const char c = decimal[pos + i];
      if (c < '0' || c > '9')
        throw std::invalid_argument("BigInt: invalid decimal digit");
      chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
      scale *= 10;
    }
    acc = mul_mag(acc, {scale});
    acc = add_mag(acc, {chunk});
    trim_mag(acc);
    pos += chunk_len;
  }
  mag_ = std::move(acc);
  sign_ = mag_.empty() ? 0 : (negative ? -1 : 1);
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    out.sign_ = a.sign_;
  } else {
    const int cmp = BigInt::compare_mag(a.mag_, b.mag_);
    if (cmp == 0) return BigInt();
    if (cmp > 0) {
      out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
      out.sign_ = a.sign_;
    } else {
      out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
      out.sign_ = b.sign_;
    }
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  out.sign_ = a.sign_ * b.sign_;
  out.trim();
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
  const int qsign = a.sign_ * b.sign_;
  const int rsign = a.sign_;
  BigInt qq, rr;  // locals so q or r may alias a or b
  divmod_mag(a.mag_, b.mag_, qq.mag_, rr.mag_);
  qq.sign_ = qq.mag_.empty() ? 0 : qsign;
  rr.sign_ = rr.mag_.empty() ? 0 : rsign;
  q = std::move(qq);
  r = std::move(rr);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  const int cmp = BigInt::compare_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? cmp < 0 : cmp > 0;
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  std::string digits;
  Mag cur = mag_;
  const Mag ten9{1000000000u};
  while (!cur.empty()) {
    Mag q, r;
    divmod_mag(cur, ten9, q, r);
    std::uint32_t rem = r.empty() ? 0 : r[0];
    for (int i = 0; i < 9; ++i) {
      digits += static_cast<char>('0' + rem % 10);
      rem /= 10;
    }
    cur = std::move(q);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits += '-';
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace hilden
