#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hilden {

// Signed arbitrary-precision integer: sign plus little-endian 32-bit limbs.
// Division truncates toward zero, so the remainder carries the sign of the
// dividend and |r| < |b|.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors built-in ints
  explicit BigInt(std::string_view decimal);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

  std::string str() const;

private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;  // little-endian, no leading zero limbs

  void trim();
  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r);
};

BigInt gcd(BigInt a, BigInt b);  // nonnegative result

}  // namespace hilden
