#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace horadam {

// Signed arbitrary-precision integer over base-1e9 limbs.
// Supports the operations the counting formulas need: add, subtract,
// multiply, compare, powers, and exact division by a machine word.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    template <typename T, typename = std::enable_if_t<std::is_integral_v<T> &&
                                                      !std::is_same_v<T, long long>>>
    BigInt(T v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    std::string to_string() const;
    bool fits_uint64() const;
    std::uint64_t to_uint64() const; // throws std::overflow_error

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    // Quotient of an exact division; throws internal_error on a remainder.
    BigInt divided_exact(long long d) const;

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

private:
    static constexpr std::uint32_t kBase = 1'000'000'000u;

    int sign_ = 0;                      // -1, 0, +1; 0 iff limbs_ empty
    std::vector<std::uint32_t> limbs_;  // little endian, no leading zeros

    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();
};

BigInt pow(BigInt base, unsigned exp);
BigInt binomial(long long n, long long k);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

} // namespace horadam
