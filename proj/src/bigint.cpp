#include "horadam/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "horadam/errors.hpp"

namespace horadam {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt r;
    if (s.empty()) throw parameter_error("BigInt: empty string");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw parameter_error("BigInt: no digits");
    for (std::size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw parameter_error("BigInt: bad digit");
    // Parse 9-digit groups from the right.
    std::size_t end = s.size();
    while (end > pos) {
        std::size_t begin = end >= pos + 9 ? end - 9 : pos;
        std::uint32_t limb = 0;
        for (std::size_t i = begin; i < end; ++i)
            limb = limb * 10 + static_cast<std::uint32_t>(s[i] - '0');
        r.limbs_.push_back(limb);
        end = begin;
    }
    r.sign_ = neg ? -1 : 1;
    r.trim();
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

bool BigInt::fits_uint64() const {
    if (sign_ < 0) return false;
    if (limbs_.size() > 3) return false;
    if (limbs_.size() < 3) return true;
    // 2^64-1 = 18'446744073'709551615
    if (limbs_[2] > 18u) return false;
    if (limbs_[2] < 18u) return true;
    if (limbs_[1] > 446744073u) return false;
    if (limbs_[1] < 446744073u) return true;
    return limbs_[0] <= 709551615u;
}

std::uint64_t BigInt::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigInt: does not fit uint64");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<std::uint32_t>(s % kBase);
        carry = static_cast<std::uint32_t>(s / kBase);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        borrow = 0;
        if (s < 0) {
            s += kBase;
            borrow = 1;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        limbs_ = add_mag(limbs_, o.limbs_);
        return *this;
    }
    int c = compare_mag(limbs_, o.limbs_);
    if (c == 0) {
        sign_ = 0;
        limbs_.clear();
    } else if (c > 0) {
        limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
        limbs_ = sub_mag(o.limbs_, limbs_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        sign_ = 0;
        limbs_.clear();
        return *this;
    }
    std::vector<std::uint32_t> r(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                                r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry != 0) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    limbs_ = std::move(r);
    sign_ *= o.sign_;
    return *this;
}

BigInt BigInt::divided_exact(long long d) const {
    if (d == 0) throw parameter_error("BigInt: division by zero");
    if (sign_ == 0) return BigInt();
    BigInt r;
    unsigned long long ad = d < 0 ? 0ull - static_cast<unsigned long long>(d)
                                  : static_cast<unsigned long long>(d);
    r.limbs_.assign(limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = rem * kBase + limbs_[i];
        r.limbs_[i] = static_cast<std::uint32_t>(rem / ad);
        rem %= ad;
    }
    if (rem != 0) throw internal_error("BigInt: division is not exact");
    r.sign_ = sign_ * (d < 0 ? -1 : 1);
    r.trim();
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::compare_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt pow(BigInt base, unsigned exp) {
    BigInt r(1);
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return BigInt();
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = r.divided_exact(i);
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
}

} // namespace horadam
