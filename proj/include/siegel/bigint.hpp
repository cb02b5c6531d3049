#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

// Arbitrary-precision signed integer, base 2^32 little-endian limbs.
// Zero is the empty limb vector with sign 0.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v)
    {
        if (v == 0)
            return;
        sign_ = v > 0 ? 1 : -1;
        unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                     : 0ULL - static_cast<unsigned long long>(v);
        while (m) {
            limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s)
    {
        BigInt r;
        size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i == s.size())
            throw std::invalid_argument("BigInt: empty digit string");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit");
            r.mul_small_add(10, static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.limbs_.empty())
            r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return sign_; }

    bool fits_int64() const
    {
        if (limbs_.size() > 2)
            return false;
        unsigned long long m = mag64();
        if (sign_ >= 0)
            return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }
    long long to_int64() const
    {
        if (!fits_int64())
            throw std::overflow_error("BigInt: does not fit int64");
        unsigned long long m = mag64();
        return sign_ < 0 ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    friend BigInt operator-(const BigInt& a)
    {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b)
    {
        if (a.sign_ == 0)
            return b;
        if (b.sign_ == 0)
            return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0)
            return r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.sign_ = b.sign_;
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b)
    {
        if (a.sign_ == 0 || b.sign_ == 0)
            return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned long long carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                unsigned long long cur = static_cast<unsigned long long>(a.limbs_[i]) * b.limbs_[j]
                                         + r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r)
    {
        if (b.sign_ == 0)
            throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    friend bool operator==(const BigInt& a, const BigInt& b)
    {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b)
    {
        if (a.sign_ != b.sign_)
            return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.sign_ < 0)
            c = -c;
        return c <=> 0;
    }

    BigInt abs() const
    {
        BigInt r = *this;
        if (r.sign_ < 0)
            r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b)
    {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    bool divisible_by(const BigInt& d) const { return (*this % d).is_zero(); }

    std::string to_string() const
    {
        if (sign_ == 0)
            return "0";
        std::vector<uint32_t> m = limbs_;
        std::string digits;
        while (!m.empty()) {
            unsigned long long rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                unsigned long long cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0)
                m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0')
            digits.pop_back();
        if (sign_ < 0)
            digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> limbs_;

    unsigned long long mag64() const
    {
        unsigned long long m = 0;
        if (limbs_.size() > 1)
            m = static_cast<unsigned long long>(limbs_[1]) << 32;
        if (!limbs_.empty())
            m |= limbs_[0];
        return m;
    }

    void trim()
    {
        while (!limbs_.empty() && limbs_.back() == 0)
            limbs_.pop_back();
        if (limbs_.empty())
            sign_ = 0;
    }

    void mul_small_add(uint32_t mul, uint32_t add)
    {
        unsigned long long carry = add;
        for (auto& limb : limbs_) {
            unsigned long long cur = static_cast<unsigned long long>(limb) * mul + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            limbs_.push_back(static_cast<uint32_t>(carry));
            carry >>= 32;
        }
        trim();
        if (!limbs_.empty() && sign_ == 0)
            sign_ = 1;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
    {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
    {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        unsigned long long carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            unsigned long long cur = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b)
    {
        std::vector<uint32_t> r = a;
        long long borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            long long cur = static_cast<long long>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = 0;
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0.
    static void divmod_mag(std::vector<uint32_t> a, std::vector<uint32_t> b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r)
    {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            unsigned long long rem = 0;
            for (size_t i = a.size(); i-- > 0;) {
                unsigned long long cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            while (!q.empty() && q.back() == 0)
                q.pop_back();
            r.clear();
            if (rem)
                r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // normalize so the divisor's top limb has its high bit set
        int shift = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1)
            ++shift;
        a = shl_bits(a, shift);
        b = shl_bits(b, shift);
        size_t n = b.size(), m = a.size() - n;
        a.push_back(0);
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            unsigned long long top2 = (static_cast<unsigned long long>(a[j + n]) << 32) | a[j + n - 1];
            unsigned long long qhat = top2 / b[n - 1];
            unsigned long long rhat = top2 % b[n - 1];
            while (qhat >= (1ULL << 32)
                   || qhat * b[n - 2] > ((rhat << 32) | a[j + n - 2])) {
                --qhat;
                rhat += b[n - 1];
                if (rhat >= (1ULL << 32))
                    break;
            }
            // multiply-subtract, with add-back on underflow
            long long borrow = 0;
            unsigned long long carry = 0;
            for (size_t i = 0; i < n; ++i) {
                unsigned long long prod = qhat * b[i] + carry;
                carry = prod >> 32;
                long long cur = static_cast<long long>(a[i + j]) - borrow
                                - static_cast<long long>(prod & 0xffffffffULL);
                borrow = 0;
                if (cur < 0) {
                    cur += 1LL << 32;
                    borrow = 1;
                }
                a[i + j] = static_cast<uint32_t>(cur);
            }
            long long cur = static_cast<long long>(a[j + n]) - borrow - static_cast<long long>(carry);
            if (cur < 0) {
                cur += 1LL << 32;
                --qhat;
                unsigned long long carry2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    unsigned long long s = static_cast<unsigned long long>(a[i + j]) + b[i] + carry2;
                    a[i + j] = static_cast<uint32_t>(s);
                    carry2 = s >> 32;
                }
                cur += static_cast<long long>(carry2);
            }
            a[j + n] = static_cast<uint32_t>(cur);
            q[j] = static_cast<uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        a.resize(n);
        r = shr_bits(a, shift);
    }

    static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& v, int s)
    {
        if (s == 0)
            return v;
        std::vector<uint32_t> r(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            r[i] |= v[i] << s;
            r[i + 1] = v[i] >> (32 - s);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
    static std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& v, int s)
    {
        if (s == 0)
            return v;
        std::vector<uint32_t> r(v.size(), 0);
        for (size_t i = 0; i < v.size(); ++i) {
            r[i] = v[i] >> s;
            if (i + 1 < v.size())
                r[i] |= v[i + 1] << (32 - s);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
};

} // namespace siegel
