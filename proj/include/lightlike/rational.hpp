// Exact arbitrary-precision rational arithmetic.
//
// Rational keeps an int64 numerator/denominator fast path and promotes to a
// heap-allocated bignum pair only when an operation overflows. Every value is
// kept fully reduced (gcd 1, positive denominator), so equality is plain
// field comparison on the fast path.

#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lightlike {

// Sign-magnitude big integer, little-endian 32-bit limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) { assign_i128(v); }
    static BigInt from_i128(__int128 v) {
        BigInt r;
        r.assign_i128(v);
        return r;
    }

    static BigInt from_decimal(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty decimal string");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(s[i] - '0');
        }
        if (!r.is_zero()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long v = mag_u64();
        if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
        return v <= 0x8000000000000000ULL;
    }
    long long to_int64() const {
        unsigned long long v = mag_u64();
        return sign_ < 0 ? (long long)(0ULL - v) : (long long)v;
    }

    double to_double() const {
        double r = 0.0;
        for (std::size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + (double)mag_[i];
        return sign_ < 0 ? -r : r;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }
    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }
    // Truncated toward zero, like built-in integer division.
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }
    static int cmp_abs(const BigInt& a, const BigInt& b) { return cmp_mag(a.mag_, b.mag_); }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt t = a % b;
            a = std::move(b);
            b = std::move(t);
        }
        return a;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = (std::uint32_t)(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            char buf[16];
            if (m.empty())
                std::snprintf(buf, sizeof buf, "%llu", (unsigned long long)rem);
            else
                std::snprintf(buf, sizeof buf, "%09llu", (unsigned long long)rem);
            digits.insert(0, buf);
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // no trailing zero limbs; empty iff sign_ == 0

    void assign_i128(__int128 v) {
        sign_ = v == 0 ? 0 : (v < 0 ? -1 : 1);
        unsigned __int128 m = v < 0 ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
        mag_.clear();
        while (m != 0) {
            mag_.push_back((std::uint32_t)m);
            m >>= 32;
        }
    }

    unsigned long long mag_u64() const {
        unsigned long long v = 0;
        if (mag_.size() > 1) v = (unsigned long long)mag_[1] << 32;
        if (!mag_.empty()) v |= mag_[0];
        return v;
    }

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t t = (std::uint64_t)big[i] + (i < small.size() ? small[i] : 0u) + carry;
            r[i] = (std::uint32_t)t;
            carry = t >> 32;
        }
        r[big.size()] = (std::uint32_t)carry;
        trim(r);
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t t = (std::int64_t)a[i] - (i < b.size() ? (std::int64_t)b[i] : 0) - borrow;
            borrow = t < 0 ? 1 : 0;
            r[i] = (std::uint32_t)(t + (borrow << 32));
        }
        trim(r);
        return r;
    }
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t t = (std::uint64_t)a[i] * b[j] + r[i + j] + carry;
                r[i + j] = (std::uint32_t)t;
                carry = t >> 32;
            }
            r[i + b.size()] = (std::uint32_t)carry;
        }
        trim(r);
        return r;
    }
    static std::vector<std::uint32_t> shl_small(const std::vector<std::uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<std::uint32_t> r(a.size() + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = (std::uint32_t)((std::uint64_t)a[i] >> (32 - s));
        }
        trim(r);
        return r;
    }
    static std::vector<std::uint32_t> shr_small(const std::vector<std::uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<std::uint32_t> r(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> s;
            if (i + 1 < a.size()) r[i] |= (std::uint32_t)((std::uint64_t)a[i + 1] << (32 - s));
        }
        trim(r);
        return r;
    }

    // Knuth algorithm D, base 2^32.
    static void divmod_mag(const std::vector<std::uint32_t>& u,
                           const std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u, v) < 0) {
            r = u;
            return;
        }
        if (v.size() == 1) {
            std::uint64_t d = v[0], rem = 0;
            q.assign(u.size(), 0);
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | u[i];
                q[i] = (std::uint32_t)(cur / d);
                rem = cur % d;
            }
            trim(q);
            if (rem) r.push_back((std::uint32_t)rem);
            return;
        }
        const std::size_t n = v.size(), m = u.size() - n;
        const int s = std::countl_zero(v.back());
        std::vector<std::uint32_t> vn = shl_small(v, s);
        std::vector<std::uint32_t> un = shl_small(u, s);
        un.resize(u.size() + 1, 0);
        vn.resize(n);  // shl of a normalized divisor never grows past n limbs

        q.assign(m + 1, 0);
        const std::uint64_t base = 1ull << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = ((std::uint64_t)un[j + n] << 32) | un[j + n - 1];
            std::uint64_t qhat = num / vn[n - 1];
            std::uint64_t rhat = num % vn[n - 1];
            while (qhat >= base ||
                   (unsigned __int128)qhat * vn[n - 2] > (((unsigned __int128)rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }
            std::uint64_t carry = 0, borrow = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                std::uint64_t t = (std::uint64_t)un[i + j] - (p & 0xffffffffu) - borrow;
                un[i + j] = (std::uint32_t)t;
                borrow = (t >> 32) ? 1 : 0;
            }
            std::uint64_t t = (std::uint64_t)un[j + n] - carry - borrow;
            un[j + n] = (std::uint32_t)t;
            if (t >> 32) {  // qhat was one too large; add divisor back
                --qhat;
                std::uint64_t c = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s2 = (std::uint64_t)un[i + j] + vn[i] + c;
                    un[i + j] = (std::uint32_t)s2;
                    c = s2 >> 32;
                }
                un[j + n] = (std::uint32_t)((std::uint64_t)un[j + n] + c);
            }
            q[j] = (std::uint32_t)qhat;
        }
        trim(q);
        un.resize(n);
        r = shr_small(un, s);
    }
};

inline std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(0), den_(1) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        assign_i128(n, d);
    }
    Rational(const BigInt& n, const BigInt& d) : num_(0), den_(1) {
        if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
        assign_big(n, d);
    }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<BigPair>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<BigPair>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return big_ ? big_->num.is_zero() : num_ == 0; }
    int sign() const {
        if (big_) return big_->num.sign();
        return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1);
    }

    BigInt numerator() const { return big_ ? big_->num : BigInt(num_); }
    BigInt denominator() const { return big_ ? big_->den : BigInt(den_); }

    double to_double() const {
        if (!big_) return (double)num_ / (double)den_;
        return big_->num.to_double() / big_->den.to_double();
    }

    std::string to_string() const {
        if (!big_) {
            std::string s = std::to_string(num_);
            if (den_ != 1) s += "/" + std::to_string(den_);
            return s;
        }
        std::string s = big_->num.to_string();
        if (!(big_->den == BigInt(1))) s += "/" + big_->den.to_string();
        return s;
    }

    friend Rational operator-(const Rational& a) {
        if (!a.big_) {
            Rational r;
            r.num_ = -a.num_;
            r.den_ = a.den_;
            return r;
        }
        return Rational(-a.big_->num, a.big_->den);
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
            __int128 d = (__int128)a.den_ * b.den_;
            return from_i128(n, d);
        }
        return Rational(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                        a.denominator() * b.denominator());
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 n = (__int128)a.num_ * b.num_;
            __int128 d = (__int128)a.den_ * b.den_;
            return from_i128(n, d);
        }
        return Rational(a.numerator() * b.numerator(), a.denominator() * b.denominator());
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        if (!a.big_ && !b.big_) {
            __int128 n = (__int128)a.num_ * b.den_;
            __int128 d = (__int128)a.den_ * b.num_;
            return from_i128(n, d);
        }
        return Rational(a.numerator() * b.denominator(), a.denominator() * b.numerator());
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        return a.numerator() == b.numerator() && a.denominator() == b.denominator();
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    static int cmp(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 l = (__int128)a.num_ * b.den_;
            __int128 r = (__int128)b.num_ * a.den_;
            return l < r ? -1 : (l > r ? 1 : 0);
        }
        return BigInt::cmp(a.numerator() * b.denominator(), b.numerator() * a.denominator());
    }
    static int cmp_abs(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            unsigned __int128 l = u128_abs((__int128)a.num_ * b.den_);
            unsigned __int128 r = u128_abs((__int128)b.num_ * a.den_);
            return l < r ? -1 : (l > r ? 1 : 0);
        }
        return BigInt::cmp_abs(a.numerator() * b.denominator(), b.numerator() * a.denominator());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    struct BigPair {
        BigInt num, den;  // reduced, den > 0
    };
    long long num_, den_;            // valid iff big_ == nullptr; reduced, den_ > 0
    std::unique_ptr<BigPair> big_;

    static unsigned __int128 u128_abs(__int128 v) {
        return v < 0 ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    }
    static unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
        while (b) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_i128(__int128 n, __int128 d) {
        Rational r;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return r;
        unsigned __int128 g = gcd_u128(u128_abs(n), (unsigned __int128)d);
        unsigned __int128 un = u128_abs(n) / g, ud = (unsigned __int128)d / g;
        if (un <= 0x7fffffffffffffffULL && ud <= 0x7fffffffffffffffULL) {
            r.num_ = n < 0 ? -(long long)un : (long long)un;
            r.den_ = (long long)ud;
        } else {
            r.big_ = std::make_unique<BigPair>();
            __int128 sn = (__int128)un;
            r.big_->num = BigInt::from_i128(n < 0 ? -sn : sn);
            r.big_->den = BigInt::from_i128((__int128)ud);
            r.num_ = 0;
            r.den_ = 1;
        }
        return r;
    }

    void assign_i128(__int128 n, __int128 d) { *this = from_i128(n, d); }

    void assign_big(BigInt n, BigInt d) {
        if (d.sign() < 0) {
            n = -n;
            d = -d;
        }
        if (n.is_zero()) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        BigInt g = BigInt::gcd(n.abs(), d);
        n = n / g;
        d = d / g;
        if (n.fits_int64() && d.fits_int64()) {
            num_ = n.to_int64();
            den_ = d.to_int64();
            big_.reset();
        } else {
            big_ = std::make_unique<BigPair>();
            big_->num = std::move(n);
            big_->den = std::move(d);
            num_ = 0;
            den_ = 1;
        }
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace lightlike
