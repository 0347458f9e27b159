#pragma once

// Exact scalar arithmetic: arbitrary-precision integers with an inline
// fast path for machine-word values, rationals built on top of them, and
// a large prime field. All algebra in this project runs over Rat by
// default; Fp is the optional fast mode.

#include "gpa/error.hpp"

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gpa {

namespace detail {

using Limbs = std::vector<std::uint32_t>; // little-endian magnitude

inline void mag_trim(Limbs& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline int mag_cmp(const Limbs& a, const Limbs& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

inline Limbs mag_from_u64(std::uint64_t v) {
    Limbs r;
    while (v) {
        r.push_back(static_cast<std::uint32_t>(v));
        v >>= 32;
    }
    return r;
}

inline Limbs mag_add(const Limbs& a, const Limbs& b) {
    const Limbs& lo = a.size() < b.size() ? a : b;
    const Limbs& hi = a.size() < b.size() ? b : a;
    Limbs r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    mag_trim(r);
    return r;
}

// requires a >= b
inline Limbs mag_sub(const Limbs& a, const Limbs& b) {
    Limbs r(a.size(), 0);
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (s < 0) {
            s += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    mag_trim(r);
    return r;
}

inline Limbs mag_mul(const Limbs& a, const Limbs& b) {
    if (a.empty() || b.empty())
        return {};
    Limbs r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] +
                                static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    mag_trim(r);
    return r;
}

inline int mag_bit(const Limbs& a, size_t i) {
    size_t limb = i / 32, off = i % 32;
    if (limb >= a.size())
        return 0;
    return (a[limb] >> off) & 1u;
}

inline size_t mag_bits(const Limbs& a) {
    if (a.empty())
        return 0;
    size_t b = 32 * a.size();
    std::uint32_t top = a.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        --b;
    }
    return b;
}

// shift-subtract long division; magnitudes here stay small in practice
inline void mag_divmod(const Limbs& a, const Limbs& b, Limbs& q, Limbs& r) {
    q.clear();
    r.clear();
    if (b.empty())
        throw Error("integer division by zero");
    if (mag_cmp(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        mag_trim(q);
        r = mag_from_u64(rem);
        return;
    }
    size_t na = mag_bits(a);
    q.assign(a.size(), 0);
    Limbs rem;
    for (size_t i = na; i-- > 0;) {
        // rem = rem*2 + bit_i(a)
        std::uint32_t carry = static_cast<std::uint32_t>(mag_bit(a, i));
        for (size_t k = 0; k < rem.size(); ++k) {
            std::uint32_t nc = rem[k] >> 31;
            rem[k] = (rem[k] << 1) | carry;
            carry = nc;
        }
        if (carry)
            rem.push_back(carry);
        if (mag_cmp(rem, b) >= 0) {
            rem = mag_sub(rem, b);
            q[i / 32] |= (1u << (i % 32));
        }
    }
    mag_trim(q);
    r = rem;
}

} // namespace detail

/// Signed integer with an int64 fast path and automatic promotion to an
/// arbitrary-precision representation on overflow.
class Int {
    // |v_| < kSmallMax whenever big_ is null; otherwise the value is
    // sign_ * big_ and does not fit the small range.
    static constexpr long long kSmallMax = (1LL << 62);

    long long v_ = 0;
    int sign_ = 0; // only meaningful when big_ != nullptr
    std::unique_ptr<detail::Limbs> big_;

    Int(int sign, detail::Limbs mag) { set_big(sign, std::move(mag)); }

    void set_big(int sign, detail::Limbs mag) {
        detail::mag_trim(mag);
        if (sign == 0 && !mag.empty())
            throw Error("integer with zero sign but nonzero magnitude");
        if (mag.empty()) {
            v_ = 0;
            sign_ = 0;
            big_.reset();
            return;
        }
        // demote when the magnitude fits the small range
        if (mag.size() <= 2) {
            std::uint64_t m = mag[0];
            if (mag.size() == 2)
                m |= (static_cast<std::uint64_t>(mag[1]) << 32);
            if (m < static_cast<std::uint64_t>(kSmallMax)) {
                v_ = sign * static_cast<long long>(m);
                sign_ = 0;
                big_.reset();
                return;
            }
        }
        v_ = 0;
        sign_ = sign;
        big_ = std::make_unique<detail::Limbs>(std::move(mag));
    }

    detail::Limbs mag() const {
        if (big_)
            return *big_;
        std::uint64_t m = v_ < 0 ? -static_cast<std::uint64_t>(v_)
                                 : static_cast<std::uint64_t>(v_);
        return detail::mag_from_u64(m);
    }

public:
    Int() = default;
    Int(long long v) : v_(v) {} // |v| < 2^62 for all call sites we use
    Int(int v) : v_(v) {}

    Int(const Int& o) : v_(o.v_), sign_(o.sign_) {
        if (o.big_)
            big_ = std::make_unique<detail::Limbs>(*o.big_);
    }
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o) {
        if (this != &o) {
            v_ = o.v_;
            sign_ = o.sign_;
            big_ = o.big_ ? std::make_unique<detail::Limbs>(*o.big_) : nullptr;
        }
        return *this;
    }
    Int& operator=(Int&&) noexcept = default;

    bool is_zero() const { return !big_ && v_ == 0; }
    bool is_small() const { return !big_; }
    long long small() const { return v_; } // valid only when is_small()

    int sign() const {
        if (big_)
            return sign_;
        return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0);
    }

    friend Int operator-(const Int& a) {
        if (!a.big_)
            return Int(-a.v_);
        return Int(-a.sign_, *a.big_);
    }

    Int abs() const { return sign() < 0 ? -*this : *this; }

    friend Int operator+(const Int& a, const Int& b) {
        if (!a.big_ && !b.big_) {
            long long r;
            if (!__builtin_add_overflow(a.v_, b.v_, &r) &&
                r > -kSmallMax && r < kSmallMax)
                return Int(r);
        }
        int sa = a.sign(), sb = b.sign();
        if (sa == 0)
            return b;
        if (sb == 0)
            return a;
        detail::Limbs ma = a.mag(), mb = b.mag();
        if (sa == sb)
            return Int(sa, detail::mag_add(ma, mb));
        int c = detail::mag_cmp(ma, mb);
        if (c == 0)
            return Int();
        if (c > 0)
            return Int(sa, detail::mag_sub(ma, mb));
        return Int(sb, detail::mag_sub(mb, ma));
    }

    friend Int operator-(const Int& a, const Int& b) { return a + (-b); }

    friend Int operator*(const Int& a, const Int& b) {
        if (!a.big_ && !b.big_) {
            long long r;
            if (!__builtin_mul_overflow(a.v_, b.v_, &r) &&
                r > -kSmallMax && r < kSmallMax)
                return Int(r);
        }
        int s = a.sign() * b.sign();
        if (s == 0)
            return Int();
        return Int(s, detail::mag_mul(a.mag(), b.mag()));
    }

    // truncated division, as in C
    friend void divmod(const Int& a, const Int& b, Int& q, Int& r) {
        if (b.is_zero())
            throw Error("integer division by zero");
        if (!a.big_ && !b.big_) {
            q = Int(a.v_ / b.v_);
            r = Int(a.v_ % b.v_);
            return;
        }
        detail::Limbs mq, mr;
        detail::mag_divmod(a.mag(), b.mag(), mq, mr);
        int qs = mq.empty() ? 0 : a.sign() * b.sign();
        int rs = mr.empty() ? 0 : a.sign();
        q = Int(qs, std::move(mq));
        r = Int(rs, std::move(mr));
    }

    friend Int operator/(const Int& a, const Int& b) {
        Int q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Int operator%(const Int& a, const Int& b) {
        Int q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend int cmp(const Int& a, const Int& b) {
        int sa = a.sign(), sb = b.sign();
        if (sa != sb)
            return sa < sb ? -1 : 1;
        if (!a.big_ && !b.big_)
            return a.v_ < b.v_ ? -1 : (a.v_ > b.v_ ? 1 : 0);
        int c = detail::mag_cmp(a.mag(), b.mag());
        return sa >= 0 ? c : -c;
    }

    friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

    static Int gcd(Int a, Int b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            Int r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::string str() const {
        if (!big_)
            return std::to_string(v_);
        std::string out;
        detail::Limbs m = *big_;
        detail::Limbs ten = detail::mag_from_u64(1000000000u);
        while (!m.empty()) {
            detail::Limbs q, r;
            detail::mag_divmod(m, ten, q, r);
            std::uint64_t chunk = r.empty() ? 0 : r[0];
            std::string part = std::to_string(chunk);
            if (!q.empty())
                part = std::string(9 - part.size(), '0') + part;
            out = part + out;
            m = std::move(q);
        }
        return (sign_ < 0 ? "-" : "") + out;
    }

    static Int from_string(std::string_view s) {
        if (s.empty())
            throw Error("empty integer literal");
        int sign = 1;
        size_t i = 0;
        if (s[0] == '-') {
            sign = -1;
            i = 1;
        } else if (s[0] == '+') {
            i = 1;
        }
        if (i >= s.size())
            throw Error("empty integer literal");
        Int r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw Error("bad integer literal: " + std::string(s));
            r = r * Int(10) + Int(s[i] - '0');
        }
        return sign < 0 ? -r : r;
    }
};

/// Rational number, always stored reduced with positive denominator.
class Rat {
    Int n_{0}, d_{1};

    void normalize() {
        if (d_.is_zero())
            throw Error("rational with zero denominator");
        if (d_.sign() < 0) {
            n_ = -n_;
            d_ = -d_;
        }
        if (n_.is_zero()) {
            d_ = Int(1);
            return;
        }
        Int g = Int::gcd(n_, d_);
        if (!(g == Int(1))) {
            n_ = n_ / g;
            d_ = d_ / g;
        }
    }

public:
    Rat() = default;
    Rat(long long v) : n_(v), d_(1) {}
    Rat(int v) : n_(v), d_(1) {}
    Rat(Int n, Int d) : n_(std::move(n)), d_(std::move(d)) { normalize(); }

    const Int& num() const { return n_; }
    const Int& den() const { return d_; }
    bool is_zero() const { return n_.is_zero(); }
    bool is_one() const { return n_ == Int(1) && d_ == Int(1); }
    bool is_integer() const { return d_ == Int(1); }
    int sign() const { return n_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.n_ * b.d_ + b.n_ * a.d_, a.d_ * b.d_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.n_ * b.d_ - b.n_ * a.d_, a.d_ * b.d_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.n_ * b.n_, a.d_ * b.d_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero())
            throw Error("rational division by zero");
        return Rat(a.n_ * b.d_, a.d_ * b.n_);
    }
    friend Rat operator-(const Rat& a) { return Rat(-a.n_, a.d_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (a - b).sign() < 0;
    }

    std::string str() const {
        if (d_ == Int(1))
            return n_.str();
        return n_.str() + "/" + d_.str();
    }

    static Rat from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rat(Int::from_string(s), Int(1));
        return Rat(Int::from_string(s.substr(0, slash)),
                   Int::from_string(s.substr(slash + 1)));
    }
};

/// Prime field with a process-wide modulus (one field per run). The default
/// modulus is the Mersenne prime 2^61 - 1; set_modulus installs a
/// user-supplied prime, which must exceed 2^31.
class Fp {
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % P);
    }

public:
    inline static std::uint64_t P = 2305843009213693951ULL; // 2^61 - 1

    std::uint64_t v = 0;

    Fp() = default;
    Fp(long long x) {
        long long m = x % static_cast<long long>(P);
        if (m < 0)
            m += static_cast<long long>(P);
        v = static_cast<std::uint64_t>(m);
    }
    Fp(int x) : Fp(static_cast<long long>(x)) {}

    static bool probably_prime(std::uint64_t n);

    static void set_modulus(std::uint64_t p) {
        if (p <= (1ULL << 31))
            throw ConfigError("prime field modulus must exceed 2^31");
        if (p >= (1ULL << 62))
            throw ConfigError("prime field modulus must be below 2^62");
        if (!probably_prime(p))
            throw ConfigError("prime field modulus is not prime: " +
                              std::to_string(p));
        P = p;
    }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }
    bool is_integer() const { return true; }
    int sign() const { return v == 0 ? 0 : 1; }

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t r = a.v + b.v;
        if (r >= P)
            r -= P;
        Fp out;
        out.v = r;
        return out;
    }
    friend Fp operator-(Fp a, Fp b) {
        Fp out;
        out.v = a.v >= b.v ? a.v - b.v : a.v + P - b.v;
        return out;
    }
    friend Fp operator-(Fp a) {
        Fp out;
        out.v = a.v == 0 ? 0 : P - a.v;
        return out;
    }
    friend Fp operator*(Fp a, Fp b) {
        Fp out;
        out.v = mulmod(a.v, b.v);
        return out;
    }

    Fp inv() const {
        if (v == 0)
            throw Error("division by zero in prime field");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(P),
                     nr = static_cast<std::int64_t>(v);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0)
            t += static_cast<std::int64_t>(P);
        Fp out;
        out.v = static_cast<std::uint64_t>(t);
        return out;
    }

    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

    std::string str() const { return std::to_string(v); }

    static Fp from_string(std::string_view s) {
        Fp out;
        out.v = 0;
        bool neg = false;
        size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            neg = s[0] == '-';
            i = 1;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw Error("bad field literal: " + std::string(s));
            out.v = (static_cast<unsigned __int128>(out.v) * 10 + (s[i] - '0')) % P;
        }
        return neg ? -out : out;
    }

    static Fp pow(Fp a, std::uint64_t e) {
        Fp r(1);
        while (e) {
            if (e & 1)
                r *= a;
            a *= a;
            e >>= 1;
        }
        return r;
    }
};

inline bool Fp::probably_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mul = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    };
    // deterministic Miller-Rabin bases for 64-bit inputs
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

} // namespace gpa
