// Arbitrary-precision natural and signed integers.
//
// Nat is an unsigned magnitude stored as little-endian 32-bit limbs; Int
// wraps a Nat with a sign. Everything downstream (rationals, dyadic
// intervals, group orders) sits on these two types, so all arithmetic here
// is exact: no operation rounds, truncating division is explicit (divmod),
// and exact division (div_exact) checks its remainder.

#pragma once

#include <algorithm>
#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace degsum {

class Nat {
public:
    Nat() = default;
    Nat(std::uint64_t v) {
        if (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    static Nat from_decimal(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Nat: empty decimal string");
        Nat r;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("Nat: bad digit");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<std::uint32_t>(c - '0'));
        }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("Nat: does not fit in 64 bits");
        std::uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    // Number of significant bits; 0 for zero.
    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t b = 0;
        while (top) { ++b; top >>= 1; }
        return (limbs_.size() - 1) * 32 + b;
    }

    bool bit(std::size_t i) const {
        std::size_t l = i / 32;
        if (l >= limbs_.size()) return false;
        return (limbs_[l] >> (i % 32)) & 1u;
    }

    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Nat& a, const Nat& b) { return a.limbs_ == b.limbs_; }

    friend Nat operator+(const Nat& a, const Nat& b) {
        Nat r;
        const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
        const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
        r.limbs_.resize(x.size());
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
            r.limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // Requires a >= b.
    friend Nat operator-(const Nat& a, const Nat& b) {
        if (a < b) throw std::underflow_error("Nat: negative subtraction");
        Nat r;
        r.limbs_.resize(a.limbs_.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                             (i < b.limbs_.size() ? b.limbs_[i] : 0);
            borrow = d < 0;
            if (d < 0) d += (std::int64_t(1) << 32);
            r.limbs_[i] = static_cast<std::uint32_t>(d);
        }
        r.trim();
        return r;
    }

    friend Nat operator*(const Nat& a, const Nat& b) {
        if (a.is_zero() || b.is_zero()) return Nat();
        Nat r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t t = ai * b.limbs_[j] + r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(t);
                carry = t >> 32;
            }
            r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    // Quotient and remainder, b > 0.
    friend std::pair<Nat, Nat> divmod(const Nat& a, const Nat& b) {
        if (b.is_zero()) throw std::domain_error("Nat: division by zero");
        if (a < b) return {Nat(), a};
        if (b.limbs_.size() == 1) {
            auto [q, r] = a.divmod_small(b.limbs_[0]);
            return {std::move(q), Nat(r)};
        }
        return a.divmod_knuth(b);
    }

    friend Nat operator/(const Nat& a, const Nat& b) { return divmod(a, b).first; }
    friend Nat operator%(const Nat& a, const Nat& b) { return divmod(a, b).second; }

    // Division known to be exact; throws if a remainder shows up.
    friend Nat div_exact(const Nat& a, const Nat& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("Nat: inexact division");
        return q;
    }

    Nat operator<<(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Nat r;
        std::size_t whole = k / 32, part = k % 32;
        r.limbs_.assign(limbs_.size() + whole + 1, 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << part;
            r.limbs_[i + whole] |= static_cast<std::uint32_t>(v);
            r.limbs_[i + whole + 1] |= static_cast<std::uint32_t>(v >> 32);
        }
        r.trim();
        return r;
    }

    Nat operator>>(std::size_t k) const {
        std::size_t whole = k / 32, part = k % 32;
        if (whole >= limbs_.size()) return Nat();
        Nat r;
        r.limbs_.assign(limbs_.begin() + static_cast<std::ptrdiff_t>(whole), limbs_.end());
        if (part) {
            for (std::size_t i = 0; i + 1 < r.limbs_.size(); ++i)
                r.limbs_[i] = static_cast<std::uint32_t>(
                    (r.limbs_[i] >> part) | (static_cast<std::uint64_t>(r.limbs_[i + 1]) << (32 - part)));
            r.limbs_.back() >>= part;
        }
        r.trim();
        return r;
    }

    friend Nat gcd(Nat a, Nat b) {
        while (!b.is_zero()) {
            Nat r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    friend Nat pow(const Nat& base, std::uint64_t e) {
        Nat r(1), b = base;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    // Floor of the square root, by Newton iteration on the bit length.
    friend Nat isqrt(const Nat& n) {
        if (n.is_zero()) return Nat();
        Nat x = Nat(1) << ((n.bit_length() + 1) / 2);
        for (;;) {
            Nat y = (x + n / x) >> 1;
            if (y >= x) break;
            x = std::move(y);
        }
        return x;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        std::string out;
        Nat t = *this;
        while (!t.is_zero()) {
            auto [q, r] = t.divmod_small(1000000000u);
            t = std::move(q);
            std::string chunk = std::to_string(r);
            if (!t.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

private:
    std::vector<std::uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    void mul_small_inplace(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t t = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    void add_small_inplace(std::uint32_t a) {
        std::uint64_t carry = a;
        for (auto& l : limbs_) {
            std::uint64_t t = static_cast<std::uint64_t>(l) + carry;
            l = static_cast<std::uint32_t>(t);
            carry = t >> 32;
            if (!carry) return;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    std::pair<Nat, std::uint32_t> divmod_small(std::uint32_t d) const {
        Nat q;
        q.limbs_.resize(limbs_.size());
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        return {std::move(q), static_cast<std::uint32_t>(rem)};
    }

    // Knuth algorithm D on 32-bit limbs (divisor has >= 2 limbs, a >= b).
    std::pair<Nat, Nat> divmod_knuth(const Nat& b) const {
        std::uint32_t top = b.limbs_.back();
        std::size_t shift = 0;
        while (!(top & 0x80000000u)) { top <<= 1; ++shift; }
        Nat u = *this << shift;
        Nat v = b << shift;
        std::size_t n = v.limbs_.size(), m = u.limbs_.size() - n;
        u.limbs_.push_back(0);

        Nat q;
        q.limbs_.assign(m + 1, 0);
        const std::uint64_t base = std::uint64_t(1) << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u.limbs_[j + n]) << 32) | u.limbs_[j + n - 1];
            std::uint64_t qhat = num / v.limbs_[n - 1];
            std::uint64_t rhat = num % v.limbs_[n - 1];
            while (qhat >= base ||
                   qhat * v.limbs_[n - 2] > ((rhat << 32) | u.limbs_[j + n - 2])) {
                --qhat;
                rhat += v.limbs_[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract, tracking the borrow
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t prod = qhat * v.limbs_[i] + carry;
                carry = prod >> 32;
                std::int64_t d = static_cast<std::int64_t>(u.limbs_[i + j]) - borrow -
                                 static_cast<std::int64_t>(prod & 0xffffffffu);
                borrow = d < 0;
                if (d < 0) d += static_cast<std::int64_t>(base);
                u.limbs_[i + j] = static_cast<std::uint32_t>(d);
            }
            std::int64_t d = static_cast<std::int64_t>(u.limbs_[j + n]) - borrow -
                             static_cast<std::int64_t>(carry);
            bool neg = d < 0;
            if (neg) d += static_cast<std::int64_t>(base);
            u.limbs_[j + n] = static_cast<std::uint32_t>(d);

            if (neg) {
                // qhat was one too large; add back
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u.limbs_[i + j]) + v.limbs_[i] + c2;
                    u.limbs_[i + j] = static_cast<std::uint32_t>(s);
                    c2 = s >> 32;
                }
                u.limbs_[j + n] = static_cast<std::uint32_t>(u.limbs_[j + n] + c2);
            }
            q.limbs_[j] = static_cast<std::uint32_t>(qhat);
        }
        q.trim();
        u.trim();
        return {std::move(q), u >> shift};
    }
};

inline Nat factorial(std::uint64_t n) {
    Nat r(1);
    for (std::uint64_t i = 2; i <= n; ++i) r = r * Nat(i);
    return r;
}

// Signed arbitrary-precision integer.
class Int {
public:
    Int() = default;
    Int(std::int64_t v) : neg_(v < 0), mag_(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v)) {}
    Int(Nat n, bool negative = false) : neg_(negative && !n.is_zero()), mag_(std::move(n)) {}

    static Int from_decimal(std::string_view s) {
        bool neg = !s.empty() && s.front() == '-';
        if (neg) s.remove_prefix(1);
        return Int(Nat::from_decimal(s), neg);
    }

    const Nat& magnitude() const { return mag_; }
    bool negative() const { return neg_; }
    bool is_zero() const { return mag_.is_zero(); }
    int sign() const { return mag_.is_zero() ? 0 : (neg_ ? -1 : 1); }

    Int operator-() const { return Int(mag_, !neg_); }
    Nat abs() const { return mag_; }

    friend Int operator+(const Int& a, const Int& b) {
        if (a.neg_ == b.neg_) return Int(a.mag_ + b.mag_, a.neg_);
        if (a.mag_ >= b.mag_) return Int(a.mag_ - b.mag_, a.neg_);
        return Int(b.mag_ - a.mag_, b.neg_);
    }
    friend Int operator-(const Int& a, const Int& b) { return a + (-b); }
    friend Int operator*(const Int& a, const Int& b) {
        return Int(a.mag_ * b.mag_, a.neg_ != b.neg_);
    }

    friend bool operator==(const Int& a, const Int& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        if (a.sign() != b.sign()) return a.sign() <=> b.sign();
        auto c = a.mag_ <=> b.mag_;
        if (a.neg_) return (c == std::strong_ordering::less)      ? std::strong_ordering::greater
                         : (c == std::strong_ordering::greater)  ? std::strong_ordering::less
                                                                 : std::strong_ordering::equal;
        return c;
    }

    std::string to_decimal() const {
        return neg_ ? "-" + mag_.to_decimal() : mag_.to_decimal();
    }

private:
    bool neg_ = false;
    Nat mag_;
};

} // namespace degsum
