// Dyadic numbers m * 2^e and directed-rounding interval arithmetic.
//
// Every operation that cannot be exact takes an explicit rounding direction
// and a working precision in bits; Interval ops round outward, so any real
// computed through them is guaranteed to lie inside the result. Claims that
// involve transcendental quantities (p*, the z constant, |W|^{1/sqrt r})
// only pass when the interval comparison is conclusive.

#pragma once

#include <degsum/rational.hpp>

namespace degsum {

enum class Round { down, up };

class Dyadic {
public:
    Dyadic() : m_(0), e_(0) {}
    Dyadic(Int m, long long e = 0) : m_(std::move(m)), e_(e) { normalize(); }
    Dyadic(std::int64_t m) : m_(m), e_(0) { normalize(); }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(Int(1)); }
    static Dyadic pow2(long long e) { return Dyadic(Int(1), e); }

    const Int& mantissa() const { return m_; }
    long long exponent() const { return e_; }
    bool is_zero() const { return m_.is_zero(); }
    int sign() const { return m_.sign(); }

    // exponent of the leading bit: value in [2^(k-1), 2^k) for k = mag_exp()
    long long mag_exp() const {
        return static_cast<long long>(m_.magnitude().bit_length()) + e_;
    }

    Rat to_rat() const {
        if (e_ >= 0) return Rat(m_ * Int(Nat(1) << static_cast<std::size_t>(e_)));
        return Rat(m_, Nat(1) << static_cast<std::size_t>(-e_));
    }

    Dyadic operator-() const { return Dyadic(-m_, e_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long long e = std::min(a.e_, b.e_);
        Int ma = a.shifted_mantissa(e), mb = b.shifted_mantissa(e);
        return Dyadic(ma + mb, e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.m_ * b.m_, a.e_ + b.e_);
    }

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        if (a.sign() != b.sign()) return a.sign() <=> b.sign();
        long long e = std::min(a.e_, b.e_);
        return a.shifted_mantissa(e) <=> b.shifted_mantissa(e);
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    // Keep at most prec mantissa bits, rounding toward the given direction.
    Dyadic rounded(std::size_t prec, Round dir) const {
        std::size_t bits = m_.magnitude().bit_length();
        if (bits <= prec) return *this;
        std::size_t s = bits - prec;
        Nat q = m_.magnitude() >> s;
        bool exact = (q << s) == m_.magnitude();
        bool neg = m_.negative();
        // floor for round-down on positives / round-up on negatives, else bump
        bool bump = !exact && ((dir == Round::up) != neg);
        if (bump) q = q + Nat(1);
        return Dyadic(Int(std::move(q), neg), e_ + static_cast<long long>(s));
    }

    friend Dyadic add_dir(const Dyadic& a, const Dyadic& b, std::size_t prec, Round dir) {
        return (a + b).rounded(prec, dir);
    }
    friend Dyadic mul_dir(const Dyadic& a, const Dyadic& b, std::size_t prec, Round dir) {
        return (a * b).rounded(prec, dir);
    }

    friend Dyadic div_dir(const Dyadic& a, const Dyadic& b, std::size_t prec, Round dir) {
        if (b.is_zero()) throw std::domain_error("Dyadic: division by zero");
        if (a.is_zero()) return Dyadic();
        std::size_t abits = a.m_.magnitude().bit_length();
        std::size_t bbits = b.m_.magnitude().bit_length();
        std::size_t s = prec + 2 + bbits;
        s = (s > abits) ? s - abits : 0;
        auto [q, r] = divmod(a.m_.magnitude() << s, b.m_.magnitude());
        bool neg = a.m_.negative() != b.m_.negative();
        bool bump = !r.is_zero() && ((dir == Round::up) != neg);
        if (bump) q = q + Nat(1);
        return Dyadic(Int(std::move(q), neg),
                      a.e_ - b.e_ - static_cast<long long>(s))
            .rounded(prec, dir);
    }

    // Floor/ceiling of sqrt at the requested precision; input must be >= 0.
    friend Dyadic sqrt_dir(const Dyadic& a, std::size_t prec, Round dir) {
        if (a.sign() < 0) throw std::domain_error("Dyadic: sqrt of negative");
        if (a.is_zero()) return Dyadic();
        std::size_t abits = a.m_.magnitude().bit_length();
        std::size_t s = 2 * (prec + 2);
        s = (s > abits) ? s - abits : 0;
        if ((static_cast<long long>(s) - a.e_) & 1) ++s;  // make e - s even
        Nat scaled = a.m_.magnitude() << s;
        Nat r = isqrt(scaled);
        bool exact = r * r == scaled;
        if (dir == Round::up && !exact) r = r + Nat(1);
        return Dyadic(Int(std::move(r)), (a.e_ - static_cast<long long>(s)) / 2)
            .rounded(prec, dir);
    }

    friend int cmp(const Dyadic& d, const Rat& r) {
        // m 2^e vs p/q  <=>  m q 2^e vs p
        Int lhs = d.m_ * Int(r.den());
        Int rhs = r.num();
        if (d.e_ >= 0)
            lhs = lhs * Int(Nat(1) << static_cast<std::size_t>(d.e_));
        else
            rhs = rhs * Int(Nat(1) << static_cast<std::size_t>(-d.e_));
        auto c = lhs <=> rhs;
        return c == std::strong_ordering::less ? -1 : c == std::strong_ordering::greater ? 1 : 0;
    }

    std::string to_string() const { return to_rat().to_string(); }

private:
    void normalize() {
        if (m_.is_zero()) { e_ = 0; return; }
        // strip trailing zero bits so equal values compare equal cheaply
        const Nat& mag = m_.magnitude();
        std::size_t z = 0;
        while (!mag.bit(z)) ++z;
        if (z) {
            m_ = Int(mag >> z, m_.negative());
            e_ += static_cast<long long>(z);
        }
    }

    Int shifted_mantissa(long long e) const {
        if (e == e_) return m_;
        return m_ * Int(Nat(1) << static_cast<std::size_t>(e_ - e));
    }

    Int m_;
    long long e_;
};

// Closed interval of dyadics; all arithmetic rounds outward.
class DyInterval {
public:
    DyInterval() = default;
    DyInterval(Dyadic point) : lo_(point), hi_(std::move(point)) {}
    DyInterval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::logic_error("DyInterval: inverted endpoints");
    }
    static DyInterval exact_int(std::int64_t v) { return DyInterval(Dyadic(v)); }
    static DyInterval from_rat(const Rat& r, std::size_t prec) {
        Dyadic n(r.num()), d(Int(r.den()));
        return DyInterval(div_dir(n, d, prec, Round::down), div_dir(n, d, prec, Round::up));
    }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    DyInterval operator-() const { return DyInterval(-hi_, -lo_); }

    DyInterval add(const DyInterval& o, std::size_t prec) const {
        return DyInterval(add_dir(lo_, o.lo_, prec, Round::down),
                          add_dir(hi_, o.hi_, prec, Round::up));
    }
    DyInterval sub(const DyInterval& o, std::size_t prec) const {
        return add(-o, prec);
    }
    DyInterval mul(const DyInterval& o, std::size_t prec) const {
        const Dyadic* xs[2] = {&lo_, &hi_};
        const Dyadic* ys[2] = {&o.lo_, &o.hi_};
        Dyadic best_lo, best_hi;
        bool first = true;
        for (auto* x : xs)
            for (auto* y : ys) {
                Dyadic p = *x * *y;
                if (first || p < best_lo) best_lo = p;
                if (first || p > best_hi) best_hi = p;
                first = false;
            }
        return DyInterval(best_lo.rounded(prec, Round::down),
                          best_hi.rounded(prec, Round::up));
    }
    // requires a sign-definite divisor
    DyInterval div(const DyInterval& o, std::size_t prec) const {
        if (o.contains_zero()) throw std::domain_error("DyInterval: divisor straddles zero");
        Dyadic c[4] = {div_dir(lo_, o.lo_, prec, Round::down), div_dir(lo_, o.hi_, prec, Round::down),
                       div_dir(hi_, o.lo_, prec, Round::down), div_dir(hi_, o.hi_, prec, Round::down)};
        Dyadic d[4] = {div_dir(lo_, o.lo_, prec, Round::up), div_dir(lo_, o.hi_, prec, Round::up),
                       div_dir(hi_, o.lo_, prec, Round::up), div_dir(hi_, o.hi_, prec, Round::up)};
        Dyadic mn = c[0], mx = d[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < mn) mn = c[i];
            if (d[i] > mx) mx = d[i];
        }
        return DyInterval(mn, mx);
    }
    DyInterval sqrt(std::size_t prec) const {
        return DyInterval(sqrt_dir(lo_, prec, Round::down), sqrt_dir(hi_, prec, Round::up));
    }
    DyInterval scale2(long long k) const {  // exact multiply by 2^k
        return DyInterval(Dyadic(lo_.mantissa(), lo_.exponent() + k),
                          Dyadic(hi_.mantissa(), hi_.exponent() + k));
    }
    DyInterval pow_u(std::uint64_t e, std::size_t prec) const {
        DyInterval r(Dyadic::one()), b = *this;
        while (e) {
            if (e & 1) r = r.mul(b, prec);
            e >>= 1;
            if (e) b = b.mul(b, prec);
        }
        return r;
    }
    // widen by +/- bound (bound >= 0)
    DyInterval pad(const Dyadic& bound, std::size_t prec) const {
        return DyInterval(add_dir(lo_, -bound, prec, Round::down),
                          add_dir(hi_, bound, prec, Round::up));
    }

    bool definitely_lt(const DyInterval& o) const { return hi_ < o.lo_; }
    bool definitely_le(const DyInterval& o) const { return hi_ <= o.lo_; }
    bool definitely_gt(const DyInterval& o) const { return lo_ > o.hi_; }

    Bracket to_bracket() const { return Bracket(lo_.to_rat(), hi_.to_rat()); }

private:
    Dyadic lo_, hi_;
};

} // namespace degsum
