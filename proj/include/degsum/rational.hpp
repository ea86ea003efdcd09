// Exact rationals over Int/Nat. Always reduced, denominator positive.

#pragma once

#include <degsum/bigint.hpp>

namespace degsum {

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(Nat n) : num_(std::move(n)), den_(1) {}
    Rat(Int n, Nat d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rat(std::int64_t n, std::uint64_t d) : num_(n), den_(d) { reduce(); }

    const Int& num() const { return num_; }
    const Nat& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    // Value as Nat; requires a nonnegative integer.
    Nat to_nat() const {
        if (num_.negative() || !den_.is_one())
            throw std::logic_error("Rat: not a nonnegative integer");
        return num_.magnitude();
    }

    Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * Int(b.den_) + b.num_ * Int(a.den_), a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        Int n = a.num_ * Int(b.den_);
        Int d = b.num_ * Int(a.den_);
        if (d.negative()) { n = -n; d = -d; }
        return Rat(std::move(n), d.magnitude());
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return a.num_ * Int(b.den_) <=> b.num_ * Int(a.den_);
    }

    Rat reciprocal() const {
        if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
        Int n(den_, num_.negative());
        return Rat(std::move(n), num_.magnitude(), raw_tag{});
    }

    friend Rat pow(const Rat& base, std::uint64_t e) {
        return Rat(Int(pow(base.num_.magnitude(), e), base.num_.negative() && (e & 1)),
                   pow(base.den_, e), raw_tag{});
    }

    friend Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

    // Canonical form: "p/q", or just "p" when integral.
    std::string to_string() const {
        std::string s = num_.to_decimal();
        if (!den_.is_one()) s += "/" + den_.to_decimal();
        return s;
    }

private:
    struct raw_tag {};
    Rat(Int n, Nat d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
        if (num_.is_zero()) { den_ = Nat(1); return; }
        Nat g = gcd(num_.magnitude(), den_);
        if (!g.is_one()) {
            num_ = Int(div_exact(num_.magnitude(), g), num_.negative());
            den_ = div_exact(den_, g);
        }
    }

    Int num_;
    Nat den_;
};

// Exact rational interval [lower, upper]; the bracketed real lies inside.
struct Bracket {
    Rat lower, upper;

    Bracket(Rat lo, Rat hi) : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower > upper) throw std::logic_error("Bracket: inverted endpoints");
    }
    Rat width() const { return upper - lower; }
    bool contains(const Rat& x) const { return lower <= x && x <= upper; }
    bool contains(const Bracket& other) const {
        return lower <= other.lower && other.upper <= upper;
    }
};

} // namespace degsum
