// Exact arithmetic in Q(sqrt(d)): values a + b*sqrt(d) with rational a, b
// and squarefree d > 1. Comparisons are decided by sign analysis and
// squaring, never by floating point. Twisted group orders (Suzuki, Ree)
// live here via q0 = sqrt(q).

#pragma once

#include <degsum/rational.hpp>

namespace degsum {

class QuadInt {
public:
    QuadInt() : a_(0), b_(0), d_(2) {}
    QuadInt(Rat a) : a_(std::move(a)), b_(0), d_(2) {}
    QuadInt(Rat a, Rat b, std::uint64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d < 2) throw std::invalid_argument("QuadInt: d must be > 1");
    }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    std::uint64_t radicand() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    QuadInt operator-() const { return QuadInt(-a_, -b_, d_); }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) {
        return QuadInt(x.a_ + y.a_, x.b_ + y.b_, x.common_d(y));
    }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return x + (-y); }
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        std::uint64_t d = x.common_d(y);
        return QuadInt(x.a_ * y.a_ + x.b_ * y.b_ * Rat(Int(Nat(d))),
                       x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    friend QuadInt pow(const QuadInt& base, std::uint64_t e) {
        QuadInt r{Rat(1), Rat(0), base.d_};
        QuadInt b = base;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
    QuadInt reciprocal() const {
        Rat norm = a_ * a_ - b_ * b_ * Rat(Int(Nat(d_)));
        if (norm.is_zero()) throw std::domain_error("QuadInt: reciprocal of zero norm");
        return QuadInt(a_ / norm, -(b_ / norm), d_);
    }

    // sign of a + b*sqrt(d), exactly
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 with b^2 d
        Rat lhs = a_ * a_;
        Rat rhs = b_ * b_ * Rat(Int(Nat(d_)));
        auto c = lhs <=> rhs;
        if (c == std::strong_ordering::equal) return 0;
        return (c == std::strong_ordering::greater) ? sa : sb;
    }

    friend bool operator<(const QuadInt& x, const QuadInt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadInt& x, const QuadInt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadInt& x, const QuadInt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadInt& x, const QuadInt& y) { return (x - y).sign() >= 0; }
    friend bool operator==(const QuadInt& x, const QuadInt& y) { return (x - y).sign() == 0; }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string s = a_.is_zero() ? "" : a_.to_string();
        if (!s.empty() && b_.sign() > 0) s += "+";
        s += b_.to_string() + "*sqrt(" + std::to_string(d_) + ")";
        return s;
    }

private:
    std::uint64_t common_d(const QuadInt& other) const {
        if (b_.is_zero()) return other.d_;
        if (other.b_.is_zero()) return d_;
        if (d_ != other.d_) throw std::logic_error("QuadInt: mixed radicands");
        return d_;
    }

    Rat a_, b_;
    std::uint64_t d_;
};

// sign of a - b*sqrt(c) for naturals, via integer squaring
inline int cmp_sqrt(const Nat& a, const Nat& b, const Nat& c) {
    Nat lhs = a * a;
    Nat rhs = b * b * c;
    auto cm = lhs <=> rhs;
    if (cm == std::strong_ordering::equal) return 0;
    return cm == std::strong_ordering::greater ? 1 : -1;
}

} // namespace degsum
