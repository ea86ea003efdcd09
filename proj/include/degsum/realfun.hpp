// Validated brackets for the handful of transcendental quantities the
// verifier needs: pi, ln 2, exp, ln, and rational powers built from them.
// Each routine returns a DyInterval guaranteed to contain the true value;
// series tails are bounded explicitly and added as padding.

#pragma once

#include <degsum/dyadic.hpp>

namespace degsum {

namespace detail {

// atan(1/x) for integer x >= 2 (alternating series, tail <= next term)
inline DyInterval atan_inv(std::uint64_t x, std::size_t prec) {
    const std::size_t p = prec + 16;
    DyInterval sum{Dyadic::zero()};
    Nat xpow(x);
    const Nat x2 = Nat(x) * Nat(x);
    for (std::uint64_t k = 0;; ++k) {
        DyInterval term = DyInterval::from_rat(Rat(Int(1), Nat(2 * k + 1) * xpow), p);
        sum = (k % 2 == 0) ? sum.add(term, p) : sum.sub(term, p);
        xpow = xpow * x2;
        std::size_t bits = xpow.bit_length();
        if (bits > p + 4) {
            // next term < 1/xpow <= 2^{-(bits-1)}
            return sum.pad(Dyadic::pow2(-static_cast<long long>(bits - 1)), p);
        }
    }
}

// atanh(t) for an interval 0 <= t <= 1/3
inline DyInterval atanh_small(const DyInterval& t, std::size_t prec) {
    const std::size_t p = prec + 16;
    if (t.lo().sign() < 0 || cmp(t.hi(), Rat(1, 2)) >= 0)
        throw std::domain_error("atanh_small: argument out of range");
    DyInterval t2 = t.mul(t, p);
    DyInterval tp = t;  // t^{2k+1}
    DyInterval sum{Dyadic::zero()};
    for (std::uint64_t k = 0;; ++k) {
        sum = sum.add(tp.div(DyInterval::exact_int(static_cast<std::int64_t>(2 * k + 1)), p), p);
        tp = tp.mul(t2, p);
        Dyadic mag = tp.hi();
        if (mag.is_zero() || mag.mag_exp() < -static_cast<long long>(p + 4)) {
            // tail <= t^{2k+3} / (1 - t^2) <= 2 * bound on t^{2k+3}
            Dyadic bound = mag.is_zero() ? Dyadic::zero() : Dyadic::pow2(mag.mag_exp() + 1);
            return sum.pad(bound, p);
        }
    }
}

} // namespace detail

inline DyInterval pi_iv(std::size_t prec) {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    const std::size_t p = prec + 8;
    DyInterval a = detail::atan_inv(5, p).scale2(4);
    DyInterval b = detail::atan_inv(239, p).scale2(2);
    return a.sub(b, prec);
}

inline DyInterval ln2_iv(std::size_t prec) {
    // ln 2 = 2 atanh(1/3)
    const std::size_t p = prec + 8;
    DyInterval third = DyInterval::from_rat(Rat(1, 3), p);
    return detail::atanh_small(third, p).scale2(1);
}

inline DyInterval exp_iv(const DyInterval& x, std::size_t prec) {
    const std::size_t p = prec + 24;
    // scale so |y| <= 1/2, exp(x) = exp(y)^(2^k)
    long long me = -2;
    if (!x.lo().is_zero()) me = std::max(me, x.lo().mag_exp());
    if (!x.hi().is_zero()) me = std::max(me, x.hi().mag_exp());
    long long k = std::max(0LL, me + 1);
    DyInterval y = x.scale2(-k);

    DyInterval sum{Dyadic::one()};
    DyInterval term{Dyadic::one()};
    for (std::int64_t i = 1;; ++i) {
        term = term.mul(y, p).div(DyInterval::exact_int(i), p);
        sum = sum.add(term, p);
        Dyadic mag = std::max(term.hi(), -term.lo());
        if (mag.is_zero() || mag.mag_exp() < -static_cast<long long>(p + 4)) {
            // remaining terms are dominated by mag * (1/2)^j summed: pad 2*mag
            if (!mag.is_zero()) sum = sum.pad(Dyadic(mag.mantissa(), mag.exponent() + 1), p);
            break;
        }
    }
    for (long long j = 0; j < k; ++j) sum = sum.mul(sum, p);
    return DyInterval(sum.lo().rounded(prec, Round::down), sum.hi().rounded(prec, Round::up));
}

// ln of a single positive dyadic, as a tight interval
inline DyInterval ln_point(const Dyadic& d, std::size_t prec) {
    if (d.sign() <= 0) throw std::domain_error("ln_point: nonpositive argument");
    const std::size_t p = prec + 16;
    long long j = d.mag_exp();  // d in [2^{j-1}, 2^j)
    Dyadic u(d.mantissa(), d.exponent() - (j - 1));  // u in [1, 2)
    // t = (u-1)/(u+1) in [0, 1/3]
    DyInterval num{u - Dyadic::one()};
    DyInterval den{u + Dyadic::one()};
    DyInterval t = num.div(den, p);
    DyInterval lnu = detail::atanh_small(t, p).scale2(1);
    DyInterval res = ln2_iv(p).mul(DyInterval::exact_int(j - 1), p).add(lnu, p);
    return DyInterval(res.lo().rounded(prec, Round::down), res.hi().rounded(prec, Round::up));
}

inline DyInterval ln_iv(const DyInterval& x, std::size_t prec) {
    // monotone, so hull of the endpoint evaluations
    return DyInterval(ln_point(x.lo(), prec).lo(), ln_point(x.hi(), prec).hi());
}

// x^y = exp(y ln x) for a positive base
inline DyInterval pow_iv(const DyInterval& x, const DyInterval& y, std::size_t prec) {
    const std::size_t p = prec + 8;
    return exp_iv(ln_iv(x, p).mul(y, p), prec);
}

} // namespace degsum
