// Group family catalog: the parameter shapes of every family the sweeps
// touch, with per-family validation of (n, q).

#pragma once

#include <degsum/numtheory.hpp>
#include <degsum/quadratic.hpp>

#include <string>

namespace degsum {

enum class Family {
    Sym, Alt,
    LinearGL, LinearPGL, LinearPSL,
    UnitaryGU, UnitaryPGU, UnitaryPSU,
    OrthOddGO, OrthOddOmega,
    SympSp, SympPSp,
    OrthEvenAdjPlus, OrthEvenAdjMinus,
    OrthEvenSimplePlus, OrthEvenSimpleMinus,
    Suzuki2B2, Triality3D4, G2, Ree2G2, F4, Ree2F4,
    E6, Twisted2E6, E7, E8,
    Sporadic,
};

inline bool family_is_lie(Family f) { return f != Family::Sym && f != Family::Alt && f != Family::Sporadic; }

inline bool family_is_exceptional(Family f) {
    switch (f) {
        case Family::Suzuki2B2: case Family::Triality3D4: case Family::G2:
        case Family::Ree2G2: case Family::F4: case Family::Ree2F4:
        case Family::E6: case Family::Twisted2E6: case Family::E7: case Family::E8:
            return true;
        default: return false;
    }
}

// q = q0^2 for the very twisted families
inline bool family_has_irrational_q0(Family f) {
    return f == Family::Suzuki2B2 || f == Family::Ree2G2 || f == Family::Ree2F4;
}

struct GroupSpec {
    Family family;
    std::uint64_t n_or_rank = 0;  // n for Sym/Alt/GL/GU, m for odd orthogonal, r for Sp and D
    std::uint64_t q = 0;          // prime power field parameter; 0 where not applicable
    std::string sporadic_name;

    std::string label() const;
};

namespace detail {
inline void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("GroupSpec: ") + msg);
}
} // namespace detail

// throws on a parameter combination outside the family's domain
inline void validate(const GroupSpec& s) {
    using detail::require;
    auto pp = as_prime_power(s.q);
    switch (s.family) {
        case Family::Sym:
        case Family::Alt:
            require(s.n_or_rank >= 1, "Sym/Alt need n >= 1");
            return;
        case Family::LinearGL:
        case Family::LinearPGL:
        case Family::LinearPSL:
            require(s.n_or_rank >= 2, "linear groups need n >= 2");
            require(pp.has_value(), "q must be a prime power");
            return;
        case Family::UnitaryGU:
        case Family::UnitaryPGU:
        case Family::UnitaryPSU:
            require(s.n_or_rank >= 2, "unitary groups need n >= 2");
            require(pp.has_value(), "q must be a prime power");
            return;
        case Family::OrthOddGO:
        case Family::OrthOddOmega:
            require(s.n_or_rank >= 1, "odd orthogonal groups need m >= 1");
            require(pp.has_value() && pp->p != 2, "odd orthogonal groups need odd q");
            return;
        case Family::SympSp:
        case Family::SympPSp:
            require(s.n_or_rank >= 2, "symplectic groups need r >= 2");
            require(pp.has_value(), "q must be a prime power");
            return;
        case Family::OrthEvenAdjPlus:
        case Family::OrthEvenAdjMinus:
        case Family::OrthEvenSimplePlus:
        case Family::OrthEvenSimpleMinus:
            require(s.n_or_rank >= 4, "even orthogonal groups need r >= 4");
            require(pp.has_value(), "q must be a prime power");
            return;
        case Family::Suzuki2B2:
            require(pp.has_value() && pp->p == 2 && pp->e >= 3 && pp->e % 2 == 1,
                    "2B2 needs q = 2^{2m+1}, m >= 1");
            return;
        case Family::Ree2G2:
            require(pp.has_value() && pp->p == 3 && pp->e % 2 == 1, "2G2 needs q = 3^{2m+1}");
            return;
        case Family::Ree2F4:
            require(pp.has_value() && pp->p == 2 && pp->e % 2 == 1, "2F4 needs q = 2^{2m+1}");
            return;
        case Family::Triality3D4:
        case Family::G2:
        case Family::F4:
        case Family::E6:
        case Family::Twisted2E6:
        case Family::E7:
        case Family::E8:
            require(pp.has_value(), "q must be a prime power");
            return;
        case Family::Sporadic:
            require(!s.sporadic_name.empty(), "sporadic groups need a name");
            return;
    }
    throw std::logic_error("GroupSpec: unknown family");
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Sym: return "Sym";
        case Family::Alt: return "Alt";
        case Family::LinearGL: return "GL";
        case Family::LinearPGL: return "PGL";
        case Family::LinearPSL: return "PSL";
        case Family::UnitaryGU: return "GU";
        case Family::UnitaryPGU: return "PGU";
        case Family::UnitaryPSU: return "PSU";
        case Family::OrthOddGO: return "GO_odd";
        case Family::OrthOddOmega: return "Omega_odd";
        case Family::SympSp: return "Sp";
        case Family::SympPSp: return "PSp";
        case Family::OrthEvenAdjPlus: return "O+_adj";
        case Family::OrthEvenAdjMinus: return "O-_adj";
        case Family::OrthEvenSimplePlus: return "POmega+";
        case Family::OrthEvenSimpleMinus: return "POmega-";
        case Family::Suzuki2B2: return "2B2";
        case Family::Triality3D4: return "3D4";
        case Family::G2: return "G2";
        case Family::Ree2G2: return "2G2";
        case Family::F4: return "F4";
        case Family::Ree2F4: return "2F4";
        case Family::E6: return "E6";
        case Family::Twisted2E6: return "2E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::Sporadic: return "Sporadic";
    }
    return "?";
}

inline std::string GroupSpec::label() const {
    std::string s = family_name(family);
    if (family == Family::Sporadic) return s + ":" + sporadic_name;
    s += "(";
    switch (family) {
        case Family::Sym: case Family::Alt:
            return s + std::to_string(n_or_rank) + ")";
        case Family::LinearGL: case Family::LinearPGL: case Family::LinearPSL:
        case Family::UnitaryGU: case Family::UnitaryPGU: case Family::UnitaryPSU:
            s += std::to_string(n_or_rank) + ",";
            break;
        // matrix dimension, not rank, is the conventional name
        case Family::OrthOddGO: case Family::OrthOddOmega:
            s += std::to_string(2 * n_or_rank + 1) + ",";
            break;
        case Family::SympSp: case Family::SympPSp:
        case Family::OrthEvenAdjPlus: case Family::OrthEvenAdjMinus:
        case Family::OrthEvenSimplePlus: case Family::OrthEvenSimpleMinus:
            s += std::to_string(2 * n_or_rank) + ",";
            break;
        default: break;
    }
    return s + std::to_string(q) + ")";
}

} // namespace degsum
