#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gsp4/exact.hpp"

namespace gsp4 {

// Variables b0, b1, b2 and the series variable T (standing for p^{-(s+2)}).
const std::vector<std::string>& satake_vars();

struct SatakeSymbols {
    LaurentPoly b(int j) const;      // j = 0, 1, 2
    LaurentPoly alpha(int i) const;  // i = 1..4: b0b1b2, b0b1, b0, b0b2
    LaurentPoly T() const;
    // alpha1 alpha3 = alpha2 alpha4; the common value is the central character beta1 beta2.
    LaurentPoly central() const { return alpha(1) * alpha(3); }
};

struct SatakeWeylElement {
    std::string word;                        // shortest word in s1, s2 ("e" for identity)
    int length = 0;
    std::array<std::array<int, 3>, 3> mat{};  // column j = exponent image of b_j
    int sign() const { return length % 2 == 0 ? 1 : -1; }
};

// The eight elements, in breadth-first order from the identity.
const std::vector<SatakeWeylElement>& satake_weyl_group();
SatakeWeylElement satake_compose(const SatakeWeylElement& x, const SatakeWeylElement& y);  // x after y
// Index in satake_weyl_group() of the element with this matrix; -1 if absent.
int satake_find(const std::array<std::array<int, 3>, 3>& mat);
LaurentPoly satake_act(const SatakeWeylElement& w, const LaurentPoly& f);

// sum_w (-1)^{l(w)} w.f
LaurentPoly antisymmetrize(const LaurentPoly& f);

// Denominator prod (1 - alpha_i T) and the factor itself.
LaurentPoly spin_denominator();
RationalFn spin_lfactor();

// c_m = A(alpha3^{m+2} alpha4^{-1}) / A(alpha3^2 alpha4^{-1}); the Bessel value at the m-th
// torus element is p^{-3m/2} c_m.
RationalFn bessel_value(int m);
// The p-power carried with c_m, as an exponent of p: -3m/2.
Rat bessel_p_exponent(int m);

struct VanishingCheck {
    std::string name;
    bool zero = false;
};

struct UnramifiedReport {
    int order = 0;
    bool numeric = false;
    std::uint64_t seed = 0;
    int samples = 0;
    int rejected = 0;
    bool series_ok = false;
    int first_mismatch = -1;  // first differing coefficient, if any
    bool intermediate_ok = false;
    std::vector<VanishingCheck> vanishings;
    bool pass() const;
};

UnramifiedReport verify_unramified(int order);
// Exact rational instantiations of (b0, b1, b2) drawn from a seeded generator.
UnramifiedReport verify_unramified_numeric(int order, std::uint64_t seed, int samples = 20);

struct TateUnramified {
    int exponent = 0;          // the local factor is 1/(1 - nu(p) p^{-exponent})
    RationalFn factor;         // in nu, u = p^{-1}, T (valuation marker, T = 1 formally)
    int depth = 0;
    bool geometric_ok = false;  // valuation sum to depth equals the factor mod T^{depth+1}
    CycScalar at_nu_zero;       // factor at nu = 0
    std::string str() const;
};

TateUnramified tate_unramified(int exponent, int depth = 30);

}  // namespace gsp4
