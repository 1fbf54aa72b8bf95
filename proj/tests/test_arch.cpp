#include <doctest.h>

#include <random>

#include "gsp4/arch.hpp"
#include "gsp4/errors.hpp"

using namespace gsp4;
using num::Real;

namespace {

bool close(const Real& a, const Real& b, double tol) {
    const Real scale = std::max(Real(1), boost::multiprecision::abs(b));
    return boost::multiprecision::abs(a - b) <= Real(tol) * scale;
}

}  // namespace

TEST_CASE("Gamma at integers and half-integers") {
    Real fact(1);
    for (int n = 1; n <= 30; ++n) {
        CHECK(close(num::gamma(Real(n)), fact, 1e-30));
        fact *= n;
    }
    Real half = boost::multiprecision::sqrt(num::pi());  // Gamma(1/2)
    for (int n = 0; n <= 29; ++n) {
        CHECK(close(num::gamma(Rat(2 * n + 1, 2)), half, 1e-30));
        half *= Real(2 * n + 1) / 2;
    }
    CHECK(num::rgamma(Real(-3)) == 0);
}

TEST_CASE("log Gamma off the real axis") {
    // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
    for (int y : {1, 3, 7}) {
        const auto lg = num::log_gamma(num::Complex(Real(1) / 2, Real(y)));
        const Real mod2 = boost::multiprecision::exp(2 * lg.re);
        CHECK(close(mod2, num::pi() / boost::multiprecision::cosh(num::pi() * y), 1e-30));
    }
}

TEST_CASE("Meijer parameters for a sample weight") {
    const auto mp = meijer_params(10, -5, 13, 6, 3);
    CHECK(mp.a1 == Rat(43, 4));
    CHECK(mp.c1 == Rat(9, 4));
    for (auto [k, kp] : theorem_pairs(16)) {
        const auto sd = survivor_data(k, kp);
        CHECK(sd.mp.c2 - sd.mp.c4 == Rat(1, 2));
    }
}

TEST_CASE("archimedean vanishing is the weight condition") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int n = 0; n < 200; ++n) {
        const int t = d(gen), l1 = d(gen), l2 = d(gen), r = d(gen), s = d(gen);
        CHECK(arch_vanishing(t, l1, l2, r, s) == (t + l2 + r != 0 || -t + l1 + s != 0));
    }
}

TEST_CASE("contour and residue evaluations agree at random parameters") {
    std::mt19937_64 gen(2024);
    std::uniform_int_distribution<int> ci(0, 12), ai(4, 20), zi(1, 60);
    int checked = 0;
    for (int n = 0; n < 12; ++n) {
        MeijerParams mp;
        mp.c1 = Rat(4 * ci(gen), 4);
        mp.c2 = Rat(4 * ci(gen) + 1, 4);
        mp.c3 = Rat(4 * ci(gen) + 2, 4);
        mp.c4 = Rat(4 * ci(gen) + 3, 4);
        mp.a1 = Rat(ai(gen), 2);
        mp.a2 = Rat(ai(gen), 3);
        REQUIRE_FALSE(has_pole_collision(mp));
        const Real z(zi(gen));
        const auto g = meijer_g(z, mp);
        const Real r = meijer_g_residues(z, mp);
        const Real scale = std::max(boost::multiprecision::abs(r), Real("1e-40"));
        CHECK(boost::multiprecision::abs(g.value - r) / scale < Real("1e-10"));
        ++checked;
    }
    CHECK(checked == 12);
}

TEST_CASE("the Mellin integrand is real on the real axis") {
    const auto mp = survivor_data(7, 4).mp;
    const num::Complex s(Real("-3.25"), Real("2.5"));
    const num::Complex sb(s.re, -s.im);
    const auto f = meijer_integrand(s, Real(5), mp);
    const auto g = meijer_integrand(sb, Real(5), mp);
    CHECK(close(f.re, g.re, 1e-35));
    CHECK(close(f.im, -g.im, 1e-35));
}

TEST_CASE("Mellin transform matches the closed form") {
    const auto sd = survivor_data(5, 4);
    const auto m = mellin_verify(sd.mp, sd.p, sd.q);
    CHECK(m.pass);
    CHECK(m.sigma == Rat(3 * (sd.p + sd.q) + 6, 4));
    CHECK(m.rel_error < Real("1e-20"));
    CHECK_FALSE(m.literal_pass);
}

TEST_CASE("powers of pi in Gamma values") {
    CHECK(pi_power_class(Rat(3)).pi_exponent == Rat(0));
    CHECK(pi_power_class(Rat(5, 2)).pi_exponent == Rat(1, 2));
    CHECK_THROWS_AS(pi_power_class(Rat(-1)), InputError);
    CHECK_THROWS_AS(pi_power_class(Rat(1, 3)), InputError);
}

TEST_CASE("archimedean Tate integrals") {
    const auto t = tate_arch_verify(6, 3, -8, 3);
    CHECK(close(t.gaussian_mass, Real(1), 1e-30));
    CHECK(t.pass_derived);
    CHECK_FALSE(t.pass_quoted);
    CHECK(std::abs(num::to_double(t.derived) - 0.014683687971873254) < 1e-15);
    const auto flip = tate_arch_verify(6, 3, -8, 5);
    CHECK(flip.pass_derived);
    CHECK(flip.derived < 0);
}

TEST_CASE("pi-power trace of the surviving term") {
    const auto tr = theorem_trace(7, 4);
    CHECK(tr.surviving_terms == 1);
    CHECK(tr.sigma == Rat(3 * (6 + 3) + 6, 4));
    CHECK(tr.period_exponent == Rat(-2));
    CHECK(tr.net == Rat(-3, 2));
    CHECK_FALSE(tr.pattern_matches);
    CHECK_THROWS_AS(theorem_trace(7, 2), InputError);
}
