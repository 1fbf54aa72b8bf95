#include <doctest.h>

#include <set>

#include "gsp4/nonarch.hpp"

using namespace gsp4;

namespace {

const SatakeSymbols S;

// complete homogeneous symmetric polynomial of degree m in the four alpha_i
LaurentPoly complete_h(int m) {
    LaurentPoly out = LaurentPoly::constant(satake_vars(), 0);
    for (int e1 = 0; e1 <= m; ++e1)
        for (int e2 = 0; e1 + e2 <= m; ++e2)
            for (int e3 = 0; e1 + e2 + e3 <= m; ++e3)
                out += S.alpha(1).pow(e1) * S.alpha(2).pow(e2) * S.alpha(3).pow(e3) * S.alpha(4).pow(m - e1 - e2 - e3);
    return out;
}

RationalFn act(const SatakeWeylElement& w, const RationalFn& f) {
    return RationalFn(satake_act(w, f.num()), satake_act(w, f.den()));
}

}  // namespace

TEST_CASE("the Weyl group has order eight and permutes the alpha_i") {
    const auto& g = satake_weyl_group();
    CHECK(g.size() == 8);
    std::set<std::array<std::array<int, 3>, 3>> mats;
    for (const auto& x : g) {
        mats.insert(x.mat);
        for (const auto& y : g) CHECK(satake_find(satake_compose(x, y).mat) >= 0);
        std::set<std::string> images;
        for (int i = 1; i <= 4; ++i) {
            const auto img = satake_act(x, S.alpha(i));
            bool found = false;
            for (int j = 1; j <= 4; ++j) found = found || img == S.alpha(j);
            CHECK(found);
            images.insert(img.str());
        }
        CHECK(images.size() == 4);
        CHECK(satake_act(x, S.central()) == S.central());
        CHECK(satake_act(x, S.alpha(1) * S.alpha(3)) == satake_act(x, S.alpha(2) * S.alpha(4)));
    }
    CHECK(mats.size() == 8);
}

TEST_CASE("the antisymmetrizer is alternating") {
    const auto f = S.b(0).pow(3) * S.b(1) + S.b(2) * S.b(1).pow(2);
    const auto af = antisymmetrize(f);
    for (const auto& w : satake_weyl_group()) {
        auto want = antisymmetrize(satake_act(w, f));
        if (w.sign() < 0) want = -want;
        CHECK(want == af);
    }
    CHECK(antisymmetrize(LaurentPoly::constant(satake_vars(), 1)).is_zero());
}

TEST_CASE("the spin L-factor is Weyl invariant") {
    const auto l = spin_lfactor();
    for (const auto& w : satake_weyl_group()) CHECK(rf_equal(act(w, l), l));
}

TEST_CASE("Bessel values are spin characters") {
    CHECK(rf_equal(bessel_value(0), RationalFn(LaurentPoly::constant(satake_vars(), 1))));
    for (int m = 0; m <= 3; ++m) {
        const auto c = bessel_value(m);
        CHECK(rf_equal(c, RationalFn(complete_h(m))));
        for (const auto& w : satake_weyl_group()) CHECK(rf_equal(act(w, c), c));
        CHECK(bessel_p_exponent(m) == Rat(-3 * m, 2));
    }
}

TEST_CASE("unramified identity, symbolic and at seeded rational points") {
    const auto sym = verify_unramified(12);
    CHECK(sym.series_ok);
    CHECK(sym.intermediate_ok);
    CHECK(sym.vanishings.size() == 6);
    for (const auto& v : sym.vanishings) CHECK(v.zero);
    CHECK(sym.pass());

    const auto a = verify_unramified_numeric(10, 7, 4);
    const auto b = verify_unramified_numeric(10, 7, 4);
    CHECK(a.pass());
    CHECK(a.rejected == b.rejected);
    CHECK(a.seed == 7);
}

TEST_CASE("unramified Tate factor") {
    const auto t = tate_unramified(2, 12);
    CHECK(t.geometric_ok);
    CHECK(t.at_nu_zero == CycScalar(1));
}
