#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gsp4/errors.hpp"
#include "gsp4/pairing.hpp"

using namespace gsp4;

namespace {

Rat falling(long top, long count) {
    Rat r(1);
    for (long t = 0; t < count; ++t) r = r * Rat(top - t);
    return r;
}

// product of the three falling factorials, each written out as a loop
Rat naive_A(int k, int kp, int i, int j) {
    const int n = k + kp;
    return falling(n + 4 - i, j) * falling(i + j, 2 * j) * falling(n - i + j, j);
}

}  // namespace

TEST_CASE("pairing constants against falling factorials") {
    for (auto [k, kp] : {std::pair{7, 4}, std::pair{5, 2}, std::pair{9, 6}}) {
        const PairingConstants pc(k, kp);
        for (int i = 0; i <= k + kp; ++i) {
            for (int j = 0; j <= std::min(3, i); ++j) CHECK(pc.A(i, j) == naive_A(k, kp, i, j));
            CHECK(pc.B(i) == Rat((i + 1) * (k + kp + 4 - i)));
            CHECK(pc.C(i) == Rat(i * (k + kp - i + 1)));
        }
        CHECK_THROWS_AS(pc.A(1, 2), InputError);
        CHECK_FALSE(pc.A_if_defined(0, 1).has_value());
        CHECK(pc.A(0, 0) == Rat(1));
    }
}

TEST_CASE("the basis pairing is perfect between dual indices") {
    for (int p : {1, 2, 4})
        for (int q : {0, 3})
            for (int r = 0; r <= p; ++r)
                for (int s = 0; s <= q; ++s)
                    for (int rp = 0; rp <= p; ++rp)
                        for (int sp = 0; sp <= q; ++sp) {
                            const auto v = a_pairing(p, q, r, s, rp, sp);
                            if (rp == p - r && sp == q - s) CHECK_FALSE(v.is_zero());
                            else CHECK(v.is_zero());
                        }
}

TEST_CASE("projection coefficients are independent of the basis order") {
    const auto base = projection_coeffs();
    CHECK(base.alpha == Rat(1, 4));
    // recomputed value; the quoted constant is 3/80
    CHECK(base.beta3 == Rat(1, 24));
    for (const auto& order : {std::vector<int>{8, 7, 6, 5, 4, 3, 2, 1, 0}, std::vector<int>{3, 0, 7, 1, 8, 2, 6, 4, 5}}) {
        const auto c = projection_coeffs(order);
        CHECK(c.alpha == base.alpha);
        CHECK(c.beta3 == base.beta3);
        CHECK(c.beta == base.beta);
        CHECK(c.gamma == base.gamma);
    }
}

TEST_CASE("assembled terms carry the transcribed Xi indices") {
    const int p = 6, q = 3, k = 7, kp = 4;
    REQUIRE_FALSE(main_hypothesis_violation(p, q, k, kp).has_value());
    const auto e = assemble(p, q, k, kp);
    REQUIRE(e.terms.size() == 4);
    auto expect = [&](int term, const Summand& s) -> XiToken {
        const int j = s.j;
        switch (term) {
            case 1: return {false, k - q - 2 * j + 4, -k + kp + q, -q - 2};
            case 2: return {false, kp + p + 3, -p - 2, -k + kp + p};
            case 3: return {true, k - p - 2 * j + 4, p + 2, -k + kp + p};
            default: return {true, k - p + 3, -k + kp - q, q + 2};
        }
    };
    for (std::size_t t = 0; t < 4; ++t) {
        CHECK(e.terms[t].constant == static_cast<int>(t) + 1);
        REQUIRE_FALSE(e.terms[t].summands.empty());
        for (const auto& s : e.terms[t].summands) {
            const auto want = expect(static_cast<int>(t) + 1, s);
            CHECK(s.xi.conjugate == want.conjugate);
            CHECK(s.xi.n == want.n);
            CHECK(s.xi.r == want.r);
            CHECK(s.xi.s == want.s);
        }
    }
}

TEST_CASE("only the second term survives the weight argument") {
    for (auto [k, kp] : {std::pair{5, 4}, std::pair{7, 4}, std::pair{9, 6}, std::pair{11, 4}}) {
        const auto rep = survival(k, kp);
        CHECK(rep.surviving_terms == std::vector<int>{2});
        for (const auto& v : rep.verdicts) {
            CHECK(v.vanishes == (v.first != 0 || v.second != 0));
            if (v.term == 1) CHECK(v.first == -2 * v.j + 3);
        }
        const CycScalar two_i = CycScalar(2) * CycScalar::i();
        CHECK(rep.survivor_pairing == CycScalar(rep.p % 2 ? -1 : 1) * two_i.pow(-rep.p - rep.q));
    }
    CHECK(theorem_hypothesis_violation(8, 4).has_value());
    CHECK(theorem_hypothesis_violation(7, 2, true).has_value());
    CHECK_FALSE(theorem_hypothesis_violation(7, 2).has_value());
}
