#include <doctest.h>

#include "gsp4/errors.hpp"
#include "gsp4/root_data.hpp"

using namespace gsp4;

TEST_CASE("weights need the parity condition") {
    CHECK_NOTHROW(Weight(3, 1, 0));
    CHECK_THROWS_AS(Weight(3, 1, 1), InputError);
    CHECK(Weight(7, 4, 13).t() == 1);
    CHECK(contragredient(Weight(3, 1, 2)) == Weight(3, 1, -2));
}

TEST_CASE("Weyl group of order 8 with the stated generators") {
    const auto& g = weyl_group();
    CHECK(g.size() == 8);
    int even = 0;
    for (const auto& w : g) even += w.sign() > 0;
    CHECK(even == 4);
    CHECK(WeylElement::s1().apply(5, 2) == std::array<int, 2>{2, 5});
    CHECK(WeylElement::s2().apply(5, 2) == std::array<int, 2>{5, -2});
    for (const auto& a : g)
        for (const auto& b : g) {
            const auto ab = a * b;
            bool found = false;
            for (const auto& w : g) found = found || w == ab;
            CHECK(found);
        }
}

TEST_CASE("Weyl dimension agrees with the character at the identity") {
    for (int k = 0; k <= 6; ++k)
        for (int kp = 0; kp <= k; ++kp) {
            const auto ch = weyl_character(Weight(k, kp, k + kp));
            CycScalar total;
            for (const auto& [e, c] : ch.terms()) total += c;
            CHECK(total == CycScalar(weyl_dimension(k, kp)));
        }
    CHECK(weyl_dimension(0, 0) == 1);
    CHECK(weyl_dimension(1, 0) == 4);
    CHECK(weyl_dimension(1, 1) == 5);
    CHECK(weyl_dimension(2, 0) == 10);
}

TEST_CASE("characters are Weyl invariant") {
    const auto ch = weyl_character(Weight(4, 1, 5));
    for (const auto& [e, c] : ch.terms())
        for (const auto& w : weyl_group()) {
            const auto img = w.apply(static_cast<int>(e[0]), static_cast<int>(e[1]));
            Exponent f = e;
            f[0] = img[0];
            f[1] = img[1];
            f[2] = (5 - img[0] - img[1]) / 2;  // similitude exponent follows from c
            CHECK(ch.coeff(f) == c);
        }
}

TEST_CASE("branching inequalities agree with character multiplicities") {
    for (int k = 0; k <= 6; ++k)
        for (int kp = 0; kp <= k; ++kp)
            for (int p = 0; p <= k + kp; ++p)
                for (int q = 0; p + q <= k + kp; ++q) {
                    if ((p + q + k + kp) % 2 != 0) continue;
                    const auto bq = BranchQuery::standard(p, q, k, kp);
                    CHECK(branching_admissible(bq) == (branching_multiplicity(bq) > 0));
                }
    CHECK(branching_admissible(BranchQuery::standard(6, 3, 7, 4)));
    CHECK(branching_multiplicity(BranchQuery::standard(6, 3, 7, 4)) >= 1);
}

TEST_CASE("branching decomposition accounts for the whole dimension") {
    for (auto [k, kp] : {std::pair{2, 1}, std::pair{4, 2}, std::pair{5, 0}}) {
        const auto d = branching_decompose(Weight(k, kp, k + kp));
        int total = 0;
        for (const auto& [key, mult] : d.parts) total += mult * (key[0] + 1) * (key[1] + 1);
        CHECK(total == weyl_dimension(k, kp));
    }
}
