#include <doctest.h>

#include <algorithm>
#include <set>

#include "gsp4/errors.hpp"
#include "gsp4/packet.hpp"

using namespace gsp4;

namespace {

// Blattner parameter lambda + rho_n - rho_c for the positive system on which the
// Harish-Chandra parameter is positive; rho_c is always that of the compact root (1,-1).
std::array<int, 2> blattner(std::array<int, 2> hc) {
    const std::array<std::array<int, 2>, 3> nc{std::array<int, 2>{2, 0}, {1, 1}, {0, 2}};
    int two_rho_n[2] = {0, 0};
    for (auto r : nc) {
        const int ip = hc[0] * r[0] + hc[1] * r[1];
        REQUIRE(ip != 0);
        const int sgn = ip > 0 ? 1 : -1;
        two_rho_n[0] += sgn * r[0];
        two_rho_n[1] += sgn * r[1];
    }
    return {hc[0] + (two_rho_n[0] - 1) / 2, hc[1] + (two_rho_n[1] + 1) / 2};
}

}  // namespace

TEST_CASE("minimal K-types follow from the Blattner parameter") {
    for (int k = 0; k <= 8; ++k)
        for (int kp = 0; kp <= k; ++kp) {
            const auto info = lpacket(Weight(k, kp, k + kp));
            const int a = k + 2, b = kp + 1;
            CHECK(info.hc_parameter == std::array<int, 2>{a, b});
            REQUIRE(info.members.size() == 4);
            const std::array<std::array<int, 2>, 4> hc{std::array<int, 2>{a, b}, {a, -b}, {b, -a}, {-b, -a}};
            for (std::size_t i = 0; i < 4; ++i) CHECK(info.members[i].minimal_k_type == blattner(hc[i]));
        }
}

TEST_CASE("packet members are distinct and come in conjugate pairs") {
    const auto info = lpacket(Weight(5, 2, 7));
    std::set<std::string> labels;
    for (const auto& m : info.members) labels.insert(m.label);
    CHECK(labels.size() == 4);
    // the contragredient of tau(a,b) is tau(-b,-a)
    const auto& h = info.members[0].minimal_k_type;
    const auto& hbar = info.members[3].minimal_k_type;
    CHECK(hbar == std::array<int, 2>{-h[1], -h[0]});
    CHECK_THROWS_AS(lpacket(Weight(2, 4, 6)), InputError);
}

TEST_CASE("Hodge types are symmetric of pure weight") {
    for (int k = 0; k <= 7; ++k)
        for (int kp = 0; kp <= k; ++kp)
            for (int c : {k + kp, k + kp - 4, k + kp + 2}) {
                const Weight lam(k, kp, c);
                const auto h = hodge_types(lam);
                CHECK(2 * h.t == c - k - kp);
                REQUIRE(h.pairs.size() == 4);
                const int w = h.pairs[0][0] + h.pairs[0][1];
                CHECK(w == 3 - k - kp - 2 * h.t);
                std::multiset<int> diffs;
                for (const auto& pq : h.pairs) {
                    CHECK(pq[0] + pq[1] == w);
                    CHECK(std::find(h.pairs.begin(), h.pairs.end(), std::array<int, 2>{pq[1], pq[0]}) != h.pairs.end());
                    diffs.insert(pq[0] - pq[1]);
                }
                CHECK(diffs == std::multiset<int>{k + kp + 3, k - kp + 1, -(k - kp + 1), -(k + kp + 3)});
            }
}

TEST_CASE("stable ranks require the weight inequalities") {
    CHECK(stable_ranks(6, 3, 7, 4).ext1 == 1);
    CHECK_THROWS_AS(stable_ranks(6, 4, 7, 4), InputError);   // parity
    CHECK_THROWS_AS(stable_ranks(8, 5, 7, 4), InputError);   // 3 - t < 0
    CHECK(dual_hodge_types(6, 3, 7, 4).t == -(7 + 4 + 6 + 3) / 2);
}
