#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "gsp4/errors.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/rep.hpp"
#include "gsp4/root_data.hpp"

using namespace gsp4;

namespace {

ModVec pseudo_random(int n, int salt) {
    ModVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = CycScalar(Rat((i * 7 + salt) % 11 - 5, 1 + i % 4));
    return v;
}

}  // namespace

TEST_CASE("built modules have the Weyl dimension and close under all generators") {
    for (int k = 0; k <= 5; ++k)
        for (int kp = 0; kp <= k && k + kp <= 6; ++kp) {
            const auto m = build_irrep(Weight(k, kp, k + kp), 12, true);
            CHECK(m.dim() == weyl_dimension(k, kp));
            int total = 0;
            for (const auto& [w, idx] : m.weight_spaces()) total += static_cast<int>(idx.size());
            CHECK(total == m.dim());
        }
}

TEST_CASE("the seed is a highest weight vector") {
    const auto seed = highest_weight_seed(4, 2);
    for (const auto& e : split_basis()) {
        const bool raising = e.label == "E(1,-1)" || e.label == "E(0,2)" || e.label == "E(2,0)" || e.label == "E(1,1)";
        if (raising) CHECK(apply_generator(e.matrix, seed).empty());
    }
    CHECK(tensor_weight(seed.begin()->first) == WeightKey{4, 2});
}

TEST_CASE("non-dominant weights are rejected") {
    CHECK_THROWS_AS(build_irrep(Weight(1, 2, 3)), InputError);
}

TEST_CASE("module operators respect the bracket") {
    const auto m = build_irrep(Weight(3, 1, 4));
    const auto v = pseudo_random(m.dim(), 3);
    const auto e = split_basis()[2].matrix, f = split_basis()[6].matrix;
    const auto lhs = m.act(bracket(e, f), v);
    const auto a = m.act(e, m.act(f, v)), b = m.act(f, m.act(e, v));
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(lhs[i] == a[i] - b[i]);
}

TEST_CASE("G' projection is idempotent and agrees with the Casimir projection") {
    const auto m = build_irrep(Weight(4, 2, 6));
    const GprimeDecomposition g(m);
    const auto v = pseudo_random(m.dim(), 5);
    ModVec sum(v.size());
    for (const auto& [pq, copies] : g.types()) {
        const auto pr = g.project(pq[0], pq[1], v);
        const auto pr2 = g.project(pq[0], pq[1], pr);
        CHECK(pr == pr2);
        CHECK(pr == casimir_project(m, pq[0], pq[1], v));
        for (std::size_t i = 0; i < v.size(); ++i) sum[i] += pr[i];
    }
    CHECK(sum == v);
}

TEST_CASE("Cayley vectors carry the transported compact weight") {
    const auto m = build_irrep(Weight(3, 2, 5));
    for (int idx : {0, 3, m.dim() - 1}) {
        const auto cv = cayley_vector(m, idx);
        const auto cw = compact_weight_of(m, cv.coords);
        REQUIRE(cw.has_value());
        CHECK((*cw)[0] == m.weight_of(idx)[0]);
        CHECK((*cw)[1] == m.weight_of(idx)[1]);
    }
}

TEST_CASE("lambda scan for (7,4)") {
    const auto s = lambda_scan(7, 4, 0, 6);
    CHECK(s.multiplicity == 1);
    CHECK(s.module_dim == weyl_dimension(7, 4));
    for (const auto& row : s.rows) {
        if (row.i % 2 == 0) CHECK_FALSE(row.nonzero);
        if (row.i == 1) CHECK(row.lambda == CycScalar(Rat(-1, 180)));
        if (row.i == 3) CHECK(row.lambda == CycScalar(Rat(-1, 30)));
        if (row.i == 5) CHECK(row.lambda == CycScalar(Rat(-2, 3)));
        if (row.i % 2 == 1) CHECK(row.nonzero);
    }
}

TEST_CASE("K-type standard basis") {
    const KTypeModule t(5, -2);
    CHECK(t.dim() == 8);
    for (int s = 0; s <= t.d(); ++s) {
        const auto v = t.basis_vector(s);
        const auto w = t.weight(s);
        CHECK(t.e11(v)[static_cast<std::size_t>(s)] == Rat(w[0]));
        CHECK(t.e22(v)[static_cast<std::size_t>(s)] == Rat(w[1]));
    }
    // X(-1,1)^m X(1,-1)^n v0 by iteration against the closed form
    for (int n = 0; n <= t.d(); ++n)
        for (int mm = 0; mm <= n; ++mm) {
            auto v = lowering_power(t, n);
            for (int j = 0; j < mm; ++j) v = t.lower(v);
            const auto w = lowering_power(t, n - mm);
            const Rat c = raise_lower_coefficient(t.d(), mm, n);
            for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == c * w[i]);
        }
}

TEST_CASE("dual basis of Sym^n: duality, weights and conjugation") {
    for (int n : {1, 2, 5}) {
        const SymBasis sb(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) CHECK(sb.pair(sb.a(i), sb.b(j)) == CycScalar(i == j ? 1 : 0));
        // rotation by (3/5, 4/5)
        const CycScalar x(Rat(3, 5)), y(Rat(4, 5));
        const auto g = sb.dual_action(Mat2{x, y, -y, x});
        const CycScalar z = x + CycScalar::i() * y;
        for (int j = 0; j <= n; ++j) {
            const auto& a = sb.a(j);
            std::vector<CycScalar> ga(a.size());
            for (std::size_t r = 0; r < a.size(); ++r)
                for (std::size_t c = 0; c < a.size(); ++c) ga[r] += g[r][c] * a[c];
            const auto wt = sb.a_weight(j);
            const CycScalar e = z.pow(wt[0]);
            for (std::size_t r = 0; r < a.size(); ++r) CHECK(ga[r] == e * a[r]);
            // complex conjugate of a_j is (-1)^n a_{n-j}
            const auto& other = sb.a(n - j);
            for (std::size_t r = 0; r < a.size(); ++r)
                CHECK(a[r].conj() == CycScalar(n % 2 == 0 ? 1 : -1) * other[r]);
        }
    }
}

TEST_CASE("wedge spaces decompose the same way by characters and by highest vectors") {
    const auto d21 = wedge_decompose(2, 1);
    const std::vector<KTypeLabel> want{{3, -1, 1}, {2, 0, 1}, {1, 1, 1}};
    CHECK(d21.size() == want.size());
    for (const auto& w : want) CHECK(std::find(d21.begin(), d21.end(), w) != d21.end());
    for (auto [np, nm] : {std::pair{1, 0}, std::pair{3, 0}, std::pair{1, 1}, std::pair{2, 2}}) {
        const WedgeSpace ws(np, nm);
        auto a = ws.decompose(), b = ws.decompose_by_highest_vectors();
        auto key = [](const KTypeLabel& l) { return std::tuple{l.a, l.b, l.mult}; };
        std::sort(a.begin(), a.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
        std::sort(b.begin(), b.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
        CHECK(a == b);
    }
    const auto top = wedge_decompose(3, 0);
    REQUIRE(top.size() == 1);
    CHECK(top[0] == KTypeLabel{3, 3, 1});
}
