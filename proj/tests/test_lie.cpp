#include <doctest.h>

#include "gsp4/errors.hpp"
#include "gsp4/lie.hpp"

using namespace gsp4;

namespace {

const std::array<std::array<int, 2>, 6> kRoots{
    std::array<int, 2>{2, 0}, {1, 1}, {0, 2}, {-2, 0}, {-1, -1}, {0, -2}};

}  // namespace

TEST_CASE("generators lie in sp4") {
    CHECK(in_sp4(T1()));
    CHECK(in_sp4(T2()));
    for (const auto& r : nc_root_vectors()) CHECK(in_sp4(r.matrix));
    CHECK(in_sp4(compact_root(1)));
    CHECK(in_sp4(compact_root(-1)));
    for (const auto& e : split_basis()) CHECK(in_sp4(e.matrix));
    CHECK(split_basis().size() == 10);
}

TEST_CASE("noncompact root vectors are ad T-eigenvectors with a common unit") {
    const auto x20 = nc_root(2, 0);
    const auto t = bracket(T1(), x20);
    // read the unit off the (2,0) vector: [T1, X] = 2 unit X
    CycScalar unit;
    bool set = false;
    for (int i = 0; i < 4 && !set; ++i)
        for (int j = 0; j < 4 && !set; ++j)
            if (!x20(i, j).is_zero()) {
                unit = t(i, j) / (CycScalar(2) * x20(i, j));
                set = true;
            }
    CHECK((unit == CycScalar::i() || unit == -CycScalar::i()));
    for (const auto& r : kRoots) {
        const auto x = nc_root(r[0], r[1]);
        CHECK(bracket(T1(), x) == (CycScalar(r[0]) * unit) * x);
        CHECK(bracket(T2(), x) == (CycScalar(r[1]) * unit) * x);
    }
    CHECK(bracket(T1(), T2()).is_zero());
}

TEST_CASE("Cartan decomposition brackets") {
    for (const auto& a : kRoots)
        for (const auto& b : kRoots) {
            const auto br = bracket(nc_root(a[0], a[1]), nc_root(b[0], b[1]));
            const auto parts = cartan_split(br);
            const bool same_side = (a[0] + a[1] > 0) == (b[0] + b[1] > 0);
            if (same_side) {
                CHECK(br.is_zero());  // [p+, p+] = [p-, p-] = 0
            } else {
                CHECK(parts.pplus.is_zero());
                CHECK(parts.pminus.is_zero());
            }
        }
}

TEST_CASE("split coordinates round-trip") {
    const auto& basis = split_basis();
    LieMatrix x;
    std::vector<CycScalar> want(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        want[i] = CycScalar(Rat(static_cast<long>(i) - 3, 7), Rat(static_cast<long>(i % 3)));
        x += want[i] * basis[i].matrix;
    }
    CHECK(split_coords(x) == want);
    CHECK_THROWS_AS(split_coords(LieMatrix::identity()), InputError);
}

TEST_CASE("split root vectors pair to Cartan elements") {
    for (const auto& e : split_basis()) {
        if (e.label.rfind("E(", 0) != 0) continue;
        const std::string f_label = "F" + e.label.substr(1);
        const SplitElement* f = nullptr;
        for (const auto& g : split_basis())
            if (g.label == f_label) f = &g;
        REQUIRE(f != nullptr);
        const auto h = bracket(e.matrix, f->matrix);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) CHECK(h(i, j).is_zero());
    }
}

TEST_CASE("N exchanges the two compact Cartan generators") {
    const auto n = N_matrix();
    CHECK(ad_conjugate(n, T1()) == -T2());
    CHECK(!similitude(n).is_zero());
}

TEST_CASE("the Cayley element is a similitude conjugating T' to a diagonal torus") {
    const auto j = J_matrix();
    CHECK(!similitude(j).is_zero());
    for (const auto& t : {T1(), T2()}) {
        const auto d = ad_conjugate(j.inverse(), t);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (r != c) CHECK(d(r, c).is_zero());
    }
}

TEST_CASE("iota pushes tangent vectors to the noncompact roots") {
    CHECK(in_sp4(iota_push(tangent(Tangent::e1))));
    CHECK(iota(mat2_unit(0, 0), mat2_unit(0, 0)) == LieMatrix::unit(0, 0) + LieMatrix::unit(1, 1));
}
