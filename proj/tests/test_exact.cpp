#include <doctest.h>

#include <gmpxx.h>

#include "gsp4/errors.hpp"
#include "gsp4/exact.hpp"

using namespace gsp4;

namespace {

mpz_class naive_factorial(long n) {
    mpz_class f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

const std::vector<std::string> kXY{"x", "y"};

}  // namespace

TEST_CASE("factorial and binomial against a naive product") {
    for (long n = 0; n <= 40; ++n) CHECK(factorial(n) == Rat(naive_factorial(n)));
    for (long n = 0; n <= 20; ++n)
        for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(7, 0) == Rat(1));
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 4) + Rat(1, 4) == Rat(1, 2));
    CHECK(Rat(3, 80) * Rat(80) == Rat(3));
    CHECK(Rat(-6, 4) == Rat(-3, 2));
    CHECK((Rat(5, 2)).is_integer() == false);
}

TEST_CASE("Q(i, sqrt2) scalars") {
    const CycScalar i = CycScalar::i(), s = CycScalar::sqrt2();
    CHECK(i * i == CycScalar(-1));
    CHECK(s * s == CycScalar(2));
    const CycScalar z(Rat(1, 3), Rat(2), Rat(-1), Rat(5, 7));
    CHECK(z * z.inverse() == CycScalar(1));
    CHECK(z.conj().conj() == z);
    CHECK(CycScalar(0, 2).pow(-2) == CycScalar(Rat(-1, 4)));
    CHECK(i.pow(4) == CycScalar(1));
}

TEST_CASE("Laurent polynomials") {
    const auto x = LaurentPoly::variable(kXY, "x"), y = LaurentPoly::variable(kXY, "y");
    const auto one = LaurentPoly::constant(kXY, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(x.pow(-2) * x.pow(3) == x);
    CHECK(((x + one).pow(3)).coeff({2, 0}) == CycScalar(3));
    const auto sub = (x * y.pow(-1)).substitute({Exponent{0, 1}, Exponent{1, 0}});
    CHECK(sub == y * x.pow(-1));
    CHECK((x * x - one).divide_exact(x - one) == x + one);
    CHECK_THROWS_AS((x * x + one).divide_exact(x - one), InputError);
}

TEST_CASE("rational functions and truncated series") {
    const auto x = LaurentPoly::variable(kXY, "x"), y = LaurentPoly::variable(kXY, "y");
    const auto one = LaurentPoly::constant(kXY, 1);
    const RationalFn f(one, one - x * y);
    const auto s = series_of(f, "x", 8);
    for (int m = 0; m <= 8; ++m) CHECK(rf_equal(s.coeff(m), RationalFn(y.pow(m))));
    CHECK(rf_equal(RationalFn(x * x - one, x - one), RationalFn(x + one)));
    const RationalFn g(x, y);
    CHECK(rf_equal(g * RationalFn(y, x), RationalFn(one)));
    CHECK(rf_equal(g + g, RationalFn(x + x, y)));
}
