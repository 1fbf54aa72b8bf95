#include "gsp4/nonarch.hpp"

#include <deque>
#include <map>
#include <random>
#include <sstream>

#include "gsp4/errors.hpp"

namespace gsp4 {

namespace {

using Mat3 = std::array<std::array<int, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Mat3 identity3() {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = 1;
    return m;
}

// Columns are the exponent vectors of the images of b0, b1, b2.
Mat3 from_columns(std::array<int, 3> c0, std::array<int, 3> c1, std::array<int, 3> c2) {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) {
        m[i][0] = c0[i];
        m[i][1] = c1[i];
        m[i][2] = c2[i];
    }
    return m;
}

// s1: b0 -> b0 b2, b1 -> b1, b2 -> b2^{-1};  s2: b1 <-> b2.
const Mat3 kS1 = from_columns({1, 0, 1}, {0, 1, 0}, {0, 0, -1});
const Mat3 kS2 = from_columns({1, 0, 0}, {0, 0, 1}, {0, 1, 0});

std::vector<SatakeWeylElement> generate() {
    std::vector<SatakeWeylElement> out;
    std::map<Mat3, bool> seen;
    std::deque<SatakeWeylElement> queue;
    queue.push_back({"e", 0, identity3()});
    seen[identity3()] = true;
    while (!queue.empty()) {
        auto w = queue.front();
        queue.pop_front();
        out.push_back(w);
        const std::pair<const char*, const Mat3*> gens[] = {{"s1", &kS1}, {"s2", &kS2}};
        for (const auto& [name, g] : gens) {
            Mat3 m = mat_mul(*g, w.mat);
            if (seen.count(m)) continue;
            seen[m] = true;
            std::string word = w.length == 0 ? std::string(name) : std::string(name) + " " + w.word;
            queue.push_back({word, w.length + 1, m});
        }
    }
    if (out.size() != 8) throw InternalError("satake_weyl_group: expected eight elements");
    return out;
}

}  // namespace

const std::vector<std::string>& satake_vars() {
    static const std::vector<std::string> v{"b0", "b1", "b2", "T"};
    return v;
}

LaurentPoly SatakeSymbols::b(int j) const {
    if (j < 0 || j > 2) throw InputError("SatakeSymbols::b: index must be 0, 1 or 2");
    Exponent e(4, 0);
    e[static_cast<std::size_t>(j)] = 1;
    return LaurentPoly::monomial(satake_vars(), e);
}

LaurentPoly SatakeSymbols::alpha(int i) const {
    static const std::array<Exponent, 4> ex{Exponent{1, 1, 1, 0}, Exponent{1, 1, 0, 0}, Exponent{1, 0, 0, 0},
                                            Exponent{1, 0, 1, 0}};
    if (i < 1 || i > 4) throw InputError("SatakeSymbols::alpha: index must be 1..4");
    return LaurentPoly::monomial(satake_vars(), ex[static_cast<std::size_t>(i - 1)]);
}

LaurentPoly SatakeSymbols::T() const { return LaurentPoly::variable(satake_vars(), "T"); }

const std::vector<SatakeWeylElement>& satake_weyl_group() {
    static const std::vector<SatakeWeylElement> g = generate();
    return g;
}

int satake_find(const Mat3& mat) {
    const auto& g = satake_weyl_group();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i].mat == mat) return static_cast<int>(i);
    return -1;
}

SatakeWeylElement satake_compose(const SatakeWeylElement& x, const SatakeWeylElement& y) {
    const int idx = satake_find(mat_mul(x.mat, y.mat));
    if (idx < 0) throw InternalError("satake_compose: product left the group");
    return satake_weyl_group()[static_cast<std::size_t>(idx)];
}

LaurentPoly satake_act(const SatakeWeylElement& w, const LaurentPoly& f) {
    std::vector<Exponent> images(4, Exponent(4, 0));
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) images[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = w.mat[i][j];
    images[3][3] = 1;
    return f.substitute(images);
}

LaurentPoly antisymmetrize(const LaurentPoly& f) {
    LaurentPoly out(satake_vars());
    for (const auto& w : satake_weyl_group()) {
        LaurentPoly term = satake_act(w, f);
        if (w.sign() > 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

LaurentPoly spin_denominator() {
    const SatakeSymbols sp;
    LaurentPoly d = LaurentPoly::constant(satake_vars(), 1);
    const LaurentPoly one = LaurentPoly::constant(satake_vars(), 1);
    for (int i = 1; i <= 4; ++i) d = d * (one - sp.alpha(i) * sp.T());
    return d;
}

RationalFn spin_lfactor() { return RationalFn(LaurentPoly::constant(satake_vars(), 1), spin_denominator()); }

namespace {

LaurentPoly base_monomial(int m) {
    const SatakeSymbols sp;
    return sp.alpha(3).pow(m + 2) * sp.alpha(4).pow(-1);
}

}  // namespace

RationalFn bessel_value(int m) {
    if (m < 0) throw InputError("bessel_value: m must be non-negative");
    return RationalFn(antisymmetrize(base_monomial(m)), antisymmetrize(base_monomial(0)));
}

Rat bessel_p_exponent(int m) { return Rat(-3 * m, 2); }

bool UnramifiedReport::pass() const {
    if (!series_ok || (!numeric && !intermediate_ok)) return false;
    for (const auto& v : vanishings)
        if (!v.zero) return false;
    return true;
}

namespace {

std::vector<VanishingCheck> stated_vanishings() {
    const SatakeSymbols sp;
    const auto a1 = sp.alpha(1), a2 = sp.alpha(2), a3 = sp.alpha(3), a4inv = sp.alpha(4).pow(-1);
    const std::vector<std::pair<std::string, LaurentPoly>> items{
        {"A(alpha2 alpha3)", a2 * a3},
        {"A(alpha2 alpha3^2 alpha4^-1)", a2 * a3 * a3 * a4inv},
        {"A(alpha3^2)", a3 * a3},
        {"A(alpha3^2 alpha1)", a3 * a3 * a1},
        {"A(alpha1 alpha2 alpha3^2)", a1 * a2 * a3 * a3},
        {"A(alpha2 alpha3^2 + alpha2^2 alpha3)", a2 * a3 * a3 + a2 * a2 * a3},
    };
    std::vector<VanishingCheck> out;
    for (const auto& [name, f] : items) out.push_back({name, antisymmetrize(f).is_zero()});
    return out;
}

bool intermediate_identity() {
    const SatakeSymbols sp;
    const LaurentPoly one = LaurentPoly::constant(satake_vars(), 1);
    const LaurentPoly base = base_monomial(0);
    const LaurentPoly lhs = base * (one - sp.alpha(1) * sp.T()) * (one - sp.alpha(2) * sp.T()) *
                            (one - sp.alpha(4) * sp.T());
    return antisymmetrize(lhs) == antisymmetrize(base);
}

}  // namespace

UnramifiedReport verify_unramified(int order) {
    if (order < 1) throw InputError("verify_unramified: order must be at least 1");
    UnramifiedReport rep;
    rep.order = order;
    const auto series = series_of(spin_lfactor(), "T", order);
    const LaurentPoly den = antisymmetrize(base_monomial(0));
    rep.series_ok = true;
    for (int m = 0; m <= order; ++m) {
        const RationalFn cm(antisymmetrize(base_monomial(m)), den);
        if (!rf_equal(cm, series.coeff(m))) {
            rep.series_ok = false;
            rep.first_mismatch = m;
            break;
        }
    }
    rep.intermediate_ok = intermediate_identity();
    rep.vanishings = stated_vanishings();
    return rep;
}

UnramifiedReport verify_unramified_numeric(int order, std::uint64_t seed, int samples) {
    if (order < 1) throw InputError("verify_unramified: order must be at least 1");
    UnramifiedReport rep;
    rep.order = order;
    rep.numeric = true;
    rep.seed = seed;
    rep.series_ok = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    const SatakeSymbols sp;
    std::vector<LaurentPoly> numerators;
    for (int m = 0; m <= order; ++m) numerators.push_back(antisymmetrize(base_monomial(m)));
    const LaurentPoly den_poly = numerators[0];
    int accepted = 0;
    while (accepted < samples) {
        std::vector<CycScalar> vals(4);
        for (int j = 0; j < 3; ++j) vals[static_cast<std::size_t>(j)] = CycScalar(Rat(num(rng), den(rng)));
        vals[3] = CycScalar(0);
        bool degenerate = vals[0].is_zero() || vals[1].is_zero() || vals[2].is_zero();
        CycScalar d;
        if (!degenerate) {
            d = den_poly.evaluate(vals);
            degenerate = d.is_zero();
        }
        if (degenerate) {
            ++rep.rejected;
            continue;
        }
        std::array<CycScalar, 4> a;
        for (int i = 1; i <= 4; ++i) a[static_cast<std::size_t>(i - 1)] = sp.alpha(i).evaluate(vals);
        // coefficients of prod (1 - a_i T)^{-1} by successive geometric convolution
        std::vector<CycScalar> h(static_cast<std::size_t>(order) + 1, CycScalar(0));
        h[0] = CycScalar(1);
        for (const auto& ai : a)
            for (int m = 1; m <= order; ++m) h[static_cast<std::size_t>(m)] += ai * h[static_cast<std::size_t>(m - 1)];
        for (int m = 0; m <= order; ++m) {
            const CycScalar cm = numerators[static_cast<std::size_t>(m)].evaluate(vals) / d;
            if (cm != h[static_cast<std::size_t>(m)]) {
                rep.series_ok = false;
                if (rep.first_mismatch < 0 || m < rep.first_mismatch) rep.first_mismatch = m;
            }
        }
        ++accepted;
    }
    rep.samples = accepted;
    rep.vanishings = stated_vanishings();
    return rep;
}

std::string TateUnramified::str() const {
    std::ostringstream os;
    os << "1/(1 - nu(p) p^-" << exponent << ")";
    return os.str();
}

TateUnramified tate_unramified(int exponent, int depth) {
    if (depth < 0) throw InputError("tate_unramified: depth must be non-negative");
    const std::vector<std::string> vars{"nu", "u", "T"};
    TateUnramified out;
    out.exponent = exponent;
    out.depth = depth;
    const LaurentPoly one = LaurentPoly::constant(vars, 1);
    const LaurentPoly x = LaurentPoly::monomial(vars, Exponent{1, exponent, 1});
    out.factor = RationalFn(one, one - x);
    // sum over valuations m of nu(p)^m |p^m|^{exponent}
    TruncSeries sum(vars, 2, depth);
    for (int m = 0; m <= depth; ++m) sum.set_coeff(m, RationalFn(LaurentPoly::monomial(vars, Exponent{m, m * exponent, 0})));
    out.geometric_ok = sum.equals(series_of(out.factor, 2, depth));
    out.at_nu_zero = out.factor.evaluate({CycScalar(0), CycScalar(1), CycScalar(1)});
    return out;
}

}  // namespace gsp4
