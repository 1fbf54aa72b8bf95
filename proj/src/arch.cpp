#include "gsp4/arch.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <boost/math/special_functions/gamma.hpp>

#include "gsp4/errors.hpp"
#include "gsp4/pairing.hpp"

namespace gsp4 {

using num::Complex;
using num::Real;

MeijerParams meijer_params(int lambda1, int lambda2, int t, int p, int q) {
    MeijerParams mp;
    const Rat l1(lambda1), l2(lambda2), tt(t), half_diff(Rat(q - p) / Rat(2));
    mp.a1 = (tt - l2 - half_diff + Rat(2)) / Rat(2);
    mp.a2 = (Rat(2) * l1 + l2 - tt + half_diff + Rat(2)) / Rat(2);
    mp.c1 = (l1 + l2 + Rat(4)) / Rat(4);
    mp.c2 = (l1 - l2 + Rat(4)) / Rat(4);
    mp.c3 = (l1 + l2 + Rat(2)) / Rat(4);
    mp.c4 = (l1 - l2 + Rat(2)) / Rat(4);
    return mp;
}

bool arch_vanishing(int t, int lambda1, int lambda2, int r, int s) {
    return t + lambda2 + r != 0 || -t + lambda1 + s != 0;
}

bool has_pole_collision(const MeijerParams& mp) {
    const auto c = mp.c();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if ((c[i] - c[j]).is_integer()) return true;
    return false;
}

Complex meijer_integrand(const Complex& s, const Real& z, const MeijerParams& mp) {
    Complex acc = s * Complex(boost::multiprecision::log(z));
    for (const auto& c : mp.c()) acc = acc + num::log_gamma(Complex(num::to_real(c)) - s);
    for (const auto& a : mp.a()) acc = acc - num::log_gamma(Complex(num::to_real(a)) - s);
    return num::exp(acc);
}

namespace {

Real min_c(const MeijerParams& mp) {
    Rat m = mp.c1;
    for (const auto& c : mp.c()) m = std::min(m, c);
    return num::to_real(m);
}

// log |Gamma(c - sigma)/Gamma(a - sigma)| + sigma log z on the real axis; false at a zero.
bool real_log_integrand(const MeijerParams& mp, const Real& sigma, const Real& logz, Real& out) {
    out = sigma * logz;
    try {
        for (const auto& c : mp.c()) out += boost::math::lgamma(num::to_real(c) - sigma);
        for (const auto& a : mp.a()) {
            Real x = num::to_real(a) - sigma;
            if (x <= 0 && x == boost::multiprecision::floor(x)) return false;
            out -= boost::math::lgamma(x);
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

// Samples of the Gamma ratio on s = sigma0 + i k h, truncated where it has decayed.
struct ContourTable {
    Real sigma0, h;
    std::vector<Complex> phi;
};

ContourTable build_table(const MeijerParams& mp, const Real& sigma0, const Real& h) {
    ContourTable tab{sigma0, h, {}};
    const Real one(1);
    const Real cut = boost::multiprecision::pow(Real(10), -static_cast<int>(num::digits()) - 5);
    Real maxabs(0);
    for (long k = 0;; ++k) {
        if (k > 400000) throw PrecisionError("meijer_g: contour truncation did not converge");
        const Complex s(sigma0, h * k);
        Complex acc;
        for (const auto& c : mp.c()) acc = acc + num::log_gamma(Complex(num::to_real(c)) - s);
        for (const auto& a : mp.a()) acc = acc - num::log_gamma(Complex(num::to_real(a)) - s);
        Complex v = num::exp(acc);
        const Real m = num::abs(v);
        tab.phi.push_back(std::move(v));
        if (m > maxabs) maxabs = m;
        if (h * k > 4 && m < cut * maxabs) break;
    }
    return tab;
}

struct ContourSum {
    Real value, abs_sum;
};

// (H/pi) [Re f(0)/2 + sum_{k>=1} Re f(kH)] with f(t) = Phi(sigma0 + it) z^{sigma0 + it}, H = stride h.
ContourSum contour_sum(const ContourTable& tab, const Real& logz, int stride) {
    const Real big_h = tab.h * stride;
    const Complex zs = num::exp(Complex(tab.sigma0 * logz));
    const Complex w = num::exp(Complex(Real(0), big_h * logz));
    Complex pw = zs;
    Real acc(0), abs_acc(0);
    for (std::size_t k = 0; k < tab.phi.size(); k += static_cast<std::size_t>(stride)) {
        const Complex term = tab.phi[k] * pw;
        const Real weight = k == 0 ? Real(0.5) : Real(1);
        acc += weight * term.re;
        abs_acc += weight * num::abs(term);
        pw = pw * w;
    }
    return {acc * big_h / num::pi(), abs_acc * big_h / num::pi()};
}

class MeijerEvaluator {
public:
    explicit MeijerEvaluator(const MeijerParams& mp) : mp_(mp), minc_(min_c(mp)) {}

    struct Eval {
        Real fine, coarse, abs_sum, sigma0;
    };

    Eval eval(const Real& z) {
        const Real logz = boost::multiprecision::log(z);
        const int m = choose_bin(z, logz);
        auto it = tables_.find(m);
        if (it == tables_.end()) {
            Real sigma0 = minc_ - 1 - Real(m) * m;
            it = tables_.emplace(m, build_table(mp_, sigma0, Real(1) / 16)).first;
        }
        const auto f = contour_sum(it->second, logz, 1);
        const auto c = contour_sum(it->second, logz, 2);
        return {f.value, c.value, f.abs_sum, it->second.sigma0};
    }

private:
    int choose_bin(const Real& z, const Real& logz) const {
        const int top = static_cast<int>(std::ceil(std::sqrt(2 * std::sqrt(num::to_double(z)) + 20)));
        int best = 0;
        Real best_val;
        bool have = false;
        for (int m = 0; m <= top; ++m) {
            Real v;
            if (!real_log_integrand(mp_, minc_ - 1 - Real(m) * m, logz, v)) continue;
            if (!have || v < best_val) {
                best = m;
                best_val = v;
                have = true;
            }
        }
        return best;
    }

    MeijerParams mp_;
    Real minc_;
    std::map<int, ContourTable> tables_;
};

void check_contour(const MeijerEvaluator::Eval& e) {
    const int d = static_cast<int>(num::digits());
    const Real scale = boost::multiprecision::abs(e.fine);
    if (e.abs_sum > scale * boost::multiprecision::pow(Real(10), d - 15))
        throw PrecisionError("meijer_g: cancellation exceeds the working precision");
    if (boost::multiprecision::abs(e.fine - e.coarse) > scale * boost::multiprecision::pow(Real(10), -d / 3))
        throw PrecisionError("meijer_g: contour quadrature did not converge");
}

}  // namespace

Real meijer_g_residues(const Real& z, const MeijerParams& mp) {
    if (has_pole_collision(mp)) throw InputError("meijer_g_residues: c parameters differ by an integer");
    if (z <= 0) throw InputError("meijer_g_residues: z must be positive");
    // Terms grow to about exp(2 sqrt z) before the sum settles near exp(-2 sqrt z).
    const double loss = 4 * std::sqrt(num::to_double(z)) / std::log(10.0) + 10;
    const unsigned outer = num::digits();
    num::DigitsScope scope(outer + static_cast<unsigned>(loss));
    const auto c = mp.c();
    const auto a = mp.a();
    Real zz(z);
    zz.precision(num::digits());
    // The four partial sums cancel, so truncate against the working precision, not the sum.
    const Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(num::digits()));
    Real total(0);
    for (std::size_t h = 0; h < c.size(); ++h) {
        const Real ch = num::to_real(c[h]);
        Real term = boost::multiprecision::pow(zz, ch);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != h) term *= num::gamma(num::to_real(c[j]) - ch);
        for (const auto& aj : a) term *= num::rgamma(num::to_real(aj) - ch);
        Real sum = term;
        Real peak = boost::multiprecision::abs(term);
        for (int n = 0; n < 100000; ++n) {
            Real ratio = -zz / (n + 1);
            for (std::size_t j = 0; j < c.size(); ++j)
                if (j != h) ratio /= num::to_real(c[j]) - ch - n - 1;
            for (const auto& aj : a) ratio *= num::to_real(aj) - ch - n - 1;
            term *= ratio;
            sum += term;
            peak = std::max(peak, Real(boost::multiprecision::abs(term)));
            if (n > 4 && boost::multiprecision::abs(term) < tol * peak) break;
            if (term == 0) break;
        }
        total += sum;
    }
    return Real(total);
}

NumericResult meijer_g(const Real& z, const MeijerParams& mp) {
    if (z <= 0) throw InputError("meijer_g: z must be positive");
    MeijerEvaluator ev(mp);
    const auto e = ev.eval(z);
    check_contour(e);
    NumericResult out;
    out.value = e.fine;
    out.estimated_error = boost::multiprecision::abs(e.fine - e.coarse);
    out.sigma0 = e.sigma0;
    out.pole_collision = has_pole_collision(mp);
    if (!out.pole_collision && z <= 2500) {
        out.residue_value = meijer_g_residues(z, mp);
        out.residue_checked = true;
    }
    return out;
}

Real mellin_closed_form(const MeijerParams& mp, const Rat& sigma) {
    const Real sg = num::to_real(sigma);
    Real v = boost::multiprecision::pow(num::pi(), -2 * sg) / 2;
    for (const auto& c : mp.c()) v *= num::gamma(num::to_real(c) + sg);
    for (const auto& a : mp.a()) v *= num::rgamma(num::to_real(a) + sg);
    return v;
}

namespace {

// Trapezoid sums in u = log x of e^{E u} G(pi^2 e^{2u}) for several exponents at once, on
// steps hu and hu/2. The outward sweep stops when every integrand has decayed.
struct MellinSums {
    std::vector<Real> fine, coarse;
};

MellinSums mellin_sums(const MeijerParams& mp, const std::vector<Rat>& exponents) {
    MeijerEvaluator ev(mp);
    const Real hu = Real(1) / 16;
    const int d = static_cast<int>(num::digits());
    const Real cut = boost::multiprecision::pow(Real(10), -std::min(d - 10, 30));
    const Real pi2 = num::pi() * num::pi();
    std::vector<Real> ex;
    for (const auto& e : exponents) ex.push_back(num::to_real(e));
    MellinSums out{std::vector<Real>(ex.size(), Real(0)), std::vector<Real>(ex.size(), Real(0))};
    std::vector<Real> peak(ex.size(), Real(0));

    auto visit = [&](long j) {
        const Real u = hu * j;
        const Real z = pi2 * boost::multiprecision::exp(2 * u);
        const auto e = ev.eval(z);
        check_contour(e);
        bool small = true;
        for (std::size_t i = 0; i < ex.size(); ++i) {
            const Real w = boost::multiprecision::exp(ex[i] * u);
            const Real f = w * e.fine;
            out.fine[i] += f;
            if (j % 2 == 0) out.coarse[i] += w * e.coarse;
            const Real af = boost::multiprecision::abs(f);
            if (af > peak[i]) peak[i] = af;
            if (af > cut * peak[i]) small = false;
        }
        return small;
    };

    visit(0);
    for (int dir : {1, -1}) {
        int quiet = 0;
        for (long j = dir;; j += dir) {
            if (std::labs(j) > 4000) throw PrecisionError("mellin: outer integral tail did not decay");
            quiet = visit(j) ? quiet + 1 : 0;
            if (quiet >= 4 && j % 2 == 0) break;
        }
    }
    for (std::size_t i = 0; i < ex.size(); ++i) {
        out.fine[i] *= hu;
        out.coarse[i] *= 2 * hu;
    }
    return out;
}

}  // namespace

Real mellin_quadrature(const MeijerParams& mp, const Rat& exponent, Real* err) {
    const auto s = mellin_sums(mp, {exponent});
    if (err) *err = boost::multiprecision::abs(s.fine[0] - s.coarse[0]);
    return s.fine[0];
}

MellinReport mellin_verify(const MeijerParams& mp, int p, int q, double tol) {
    MellinReport rep;
    rep.mp = mp;
    rep.p = p;
    rep.q = q;
    rep.exponent = Rat(3 * (p + q) + 6) / Rat(2);
    rep.sigma = rep.exponent / Rat(2);
    rep.literal_exponent = Rat(3 * (p + q) + 4) / Rat(2);
    for (const auto& c : mp.c())
        if (!(c + rep.literal_exponent / Rat(2) > Rat(0)))
            throw InputError("mellin_verify: integral diverges at 0 for these parameters");
    const auto s = mellin_sums(mp, {rep.exponent, rep.literal_exponent});
    rep.quadrature = s.fine[0];
    rep.estimated_error = boost::multiprecision::abs(s.fine[0] - s.coarse[0]);
    rep.closed_form = mellin_closed_form(mp, rep.sigma);
    rep.rel_error = boost::multiprecision::abs(rep.quadrature - rep.closed_form) / boost::multiprecision::abs(rep.closed_form);
    rep.doubled_change = rep.estimated_error / boost::multiprecision::abs(rep.quadrature);
    rep.pass = rep.rel_error <= Real(tol);
    rep.literal_quadrature = s.fine[1];
    rep.literal_rel_error =
        boost::multiprecision::abs(rep.literal_quadrature - rep.closed_form) / boost::multiprecision::abs(rep.closed_form);
    rep.literal_pass = rep.literal_rel_error <= Real(tol);
    return rep;
}

std::vector<std::array<int, 2>> theorem_pairs(int bound, bool exclude_small) {
    std::vector<std::array<int, 2>> out;
    for (int k = 1; k <= bound; ++k)
        for (int kp = 1; k + kp <= bound; ++kp)
            if (!theorem_hypothesis_violation(k, kp, exclude_small)) out.push_back({k, kp});
    return out;
}

SurvivorData survivor_data(int k, int kp) {
    const auto rep = survival(k, kp);
    SurvivorData d;
    d.k = k;
    d.kp = kp;
    d.p = rep.p;
    d.q = rep.q;
    int found = 0;
    for (const auto& v : rep.verdicts) {
        if (v.vanishes) continue;
        ++found;
        d.t = v.xi.n;
        d.lambda1 = v.lambda1;
        d.lambda2 = v.lambda2;
        d.r = v.xi.r;
        d.s = v.xi.s;
    }
    if (found != 1) throw InternalError("survivor_data: expected exactly one surviving summand");
    d.mp = meijer_params(d.lambda1, d.lambda2, d.t, d.p, d.q);
    return d;
}

namespace {

// Trapezoid in u = log|t| of F(e^u) e^u ... over the whole line; F receives |t| = e^u.
struct LineIntegral {
    Real value, error;
};

LineIntegral log_line_integral(const std::function<Real(const Real&)>& f) {
    const Real hu = Real(1) / 32;
    const int d = static_cast<int>(num::digits());
    const Real cut = boost::multiprecision::pow(Real(10), -std::min(d - 10, 30));
    Real fine(0), coarse(0), peak(0);
    auto visit = [&](long j) {
        const Real v = f(hu * j);
        fine += v;
        if (j % 2 == 0) coarse += v;
        const Real av = boost::multiprecision::abs(v);
        if (av > peak) peak = av;
        return av <= cut * peak;
    };
    visit(0);
    for (int dir : {1, -1}) {
        int quiet = 0;
        for (long j = dir;; j += dir) {
            if (std::labs(j) > 100000) throw PrecisionError("tate: integrand tail did not decay");
            quiet = visit(j) ? quiet + 1 : 0;
            if (quiet >= 8 && j % 2 == 0) break;
        }
    }
    fine *= hu;
    coarse *= 2 * hu;
    return {fine, boost::multiprecision::abs(fine - coarse)};
}

Real int_pow(const Real& x, int e) {
    return e >= 0 ? Real(boost::multiprecision::pow(x, e)) : Real(1 / boost::multiprecision::pow(x, -e));
}

// One archimedean Tate integral of (i x + y)^{(n-m)/2} (i x - y)^{(n+m)/2} e^{-pi(x^2+y^2)} at
// (x, y) = (0, t), against |t|^{e} |t|^{-other} sgn(t)^n d^x t.
LineIntegral tate_factor(int n, int m, int other, int e) {
    const int e1 = (n - m) / 2, e2 = (n + m) / 2;
    return log_line_integral([=](const Real& u) {
        const Real at = boost::multiprecision::exp(u);
        const Real gauss = boost::multiprecision::exp(-num::pi() * at * at);
        const Real mod = int_pow(at, e - other);
        Real acc(0);
        for (int sg : {1, -1}) {
            const Real t = at * sg;
            const Real phi = int_pow(t, e1) * int_pow(-t, e2) * gauss;
            const Real chi = (n % 2 != 0 && sg < 0) ? Real(-1) : Real(1);
            acc += phi * mod * chi;
        }
        return acc;
    });
}

}  // namespace

TateReport tate_arch_verify(int p, int q, int r, int s, double tol) {
    if (p < 0 || q < 0) throw InputError("tate_arch_verify: p, q must be non-negative");
    if (((p - r) % 2 + 2) % 2 != 0 || ((q - s) % 2 + 2) % 2 != 0)
        throw InputError("tate_arch_verify: r = p and s = q mod 2 required");
    TateReport rep;
    rep.p = p;
    rep.q = q;
    rep.r = r;
    rep.s = s;
    // evaluation point p+q+3/2: |t|^{s+1/2} = |t|^{p+q+2}
    const auto z1 = tate_factor(p, r, q, p + q + 2);
    const auto z2 = tate_factor(q, s, p, p + q + 2);
    rep.z1 = z1.value;
    rep.z2 = z2.value;
    rep.product = z1.value * z2.value;
    rep.estimated_error = boost::multiprecision::abs(z1.error * z2.value) + boost::multiprecision::abs(z2.error * z1.value);
    const int half = (p + q + r + s) / 2;
    const Real sign = (((half % 2) + 2) % 2 == 0) ? Real(1) : Real(-1);
    rep.derived = sign * num::to_real(factorial(p) * factorial(q)) * boost::multiprecision::pow(num::pi(), -(p + q + 2));
    const Real gpq = p + q > 0 ? num::gamma(Real(p + q)) : Real(0);
    rep.quoted = sign * boost::multiprecision::pow(num::pi(), -2 * (p + q)) * gpq * gpq;
    rep.rel_error_derived = boost::multiprecision::abs(rep.product - rep.derived) / boost::multiprecision::abs(rep.derived);
    rep.rel_error_quoted = rep.quoted == 0
                               ? Real(1)
                               : Real(boost::multiprecision::abs(rep.product - rep.quoted) / boost::multiprecision::abs(rep.quoted));
    rep.pass_derived = rep.rel_error_derived <= Real(tol);
    rep.pass_quoted = rep.rel_error_quoted <= Real(tol);
    rep.gaussian_mass = log_line_integral([](const Real& u) {
                            const Real y = boost::multiprecision::exp(u);
                            return Real(2 * y * boost::multiprecision::exp(-num::pi() * y * y));
                        }).value;
    return rep;
}

PiPowerClass pi_power_class(const Rat& x) {
    if (!(x > Rat(0))) throw InputError("pi_power_class: argument must be positive");
    if (x.is_integer()) return {Rat(0), x};
    if ((x * Rat(2)).is_integer()) return {Rat(1, 2), x};
    throw InputError("pi_power_class: unsupported argument " + x.str());
}

TraceReport theorem_trace(int k, int kp) {
    if (auto v = theorem_hypothesis_violation(k, kp, true)) throw InputError("theorem_trace: hypothesis failed: " + *v);
    TraceReport rep;
    rep.survivor = survivor_data(k, kp);
    rep.surviving_terms = survival(k, kp).surviving_terms.size();
    const auto& d = rep.survivor;
    rep.sigma = Rat(3 * (d.p + d.q) + 6) / Rat(4);
    const auto& mp = d.mp;
    const std::array<Rat, 6> args{mp.c1, mp.c2, mp.c3, mp.c4, mp.a1, mp.a2};
    // As stated in the proof: c1..c3 ~ 1, c4 ~ pi^{1/2}, a1 ~ 1, a2 ~ pi^{1/2}.
    rep.expected = {Rat(0), Rat(0), Rat(0), Rat(1, 2), Rat(0), Rat(1, 2)};
    rep.pattern_matches = true;
    rep.gamma_exponent = Rat(0);
    for (std::size_t i = 0; i < 6; ++i) {
        rep.shifted[i] = args[i] + rep.sigma;
        rep.classes[i] = pi_power_class(rep.shifted[i]);
        if (!(rep.classes[i].pi_exponent == rep.expected[i])) rep.pattern_matches = false;
        rep.gamma_exponent = i < 4 ? rep.gamma_exponent + rep.classes[i].pi_exponent
                                   : rep.gamma_exponent - rep.classes[i].pi_exponent;
    }
    rep.period_exponent = Rat(-2);
    rep.net = rep.gamma_exponent + rep.period_exponent;
    return rep;
}

Rat trace_pi_exponent(int k, int kp) { return theorem_trace(k, kp).net; }

}  // namespace gsp4
