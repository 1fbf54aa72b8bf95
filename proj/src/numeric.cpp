#include "gsp4/numeric.hpp"

#include <sstream>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace gsp4::num {

namespace {
unsigned g_digits = 50;
// make the default precision effective before any explicit set_digits()
const bool g_precision_set = (Real::default_precision(50), true);
}

void set_digits(unsigned d) {
    if (d < 20) d = 20;
    g_digits = d;
    Real::default_precision(d);
}

unsigned digits() { return g_digits; }

DigitsScope::DigitsScope(unsigned d) : saved_(g_digits) { set_digits(d); }
DigitsScope::~DigitsScope() { set_digits(saved_); }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Complex exp(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}
Complex log(const Complex& z) {
    return {boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re)};
}
Complex sin(const Complex& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sinh;
    return {boost::multiprecision::sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

Real pi() { return boost::math::constants::pi<Real>(); }

Real to_real(const Rat& q) {
    std::ostringstream n, d;
    n << q.num();
    d << q.den();
    return Real(n.str()) / Real(d.str());
}

Real eps() { return boost::multiprecision::pow(Real(10), -static_cast<int>(g_digits)); }

namespace {

// Stirling series in the region |z| >= threshold, Re z > 0.
Complex stirling(const Complex& z) {
    Complex out = (z - Complex(Real(0.5))) * log(z) - z + Complex(boost::multiprecision::log(2 * pi()) / 2);
    Complex zinv = Complex(Real(1)) / z;
    Complex z2inv = zinv * zinv;
    Complex pw = zinv;
    Real tol = eps() * abs(out) / 1000;
    for (int k = 1; k < 200; ++k) {
        Real b = boost::math::bernoulli_b2n<Real>(k);
        Complex term = pw * Complex(b / (2 * k * (2 * k - 1)));
        out = out + term;
        if (abs(term) < tol) break;
        pw = pw * z2inv;
    }
    return out;
}

}  // namespace

Complex log_gamma(const Complex& z) {
    if (z.re < Real(0.5)) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        Complex s = sin(Complex(pi()) * z);
        return Complex(boost::multiprecision::log(pi())) - log(s) - log_gamma(Complex(Real(1)) - z);
    }
    Real threshold = Real(g_digits) * Real(0.6) + 10;
    Complex w = z;
    Complex prod(Real(1));
    int shifts = 0;
    while (abs(w) < threshold) {
        prod = prod * w;
        w = w + Complex(Real(1));
        ++shifts;
    }
    Complex out = stirling(w);
    if (shifts > 0) out = out - log(prod);
    return out;
}

Real gamma(const Real& x) { return boost::math::tgamma(x); }

Real rgamma(const Real& x) {
    if (x <= 0 && x == boost::multiprecision::floor(x)) return Real(0);
    return 1 / boost::math::tgamma(x);
}

Real gamma(const Rat& x) { return gamma(to_real(x)); }

std::string str(const Real& x, int significant) {
    std::ostringstream os;
    os << std::setprecision(significant) << x;
    return os.str();
}

double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace gsp4::num
