#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "gsp4/exact.hpp"

namespace gsp4::num {

// Runtime-precision MPFR float; the working precision is set by set_digits().
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

void set_digits(unsigned digits);
unsigned digits();

// RAII guard restoring the previous working precision.
class DigitsScope {
public:
    explicit DigitsScope(unsigned d);
    ~DigitsScope();
    DigitsScope(const DigitsScope&) = delete;
    DigitsScope& operator=(const DigitsScope&) = delete;

private:
    unsigned saved_;
};

struct Complex {
    Real re, im;
    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sin(const Complex& z);

Real pi();
Real to_real(const Rat& q);
Real eps();  // 10^{-digits}

// log Gamma(z) up to an integer multiple of 2*pi*i; only exp() of it is meaningful.
Complex log_gamma(const Complex& z);
Real gamma(const Real& x);
// 1/Gamma(x), zero at the poles.
Real rgamma(const Real& x);
Real gamma(const Rat& x);

// Decimal rendering with the requested number of significant digits.
std::string str(const Real& x, int significant = 17);
double to_double(const Real& x);

}  // namespace gsp4::num
