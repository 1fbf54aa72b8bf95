#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gsp4 {

// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& n, const mpz_class& d);
    Rat(long n, long d) : Rat(mpz_class(n), mpz_class(d)) {}

    static Rat parse(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rat pow(long e) const;
    Rat abs() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

Rat factorial(long n);
Rat binomial(long n, long k);

// Element c0 + c1*i + c2*sqrt2 + c3*i*sqrt2 of Q(i, sqrt2).
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(const Rat& r) : c_{r, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    CycScalar(long n) : c_{Rat(n), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    CycScalar(int n) : c_{Rat(n), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    CycScalar(const Rat& c0, const Rat& c1, const Rat& c2 = 0, const Rat& c3 = 0) : c_{c0, c1, c2, c3} {}

    static CycScalar i() { return {0, 1}; }
    static CycScalar sqrt2() { return {0, 0, 1}; }

    const Rat& operator[](int j) const { return c_[j]; }
    const Rat& re_rational() const { return c_[0]; }

    bool is_zero() const;
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    bool in_gaussian() const { return c_[2].is_zero() && c_[3].is_zero(); }

    CycScalar conj() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
    CycScalar inverse() const;
    CycScalar pow(long e) const;
    std::complex<double> to_complex() const;
    std::string str() const;

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    friend CycScalar operator-(const CycScalar& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

private:
    Rat c_[4];
};

using Exponent = std::vector<std::int64_t>;

// Sparse multivariate Laurent polynomial with CycScalar coefficients.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, CycScalar>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(const std::vector<std::string>& vars, const CycScalar& c);
    static LaurentPoly monomial(const std::vector<std::string>& vars, const Exponent& e,
                                const CycScalar& c = CycScalar(1));
    static LaurentPoly variable(const std::vector<std::string>& vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t var_index(const std::string& name) const;

    void add_term(const Exponent& e, const CycScalar& c);
    CycScalar coeff(const Exponent& e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const CycScalar& s);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const CycScalar& s) { return a *= s; }
    friend LaurentPoly operator*(const CycScalar& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Non-negative powers for any polynomial; negative powers only for monomials.
    LaurentPoly pow(long e) const;

    // Monoid substitution: variable j is sent to the monomial with exponent images[j].
    LaurentPoly substitute(const std::vector<Exponent>& images) const;
    CycScalar evaluate(const std::vector<CycScalar>& values) const;
    LaurentPoly conj_coeffs() const;

    // Coefficient of var^power, returned over the same variable list.
    LaurentPoly coefficient_of(std::size_t var, std::int64_t power) const;
    std::int64_t max_degree(std::size_t var) const;
    std::int64_t min_degree(std::size_t var) const;

    // Exact quotient; throws InputError when d does not divide *this.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    std::string str() const;

private:
    void check_vars(const LaurentPoly& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

Exponent exponent_add(const Exponent& a, const Exponent& b);
Exponent exponent_sub(const Exponent& a, const Exponent& b);

// Quotient of Laurent polynomials; equality is decided by cross-multiplication.
class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(LaurentPoly num);
    RationalFn(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

    RationalFn substitute(const std::vector<Exponent>& images) const;
    CycScalar evaluate(const std::vector<CycScalar>& values) const;
    std::string str() const;

private:
    LaurentPoly num_, den_;
};

bool rf_equal(const RationalFn& a, const RationalFn& b);

// Power series in one distinguished variable, truncated at a fixed order.
class TruncSeries {
public:
    TruncSeries(std::vector<std::string> vars, std::size_t var, int order);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t var() const { return var_; }
    int order() const { return order_; }
    const std::vector<RationalFn>& coeffs() const { return coeffs_; }
    const RationalFn& coeff(int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
    void set_coeff(int m, RationalFn f);

    TruncSeries& operator+=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    // Series as a polynomial in the series variable (coefficients must be polynomial).
    RationalFn truncated() const;
    bool equals(const TruncSeries& o) const;

private:
    std::vector<std::string> vars_;
    std::size_t var_;
    int order_;
    std::vector<RationalFn> coeffs_;
};

// Expansion of f in powers of vars[var]; the denominator must be a unit at var = 0.
TruncSeries series_of(const RationalFn& f, std::size_t var, int order);
TruncSeries series_of(const RationalFn& f, const std::string& var, int order);

}  // namespace gsp4
