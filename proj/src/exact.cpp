#include "gsp4/exact.hpp"

#include <algorithm>
#include <sstream>

#include "gsp4/errors.hpp"

namespace gsp4 {

// ---------------------------------------------------------------- Rat

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw SingularError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("not a rational number: " + s);
    if (q.get_den() == 0) throw InputError("zero denominator: " + s);
    q.canonicalize();
    Rat r;
    r.v_ = q;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw SingularError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(long e) const {
    if (e < 0) return Rat(1) / pow(-e);
    Rat r;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.v_ = mpq_class(n, d);
    return r;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat factorial(long n) {
    if (n < 0) throw InputError("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Rat binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

// ---------------------------------------------------------------- CycScalar

bool CycScalar::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
    return *this;
}

// basis 1, i, r, ir with i^2 = -1, r^2 = 2
CycScalar& CycScalar::operator*=(const CycScalar& o) {
    const Rat* a = c_;
    const Rat* b = o.c_;
    if (in_gaussian() && o.in_gaussian()) {
        Rat r0 = a[0] * b[0] - a[1] * b[1];
        Rat r1 = a[0] * b[1] + a[1] * b[0];
        c_[0] = r0;
        c_[1] = r1;
        return *this;
    }
    Rat r0 = a[0] * b[0] - a[1] * b[1] + Rat(2) * (a[2] * b[2] - a[3] * b[3]);
    Rat r1 = a[0] * b[1] + a[1] * b[0] + Rat(2) * (a[2] * b[3] + a[3] * b[2]);
    Rat r2 = a[0] * b[2] + a[2] * b[0] - a[1] * b[3] - a[3] * b[1];
    Rat r3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    c_[0] = r0;
    c_[1] = r1;
    c_[2] = r2;
    c_[3] = r3;
    return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    for (int j = 0; j < 4; ++j)
        if (a.c_[j] != b.c_[j]) return false;
    return true;
}

// x = u + v*sqrt2 with u, v in Q(i); x * (u - v*sqrt2) = u^2 - 2 v^2 in Q(i).
CycScalar CycScalar::inverse() const {
    CycScalar u{c_[0], c_[1]};
    CycScalar v{c_[2], c_[3]};
    CycScalar bar = u - v * sqrt2();
    CycScalar n = u * u - CycScalar(2) * v * v;
    Rat nn = n[0] * n[0] + n[1] * n[1];
    if (nn.is_zero()) throw SingularError("division by zero in Q(i, sqrt2)");
    CycScalar ninv{n[0] / nn, -n[1] / nn};
    return bar * ninv;
}

CycScalar CycScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::complex<double> CycScalar::to_complex() const {
    const double r2 = 1.4142135623730950488;
    return {c_[0].to_double() + r2 * c_[2].to_double(), c_[1].to_double() + r2 * c_[3].to_double()};
}

std::string CycScalar::str() const {
    static const char* unit[4] = {"", "i", "sqrt2", "i*sqrt2"};
    std::string out;
    for (int j = 0; j < 4; ++j) {
        if (c_[j].is_zero()) continue;
        std::string coef = c_[j].str();
        std::string term;
        if (j == 0)
            term = coef;
        else if (c_[j] == Rat(1))
            term = unit[j];
        else if (c_[j] == Rat(-1))
            term = std::string("-") + unit[j];
        else
            term = coef + "*" + unit[j];
        if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else out = term;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- exponents

Exponent exponent_add(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        if (__builtin_add_overflow(a[j], b[j], &r[j])) throw InternalError("exponent overflow");
    return r;
}

Exponent exponent_sub(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        if (__builtin_sub_overflow(a[j], b[j], &r[j])) throw InternalError("exponent overflow");
    return r;
}

static Exponent exponent_scale(const Exponent& a, std::int64_t s) {
    Exponent r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        if (__builtin_mul_overflow(a[j], s, &r[j])) throw InternalError("exponent overflow");
    return r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const std::vector<std::string>& vars, const CycScalar& c) {
    return monomial(vars, Exponent(vars.size(), 0), c);
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars, const Exponent& e,
                                  const CycScalar& c) {
    if (e.size() != vars.size()) throw InputError("exponent length does not match variable list");
    LaurentPoly p(vars);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    LaurentPoly p(vars);
    Exponent e(vars.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

std::size_t LaurentPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw InputError("unknown variable: " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

void LaurentPoly::check_vars(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw InputError("mismatched variable lists");
}

void LaurentPoly::add_term(const Exponent& e, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CycScalar LaurentPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycScalar() : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CycScalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_vars(b);
    LaurentPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(exponent_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw InputError("negative power of a non-monomial");
        const auto& [ex, c] = *terms_.begin();
        return monomial(vars_, exponent_scale(ex, e), c.pow(e));
    }
    LaurentPoly result = constant(vars_, 1), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(const std::vector<Exponent>& images) const {
    if (images.size() != vars_.size()) throw InputError("substitution arity mismatch");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent out(vars_.size(), 0);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (images[j].size() != vars_.size()) throw InputError("substitution image length mismatch");
            out = exponent_add(out, exponent_scale(images[j], e[j]));
        }
        r.add_term(out, c);
    }
    return r;
}

CycScalar LaurentPoly::evaluate(const std::vector<CycScalar>& values) const {
    if (values.size() != vars_.size()) throw InputError("evaluation arity mismatch");
    CycScalar sum;
    for (const auto& [e, c] : terms_) {
        CycScalar t = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0) t *= values[j].pow(e[j]);
        sum += t;
    }
    return sum;
}

LaurentPoly LaurentPoly::conj_coeffs() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
}

LaurentPoly LaurentPoly::coefficient_of(std::size_t var, std::int64_t power) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != power) continue;
        Exponent f = e;
        f[var] = 0;
        r.add_term(f, c);
    }
    return r;
}

std::int64_t LaurentPoly::max_degree(std::size_t var) const {
    if (terms_.empty()) throw InputError("degree of the zero polynomial");
    std::int64_t d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

std::int64_t LaurentPoly::min_degree(std::size_t var) const {
    if (terms_.empty()) throw InputError("degree of the zero polynomial");
    std::int64_t d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
}

// Long division in lexicographic order. Degrees in each variable are additive under
// multiplication, so every quotient exponent of an exact division lies in a finite box;
// leaving the box proves non-divisibility and bounds the loop.
LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    check_vars(d);
    if (d.is_zero()) throw SingularError("division by the zero polynomial");
    LaurentPoly q(vars_);
    if (is_zero()) return q;
    const auto& [dlead, dcoef] = *d.terms_.rbegin();
    Exponent lo(vars_.size()), hi(vars_.size());
    for (std::size_t j = 0; j < vars_.size(); ++j) {
        lo[j] = min_degree(j) - d.min_degree(j);
        hi[j] = max_degree(j) - d.max_degree(j);
    }
    CycScalar dinv = dcoef.inverse();
    LaurentPoly r = *this;
    while (!r.is_zero()) {
        const auto [rlead, rcoef] = *r.terms_.rbegin();
        Exponent qe = exponent_sub(rlead, dlead);
        for (std::size_t j = 0; j < qe.size(); ++j)
            if (qe[j] < lo[j] || qe[j] > hi[j]) throw InputError("polynomial division is not exact");
        CycScalar qc = rcoef * dinv;
        q.add_term(qe, qc);
        for (const auto& [e, c] : d.terms_) r.add_term(exponent_add(e, qe), -(c * qc));
    }
    return q;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[j];
            if (e[j] != 1) mono += "^" + std::to_string(e[j]);
        }
        std::string cs = c.str();
        bool compound = !c.in_gaussian() || (!c[0].is_zero() && !c[1].is_zero());
        if (compound) cs = "(" + cs + ")";
        std::string term;
        if (mono.empty()) term = cs;
        else if (c == CycScalar(1)) term = mono;
        else if (c == CycScalar(-1)) term = "-" + mono;
        else term = cs + "*" + mono;
        if (first) os << term;
        else if (term[0] == '-') os << " - " << term.substr(1);
        else os << " + " << term;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(LaurentPoly num) : num_(std::move(num)) {
    den_ = LaurentPoly::constant(num_.vars(), 1);
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw InputError("mismatched variable lists");
    if (den_.is_zero()) throw SingularError("rational function with zero denominator");
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
    if (o.num_.is_zero()) throw SingularError("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    return *this;
}

RationalFn RationalFn::substitute(const std::vector<Exponent>& images) const {
    return {num_.substitute(images), den_.substitute(images)};
}

CycScalar RationalFn::evaluate(const std::vector<CycScalar>& values) const {
    CycScalar d = den_.evaluate(values);
    if (d.is_zero()) throw SingularError("rational function evaluated at a pole");
    return num_.evaluate(values) / d;
}

std::string RationalFn::str() const {
    if (den_ == LaurentPoly::constant(den_.vars(), 1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool rf_equal(const RationalFn& a, const RationalFn& b) {
    if (a.vars() != b.vars()) throw InputError("mismatched variable lists");
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

// ---------------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(std::vector<std::string> vars, std::size_t var, int order)
    : vars_(std::move(vars)), var_(var), order_(order) {
    if (order < 0) throw InputError("negative series order");
    if (var >= vars_.size()) throw InputError("series variable out of range");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, RationalFn(LaurentPoly(vars_)));
}

void TruncSeries::set_coeff(int m, RationalFn f) {
    if (m < 0 || m > order_) throw InputError("series index out of range");
    coeffs_[static_cast<std::size_t>(m)] = std::move(f);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (vars_ != o.vars_ || var_ != o.var_) throw InputError("mismatched series");
    int n = std::min(order_, o.order_);
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    order_ = n;
    for (int m = 0; m <= n; ++m) coeffs_[m] += o.coeffs_[m];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.vars_ != b.vars_ || a.var_ != b.var_) throw InputError("mismatched series");
    int n = std::min(a.order_, b.order_);
    TruncSeries r(a.vars_, a.var_, n);
    for (int m = 0; m <= n; ++m)
        for (int j = 0; j <= m; ++j) r.coeffs_[m] += a.coeffs_[j] * b.coeffs_[m - j];
    return r;
}

RationalFn TruncSeries::truncated() const {
    RationalFn out{LaurentPoly(vars_)};
    for (int m = 0; m <= order_; ++m) {
        Exponent e(vars_.size(), 0);
        e[var_] = m;
        out += coeffs_[m] * RationalFn(LaurentPoly::monomial(vars_, e));
    }
    return out;
}

bool TruncSeries::equals(const TruncSeries& o) const {
    if (vars_ != o.vars_ || var_ != o.var_) return false;
    int n = std::min(order_, o.order_);
    for (int m = 0; m <= n; ++m)
        if (!rf_equal(coeffs_[m], o.coeffs_[m])) return false;
    return true;
}

TruncSeries series_of(const RationalFn& f, std::size_t var, int order) {
    const auto& vars = f.vars();
    if (var >= vars.size()) throw InputError("series variable out of range");
    const LaurentPoly& num = f.num();
    const LaurentPoly& den = f.den();
    // Normalize so the denominator's lowest power of the series variable is zero.
    std::int64_t shift = den.min_degree(var);
    if (shift > 0) throw SingularError("denominator vanishes at the expansion point");
    Exponent se(vars.size(), 0);
    se[var] = -shift;
    LaurentPoly mono = LaurentPoly::monomial(vars, se);
    LaurentPoly n = num * mono, d = den * mono;
    if (!n.is_zero() && n.min_degree(var) < 0) throw SingularError("numerator has a pole at the expansion point");
    LaurentPoly d0 = d.coefficient_of(var, 0);
    if (d0.is_zero()) throw SingularError("denominator vanishes at the expansion point");
    std::int64_t dtop = d.max_degree(var);

    TruncSeries s(vars, var, order);
    std::vector<LaurentPoly> dj;
    for (std::int64_t j = 0; j <= dtop; ++j) dj.push_back(d.coefficient_of(var, j));
    RationalFn inv_d0(LaurentPoly::constant(vars, 1), d0);
    const bool unit = d0.size() == 1 && d0.terms().begin()->first == Exponent(vars.size(), 0);
    const CycScalar d0c = unit ? d0.terms().begin()->second.inverse() : CycScalar();
    for (int m = 0; m <= order; ++m) {
        RationalFn acc(n.coefficient_of(var, m));
        for (std::int64_t j = 1; j <= dtop && j <= m; ++j)
            if (!dj[j].is_zero()) acc -= RationalFn(dj[j]) * s.coeff(m - static_cast<int>(j));
        if (unit) {
            acc = RationalFn(acc.num() * d0c, acc.den());
        } else {
            acc *= inv_d0;
        }
        s.set_coeff(m, acc);
    }
    return s;
}

TruncSeries series_of(const RationalFn& f, const std::string& var, int order) {
    return series_of(f, f.num().var_index(var), order);
}

}  // namespace gsp4
