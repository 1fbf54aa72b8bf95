#include "gsp4/lie.hpp"

#include "gsp4/errors.hpp"
#include "gsp4/linalg.hpp"

namespace gsp4 {

LieMatrix LieMatrix::identity() {
    LieMatrix m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1;
    return m;
}

LieMatrix LieMatrix::unit(int i, int j) {
    LieMatrix m;
    m(i, j) = 1;
    return m;
}

LieMatrix LieMatrix::from_rows(const std::array<std::array<CycScalar, 4>, 4>& rows) {
    LieMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
}

bool LieMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

LieMatrix LieMatrix::transpose() const {
    LieMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (*this)(j, i);
    return m;
}

LieMatrix LieMatrix::conj() const {
    LieMatrix m;
    for (std::size_t k = 0; k < 16; ++k) m.a_[k] = a_[k].conj();
    return m;
}

LieMatrix LieMatrix::inverse() const {
    DenseMat<CycScalar> aug(4, std::vector<CycScalar>(8));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) aug[i][j] = (*this)(i, j);
        aug[i][4 + i] = 1;
    }
    auto e = rref(aug, 8);
    if (e.pivots.size() < 4 || e.pivots[3] != 3) throw SingularError("matrix is not invertible");
    LieMatrix inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv(i, j) = e.rows[i][4 + j];
    return inv;
}

CycScalar LieMatrix::trace() const { return a_[0] + a_[5] + a_[10] + a_[15]; }

std::string LieMatrix::str() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < 4; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
        s += "]";
    }
    return s + "]";
}

LieMatrix& LieMatrix::operator+=(const LieMatrix& o) {
    for (std::size_t k = 0; k < 16; ++k) a_[k] += o.a_[k];
    return *this;
}

LieMatrix& LieMatrix::operator-=(const LieMatrix& o) {
    for (std::size_t k = 0; k < 16; ++k) a_[k] -= o.a_[k];
    return *this;
}

LieMatrix operator-(const LieMatrix& a) {
    LieMatrix m;
    for (std::size_t k = 0; k < 16; ++k) m.a_[k] = -a.a_[k];
    return m;
}

LieMatrix operator*(const LieMatrix& a, const LieMatrix& b) {
    LieMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < 4; ++j)
                if (!b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

LieMatrix operator*(const CycScalar& s, const LieMatrix& a) {
    LieMatrix m;
    for (std::size_t k = 0; k < 16; ++k) m.a_[k] = s * a.a_[k];
    return m;
}

Mat2 mat2_unit(int i, int j) {
    Mat2 m{};
    m[static_cast<std::size_t>(2 * i + j)] = 1;
    return m;
}

LieMatrix bracket(const LieMatrix& x, const LieMatrix& y) { return x * y - y * x; }

LieMatrix psi() {
    LieMatrix m;
    m(0, 2) = 1;
    m(1, 3) = 1;
    m(2, 0) = -1;
    m(3, 1) = -1;
    return m;
}

bool in_sp4(const LieMatrix& x) { return (x.transpose() * psi() + psi() * x).is_zero(); }

bool in_gsp4_algebra(const LieMatrix& x) {
    LieMatrix s = x.transpose() * psi() + psi() * x;
    CycScalar mu = s(0, 2);
    return s == mu * psi();
}

CycScalar similitude(const LieMatrix& g) {
    LieMatrix s = g.transpose() * psi() * g;
    CycScalar nu = s(0, 2);
    if (s != nu * psi() || nu.is_zero()) throw InputError("matrix is not a symplectic similitude");
    return nu;
}

static void put_block(LieMatrix& m, int bi, int bj, const Mat2& z, const CycScalar& f) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(2 * bi + i, 2 * bj + j) += f * z[static_cast<std::size_t>(2 * i + j)];
}

// kappa(A + iB) = [[A, B], [-B, A]] on U(2). Its complex-linear extension is
// dkappa(Z) = [[(Z - tZ)/2, -i(Z + tZ)/2], [i(Z + tZ)/2, (Z - tZ)/2]].
LieMatrix dkappa(const Mat2& z) {
    Mat2 anti{}, sym{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const auto ij = static_cast<std::size_t>(2 * i + j), ji = static_cast<std::size_t>(2 * j + i);
            anti[ij] = (z[ij] - z[ji]) * CycScalar(Rat(1, 2));
            sym[ij] = (z[ij] + z[ji]) * CycScalar(Rat(1, 2));
        }
    LieMatrix m;
    const CycScalar i = CycScalar::i();
    put_block(m, 0, 0, anti, 1);
    put_block(m, 1, 1, anti, 1);
    put_block(m, 0, 1, sym, -i);
    put_block(m, 1, 0, sym, i);
    return m;
}

LieMatrix T1() {
    Mat2 z = mat2_unit(0, 0);
    z[0] = CycScalar::i();
    return dkappa(z);
}

LieMatrix T2() {
    Mat2 z = mat2_unit(1, 1);
    z[3] = CycScalar::i();
    return dkappa(z);
}

bool in_compact_cartan(const LieMatrix& x) {
    std::vector<CycScalar> c;
    return solve_in_span({T1(), T2()}, x, c);
}

LieMatrix p_pm(const Mat2& z, int sign) {
    LieMatrix m;
    const CycScalar si = CycScalar(sign) * CycScalar::i();
    put_block(m, 0, 0, z, 1);
    put_block(m, 0, 1, z, si);
    put_block(m, 1, 0, z, si);
    put_block(m, 1, 1, z, -1);
    return m;
}

LieMatrix nc_root(int a, int b) {
    const int sign = (a + b > 0) ? 1 : -1;
    const int ua = a * sign, ub = b * sign;
    Mat2 z{};
    if (ua == 2 && ub == 0) z = mat2_unit(0, 0);
    else if (ua == 1 && ub == 1) { z = mat2_unit(0, 1); z[2] = 1; }
    else if (ua == 0 && ub == 2) z = mat2_unit(1, 1);
    else throw InputError("not a non-compact root: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return p_pm(z, sign);
}

std::vector<NcRootVector> nc_root_vectors() {
    const int labels[6][2] = {{2, 0}, {1, 1}, {0, 2}, {-2, 0}, {-1, -1}, {0, -2}};
    std::vector<NcRootVector> out;
    for (const auto& l : labels) out.push_back({l[0], l[1], nc_root(l[0], l[1])});
    return out;
}

LieMatrix compact_root(int sign) { return dkappa(sign > 0 ? mat2_unit(0, 1) : mat2_unit(1, 0)); }

LieMatrix N_matrix() {
    LieMatrix m;
    m(0, 1) = -1;
    m(1, 0) = -1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

LieMatrix J_matrix() {
    const CycScalar h{0, 0, Rat(1, 2), 0};   // 1/sqrt2
    const CycScalar ih{0, 0, 0, Rat(1, 2)};  // i/sqrt2
    LieMatrix m;
    for (int k = 0; k < 4; ++k) m(k, k) = h;
    m(0, 2) = ih;
    m(1, 3) = ih;
    m(2, 0) = ih;
    m(3, 1) = ih;
    return m;
}

LieMatrix rot(const CycScalar& x, const CycScalar& y, const CycScalar& xp, const CycScalar& yp) {
    LieMatrix m;
    m(0, 0) = x;
    m(0, 2) = y;
    m(2, 0) = -y;
    m(2, 2) = x;
    m(1, 1) = xp;
    m(1, 3) = yp;
    m(3, 1) = -yp;
    m(3, 3) = xp;
    return m;
}

LieMatrix iota(const Mat2& g1, const Mat2& g2) {
    LieMatrix m;
    m(0, 0) = g1[0];
    m(0, 2) = g1[1];
    m(2, 0) = g1[2];
    m(2, 2) = g1[3];
    m(1, 1) = g2[0];
    m(1, 3) = g2[1];
    m(3, 1) = g2[2];
    m(3, 3) = g2[3];
    return m;
}

LieMatrix ad_conjugate(const LieMatrix& g, const LieMatrix& x) { return g * x * g.inverse(); }

static std::vector<LieMatrix> compact_basis() {
    return {dkappa(mat2_unit(0, 0)), dkappa(mat2_unit(1, 1)), dkappa(mat2_unit(0, 1)), dkappa(mat2_unit(1, 0))};
}

CartanParts cartan_split(const LieMatrix& x) {
    if (!in_sp4(x)) throw InputError("cartan_split needs an element of sp4(C)");
    std::vector<LieMatrix> basis = compact_basis();
    const int pl[3][2] = {{2, 0}, {1, 1}, {0, 2}};
    for (const auto& l : pl) basis.push_back(nc_root(l[0], l[1]));
    for (const auto& l : pl) basis.push_back(nc_root(-l[0], -l[1]));
    std::vector<CycScalar> c;
    if (!solve_in_span(basis, x, c)) throw InternalError("k + p+ + p- does not span sp4");
    CartanParts parts;
    for (std::size_t j = 0; j < 10; ++j) {
        LieMatrix term = c[j] * basis[j];
        if (j < 4) parts.k += term;
        else if (j < 7) parts.pplus += term;
        else parts.pminus += term;
    }
    return parts;
}

TangentVector tangent(Tangent which) {
    const CycScalar i = CycScalar::i();
    const Mat2 vplus{1, i, i, -1}, vminus{1, -i, -i, -1}, zero{};
    switch (which) {
        case Tangent::e1: return {vplus, zero};
        case Tangent::e2: return {zero, vplus};
        case Tangent::e3: return {vminus, zero};
        case Tangent::e4: return {zero, vminus};
    }
    throw InputError("unknown tangent vector");
}

LieMatrix iota_push(const TangentVector& v) { return iota(v.first, v.second); }

const std::vector<SplitElement>& split_basis() {
    static const std::vector<SplitElement> basis = [] {
        auto E = [](int i, int j) { return LieMatrix::unit(i, j); };
        std::vector<SplitElement> b;
        b.push_back({"H1", 0, 0, E(0, 0) - E(2, 2)});
        b.push_back({"H2", 0, 0, E(1, 1) - E(3, 3)});
        b.push_back({"E(1,-1)", 1, -1, E(0, 1) - E(3, 2)});
        b.push_back({"E(0,2)", 0, 2, E(1, 3)});
        b.push_back({"E(2,0)", 2, 0, E(0, 2)});
        b.push_back({"E(1,1)", 1, 1, E(0, 3) + E(1, 2)});
        b.push_back({"F(1,-1)", -1, 1, E(1, 0) - E(2, 3)});
        b.push_back({"F(0,2)", 0, -2, E(3, 1)});
        b.push_back({"F(2,0)", -2, 0, E(2, 0)});
        b.push_back({"F(1,1)", -1, -1, E(3, 0) + E(2, 1)});
        return b;
    }();
    return basis;
}

// X = [[A, B], [C, -tA]] with B, C symmetric; coordinates are read off the entries.
std::vector<CycScalar> split_coords(const LieMatrix& x) {
    if (!in_sp4(x)) throw InputError("split_coords needs an element of sp4(C)");
    return {x(0, 0), x(1, 1), x(0, 1), x(1, 3), x(0, 2), x(0, 3), x(1, 0), x(3, 1), x(2, 0), x(3, 0)};
}

bool solve_in_span(const std::vector<LieMatrix>& basis, const LieMatrix& target, std::vector<CycScalar>& coords) {
    DenseMat<CycScalar> a(16, std::vector<CycScalar>(basis.size()));
    std::vector<CycScalar> b(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto r = static_cast<std::size_t>(4 * i + j);
            for (std::size_t k = 0; k < basis.size(); ++k) a[r][k] = basis[k](i, j);
            b[r] = target(i, j);
        }
    return solve_linear(a, b, basis.size(), coords);
}

}  // namespace gsp4
