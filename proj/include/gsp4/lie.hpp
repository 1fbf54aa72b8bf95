#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/exact.hpp"

namespace gsp4 {

// 4x4 matrix over Q(i, sqrt2); used for both algebra and group elements.
class LieMatrix {
public:
    LieMatrix() = default;
    static LieMatrix identity();
    static LieMatrix unit(int i, int j);  // E_{ij}, zero-based
    static LieMatrix from_rows(const std::array<std::array<CycScalar, 4>, 4>& rows);

    CycScalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(4 * i + j)]; }
    const CycScalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(4 * i + j)]; }

    bool is_zero() const;
    LieMatrix transpose() const;
    LieMatrix conj() const;
    LieMatrix inverse() const;  // SingularError if not invertible
    CycScalar trace() const;
    std::string str() const;

    LieMatrix& operator+=(const LieMatrix& o);
    LieMatrix& operator-=(const LieMatrix& o);
    friend LieMatrix operator+(LieMatrix a, const LieMatrix& b) { return a += b; }
    friend LieMatrix operator-(LieMatrix a, const LieMatrix& b) { return a -= b; }
    friend LieMatrix operator-(const LieMatrix& a);
    friend LieMatrix operator*(const LieMatrix& a, const LieMatrix& b);
    friend LieMatrix operator*(const CycScalar& s, const LieMatrix& a);
    friend bool operator==(const LieMatrix& a, const LieMatrix& b) { return a.a_ == b.a_; }
    friend bool operator!=(const LieMatrix& a, const LieMatrix& b) { return !(a == b); }

private:
    std::array<CycScalar, 16> a_{};
};

// 2x2 complex matrix, row-major.
using Mat2 = std::array<CycScalar, 4>;
Mat2 mat2_unit(int i, int j);

LieMatrix bracket(const LieMatrix& x, const LieMatrix& y);

// psi = [[0, I2], [-I2, 0]]
LieMatrix psi();
// t(X) psi + psi X = 0
bool in_sp4(const LieMatrix& x);
// t(X) psi + psi X = mu psi for some scalar mu
bool in_gsp4_algebra(const LieMatrix& x);
// t(g) psi g = nu(g) psi; throws InputError if g is not a similitude
CycScalar similitude(const LieMatrix& g);

// Differential of kappa: U(2) -> Sp(4, R), extended complex-linearly to gl2(C).
LieMatrix dkappa(const Mat2& z);
LieMatrix T1();
LieMatrix T2();
bool in_compact_cartan(const LieMatrix& x);

// p_+-(Z) = [[Z, +-iZ], [+-iZ, -Z]]
LieMatrix p_pm(const Mat2& z, int sign);

struct NcRootVector {
    int a = 0, b = 0;
    LieMatrix matrix;
};

// X_{(a,b)} for (a,b) in {+-(2,0), +-(1,1), +-(0,2)}.
LieMatrix nc_root(int a, int b);
std::vector<NcRootVector> nc_root_vectors();
// X_{(1,-1)} = dkappa(E12) and X_{(-1,1)} = dkappa(E21).
LieMatrix compact_root(int sign);

LieMatrix N_matrix();
LieMatrix J_matrix();
// Block rotation with parameters (x, y, x', y').
LieMatrix rot(const CycScalar& x, const CycScalar& y, const CycScalar& xp, const CycScalar& yp);
// iota((a b; c d), (a' b'; c' d')) = rows [a,0,b,0],[0,a',0,b'],[c,0,d,0],[0,c',0,d'].
LieMatrix iota(const Mat2& g1, const Mat2& g2);

LieMatrix ad_conjugate(const LieMatrix& g, const LieMatrix& x);

struct CartanParts {
    LieMatrix k, pplus, pminus;
};
CartanParts cartan_split(const LieMatrix& x);

// Tangent vectors (v+,0), (0,v+), (v-,0), (0,v-) of g'/k', with v+- = [[1, +-i], [+-i, -1]].
using TangentVector = std::pair<Mat2, Mat2>;
enum class Tangent { e1, e2, e3, e4 };
TangentVector tangent(Tangent which);
LieMatrix iota_push(const TangentVector& v);

// Split (algebraic) Chevalley basis of sp4, labelled by root: H1, H2, then E/F for
// (1,-1), (0,2), (2,0), (1,1) and their negatives.
struct SplitElement {
    std::string label;
    int a = 0, b = 0;  // root; (0,0) for the Cartan elements
    LieMatrix matrix;
};
const std::vector<SplitElement>& split_basis();
// Coordinates of an sp4 element in split_basis(); InputError if x is not in sp4.
std::vector<CycScalar> split_coords(const LieMatrix& x);

// Linear solve over Q(i, sqrt2): coordinates of target in span(basis), or nothing.
bool solve_in_span(const std::vector<LieMatrix>& basis, const LieMatrix& target, std::vector<CycScalar>& coords);

}  // namespace gsp4
