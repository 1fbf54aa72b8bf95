#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsp4/exact.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/root_data.hpp"

namespace gsp4 {

// Modules are built inside Sym^a(r) (x) Sym^b(Lambda^2 r), a direct summand of r^{(x)(a+2b)}.
// A basis monomial in x1..x4 (for e1..e4) and y12,y13,y14,y23,y24,y34 (for e_i ^ e_j)
// is packed as ten 6-bit exponents.
using TensorIndex = std::uint64_t;
using RatTensor = std::map<TensorIndex, Rat>;
using CycTensor = std::map<TensorIndex, CycScalar>;
using ModVec = std::vector<CycScalar>;
using WeightKey = std::array<int, 2>;

// Sparse matrix in a module basis, stored by columns.
struct ModuleOp {
    std::vector<std::vector<std::pair<int, Rat>>> cols;
    ModVec apply(const ModVec& v) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
};

class RepModule {
public:
    const Weight& highest_weight() const { return lam_; }
    int degree() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    const std::vector<RatTensor>& basis() const { return basis_; }
    const RatTensor& seed() const { return seed_; }
    const WeightKey& weight_of(int idx) const { return weight_[static_cast<std::size_t>(idx)]; }
    const std::map<WeightKey, std::vector<int>>& weight_spaces() const { return spaces_; }
    int weight_multiplicity(int u, int up) const;

    // Operators for the split basis elements, keyed by SplitElement::label.
    const ModuleOp& op(const std::string& label) const;
    const std::map<std::string, ModuleOp>& ops() const { return ops_; }

    // Action of an element of sp4(C) through its split coordinates.
    ModVec act(const LieMatrix& x, const ModVec& v) const;
    // Coordinates of a tensor known to lie in the module; verify=true re-expands and checks.
    ModVec coords_of(const CycTensor& t, bool verify = false) const;
    ModVec basis_vector(int idx) const;

    friend RepModule build_irrep(const Weight& lam, int bound, bool verify_closure);

private:
    Weight lam_;
    int n_ = 0;
    RatTensor seed_;
    std::vector<RatTensor> basis_;
    std::vector<TensorIndex> pivot_;
    std::vector<WeightKey> weight_;
    std::map<WeightKey, std::vector<int>> spaces_;
    std::map<std::string, ModuleOp> ops_;
};

// Lie algebra action (derivation); x must have rational entries.
RatTensor apply_generator(const LieMatrix& x, const RatTensor& t);
CycTensor apply_generator(const LieMatrix& x, const CycTensor& t);
// Group action by substitution.
CycTensor apply_group(const LieMatrix& g, const CycTensor& t);
// e1^{(x)(k-k')} (x) (e1 (x) e2 - e2 (x) e1)^{(x)k'}, i.e. x1^{k-k'} y12^{k'}.
RatTensor highest_weight_seed(int k, int kp);
WeightKey tensor_weight(TensorIndex m);
std::string tensor_str(const CycTensor& t);

// Irreducible module of highest weight lam inside the (k+k')-th tensor power. With
// verify_closure the images of all ten split generators are re-expanded and checked.
RepModule build_irrep(const Weight& lam, int bound = 12, bool verify_closure = false);

struct CayleyVector {
    ModVec coords;          // coordinates of (sqrt2 J)^{(x)n} w
    int sqrt2_exponent = 0;  // v = sqrt2^{sqrt2_exponent} * coords
    CompactWeight weight;
};

// Compact weight of a module vector, if it is a weight vector for T1, T2.
std::optional<std::array<int, 2>> compact_weight_of(const RepModule& m, const ModVec& v);
CayleyVector cayley_vector(const RepModule& m, int idx);
ModVec group_act(const RepModule& m, const LieMatrix& g, const ModVec& v);

// ---------------------------------------------------------------- G' decomposition

// Adapted basis of the module for g' = iota(sl2 x sl2): for each G'-highest-weight
// vector h of type (p, q), the vectors F(2,0)^a F(0,2)^b h.
class GprimeDecomposition {
public:
    explicit GprimeDecomposition(const RepModule& m);

    // (p, q) -> number of copies found from highest-weight vectors
    const std::map<std::array<int, 2>, int>& types() const { return types_; }
    ModVec project(int p, int q, const ModVec& v) const;
    // Coefficient of F(2,0)^a F(0,2)^b h_copy in the expansion of v.
    CycScalar orbit_coefficient(int p, int q, int copy, int a, int b, const ModVec& v) const;

private:
    struct Orbit {
        int p, q, copy, a, b;
        std::vector<Rat> vec;
    };
    struct Space {
        std::vector<int> idx;      // module basis indices of this weight space
        std::vector<int> orbits;   // indices into orbits_
        DenseMat<Rat> inverse;     // adapted-basis coordinates from module coordinates
    };
    std::vector<CycScalar> solve_space(const Space& s, const ModVec& v) const;

    const RepModule* m_;
    std::map<std::array<int, 2>, int> types_;
    std::vector<Orbit> orbits_;
    std::map<WeightKey, Space> spaces_;
};

// Projection onto the joint eigenspace of the two sl2 Casimirs; independent cross-check.
ModVec casimir_project(const RepModule& m, int p, int q, const ModVec& v);

struct IsotypicResult {
    ModVec vec;
    bool admissible = true;
};
IsotypicResult isotypic_project(const RepModule& m, const GprimeDecomposition& g, int p, int q, const ModVec& v);

struct LambdaScanRow {
    int i = 0;
    bool matched = false;       // weight-matched pair exists
    int r = 0, s = 0;           // basis pair a_r x a_s of the same compact weight
    int rDual = 0, sDual = 0;   // the pairing partner (p - r, q - s)
    bool nonzero = false;       // isotypic component of X^i v is non-zero
    CycScalar lambda;           // coefficient on the adapted vector when multiplicity is 1
    bool lambda_defined = false;
};

struct LambdaScan {
    int k = 0, kp = 0, p = 0, q = 0;
    int multiplicity = 0;
    int module_dim = 0;
    CompactWeight v_weight;
    std::vector<LambdaScanRow> rows;
};

LambdaScan lambda_scan(int k, int kp, int p, int q, int i_min, int i_max);
LambdaScan lambda_scan(int k, int kp, int i_min, int i_max);

// ---------------------------------------------------------------- U(2) modules

// tau_{(a,b)} with standard basis v_0..v_d, d = a - b.
class KTypeModule {
public:
    KTypeModule(int a, int b);
    int a() const { return a_; }
    int b() const { return b_; }
    int d() const { return a_ - b_; }
    int dim() const { return d() + 1; }

    // Actions of dkappa(E11), dkappa(E22), dkappa(E12) = X(1,-1), dkappa(E21) = X(-1,1).
    std::vector<Rat> e11(const std::vector<Rat>& v) const;
    std::vector<Rat> e22(const std::vector<Rat>& v) const;
    std::vector<Rat> raise(const std::vector<Rat>& v) const;
    std::vector<Rat> lower(const std::vector<Rat>& v) const;
    std::vector<Rat> basis_vector(int s) const;
    std::array<int, 2> weight(int s) const { return {s + b_, a_ - s}; }

private:
    int a_, b_;
};

// X(1,-1)^i v_0 by iterating the standard-basis action.
std::vector<Rat> lowering_power(const KTypeModule& m, int i);
// n!/(n-m)! * (d-n+m)!/(d-n)!: X(-1,1)^m X(1,-1)^n v0 = this * X(1,-1)^{n-m} v0.
Rat raise_lower_coefficient(int d, int m, int n);

// b_j = (iX - Y)^j (iX + Y)^{n-j} and the dual basis a_j of Sym^n V2^dual.
class SymBasis {
public:
    explicit SymBasis(int n);
    int n() const { return n_; }
    const LaurentPoly& b(int j) const { return b_[static_cast<std::size_t>(j)]; }
    // Coordinates of a_j against the dual of the monomial basis X^{n-m} Y^m.
    const std::vector<CycScalar>& a(int j) const { return a_[static_cast<std::size_t>(j)]; }
    CycScalar pair(const std::vector<CycScalar>& functional, const LaurentPoly& poly) const;
    // Matrix of g = [[a,b],[c,d]] on the dual space, in the dual monomial basis.
    DenseMat<CycScalar> dual_action(const Mat2& g) const;
    // lambda'(n - 2j, -n): rot(x, y) acts by (x+iy)^{n-2j} (x^2+y^2)^{(-n-(n-2j))/2}
    std::array<int, 2> a_weight(int j) const { return {n_ - 2 * j, -n_}; }

private:
    int n_;
    std::vector<LaurentPoly> b_;
    std::vector<std::vector<CycScalar>> a_;
};

// ---------------------------------------------------------------- wedge spaces

struct KTypeLabel {
    int a = 0, b = 0, mult = 0;
    friend bool operator==(const KTypeLabel& x, const KTypeLabel& y) = default;
};

// Lambda^np p+ (x) Lambda^nm p- with the adjoint K-action.
class WedgeSpace {
public:
    WedgeSpace(int np, int nm);

    struct Elem {
        std::vector<int> plus, minus;  // indices into (2,0),(1,1),(0,2) resp. negatives
    };
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Elem>& basis() const { return basis_; }
    std::array<int, 2> weight(int idx) const;
    int index_of(const std::vector<std::array<int, 2>>& plus, const std::vector<std::array<int, 2>>& minus) const;
    std::vector<CycScalar> element(const std::vector<std::array<int, 2>>& plus,
                                   const std::vector<std::array<int, 2>>& minus) const;

    // ad action of an element of k_C
    std::vector<CycScalar> ad(const LieMatrix& y, const std::vector<CycScalar>& v) const;
    DenseMat<CycScalar> ad_matrix(const LieMatrix& y) const;

    // Decomposition by compact-torus character bookkeeping.
    std::vector<KTypeLabel> decompose() const;
    // Same, from kernels of ad X(1,-1) on weight spaces.
    std::vector<KTypeLabel> decompose_by_highest_vectors() const;

private:
    int np_, nm_;
    std::vector<Elem> basis_;
};

std::vector<KTypeLabel> wedge_decompose(int np, int nm);

}  // namespace gsp4
