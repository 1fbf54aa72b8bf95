#include "gsp4/pairing.hpp"

#include <numeric>
#include <sstream>

#include "gsp4/arch.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/linalg.hpp"
#include "gsp4/rep.hpp"
#include "gsp4/root_data.hpp"

namespace gsp4 {

PairingConstants::PairingConstants(int k, int kp) : k_(k), kp_(kp) {
    if (!(k >= kp && kp >= 0)) throw InputError("pairing constants need k >= k' >= 0");
}

std::optional<Rat> PairingConstants::A_if_defined(int i, int j) const {
    const int n = k_ + kp_;
    if (j < 0 || j > 3 || i < j || i > n) return std::nullopt;
    return factorial(n + 4 - i) / factorial(n + 4 - (i + j)) * factorial(i + j) / factorial(i - j) *
           factorial(n - i + j) / factorial(n - i);
}

Rat PairingConstants::A(int i, int j) const {
    auto a = A_if_defined(i, j);
    if (!a)
        throw InputError("A index out of range: need 0 <= j <= 3 and j <= i <= k+k', got i=" + std::to_string(i) +
                         ", j=" + std::to_string(j));
    return *a;
}

Rat PairingConstants::B(int i) const { return Rat(i + 1) * Rat(k_ + kp_ + 4 - i); }
Rat PairingConstants::C(int i) const { return Rat(i) * Rat(k_ + kp_ - i + 1); }

PairingConstants constants(int k, int kp) { return {k, kp}; }

CycScalar a_pairing(int p, int q, int r, int s, int rp, int sp) {
    if (r < 0 || r > p || rp < 0 || rp > p || s < 0 || s > q || sp < 0 || sp > q)
        throw InputError("a_pairing indices out of range");
    if (r + rp != p || s + sp != q) return CycScalar(0);
    const CycScalar two_i(0, 2);
    return CycScalar((r + s) % 2 == 0 ? 1 : -1) * two_i.pow(-(p + q)) * CycScalar(binomial(p, r) * binomial(q, s));
}

ProjectionCoeffs projection_coeffs(const std::vector<int>& order) {
    const WedgeSpace w(2, 1);
    const auto d = static_cast<std::size_t>(w.dim());
    std::vector<int> perm = order;
    if (perm.empty()) {
        perm.resize(d);
        std::iota(perm.begin(), perm.end(), 0);
    }
    if (perm.size() != d) throw InputError("basis ordering must be a permutation of 0..8");

    const LieMatrix lower = compact_root(-1), raise = compact_root(+1);
    auto chain = [&](std::vector<CycScalar> v, int len) {
        std::vector<std::vector<CycScalar>> out;
        for (int t = 0; t < len; ++t) {
            out.push_back(v);
            v = w.ad(lower, v);
        }
        return out;
    };
    // highest weight vector in a weight space: kernel of ad X(1,-1)
    auto highest = [&](std::array<int, 2> wt) {
        std::vector<std::size_t> idx;
        for (int i = 0; i < w.dim(); ++i)
            if (w.weight(i) == wt) idx.push_back(static_cast<std::size_t>(i));
        const auto rm = w.ad_matrix(raise);
        DenseMat<CycScalar> a(d, std::vector<CycScalar>(idx.size()));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) a[r][c] = rm[r][idx[c]];
        const auto ker = kernel(a, idx.size());
        if (ker.size() != 1) throw InternalError("expected a unique highest weight vector");
        std::vector<CycScalar> v(d);
        for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = ker[0][c];
        return v;
    };

    const auto h = w.element({{2, 0}, {1, 1}}, {{0, -2}});
    std::vector<std::vector<CycScalar>> cols;
    for (auto& v : chain(h, 5)) cols.push_back(v);                // tau(3,-1): 0..4
    for (auto& v : chain(highest({2, 0}), 3)) cols.push_back(v);  // tau(2,0): 5..7
    cols.push_back(highest({1, 1}));                               // tau(1,1): 8

    auto solve = [&](const std::vector<CycScalar>& u) {
        DenseMat<CycScalar> a(d, std::vector<CycScalar>(d));
        std::vector<CycScalar> b(d);
        for (std::size_t r = 0; r < d; ++r) {
            const auto src = static_cast<std::size_t>(perm[r]);
            for (std::size_t c = 0; c < d; ++c) a[r][c] = cols[c][src];
            b[r] = u[src];
        }
        if (rank(a, d) != d) throw InternalError("adapted K-basis of the wedge space is rank deficient");
        std::vector<CycScalar> x;
        if (!solve_linear(a, b, d, x)) throw InternalError("wedge vector outside the adapted span");
        for (const auto& c : x)
            if (!c.is_rational()) throw InternalError("non-rational projection coefficient");
        return x;
    };
    const auto c1 = solve(w.element({{2, 0}, {0, 2}}, {{0, -2}}));
    const auto c2 = solve(w.element({{2, 0}, {0, 2}}, {{-2, 0}}));
    ProjectionCoeffs pc;
    pc.alpha = c1[1][0];
    pc.beta = c1[5][0];
    pc.gamma = c1[8][0];
    pc.beta3 = c2[3][0];
    pc.second_tau20 = c2[7][0];
    pc.second_tau11 = c2[8][0];
    return pc;
}

std::vector<VanishingConstraint> vanishing_constraints(int p, int q, int k, int kp) {
    const int m = -k + kp + p + q;
    auto make = [&](int id, std::string pairing, int i, char index, int twice, int bound) {
        VanishingConstraint v;
        v.id = id;
        v.pairing = std::move(pairing);
        v.forced_i = i;
        v.index = index;
        v.forced_value = Rat(twice, 2);
        v.integral = v.forced_value.is_integer();
        v.in_range = v.integral && v.forced_value >= Rat(0) && v.forced_value <= Rat(bound);
        return v;
    };
    return {make(1, "<X^i v, a_r x a_0>", kp + q, 'r', m, p),
            make(2, "<X^i v, a_0 x a_s>", k - p, 's', m, q),
            make(3, "<X^i vbar, a_p x a_s>", kp + p, 's', m, q),
            make(4, "<X^i vbar, a_r x a_q>", k + q, 'r', -k + kp + p - q, p)};
}

std::string XiToken::str() const {
    return std::string(conjugate ? "Xibar" : "Xi") + "_{" + std::to_string(n) + "," + std::to_string(r) + "," +
           std::to_string(s) + "}";
}

std::string RegulatorExpression::str() const {
    std::ostringstream os;
    for (const auto& t : terms) {
        os << "C" << t.constant << " * [";
        bool first = true;
        for (const auto& s : t.summands) {
            if (!s.present) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << s.coefficient.str() << ") int " << s.xi.str();
        }
        os << "]\n";
    }
    return os.str();
}

namespace {
int sgn_pow(int e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace

std::optional<std::string> main_hypothesis_violation(int p, int q, int k, int kp) {
    if (!(k > kp && kp > 0)) return "k > k' > 0";
    if (p < 0 || q < 0) return "p, q >= 0";
    if ((k + kp - p - q) % 2 != 0) return "k + k' = p + q mod 2";
    if (!branching_admissible(BranchQuery::standard(p, q, k, kp))) return "branching inequalities";
    if (k + kp == p + q) return "k + k' != p + q";
    if (k - p - q - 1 == 0) return "k - p - q - 1 != 0";
    if (k - kp - p - q - 2 == 0) return "k - k' - p - q - 2 != 0";
    if (k - p - q - 2 == 0) return "k - p - q - 2 != 0";
    if (((k - kp - p - q - 2) / 2) % 2 != 0) return "(k - k' - p - q - 2)/2 even";
    if (((k - kp + p + q) / 2) % 2 != 0) return "(k - k' + p + q)/2 even";
    return std::nullopt;
}

RegulatorExpression assemble(int p, int q, int k, int kp) {
    if (auto v = main_hypothesis_violation(p, q, k, kp)) throw InputError("assemble: hypothesis failed: " + *v);
    const PairingConstants pc(k, kp);
    RegulatorExpression e;
    e.p = p;
    e.q = q;
    e.k = k;
    e.kp = kp;

    RegulatorTerm t1{1, "3/(160(p+1)) sum_j (-1)^{k'+q+j} binom(3,j) A_{k,k',k'+q+j,j} Xi_{k-q-2j+4,-k+k'+q,-q-2}", {}};
    for (int j = 0; j <= 3; ++j) {
        Summand s;
        s.j = j;
        s.xi = {false, k - q - 2 * j + 4, -k + kp + q, -q - 2};
        auto a = pc.A_if_defined(kp + q + j, j);
        s.present = a.has_value();
        if (a) s.coefficient = Rat(3, 160 * (p + 1)) * Rat(sgn_pow(kp + q + j)) * binomial(3, j) * *a;
        t1.summands.push_back(s);
    }
    RegulatorTerm t2{2, "-(-1)^k/(8(q+1)) (B_{k-p} - C_{k-p+1}) Xi_{k'+p+3,-p-2,-k+k'+p}", {}};
    {
        Summand s;
        s.xi = {false, kp + p + 3, -p - 2, -k + kp + p};
        s.coefficient = -Rat(sgn_pow(k), 8 * (q + 1)) * (pc.B(k - p) - pc.C(k - p + 1));
        t2.summands.push_back(s);
    }
    RegulatorTerm t3{3, "3/(160(q+1)) sum_j (-1)^{k'+j} binom(3,j) A_{k,k',k'+p+j,j} Xibar_{k-p-2j+4,p+2,-k+k'+p}", {}};
    for (int j = 0; j <= 3; ++j) {
        Summand s;
        s.j = j;
        s.xi = {true, k - p - 2 * j + 4, p + 2, -k + kp + p};
        auto a = pc.A_if_defined(kp + p + j, j);
        s.present = a.has_value();
        if (a) s.coefficient = Rat(3, 160 * (q + 1)) * Rat(sgn_pow(kp + j)) * binomial(3, j) * *a;
        t3.summands.push_back(s);
    }
    RegulatorTerm t4{4, "-(-1)^{k'+p+1}/(8(q+1)) (B_{k'+p} - C_{k'-p+1}) Xibar_{k-p+3,-k+k'-q,q+2}", {}};
    {
        Summand s;
        s.xi = {true, k - p + 3, -k + kp - q, q + 2};
        s.coefficient = -Rat(sgn_pow(kp + p + 1), 8 * (q + 1)) * (pc.B(kp + p) - pc.C(kp - p + 1));
        t4.summands.push_back(s);
    }
    e.terms = {t1, t2, t3, t4};
    return e;
}

std::optional<std::string> theorem_hypothesis_violation(int k, int kp, bool exclude_small) {
    if (!(k > kp && kp > 0)) return "k > k' > 0";
    if ((k + 1) % 2 != 0) return "k + 1 = 0 mod 2";
    if (kp % 2 != 0) return "k' = 0 mod 2";
    if (exclude_small && k == 3) return "k != 3";
    if (exclude_small && kp == 2) return "k' != 2";
    return std::nullopt;
}

SurvivalReport survival(int k, int kp) {
    if (auto v = theorem_hypothesis_violation(k, kp)) throw InputError("survival: hypothesis failed: " + *v);
    SurvivalReport rep;
    rep.k = k;
    rep.kp = kp;
    rep.p = k - 1;
    rep.q = kp - 1;
    const auto expr = assemble(rep.p, rep.q, k, kp);
    for (const auto& term : expr.terms) {
        bool survives = false;
        for (const auto& s : term.summands) {
            if (!s.present) continue;
            TermVerdict v;
            v.term = term.constant;
            v.j = s.j;
            v.xi = s.xi;
            // Psi is a lowest weight vector of tau(k+3, -k'-1); its conjugate of tau(k'+1, -k-3).
            v.lambda1 = s.xi.conjugate ? kp + 1 : k + 3;
            v.lambda2 = s.xi.conjugate ? -k - 3 : -kp - 1;
            v.first = s.xi.n + v.lambda2 + s.xi.r;
            v.second = -s.xi.n + v.lambda1 + s.xi.s;
            v.vanishes = arch_vanishing(s.xi.n, v.lambda1, v.lambda2, s.xi.r, s.xi.s);
            survives = survives || !v.vanishes;
            rep.verdicts.push_back(v);
        }
        if (survives) rep.surviving_terms.push_back(term.constant);
    }
    const CycScalar sign(rep.p % 2 == 0 ? 1 : -1);
    rep.survivor_pairing = a_pairing(rep.p, rep.q, rep.p, 0, 0, rep.q);
    rep.survivor_pairing_paper = sign * CycScalar(0, 2).pow(-(k + kp + 2));
    return rep;
}

}  // namespace gsp4
