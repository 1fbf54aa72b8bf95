#include "gsp4/root_data.hpp"

#include <deque>

#include "gsp4/errors.hpp"

namespace gsp4 {

static bool odd(long v) { return (v % 2 + 2) % 2 == 1; }

Weight::Weight(int k_, int kp_, int c_) : k(k_), kp(kp_), c(c_) {
    if (odd(static_cast<long>(k) + kp - c))
        throw InputError("weight parity violated: k + k' must be congruent to c mod 2 for " + str());
}

std::string Weight::str() const {
    return "lambda(" + std::to_string(k) + "," + std::to_string(kp) + "," + std::to_string(c) + ")";
}

CompactWeight::CompactWeight(int n_, int np_, int c_) : n(n_), np(np_), c(c_) {
    if (odd(static_cast<long>(n) + np - c))
        throw InputError("compact weight parity violated: n + n' must be congruent to c mod 2 for " + str());
}

std::string CompactWeight::str() const {
    return "lambda'(" + std::to_string(n) + "," + std::to_string(np) + "," + std::to_string(c) + ")";
}

WeylElement WeylElement::s1() {
    WeylElement w;
    w.word_ = {1};
    w.m_ = {{{0, 1}, {1, 0}}};
    return w;
}

WeylElement WeylElement::s2() {
    WeylElement w;
    w.word_ = {2};
    w.m_ = {{{1, 0}, {0, -1}}};
    return w;
}

std::array<int, 2> WeylElement::apply(int k, int kp) const {
    return {m_[0][0] * k + m_[0][1] * kp, m_[1][0] * k + m_[1][1] * kp};
}

// Words are concatenated; the result is replaced by the stored reduced word of the
// group element so lengths stay honest.
WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m_[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j];
    for (const auto& g : weyl_group())
        if (g == r) return g;
    throw InternalError("Weyl group is not closed under multiplication");
}

std::string WeylElement::str() const {
    if (word_.empty()) return "e";
    std::string s;
    for (int g : word_) s += "s" + std::to_string(g);
    return s;
}

const std::vector<WeylElement>& weyl_group() {
    static const std::vector<WeylElement> group = [] {
        std::vector<WeylElement> out(1);
        std::deque<std::size_t> todo{0};
        const WeylElement gens[2] = {WeylElement::s1(), WeylElement::s2()};
        while (!todo.empty()) {
            WeylElement cur = out[todo.front()];
            todo.pop_front();
            for (int g = 0; g < 2; ++g) {
                WeylElement next;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        next.m_[i][j] = cur.m_[i][0] * gens[g].m_[0][j] + cur.m_[i][1] * gens[g].m_[1][j];
                bool seen = false;
                for (const auto& e : out) seen = seen || e == next;
                if (seen) continue;
                next.word_ = cur.word_;
                next.word_.push_back(g + 1);
                out.push_back(next);
                todo.push_back(out.size() - 1);
            }
        }
        if (out.size() != 8) throw InternalError("Weyl group of GSp(4) must have 8 elements");
        return out;
    }();
    return group;
}

Weight weyl_act(const WeylElement& w, const Weight& lam) {
    auto [k, kp] = w.apply(lam.k, lam.kp);
    return {k, kp, lam.c};
}

Weight contragredient(const Weight& lam) {
    if (!lam.dominant()) throw InputError("contragredient needs a dominant weight, got " + lam.str());
    return {lam.k, lam.kp, -lam.c};
}

int weyl_dimension(int k, int kp) {
    if (!(k >= kp && kp >= 0)) throw InputError("Weyl dimension needs k >= k' >= 0");
    long a = k - kp, b = kp;
    return static_cast<int>((a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6);
}

BranchQuery::BranchQuery(int p_, int q_, const Weight& w_) : p(p_), q(q_), w(w_) {
    if (p < 0 || q < 0) throw InputError("branching needs p, q >= 0");
    if (odd(static_cast<long>(w.k) + w.kp - p - q)) throw InputError("branching needs k + k' = p + q mod 2");
}

BranchQuery BranchQuery::standard(int p, int q, int k, int kp) { return {p, q, Weight(k, kp, p + q + 6)}; }

bool branching_admissible(const BranchQuery& bq) {
    const int p = bq.p, q = bq.q, k = bq.w.k, kp = bq.w.kp;
    if (!bq.w.dominant()) throw InputError("branching needs a dominant weight");
    if (!(p <= k)) return false;
    bool ok = true;
    if (0 <= p && p < kp && p < k - kp) ok = ok && (k - kp - p <= q && q <= k - kp + p);
    if (0 <= p && p < kp && k - kp <= p) ok = ok && (p - k + kp <= q && q <= p + k - kp);
    if (kp <= p && p <= k && kp < k - p) ok = ok && (k - kp - p <= q && q <= k + kp - p);
    if (kp <= p && p <= k && k - p <= kp) ok = ok && (p - k + kp <= q && q <= k + kp - p);
    return ok;
}

static const std::vector<std::string> kTorusVars{"x1", "x2", "z"};

static LaurentPoly alternant(int a, int b) {
    LaurentPoly s(kTorusVars);
    for (const auto& w : weyl_group()) {
        auto [u, v] = w.apply(a, b);
        s.add_term({u, v, 0}, w.sign());
    }
    return s;
}

// Weyl character formula: alternant(lambda + rho) / alternant(rho), rho = (2, 1).
LaurentPoly weyl_character(const Weight& lam) {
    if (!lam.dominant()) throw InputError("character needs a dominant weight");
    LaurentPoly chi = alternant(lam.k + 2, lam.kp + 1).divide_exact(alternant(2, 1));
    LaurentPoly out(kTorusVars);
    for (const auto& [e, c] : chi.terms()) {
        std::int64_t zexp = (lam.c - e[0] - e[1]) / 2;
        out.add_term({e[0], e[1], zexp}, c);
    }
    return out;
}

int BranchDecomposition::multiplicity(int p, int q) const {
    int m = 0;
    for (const auto& [key, mult] : parts)
        if (key[0] == p && key[1] == q) m += mult;
    return m;
}

// The diagonal torus of GL2 x_GL1 GL2 under iota is the GSp(4) torus itself:
// iota(diag(a, d), diag(a', d')) = diag(a, a', d, d'), with x1 = a, x2 = a', z = ad.
// Restriction is therefore the identity on (x1, x2, z), and Sym^p x Sym^q twisted by
// det^m has character sum_{j,l} x1^(p-2j) x2^(q-2l) z^(j+l+m). Peel off the top piece.
BranchDecomposition branching_decompose(const Weight& lam) {
    LaurentPoly chi = weyl_character(lam);
    std::map<Exponent, long> rest;
    for (const auto& [e, c] : chi.terms()) {
        if (!c.is_rational() || !c[0].is_integer()) throw InternalError("non-integral character coefficient");
        rest[e] = c[0].num().get_si();
    }
    BranchDecomposition out;
    while (!rest.empty()) {
        const Exponent* top = nullptr;
        for (const auto& [e, c] : rest) {
            if (e[0] < 0 || e[1] < 0) continue;
            if (!top || e[0] > (*top)[0] || (e[0] == (*top)[0] && e[1] > (*top)[1])) top = &e;
        }
        if (!top) throw InternalError("branching remainder has no dominant weight");
        const Exponent hw = *top;
        const long m = rest[hw];
        if (m <= 0) throw InternalError("branching subtraction produced a negative coefficient");
        const int p = static_cast<int>(hw[0]), q = static_cast<int>(hw[1]);
        out.parts[{p, q, static_cast<int>(hw[2])}] += static_cast<int>(m);
        for (int j = 0; j <= p; ++j)
            for (int l = 0; l <= q; ++l) {
                Exponent e{p - 2 * j, q - 2 * l, hw[2] + j + l};
                auto it = rest.find(e);
                if (it == rest.end() || it->second < m)
                    throw InternalError("branching subtraction produced a negative coefficient");
                it->second -= m;
                if (it->second == 0) rest.erase(it);
            }
    }
    return out;
}

int branching_multiplicity(const BranchQuery& bq) {
    if (!bq.w.dominant()) throw InputError("branching needs a dominant weight");
    return branching_decompose(bq.w).multiplicity(bq.p, bq.q);
}

}  // namespace gsp4
