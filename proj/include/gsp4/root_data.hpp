#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gsp4/exact.hpp"

namespace gsp4 {

// Character lambda(k, k', c): diag(a1, a2, nu/a1, nu/a2) -> a1^k a2^k' nu^((c-k-k')/2).
struct Weight {
    int k = 0, kp = 0, c = 0;

    Weight() = default;
    Weight(int k_, int kp_, int c_);

    bool dominant() const { return k >= kp && kp >= 0; }
    int t() const { return (c - k - kp) / 2; }
    std::string str() const;
    friend bool operator==(const Weight& a, const Weight& b) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) = default;
};

// Character lambda'(n, n', c) of the compact torus times the centre.
struct CompactWeight {
    int n = 0, np = 0, c = 0;

    CompactWeight() = default;
    CompactWeight(int n_, int np_, int c_);

    std::string str() const;
    friend bool operator==(const CompactWeight& a, const CompactWeight& b) = default;
};

// Element of the Weyl group of GSp(4), acting on (k, k') by a signed permutation.
class WeylElement {
public:
    WeylElement() = default;
    static WeylElement s1();
    static WeylElement s2();

    // Reduced word in generators 1, 2, read left to right as a product.
    const std::vector<int>& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    const std::array<std::array<int, 2>, 2>& matrix() const { return m_; }

    std::array<int, 2> apply(int k, int kp) const;
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }
    std::string str() const;

private:
    friend const std::vector<WeylElement>& weyl_group();
    std::vector<int> word_;
    std::array<std::array<int, 2>, 2> m_{{{1, 0}, {0, 1}}};
};

// The eight elements, each carrying a shortest word; generated by breadth-first search.
const std::vector<WeylElement>& weyl_group();

Weight weyl_act(const WeylElement& w, const Weight& lam);
Weight contragredient(const Weight& lam);
int weyl_dimension(int k, int kp);

struct BranchQuery {
    int p = 0, q = 0;
    Weight w;

    BranchQuery(int p_, int q_, const Weight& w_);
    // The usual case: c = p + q + 6.
    static BranchQuery standard(int p, int q, int k, int kp);
};

// The five-case inequality list.
bool branching_admissible(const BranchQuery& bq);

// Character of the irreducible module in variables (x1, x2, z), z standing for nu.
LaurentPoly weyl_character(const Weight& lam);

struct BranchDecomposition {
    // (p, q, twist) -> multiplicity of (Sym^p x Sym^q) tensor det^twist
    std::map<std::array<int, 3>, int> parts;
    int multiplicity(int p, int q) const;
};

BranchDecomposition branching_decompose(const Weight& lam);
int branching_multiplicity(const BranchQuery& bq);

}  // namespace gsp4
