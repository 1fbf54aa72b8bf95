#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsp4/exact.hpp"

namespace gsp4 {

// Factorial constants attached to (k, k').
class PairingConstants {
public:
    PairingConstants(int k, int kp);
    int k() const { return k_; }
    int kp() const { return kp_; }
    // (k+k'+4-i)!/(k+k'+4-(i+j))! * (i+j)!/(i-j)! * (k+k'-i+j)!/(k+k'-i)!; InputError outside
    // 0 <= j <= 3, j <= i <= k+k'.
    Rat A(int i, int j) const;
    std::optional<Rat> A_if_defined(int i, int j) const;
    // (i+1)(k+k'+4-i) and i(k+k'-i+1); polynomial in i.
    Rat B(int i) const;
    Rat C(int i) const;

private:
    int k_, kp_;
};

PairingConstants constants(int k, int kp);

// <a_r x a_s, a_r' x a_s'> on Sym^p x Sym^q.
CycScalar a_pairing(int p, int q, int r, int s, int rp, int sp);

struct ProjectionCoeffs {
    Rat alpha;  // X(2,0)^X(0,2) (x) X(0,-2) on ad X(-1,1) h
    Rat beta;   // its tau(2,0) part, on the tau(2,0) highest weight vector
    Rat gamma;  // its tau(1,1) part
    Rat beta3;  // X(2,0)^X(0,2) (x) X(-2,0) on ad^3 X(-1,1) h
    // Components of the second vector along the tau(2,0) and tau(1,1) chains.
    Rat second_tau20;
    Rat second_tau11;
};

// Solve in Lambda^2 p+ (x) p- against the adapted K-basis; h = X(2,0)^X(1,1) (x) X(0,-2).
// order permutes the coordinates before solving (basis-independence check).
ProjectionCoeffs projection_coeffs(const std::vector<int>& order = {});

struct VanishingConstraint {
    int id = 0;
    std::string pairing;   // which basis pairing
    int forced_i = 0;
    char index = 'r';      // 'r' or 's'
    Rat forced_value;      // the forced r or s
    bool integral = false; // false: the pairing is vacuous
    bool in_range = false;
};

std::vector<VanishingConstraint> vanishing_constraints(int p, int q, int k, int kp);

struct XiToken {
    bool conjugate = false;
    int n = 0, r = 0, s = 0;
    std::string str() const;
};

struct Summand {
    Rat coefficient;
    XiToken xi;
    bool present = true;  // false when the underlying index leaves the summation range
    int j = -1;
};

struct RegulatorTerm {
    int constant = 0;  // C_1..C_4
    std::string formula;
    std::vector<Summand> summands;
};

struct RegulatorExpression {
    int p = 0, q = 0, k = 0, kp = 0;
    std::vector<RegulatorTerm> terms;
    std::string str() const;
};

// Empty when all hypotheses hold, else the first violated one.
std::optional<std::string> main_hypothesis_violation(int p, int q, int k, int kp);

RegulatorExpression assemble(int p, int q, int k, int kp);

struct TermVerdict {
    int term = 0;
    int j = -1;
    XiToken xi;
    int lambda1 = 0, lambda2 = 0;
    int first = 0;   // t + lambda2 + r
    int second = 0;  // -t + lambda1 + s
    bool vanishes = true;
};

struct SurvivalReport {
    int k = 0, kp = 0, p = 0, q = 0;
    std::vector<TermVerdict> verdicts;
    std::vector<int> surviving_terms;
    CycScalar survivor_pairing;       // (-1)^p (2i)^{-p-q}
    CycScalar survivor_pairing_paper;  // (-1)^p (2i)^{-k-k'-2}
};

// Theorem hypotheses: k > k' > 0, k odd, k' even; p = k - 1, q = k' - 1.
std::optional<std::string> theorem_hypothesis_violation(int k, int kp, bool exclude_small = false);
SurvivalReport survival(int k, int kp);

}  // namespace gsp4
