#pragma once

#include <array>
#include <string>
#include <vector>

#include "gsp4/exact.hpp"
#include "gsp4/numeric.hpp"

namespace gsp4 {

struct MeijerParams {
    Rat a1, a2, c1, c2, c3, c4;
    std::array<Rat, 2> a() const { return {a1, a2}; }
    std::array<Rat, 4> c() const { return {c1, c2, c3, c4}; }
};

MeijerParams meijer_params(int lambda1, int lambda2, int t, int p, int q);

// True when the local archimedean integral vanishes by the U(1)^2 weight argument.
bool arch_vanishing(int t, int lambda1, int lambda2, int r, int s);

struct NumericResult {
    num::Real value;
    num::Real estimated_error;
    bool pole_collision = false;   // some c_i - c_j is an integer: contour only
    bool residue_checked = false;
    num::Real residue_value;
    num::Real sigma0;              // abscissa of the vertical contour
};

bool has_pole_collision(const MeijerParams& mp);

// G^{4,0}_{2,4}(z | a1,a2; c1..c4) on a vertical contour left of all poles of Gamma(c_j - s).
NumericResult meijer_g(const num::Real& z, const MeijerParams& mp);
// Sum of residues at s = c_j + n; requires no pole collision.
num::Real meijer_g_residues(const num::Real& z, const MeijerParams& mp);
// Integrand Gamma(c - s)/Gamma(a - s) z^s at complex s.
num::Complex meijer_integrand(const num::Complex& s, const num::Real& z, const MeijerParams& mp);

struct MellinReport {
    MeijerParams mp;
    int p = 0, q = 0;
    Rat exponent;       // x-exponent E in the integral of x^E G((pi x)^2) dx/x
    Rat sigma;          // E / 2
    num::Real quadrature, closed_form, rel_error, estimated_error, doubled_change;
    bool pass = false;
    // The integrand as displayed, x^{3(p+q)/2+2} dx/x, against the same closed form.
    Rat literal_exponent;
    num::Real literal_quadrature, literal_rel_error;
    bool literal_pass = false;
};

// Closed form (1/2) pi^{-2 sigma} prod Gamma(c_j + sigma) / prod Gamma(a_j + sigma).
num::Real mellin_closed_form(const MeijerParams& mp, const Rat& sigma);
// Numerical integral of x^E G((pi x)^2) dx/x; err receives the step-halving difference.
num::Real mellin_quadrature(const MeijerParams& mp, const Rat& exponent, num::Real* err = nullptr);
MellinReport mellin_verify(const MeijerParams& mp, int p, int q, double tol = 1e-8);

struct SurvivorData {
    int k = 0, kp = 0, p = 0, q = 0;
    int t = 0, lambda1 = 0, lambda2 = 0, r = 0, s = 0;
    MeijerParams mp;
};
// Parameters of the unique surviving term for the theorem case p = k-1, q = k'-1.
SurvivorData survivor_data(int k, int kp);
// (k, k') with the theorem hypotheses and k + k' <= bound.
std::vector<std::array<int, 2>> theorem_pairs(int bound, bool exclude_small = true);

struct TateReport {
    int p = 0, q = 0, r = 0, s = 0;
    num::Real z1, z2, product;            // quadrature
    num::Real derived;                    // (-1)^{(p+q+r+s)/2} p! q! pi^{-(p+q+2)}
    num::Real quoted;                     // (-1)^{(p+q+r+s)/2} pi^{-2(p+q)} Gamma(p+q)^2
    num::Real rel_error_derived, rel_error_quoted;
    num::Real gaussian_mass;              // integral of exp(-pi y^2) over R
    num::Real estimated_error;
    bool pass_derived = false;
    bool pass_quoted = false;
};

TateReport tate_arch_verify(int p, int q, int r, int s, double tol = 1e-8);

struct PiPowerClass {
    Rat pi_exponent;  // 0 or 1/2
    Rat argument;
};

PiPowerClass pi_power_class(const Rat& x);

struct TraceReport {
    SurvivorData survivor;
    Rat sigma;
    std::array<Rat, 6> shifted;          // c1..c4, a1, a2 plus sigma
    std::array<PiPowerClass, 6> classes;
    std::array<Rat, 6> expected;         // pi exponents stated in the proof
    bool pattern_matches = false;
    Rat gamma_exponent;                  // numerator minus denominator
    Rat period_exponent;                 // from the (2 pi i)^2 period
    Rat net;
    std::size_t surviving_terms = 0;
};

TraceReport theorem_trace(int k, int kp);
Rat trace_pi_exponent(int k, int kp);

}  // namespace gsp4
