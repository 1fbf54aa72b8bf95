#pragma once

#include <cstdint>
#include <optional>

#include "gsp4/report.hpp"

namespace gsp4 {

// Report builders shared by the command line, the Python module and the acceptance run.
VerificationReport check_branch(int k, int kp, int p, int q);
VerificationReport check_branch_table(int k, int kp);
VerificationReport check_packet(int k, int kp, int c);
VerificationReport check_hodge(int k, int kp, int c);
VerificationReport check_rep_build(int k, int kp, int c, bool verify_closure);
VerificationReport check_lambda_scan(int k, int kp, std::optional<int> p, std::optional<int> q, int i_min, int i_max);
VerificationReport check_pairing_constants(int k, int kp);
VerificationReport check_pairing_coeffs();
VerificationReport check_pairing_assemble(int p, int q, int k, int kp);
VerificationReport check_pairing_survival(int k, int kp);
VerificationReport check_unramified(int order, bool numeric, std::uint64_t seed, int samples);
VerificationReport check_bessel(int m);
VerificationReport check_tate_unramified(int exponent, int depth);
VerificationReport check_mellin(int k, int kp);
VerificationReport check_tate_arch(int p, int q, int r, int s);
VerificationReport check_trace(int k, int kp);

}  // namespace gsp4
