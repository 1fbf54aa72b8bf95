#pragma once

#include <array>
#include <string>
#include <vector>

#include "gsp4/root_data.hpp"

namespace gsp4 {

struct PacketMember {
    std::string label;  // piH, piW, piWbar, piHbar
    std::array<int, 2> minimal_k_type;
};

struct PacketInfo {
    Weight highest_weight;
    std::array<int, 2> hc_parameter;
    std::vector<PacketMember> members;
    int gk_cohomology_dim = 1;  // per member, in degree 3
};

PacketInfo lpacket(const Weight& lam);

struct HodgeType {
    int t = 0;
    std::vector<std::array<int, 2>> pairs;
};

// t = (c - k - k')/2
HodgeType hodge_types(const Weight& lam);
// Coefficient system W(-p-q-3) with weight lambda(k, k', -p-q): t' = -(k+k'+p+q)/2.
HodgeType dual_hodge_types(int p, int q, int k, int kp);

struct StableRanks {
    int betti_minus = 2;
    int f0_de_rham = 1;
    int ext1 = 1;
};

// Ranks of M_B^-(-1), F^0 M_dR and Ext^1 when every multiplicity is one.
StableRanks stable_ranks(int p, int q, int k, int kp);

}  // namespace gsp4
