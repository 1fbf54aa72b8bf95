#include "gsp4/packet.hpp"

#include "gsp4/errors.hpp"

namespace gsp4 {

PacketInfo lpacket(const Weight& lam) {
    if (!lam.dominant()) throw InputError("lpacket needs k >= k' >= 0, got " + lam.str());
    const int k = lam.k, kp = lam.kp;
    PacketInfo info;
    info.highest_weight = lam;
    info.hc_parameter = {k + 2, kp + 1};
    info.members = {{"piH", {k + 3, kp + 3}},
                    {"piW", {k + 3, -kp - 1}},
                    {"piWbar", {kp + 1, -k - 3}},
                    {"piHbar", {-kp - 3, -k - 3}}};
    return info;
}

HodgeType hodge_types(const Weight& lam) {
    const int k = lam.k, kp = lam.kp;
    HodgeType h;
    h.t = lam.t();
    const int t = h.t;
    h.pairs = {{3 - t, -k - kp - t}, {2 - kp - t, 1 - k - t}, {1 - k - t, 2 - kp - t}, {-k - kp - t, 3 - t}};
    return h;
}

HodgeType dual_hodge_types(int p, int q, int k, int kp) { return hodge_types(Weight(k, kp, -p - q)); }

StableRanks stable_ranks(int p, int q, int k, int kp) {
    if (!(k >= kp && kp >= 0)) throw InputError("stable_ranks needs k >= k' >= 0");
    if (p < 0 || q < 0) throw InputError("stable_ranks needs p, q >= 0");
    if ((k + kp - p - q) % 2 != 0) throw InputError("stable_ranks needs k + k' = p + q mod 2");
    const int t = (p + q + 6 - k - kp) / 2;
    if (3 - t < 0) throw InputError("violated: 3 - t = (k+k'-p-q)/2 >= 0");
    if (2 - kp - t >= 0) throw InputError("violated: 2 - k' - t = (k-k'-p-q-2)/2 < 0");
    return {};
}

}  // namespace gsp4
