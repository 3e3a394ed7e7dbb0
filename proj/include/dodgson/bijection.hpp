#pragma once

#include <vector>

#include "dodgson/pairing.hpp"

namespace dodgson {

/// Alternating man/woman walk used by the chain maps. Forward chains start
/// at man n inside class A and stop at the first lovers-less woman (1 or n);
/// reverse chains start at a lovers-less woman inside class B or C and walk
/// lover-then-wife. `terminal` is the lovers-less woman anchoring the chain:
/// the endpoint for forward and dead-end chains, the starting woman for
/// successful reverse chains.
struct Chain {
    enum class Direction { Forward, Reverse };

    std::vector<int> men;
    std::vector<int> women;
    int terminal = 0;
    Direction direction = Direction::Forward;
};

struct MapResult {
    Pairing pairing;
    Chain chain;
};

struct Classification {
    bool good = false;
    Chain chain;
};

/// Walks m1 = n, w_i = wife(m_i), m_{i+1} = lover(w_i), stopping when w_i is
/// 1 or n. Requires class A; every interior woman has a lover there, so the
/// walk always terminates without revisiting anyone.
Chain chain_forward(const Pairing& p);

/// Toggles marriages and affairs along the forward chain: each chain
/// marriage (m_i, w_i) becomes an affair and each chain affair
/// (m_{i+1}, w_i) becomes a marriage. Lands in class C when the chain ends
/// at woman 1, class B when it ends at woman n. Weight-preserving.
MapResult map_T(const Pairing& p);

/// Reverse chain from the class's lovers-less woman (n for B, 1 for C):
/// alternately lover-of and wife-of. Reaching man n means the member is in
/// map_T's image ("good"); dead-ending at the opposite lovers-less woman
/// means it is not ("bad"). Requires class B or C.
Classification classify(const Pairing& p);

/// Inverts map_T along the reverse chain. Throws NotInImageError on bad
/// members. map_T_inverse(map_T(x)) == x for every class-A pairing.
MapResult map_T_inverse(const Pairing& p);

/// Sign-reversing involution on bad members: toggles the two layers along
/// the dead-end chain connecting women 1 and n, swapping bad class-B and
/// bad class-C members while keeping the cell multiset and flipping the
/// weight's sign. Throws DomainError on good members.
MapResult map_S(const Pairing& p);

}  // namespace dodgson
