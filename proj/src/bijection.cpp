#include "dodgson/bijection.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace dodgson {

namespace {

void require_class(const Pairing& p, PairingClass wanted, const char* op) {
    if (p.cls != wanted)
        throw ClassError(std::string(op) + " requires a class-" +
                         std::string(1, class_letter(wanted)) + " pairing, got class " +
                         std::string(1, class_letter(p.cls)));
}

// Removes pair (man, *) once; the caller guarantees presence.
void drop_man(std::vector<std::pair<int, int>>& pairs, int man) {
    auto it = std::find_if(pairs.begin(), pairs.end(),
                           [man](const auto& pr) { return pr.first == man; });
    if (it == pairs.end()) throw InternalError("chain toggle lost a pair");
    pairs.erase(it);
}

}  // namespace

Chain chain_forward(const Pairing& p) {
    require_class(p, PairingClass::A, "chain_forward");
    Chain chain;
    chain.direction = Chain::Direction::Forward;

    int man = p.n;
    // The walk visits each man and woman at most once; 2n steps means a
    // broken invariant, not a long chain.
    for (int guard = 0; guard <= p.n; ++guard) {
        chain.men.push_back(man);
        int woman = p.marriages.image_of(man);
        chain.women.push_back(woman);
        if (woman == 1 || woman == p.n) {
            chain.terminal = woman;
            return chain;
        }
        auto lover = p.affairs.find_preimage(woman);
        if (!lover) throw InternalError("interior woman without a lover in class A");
        man = *lover;
    }
    throw InternalError("forward chain failed to terminate");
}

MapResult map_T(const Pairing& p) {
    Chain chain = chain_forward(p);
    const auto r = chain.men.size();

    auto marriages = p.marriages.pairs();
    auto affairs = p.affairs.pairs();

    // Chain marriages become affairs; chain affairs become marriages. The
    // terminal woman w_r keeps no partner change beyond losing her husband:
    // she is lovers-less in the target class.
    for (std::size_t i = 0; i < r; ++i) {
        drop_man(marriages, chain.men[i]);
        affairs.emplace_back(chain.men[i], chain.women[i]);
    }
    for (std::size_t i = 0; i + 1 < r; ++i) {
        drop_man(affairs, chain.men[i + 1]);
        marriages.emplace_back(chain.men[i + 1], chain.women[i]);
    }

    PairingClass target = (chain.terminal == 1) ? PairingClass::C : PairingClass::B;
    // make_pairing re-validates the target shape, which is exactly the
    // claim that the toggle lands in B or C.
    return MapResult{make_pairing(p.n, target, std::move(marriages), std::move(affairs)), chain};
}

Classification classify(const Pairing& p) {
    if (p.cls == PairingClass::A) throw ClassError("classify requires a class-B or class-C pairing");
    Chain chain;
    chain.direction = Chain::Direction::Reverse;

    int woman = (p.cls == PairingClass::B) ? p.n : 1;
    for (int guard = 0; guard <= p.n; ++guard) {
        chain.women.push_back(woman);
        auto lover = p.affairs.find_preimage(woman);
        if (!lover) {
            // Dead end: only the other lovers-less woman can lack a lover.
            chain.terminal = woman;
            return Classification{false, chain};
        }
        chain.men.push_back(*lover);
        if (*lover == p.n) {
            chain.terminal = chain.women.front();
            return Classification{true, chain};
        }
        woman = p.marriages.image_of(*lover);
    }
    throw InternalError("reverse chain failed to terminate");
}

MapResult map_T_inverse(const Pairing& p) {
    Classification cl = classify(p);
    if (!cl.good)
        throw NotInImageError("pairing is a bad member: it is outside the chain map's image");

    auto marriages = p.marriages.pairs();
    auto affairs = p.affairs.pairs();

    // Undo the forward toggle along the reverse chain x_1..x_r (x_r = n),
    // v_1..v_r: every chain affair (x_j, v_j) was a marriage before, and
    // every chain man but n had his current wife as his mistress.
    for (std::size_t j = 0; j < cl.chain.men.size(); ++j) {
        int man = cl.chain.men[j];
        drop_man(affairs, man);
        if (man != p.n) {
            int wife = p.marriages.image_of(man);
            drop_man(marriages, man);
            affairs.emplace_back(man, wife);
        }
        marriages.emplace_back(man, cl.chain.women[j]);
    }

    return MapResult{make_pairing(p.n, PairingClass::A, std::move(marriages), std::move(affairs)),
                     cl.chain};
}

MapResult map_S(const Pairing& p) {
    Classification cl = classify(p);
    if (cl.good) throw DomainError("map_S applies only to bad members");

    auto marriages = p.marriages.pairs();
    auto affairs = p.affairs.pairs();

    // The dead-end chain runs x_1..x_k between the lovers-less women
    // v_1..v_{k+1}; swapping layer membership along it exchanges which of
    // the two ends is lovers-less, i.e. swaps the class, and flips exactly
    // one layer's sign.
    for (std::size_t j = 0; j < cl.chain.men.size(); ++j) {
        int man = cl.chain.men[j];
        int wife = p.marriages.image_of(man);
        if (wife != cl.chain.women[j + 1])
            throw InternalError("dead-end chain is not marriage-linked");
        drop_man(affairs, man);
        drop_man(marriages, man);
        marriages.emplace_back(man, cl.chain.women[j]);
        affairs.emplace_back(man, wife);
    }

    PairingClass target = (p.cls == PairingClass::B) ? PairingClass::C : PairingClass::B;
    return MapResult{make_pairing(p.n, target, std::move(marriages), std::move(affairs)),
                     cl.chain};
}

}  // namespace dodgson
