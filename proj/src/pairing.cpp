#include "dodgson/pairing.hpp"

#include <algorithm>
#include <string>

namespace dodgson {

char class_letter(PairingClass cls) {
    switch (cls) {
        case PairingClass::A: return 'A';
        case PairingClass::B: return 'B';
        case PairingClass::C: return 'C';
    }
    throw InternalError("unreachable pairing class");
}

PairingClass class_from_letter(std::string_view text) {
    if (text == "A" || text == "a") return PairingClass::A;
    if (text == "B" || text == "b") return PairingClass::B;
    if (text == "C" || text == "c") return PairingClass::C;
    throw ParseError("unknown pairing class '" + std::string(text) + "'");
}

ClassShape class_shape(int n, PairingClass cls) {
    if (n < 2) throw SizeGuardError("pairing classes need n >= 2");
    switch (cls) {
        case PairingClass::A:
            return {{1, n}, {1, n}, {2, n - 1}, {2, n - 1}};
        case PairingClass::B:
            return {{1, n - 1}, {1, n - 1}, {2, n}, {2, n}};
        case PairingClass::C:
            return {{1, n - 1}, {2, n}, {2, n}, {1, n - 1}};
    }
    throw InternalError("unreachable pairing class");
}

namespace {

void check_layer(const char* layer, const std::vector<std::pair<int, int>>& pairs,
                 const IndexRange& dom, const IndexRange& cod,
                 std::vector<std::string>& violations) {
    std::vector<int> men, women;
    men.reserve(pairs.size());
    women.reserve(pairs.size());
    for (const auto& [man, woman] : pairs) {
        men.push_back(man);
        women.push_back(woman);
    }
    std::sort(men.begin(), men.end());
    std::sort(women.begin(), women.end());

    for (std::size_t i = 1; i < men.size(); ++i)
        if (men[i] == men[i - 1]) {
            violations.push_back(std::string(layer) + ": man " + std::to_string(men[i]) +
                                 " appears twice");
            return;  // domain comparison below would only restate this
        }
    if (men != dom.to_vector()) {
        violations.push_back(std::string(layer) + ": domain must be " + dom.str());
        return;
    }
    if (std::adjacent_find(women.begin(), women.end()) != women.end()) {
        violations.push_back(std::string(layer) + ": not injective");
        return;
    }
    if (women != cod.to_vector())
        violations.push_back(std::string(layer) + ": codomain must be " + cod.str());
}

}  // namespace

std::vector<std::string> pairing_violations(int n, PairingClass cls,
                                            const std::vector<std::pair<int, int>>& marriages,
                                            const std::vector<std::pair<int, int>>& affairs) {
    std::vector<std::string> violations;
    if (n < 2) {
        violations.push_back("n must be >= 2");
        return violations;
    }
    ClassShape shape = class_shape(n, cls);
    check_layer("marriages", marriages, shape.marriage_dom, shape.marriage_cod, violations);
    check_layer("affairs", affairs, shape.affair_dom, shape.affair_cod, violations);
    return violations;
}

Pairing make_pairing(int n, PairingClass cls, std::vector<std::pair<int, int>> marriages,
                     std::vector<std::pair<int, int>> affairs) {
    auto violations = pairing_violations(n, cls, marriages, affairs);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return Pairing{n, cls, Permutation::from_pairs(std::move(marriages)),
                   Permutation::from_pairs(std::move(affairs))};
}

Pairing make_pairing(int n, PairingClass cls, Permutation marriages, Permutation affairs) {
    auto violations = pairing_violations(n, cls, marriages.pairs(), affairs.pairs());
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return Pairing{n, cls, std::move(marriages), std::move(affairs)};
}

FormalPoly FormalWeight::to_poly() const { return FormalPoly::term(cells, Int(sign)); }

FormalWeight pairing_weight(const Pairing& p) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(p.marriages.size() + p.affairs.size()));
    for (const auto& [man, woman] : p.marriages.pairs()) cells.push_back({man, woman});
    for (const auto& [man, woman] : p.affairs.pairs()) cells.push_back({man, woman});

    int sign = p.marriages.sign() * p.affairs.sign();
    if (p.cls == PairingClass::C) sign = -sign;
    return FormalWeight{sign, Monomial(std::move(cells))};
}

namespace {

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// rank-th permutation of the sorted pool, lexicographic by image tuple.
std::vector<int> nth_permutation(std::vector<int> pool, std::uint64_t rank) {
    std::vector<int> out;
    out.reserve(pool.size());
    std::uint64_t radix = factorial(static_cast<int>(pool.size()));
    while (!pool.empty()) {
        radix /= pool.size();
        auto digit = static_cast<std::size_t>(rank / radix);
        rank %= radix;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

}  // namespace

ClassEnumerator::ClassEnumerator(int n, PairingClass cls)
    : n_(n), cls_(cls), shape_(class_shape(n, cls)) {
    // 20! overflows nothing here: class sizes beyond the enumeration guard
    // are never instantiated, but keep the arithmetic honest anyway.
    if (shape_.marriage_dom.size() > 20 || shape_.affair_dom.size() > 20)
        throw SizeGuardError("class too large to rank in 64 bits");
    marriage_count_ = factorial(shape_.marriage_dom.size());
    affair_count_ = factorial(shape_.affair_dom.size());
    total_ = marriage_count_ * affair_count_;
}

Pairing ClassEnumerator::at(std::uint64_t index) const {
    if (index >= total_) throw DimensionError("enumeration index out of range");
    std::uint64_t marriage_rank = index / affair_count_;
    std::uint64_t affair_rank = index % affair_count_;

    auto build = [](const IndexRange& dom, const IndexRange& cod, std::uint64_t rank) {
        std::vector<int> men = dom.to_vector();
        std::vector<int> images = nth_permutation(cod.to_vector(), rank);
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(men.size());
        for (std::size_t i = 0; i < men.size(); ++i) pairs.emplace_back(men[i], images[i]);
        return Permutation::from_pairs(std::move(pairs));
    };

    return Pairing{n_, cls_, build(shape_.marriage_dom, shape_.marriage_cod, marriage_rank),
                   build(shape_.affair_dom, shape_.affair_cod, affair_rank)};
}

}  // namespace dodgson
