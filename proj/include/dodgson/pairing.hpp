#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dodgson/formal.hpp"
#include "dodgson/index_range.hpp"
#include "dodgson/permutation.hpp"

namespace dodgson {

/// The three families of stacked pairings on {1..n} that enter the
/// Desnanot-Jacobi identity: A covers the left-hand side, B and C the two
/// right-hand products.
enum class PairingClass { A, B, C };

char class_letter(PairingClass cls);
PairingClass class_from_letter(std::string_view text);  // ParseError

/// Domain and codomain of the two layers of each class:
///   A: marriages {1..n} -> {1..n},     affairs {2..n-1} -> {2..n-1}
///   B: marriages {1..n-1} -> {1..n-1}, affairs {2..n} -> {2..n}
///   C: marriages {1..n-1} -> {2..n},   affairs {2..n} -> {1..n-1}
struct ClassShape {
    IndexRange marriage_dom, marriage_cod;
    IndexRange affair_dom, affair_cod;
};

/// Throws SizeGuardError when n < 2.
ClassShape class_shape(int n, PairingClass cls);

/// Two stacked matchings, marriages and affairs, on the index sets the class
/// prescribes. A man's wife may coincide with his mistress; the layers are
/// independent.
struct Pairing {
    int n = 0;
    PairingClass cls = PairingClass::A;
    Permutation marriages;
    Permutation affairs;

    friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// Signed multiset of the cells a pairing occupies: sign(marriages) times
/// sign(affairs), negated once more for class C; cells are every (man, woman)
/// pair of both layers with multiplicity.
struct FormalWeight {
    int sign = 1;
    Monomial cells;

    FormalPoly to_poly() const;

    friend bool operator==(const FormalWeight&, const FormalWeight&) = default;
};

/// Shape diagnostics for raw pairing data; empty means valid. Duplicate men
/// or women inside a layer are reported here as well, so this accepts data
/// that cannot even form a Permutation yet.
std::vector<std::string> pairing_violations(int n, PairingClass cls,
                                            const std::vector<std::pair<int, int>>& marriages,
                                            const std::vector<std::pair<int, int>>& affairs);

/// Validating constructor; throws ValidationError carrying the full list of
/// violations.
Pairing make_pairing(int n, PairingClass cls, std::vector<std::pair<int, int>> marriages,
                     std::vector<std::pair<int, int>> affairs);
Pairing make_pairing(int n, PairingClass cls, Permutation marriages, Permutation affairs);

FormalWeight pairing_weight(const Pairing& p);

/// Deterministic enumeration of a whole class, ordered lexicographically by
/// the marriage image tuple, then the affair image tuple. Random access by
/// rank makes the index space trivially shardable.
class ClassEnumerator {
public:
    /// Throws SizeGuardError when n < 2.
    ClassEnumerator(int n, PairingClass cls);

    std::uint64_t size() const { return total_; }
    /// Pairing of the given rank; index must be < size().
    Pairing at(std::uint64_t index) const;

    template <class F>
    void for_each(F&& fn) const {
        for (std::uint64_t i = 0; i < total_; ++i) fn(at(i));
    }

private:
    int n_;
    PairingClass cls_;
    ClassShape shape_;
    std::uint64_t marriage_count_ = 1;  // |marriage_dom|!
    std::uint64_t affair_count_ = 1;    // |affair_dom|!
    std::uint64_t total_ = 1;
};

}  // namespace dodgson
