#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dodgson/error.hpp"

namespace dodgson {

/// A bijection between two equal-size finite sets of positive integers,
/// spoken of as men mapped to women. Domain and codomain need not coincide.
///
/// The sign is the parity of the permutation obtained by order-isomorphically
/// relabeling both sides to 1..k, i.e. the parity of the number of inversions
/// among the images read in increasing domain order. The empty bijection has
/// sign +1.
class Permutation {
public:
    Permutation() = default;

    /// Builds from (man, woman) pairs in any order. Throws ValidationError
    /// when a man appears twice or the map is not injective.
    static Permutation from_pairs(std::vector<std::pair<int, int>> pairs);

    int size() const { return static_cast<int>(men_.size()); }
    bool empty() const { return men_.empty(); }

    /// Sorted domain.
    const std::vector<int>& men() const { return men_; }
    /// images()[i] is the image of men()[i].
    const std::vector<int>& images() const { return images_; }
    /// Sorted codomain.
    std::vector<int> women() const;

    bool maps(int man) const;
    /// Image of `man`; throws DomainError when absent.
    int image_of(int man) const;
    std::optional<int> find_image(int man) const;
    std::optional<int> find_preimage(int woman) const;

    std::vector<std::pair<int, int>> pairs() const;

    int sign() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> men_;     // sorted
    std::vector<int> images_;  // aligned with men_, pairwise distinct
};

inline int perm_sign(const Permutation& p) { return p.sign(); }

/// outer after inner; requires inner's codomain to equal outer's domain.
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace dodgson
