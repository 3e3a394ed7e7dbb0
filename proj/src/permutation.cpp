#include "dodgson/permutation.hpp"

#include <algorithm>
#include <string>

namespace dodgson {

Permutation Permutation::from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::string> violations;
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first)
            violations.push_back("man " + std::to_string(pairs[i].first) + " appears twice");

    Permutation p;
    p.men_.reserve(pairs.size());
    p.images_.reserve(pairs.size());
    for (const auto& [man, woman] : pairs) {
        p.men_.push_back(man);
        p.images_.push_back(woman);
    }

    auto women = p.women();
    if (std::adjacent_find(women.begin(), women.end()) != women.end())
        violations.push_back("not injective");
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return p;
}

std::vector<int> Permutation::women() const {
    std::vector<int> w = images_;
    std::sort(w.begin(), w.end());
    return w;
}

bool Permutation::maps(int man) const {
    return std::binary_search(men_.begin(), men_.end(), man);
}

std::optional<int> Permutation::find_image(int man) const {
    auto it = std::lower_bound(men_.begin(), men_.end(), man);
    if (it == men_.end() || *it != man) return std::nullopt;
    return images_[static_cast<std::size_t>(it - men_.begin())];
}

int Permutation::image_of(int man) const {
    auto w = find_image(man);
    if (!w) throw DomainError("man " + std::to_string(man) + " is not in the domain");
    return *w;
}

std::optional<int> Permutation::find_preimage(int woman) const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] == woman) return men_[i];
    return std::nullopt;
}

std::vector<std::pair<int, int>> Permutation::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(men_.size());
    for (std::size_t i = 0; i < men_.size(); ++i) out.emplace_back(men_[i], images_[i]);
    return out;
}

int Permutation::sign() const {
    // Inversions of the image sequence in increasing domain order; the
    // order-isomorphic relabeling of either side is monotone, so it changes
    // no comparison.
    int inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (inner.women() != outer.men())
        throw DomainError("composition mismatch: inner codomain differs from outer domain");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(inner.men().size());
    for (const auto& [man, mid] : inner.pairs()) pairs.emplace_back(man, outer.image_of(mid));
    return Permutation::from_pairs(std::move(pairs));
}

}  // namespace dodgson
