#pragma once

#include <string>
#include <vector>

namespace dodgson {

/// Closed integer interval; empty when hi < lo.
struct IndexRange {
    int lo = 1;
    int hi = 0;

    int size() const { return hi < lo ? 0 : hi - lo + 1; }
    bool contains(int x) const { return lo <= x && x <= hi; }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(size()));
        for (int x = lo; x <= hi; ++x) v.push_back(x);
        return v;
    }

    /// "{lo..hi}", or "{}" when empty.
    std::string str() const {
        if (size() == 0) return "{}";
        return "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
    }

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

}  // namespace dodgson
