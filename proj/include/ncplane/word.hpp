#pragma once

#include <string>
#include <vector>

namespace ncplane {

/// Monomial of the free algebra: a sequence of 0-based generator indices.
/// The empty word is the multiplicative identity.
using Word = std::vector<int>;

/// Degree-lexicographic order on words; fixes the canonical term order.
struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace ncplane
