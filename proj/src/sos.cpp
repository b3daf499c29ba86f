#include "posmap/sos.hpp"

#include <algorithm>

namespace posmap {

MultiPoly expand(std::span<const SosTerm> terms, std::size_t nvars) {
    MultiPoly sum(nvars);
    for (const auto& [w, s] : terms) sum += w * (s * s);
    return sum;
}

bool certifies_nonnegative(std::span<const SosTerm> terms, const MultiPoly& p) {
    if (std::any_of(terms.begin(), terms.end(), [](const SosTerm& t) { return t.weight.sign() < 0; }))
        return false;
    for (const auto& t : terms)
        if (t.square_root.nvars() != p.nvars()) return false;
    return expand(terms, p.nvars()) == p;
}

}  // namespace posmap
