#include "posmap/nonneg.hpp"

namespace posmap {

std::vector<MultiPoly> FixedProvider::candidates(const MultiPoly&) const { return family_; }

MultiPoly LineProbeProvider::probe(std::span<const Rational> direction) {
    const std::size_t n = direction.size();
    MultiPoly r(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Exponents square(n + 1, 0);
        square[i] = 2;
        r.add_term(square, Rational(1, 2));
        Exponents mixed(n + 1, 0);
        mixed[i] = 1;
        mixed[n] = 1;
        r.add_term(mixed, direction[i]);
    }
    return r;
}

std::vector<MultiPoly> LineProbeProvider::candidates(const MultiPoly& g) const {
    const std::size_t n = g.nvars();
    std::vector<MultiPoly> out;
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = 1;
        out.push_back(probe(c));
        c[i] = 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            c[i] = 1;
            for (int s : {1, -1}) {
                c[k] = s;
                out.push_back(probe(c));
            }
            c[i] = 0;
            c[k] = 0;
        }
    }
    return out;
}

}  // namespace posmap
