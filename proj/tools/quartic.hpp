#pragma once

#include <cstdint>
#include <vector>

#include "posmap/rational.hpp"

namespace posmap::quartic {

/// x⁴ + p·x² + q·x + r.
struct Quartic {
    Rational p, q, r;
};

Rational delta(const Quartic& f);
Rational big_l(const Quartic& f);

/// Closed-form nonnegativity test for the depressed quartic:
/// δ >= 0 and (p >= 0 or L < 0 or (L = 0 and q = 0)), with
/// L = 8pr - 9q² - 2p³ and
/// δ = 256r³ - 128p²r² + 144pq²r + 16p⁴r - 27q⁴ - 4p³q².
bool criterion_nonneg(const Quartic& f);

/// The same question answered by the Sturm machinery.
bool sturm_nonneg(const Quartic& f);

/// Seeded triples with |numerator|, denominator <= max_abs.
std::vector<Quartic> random_quartics(std::size_t count, std::uint64_t seed, long max_abs = 20);

}  // namespace posmap::quartic
