#include "quartic.hpp"

#include <random>

#include "posmap/sturm.hpp"

namespace posmap::quartic {

Rational delta(const Quartic& f) {
    const Rational& p = f.p;
    const Rational& q = f.q;
    const Rational& r = f.r;
    return Rational(256) * pow(r, 3) - Rational(128) * pow(p, 2) * pow(r, 2) +
           Rational(144) * p * pow(q, 2) * r + Rational(16) * pow(p, 4) * r - Rational(27) * pow(q, 4) -
           Rational(4) * pow(p, 3) * pow(q, 2);
}

Rational big_l(const Quartic& f) {
    return Rational(8) * f.p * f.r - Rational(9) * pow(f.q, 2) - Rational(2) * pow(f.p, 3);
}

bool criterion_nonneg(const Quartic& f) {
    const Rational l = big_l(f);
    return delta(f).sign() >= 0 && (f.p.sign() >= 0 || l.sign() < 0 || (l.is_zero() && f.q.is_zero()));
}

bool sturm_nonneg(const Quartic& f) { return univariate_nonneg(UniPoly{f.r, f.q, f.p, Rational(0), Rational(1)}); }

std::vector<Quartic> random_quartics(std::size_t count, std::uint64_t seed, long max_abs) {
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * max_abs + 1);
    auto draw = [&] {
        const long num = static_cast<long>(rng() % span) - max_abs;
        const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(max_abs)) + 1;
        return Rational(num, den);
    };
    std::vector<Quartic> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rational p = draw();
        Rational q = draw();
        Rational r = draw();
        out.push_back({std::move(p), std::move(q), std::move(r)});
    }
    return out;
}

}  // namespace posmap::quartic
