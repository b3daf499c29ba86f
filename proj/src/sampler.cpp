#include "posmap/nonneg.hpp"

#include <algorithm>

namespace posmap {

namespace {

constexpr std::size_t kMaxStructuredSupport = 8;
constexpr std::uint64_t kPointsPerBoundStep = 1000;
constexpr unsigned kMaxBoundExponent = 20;

}  // namespace

SampleSchedule::SampleSchedule(std::size_t nvars, std::vector<std::size_t> active, std::uint64_t seed)
    : nvars_(nvars), active_(std::move(active)), rng_(seed) {
    for (std::size_t v : active_)
        if (v >= nvars_) throw DimensionMismatch("active variable out of range");
    if (active_.empty()) {
        structured_done_ = true;
    } else {
        support_ = 1;
        combo_ = {0};
    }
}

void SampleSchedule::advance_structured() {
    if (++mask_ < (std::uint64_t{1} << support_)) return;
    mask_ = 0;
    // Next k-combination of active_ positions in lexicographic order.
    const std::size_t m = active_.size();
    std::size_t k = support_;
    std::size_t pos = k;
    while (pos > 0 && combo_[pos - 1] == m - k + pos - 1) --pos;
    if (pos > 0) {
        ++combo_[pos - 1];
        for (std::size_t q = pos; q < k; ++q) combo_[q] = combo_[q - 1] + 1;
        return;
    }
    if (++support_ > std::min(m, kMaxStructuredSupport)) {
        structured_done_ = true;
        return;
    }
    combo_.resize(support_);
    for (std::size_t q = 0; q < support_; ++q) combo_[q] = q;
}

std::vector<Rational> SampleSchedule::next() {
    std::vector<Rational> point(nvars_, Rational(0));
    ++produced_;
    if (!structured_done_) {
        for (std::size_t q = 0; q < combo_.size(); ++q)
            point[active_[combo_[q]]] = (mask_ >> q) & 1u ? Rational(-1) : Rational(1);
        advance_structured();
        return point;
    }
    const unsigned exponent =
        static_cast<unsigned>(std::min<std::uint64_t>(1 + random_produced_ / kPointsPerBoundStep, kMaxBoundExponent));
    const std::uint64_t bound = std::uint64_t{1} << exponent;
    ++random_produced_;
    for (std::size_t v : active_) {
        const auto num = static_cast<long>(rng_() % (2 * bound + 1)) - static_cast<long>(bound);
        const auto den = static_cast<long>(rng_() % bound) + 1;
        point[v] = Rational(num, den);
    }
    return point;
}

SampleResult sample_refute(const MultiPoly& g, std::uint64_t budget, std::uint64_t seed) {
    SampleResult result;
    SampleSchedule schedule(g.nvars(), g.active_variables(), seed);
    while (result.samples_used < budget) {
        std::vector<Rational> point = schedule.next();
        ++result.samples_used;
        Rational value = evaluate(g, point);
        if (value.sign() < 0) {
            result.witness = std::move(point);
            result.value = std::move(value);
            break;
        }
    }
    return result;
}

std::optional<Rational> find_negative_point(const UniPoly& f, std::uint64_t max_evaluations) {
    if (f.is_zero()) return std::nullopt;
    if (f.is_constant()) return f.leading().sign() < 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;

    Rational cauchy(0);
    for (const auto& c : f.coefficients()) cauchy = std::max(cauchy, (c / f.leading()).abs());
    cauchy += 1;
    Integer bound = cauchy.numerator() / cauchy.denominator() + 1;

    std::uint64_t evaluations = 0;
    for (unsigned m = 0;; ++m) {
        const Integer scale = Integer(1) << m;
        const Integer limit = bound * scale;
        for (Integer k = 0; k <= limit; ++k) {
            if (m > 0 && mpz_even_p(k.get_mpz_t())) continue;
            for (int s : {1, -1}) {
                if (k == 0 && s < 0) continue;
                if (evaluations++ >= max_evaluations) return std::nullopt;
                const Rational t(s * k, scale);
                if (f(t).sign() < 0) return t;
            }
        }
    }
}

}  // namespace posmap
