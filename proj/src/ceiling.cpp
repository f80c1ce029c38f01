#include "nestrec/ceiling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nestrec/checked.hpp"
#include "nestrec/errors.hpp"

namespace nestrec {

std::int64_t SequenceWindow::at(std::int64_t n) const {
    if (!contains(n)) {
        throw DomainError("index " + std::to_string(n) + " outside window [" + std::to_string(start) +
                          ", " + std::to_string(end() - 1) + "]");
    }
    return values[static_cast<std::size_t>(n - start)];
}

std::int64_t ceil_div(std::int64_t n, std::int64_t d) {
    if (d <= 0) throw DomainError("ceil_div: divisor must be positive, got " + std::to_string(d));
    // Truncation already rounds negative quotients up.
    const std::int64_t q = n / d;
    return (n % d > 0) ? q + 1 : q;
}

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
    if (d <= 0) throw DomainError("floor_div: divisor must be positive, got " + std::to_string(d));
    const std::int64_t q = n / d;
    return (n % d < 0) ? q - 1 : q;
}

std::int64_t mod_floor(std::int64_t n, std::int64_t m) {
    if (m <= 0) throw DomainError("mod_floor: modulus must be positive, got " + std::to_string(m));
    const std::int64_t r = n % m;
    return r < 0 ? r + m : r;
}

namespace {

void require_j(std::int64_t j) {
    if (j < 1) throw DomainError("j must be >= 1, got " + std::to_string(j));
}

}  // namespace

std::int64_t eval_C(std::int64_t j, std::int64_t n) {
    require_j(j);
    const std::int64_t period = checked::mul(2, j);
    const std::int64_t t = floor_div(n, period);
    const std::int64_t r = n - t * period;
    return checked::add(checked::mul(j, t), std::min(r, j));
}

std::int64_t eval_C_direct(std::int64_t j, std::int64_t n) {
    require_j(j);
    const std::int64_t period = checked::mul(2, j);
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < j; ++i) sum = checked::add(sum, ceil_div(checked::sub(n, i), period));
    return sum;
}

CeilingSumForm make_C_form(std::int64_t j) {
    require_j(j);
    const std::int64_t period = checked::mul(2, j);
    CeilingSumForm form;
    form.terms.reserve(static_cast<std::size_t>(j));
    for (std::int64_t i = 0; i < j; ++i) form.terms.push_back({Rational(1, period), Rational(-i, period), 1});
    return form;
}

std::int64_t eval_term(const CeilingTerm& term, std::int64_t n) {
    const Rational x = term.slope * Rational(n) + term.offset;
    return checked::mul(term.coefficient, ceil_div(x.num(), x.den()));
}

std::int64_t eval_form(const CeilingSumForm& form, std::int64_t n) {
    std::int64_t sum = form.constant;
    for (const auto& t : form.terms) sum = checked::add(sum, eval_term(t, n));
    return sum;
}

SequenceWindow eval_form_window(const CeilingSumForm& form, std::int64_t from, std::int64_t to) {
    if (to < from) throw DomainError("empty evaluation range");
    SequenceWindow w{from, {}};
    w.values.reserve(static_cast<std::size_t>(to - from + 1));
    for (std::int64_t n = from; n <= to; ++n) w.values.push_back(eval_form(form, n));
    return w;
}

namespace {

std::vector<std::int64_t> forward_differences(const SequenceWindow& window) {
    if (window.size() < 2) throw DomainError("difference profile needs a window of length >= 2");
    std::vector<std::int64_t> d(window.size() - 1);
    for (std::size_t i = 0; i + 1 < window.size(); ++i) d[i] = checked::sub(window.values[i + 1], window.values[i]);
    return d;
}

bool has_period(std::span<const std::int64_t> d, std::size_t p) {
    for (std::size_t i = 0; i + p < d.size(); ++i)
        if (d[i] != d[i + p]) return false;
    return true;
}

}  // namespace

DifferenceProfile difference_profile(const SequenceWindow& window, std::int64_t min_repeats) {
    if (min_repeats < 1) throw DomainError("min_repeats must be >= 1");
    DifferenceProfile prof;
    prof.diffs = forward_differences(window);
    const auto n = static_cast<std::int64_t>(prof.diffs.size());
    const std::int64_t max_p = n / min_repeats;
    for (std::int64_t p = 1; p <= max_p; ++p) {
        if (has_period(prof.diffs, static_cast<std::size_t>(p))) {
            prof.period = p;
            prof.evidence_length = n - p;
            break;
        }
    }
    return prof;
}

DifferenceProfile difference_profile_with_period(const SequenceWindow& window, std::int64_t period) {
    DifferenceProfile prof;
    prof.diffs = forward_differences(window);
    const auto n = static_cast<std::int64_t>(prof.diffs.size());
    if (period < 1 || period > n) throw DomainError("period " + std::to_string(period) + " out of range");
    if (!has_period(prof.diffs, static_cast<std::size_t>(period)))
        throw DomainError("differences are not " + std::to_string(period) + "-periodic");
    prof.period = period;
    prof.evidence_length = n - period;
    return prof;
}

CeilingSumForm synthesize_form(const SequenceWindow& window, const DifferenceProfile& profile) {
    if (!profile.period) throw DomainError("cannot synthesize a form without a period");
    if (window.empty() || profile.diffs.size() + 1 != window.size())
        throw DomainError("profile does not belong to this window");
    const std::int64_t p = *profile.period;
    if (p < 1 || p > static_cast<std::int64_t>(profile.diffs.size())) throw DomainError("period out of range");

    // Position m = n - start + 1, so ceil((m - i)/p) = ceil(n/p + (1 - start - i)/p).
    CeilingSumForm form;
    form.constant = window.values.front();
    const std::int64_t base = checked::sub(1, window.start);
    for (std::int64_t i = 1; i <= p; ++i) {
        const std::int64_t d = profile.diffs[static_cast<std::size_t>(i - 1)];
        if (d == 0) continue;
        form.terms.push_back({Rational(1, p), Rational(checked::sub(base, i), p), d});
    }

    for (std::size_t k = 0; k < window.size(); ++k) {
        const std::int64_t n = window.start + static_cast<std::int64_t>(k);
        if (eval_form(form, n) != window.values[k])
            throw std::logic_error("synthesized form disagrees with window at n=" + std::to_string(n));
    }
    return form;
}

NonNestedRecurrence non_nested_equivalent(const CeilingSumForm& form) {
    NonNestedRecurrence rec;
    for (const auto& t : form.terms) rec.q = checked::lcm(rec.q, t.slope.den());
    for (const auto& t : form.terms) {
        const std::int64_t b = checked::mul(t.slope.num(), rec.q / t.slope.den());
        rec.increment = checked::add(rec.increment, checked::mul(t.coefficient, b));
    }
    return rec;
}

}  // namespace nestrec
