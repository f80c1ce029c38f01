#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nestrec/rational.hpp"
#include "nestrec/sequence.hpp"

namespace nestrec {

/// Exact ceil(n / d) for d >= 1, correct for negative n.
std::int64_t ceil_div(std::int64_t n, std::int64_t d);
/// Exact floor(n / d) for d >= 1.
std::int64_t floor_div(std::int64_t n, std::int64_t d);
/// Least nonnegative residue of n modulo m (m >= 1).
std::int64_t mod_floor(std::int64_t n, std::int64_t m);

/// C(n) = sum_{i=0}^{j-1} ceil((n - i) / 2j), for any integer n.
///
/// Evaluated in O(1): writing n = 2j*t + r with 0 <= r < 2j gives
/// C(n) = j*t + min(r, j).
std::int64_t eval_C(std::int64_t j, std::int64_t n);

/// Same value as eval_C, summed term by term. Kept as the reference path.
std::int64_t eval_C_direct(std::int64_t j, std::int64_t n);

/// One summand coefficient * ceil(slope * n + offset).
struct CeilingTerm {
    Rational slope;
    Rational offset;
    std::int64_t coefficient = 1;

    friend bool operator==(const CeilingTerm&, const CeilingTerm&) = default;
};

/// constant + sum of ceiling terms.
struct CeilingSumForm {
    std::int64_t constant = 0;
    std::vector<CeilingTerm> terms;

    friend bool operator==(const CeilingSumForm&, const CeilingSumForm&) = default;
};

/// The form of C(n) for a given j: terms ceil((n - i) / 2j), i = 0..j-1.
CeilingSumForm make_C_form(std::int64_t j);

std::int64_t eval_term(const CeilingTerm& term, std::int64_t n);
std::int64_t eval_form(const CeilingSumForm& form, std::int64_t n);

/// Evaluates form on [from, to] (inclusive) as a window starting at from.
SequenceWindow eval_form_window(const CeilingSumForm& form, std::int64_t from, std::int64_t to);

/// Forward differences of a window and the smallest period they exhibit.
struct DifferenceProfile {
    std::vector<std::int64_t> diffs;
    std::optional<std::int64_t> period;
    /// Number of index pairs (i, i + period) that were compared and agreed.
    std::int64_t evidence_length = 0;
};

/// Smallest p with 1 <= p <= floor(len(diffs) / min_repeats) such that the
/// diffs are p-periodic across the whole window; no period if none qualifies.
DifferenceProfile difference_profile(const SequenceWindow& window, std::int64_t min_repeats = 3);

/// Profile for a caller-supplied period. The period is checked against the
/// whole window but no repetition count is demanded; throws DomainError if
/// the diffs are not p-periodic.
DifferenceProfile difference_profile_with_period(const SequenceWindow& window, std::int64_t period);

/// Builds first + sum_i d_i * ceil((m - i) / p), m being the position within
/// the window counted from 1, and rewrites it in terms of the absolute index.
/// Zero-coefficient terms are dropped. The result is checked against every
/// window entry before it is returned.
CeilingSumForm synthesize_form(const SequenceWindow& window, const DifferenceProfile& profile);

struct NonNestedRecurrence {
    std::int64_t q = 1;
    std::int64_t increment = 0;

    friend bool operator==(const NonNestedRecurrence&, const NonNestedRecurrence&) = default;
};

/// (q, increment) such that f(n) = f(n - q) + increment for all n, with q the
/// lcm of the slope denominators.
NonNestedRecurrence non_nested_equivalent(const CeilingSumForm& form);

}  // namespace nestrec
