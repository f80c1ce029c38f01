#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestrec/sequence.hpp"

namespace nestrec {

/// Parameters of R(n) = R(n - s1 - R(n - a1)) + R(n - s2 - R(n - a2)),
/// written <s1,a1:s2,a2>.
struct RecursionSpec {
    std::int64_t s1 = 0;
    std::int64_t a1 = 0;
    std::int64_t s2 = 0;
    std::int64_t a2 = 0;

    /// The same recursion with its two summands exchanged.
    RecursionSpec swapped() const noexcept { return {s2, a2, s1, a1}; }

    friend auto operator<=>(const RecursionSpec&, const RecursionSpec&) = default;
};

/// Parses `<s1,a1:s2,a2>`; whitespace around tokens is allowed.
RecursionSpec parse_spec(std::string_view text);
/// Parses the quote-free `s1,a1,s2,a2` variant.
RecursionSpec parse_spec_plain(std::string_view text);
std::string to_string(const RecursionSpec& spec);
std::ostream& operator<<(std::ostream& os, const RecursionSpec& spec);

/// Runs the recursion forward from initial conditions at indices 1..len(ics).
/// Every referenced index must lie in [1, n-1]; otherwise DeadSequence.
SequenceWindow generate(const RecursionSpec& spec, const SequenceWindow& ics, std::int64_t count);

/// Re-checks a generated window: every term past the first `ics_length`
/// must follow from earlier in-range terms. Returns the first offending n,
/// if any.
std::optional<std::int64_t> audit_generation(const RecursionSpec& spec, const SequenceWindow& window,
                                             std::int64_t ics_length);

/// h(n) = C(n - s1 - C(n - a1)) + C(n - s2 - C(n - a2)) - C(n).
std::int64_t h_value(std::int64_t j, const RecursionSpec& spec, std::int64_t n);

struct SatisfactionReport {
    bool satisfied = false;
    std::int64_t j = 1;
    std::optional<std::int64_t> witness_n;
    std::vector<std::pair<std::int64_t, std::int64_t>> h_values;  // (n, h)
};

/// C formally satisfies spec iff h vanishes on n = 0..4j-1 (h is 4j-periodic).
SatisfactionReport formally_satisfies(std::int64_t j, const RecursionSpec& spec);

/// Same verdict as formally_satisfies(j, spec).satisfied, stopping at the
/// first nonzero h. Used by the sweep kernels.
bool formally_satisfies_fast(std::int64_t j, const RecursionSpec& spec);

/// True iff every forward difference is 0 or 1.
bool is_slow(const SequenceWindow& window);

/// Upper bound on the number of initial conditions tried by ics_for_C.
std::int64_t ics_search_cap(std::int64_t j, const RecursionSpec& spec);

/// Initial conditions C(1..m) from which spec regenerates C. With no
/// requested m, searches m = 1, 2, ... up to ics_search_cap and accepts the
/// first m whose generated sequence matches C on max(10m, 40j) terms.
SequenceWindow ics_for_C(std::int64_t j, const RecursionSpec& spec, std::optional<std::int64_t> requested = {});

}  // namespace nestrec
