#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nestrec/recursion.hpp"

namespace nestrec {

// Parameter moves that leave h(n) unchanged for every n:
//   A(c): <s1 + c j, a1 + 2c j : s2, a2>
//   B(d): <s1, a1 : s2 + d j, a2 + 2d j>
//   C(e): <s1 - 2e j, a1 : s2 + 2e j, a2>
enum class RelationKind { A, B, C };

struct Relation {
    RelationKind kind = RelationKind::A;
    std::int64_t multiplier = 0;

    Relation inverse() const { return {kind, -multiplier}; }

    friend bool operator==(const Relation&, const Relation&) = default;
};

char to_char(RelationKind kind) noexcept;
std::string to_string(const Relation& rel);

RecursionSpec apply_relation(std::int64_t j, const RecursionSpec& spec, const Relation& rel);
RecursionSpec replay(std::int64_t j, RecursionSpec spec, const std::vector<Relation>& trace);

/// Representative with a1, s2, a2 in {0, ..., 2j-1} (s1 unrestricted), plus
/// the relations that lead there from the input.
struct CanonicalForm {
    RecursionSpec spec;
    std::vector<Relation> trace;
};

/// Reduces a2 with B, then s2 with C, then a1 with A, each step taking the
/// least nonnegative remainder modulo 2j. The trace always has three entries.
CanonicalForm normalize(std::int64_t j, const RecursionSpec& spec);

/// Lexicographically smaller of spec and its summand swap.
RecursionSpec swap_normalized(const RecursionSpec& spec);

/// True iff both specs normalize to the same representative. Summand order
/// matters unless `ignore_summand_order` is set.
bool equivalent(std::int64_t j, const RecursionSpec& x, const RecursionSpec& y, bool ignore_summand_order = false);

/// The three parameter conditions:
///   (i)   s1, s2 = 0 mod j
///   (ii)  a1, a2 = j mod 2j
///   (iii) 2(s1 + s2) = a1 + a2
struct ConditionCheck {
    bool shifts_divisible = false;  // (i)
    bool lags_odd_multiple = false;  // (ii)
    bool balanced = false;           // (iii)

    bool holds() const noexcept { return shifts_divisible && lags_odd_multiple && balanced; }

    friend bool operator==(const ConditionCheck&, const ConditionCheck&) = default;
};

ConditionCheck conditions_hold(std::int64_t j, const RecursionSpec& spec);

struct Verdict {
    RecursionSpec spec;
    std::int64_t j = 1;
    ConditionCheck conditions;
    SatisfactionReport satisfaction;
    CanonicalForm canonical;
};

/// Runs the condition check and the finite satisfaction check side by side.
/// Throws TheoremViolation if they disagree.
Verdict classify(std::int64_t j, const RecursionSpec& spec);

/// Inclusive integer range; empty when lo > hi.
struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const noexcept { return lo > hi; }
    std::int64_t size() const noexcept { return empty() ? 0 : hi - lo + 1; }

    friend bool operator==(const Range&, const Range&) = default;
};

/// Parses `lo:hi`.
Range parse_range(const std::string& text);

struct ParameterBox {
    Range s1, a1, s2, a2;

    /// s in [-4j, 4j], a in [0, 6j - 1].
    static ParameterBox standard(std::int64_t j);

    std::int64_t total() const;
    /// Spec at flat position `index`, iterating s1 slowest and a2 fastest.
    RecursionSpec spec_at(std::int64_t index) const;
};

struct SweepRow {
    RecursionSpec spec;
    ConditionCheck conditions;
    bool satisfied = false;
    RecursionSpec canonical;
};

struct SweepResult {
    std::int64_t j = 1;
    ParameterBox box;
    std::int64_t total = 0;
    std::vector<RecursionSpec> satisfying;
    std::vector<SweepRow> rows;  // empty unless requested
};

enum class Execution { Serial, Parallel };

/// Classifies every spec in the box. Throws TheoremViolation naming the first
/// offending spec in box order.
SweepResult sweep(std::int64_t j, const ParameterBox& box, Execution exec = Execution::Parallel,
                  bool keep_rows = true);

}  // namespace nestrec
