#pragma once

#include <cstdint>
#include <vector>

namespace nestrec {

/// Contiguous slice of an integer sequence; values[i] is the term at
/// index start + i.
struct SequenceWindow {
    std::int64_t start = 1;
    std::vector<std::int64_t> values;

    std::size_t size() const noexcept { return values.size(); }
    bool empty() const noexcept { return values.empty(); }
    /// One past the last index.
    std::int64_t end() const noexcept { return start + static_cast<std::int64_t>(values.size()); }
    bool contains(std::int64_t n) const noexcept { return n >= start && n < end(); }

    /// Term at absolute index n. Throws DomainError if n is outside the window.
    std::int64_t at(std::int64_t n) const;

    friend bool operator==(const SequenceWindow&, const SequenceWindow&) = default;
};

}  // namespace nestrec
