#pragma once

#include <cstdint>

namespace nestrec::checked {

// All throw OverflowError instead of wrapping.
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);

/// lcm of two positive values.
std::int64_t lcm(std::int64_t a, std::int64_t b);

}  // namespace nestrec::checked
