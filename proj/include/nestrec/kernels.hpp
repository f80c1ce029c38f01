#pragma once

// Data-parallel inner loops. Each kernel has a serial reference twin that
// the tests compare against; the parallel versions use OpenMP when built
// with it and fall back to the serial loop otherwise.

#include <cstdint>
#include <vector>

#include "nestrec/classifier.hpp"

namespace nestrec::kernels {

/// Bit layout of one entry of a classified box.
enum BoxFlag : std::uint8_t {
    kShiftsDivisible = 1u << 0,
    kLagsOddMultiple = 1u << 1,
    kBalanced = 1u << 2,
    kSatisfied = 1u << 3,
};

std::uint8_t classify_flags(std::int64_t j, const RecursionSpec& spec);

std::vector<std::uint8_t> classify_box_serial(std::int64_t j, const ParameterBox& box);
std::vector<std::uint8_t> classify_box_parallel(std::int64_t j, const ParameterBox& box);

/// C(from..to) inclusive.
std::vector<std::int64_t> eval_C_range_serial(std::int64_t j, std::int64_t from, std::int64_t to);
std::vector<std::int64_t> eval_C_range_parallel(std::int64_t j, std::int64_t from, std::int64_t to);

/// Number of worker threads the parallel kernels will use.
int max_threads();

}  // namespace nestrec::kernels
