#include "nestrec/kernels.hpp"

#include <exception>
#include <limits>

#include "nestrec/ceiling.hpp"
#include "nestrec/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nestrec::kernels {

std::uint8_t classify_flags(std::int64_t j, const RecursionSpec& spec) {
    const auto c = conditions_hold(j, spec);
    std::uint8_t f = 0;
    if (c.shifts_divisible) f |= kShiftsDivisible;
    if (c.lags_odd_multiple) f |= kLagsOddMultiple;
    if (c.balanced) f |= kBalanced;
    if (formally_satisfies_fast(j, spec)) f |= kSatisfied;
    return f;
}

std::vector<std::uint8_t> classify_box_serial(std::int64_t j, const ParameterBox& box) {
    const std::int64_t total = box.total();
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(total));
    for (std::int64_t i = 0; i < total; ++i) flags[static_cast<std::size_t>(i)] = classify_flags(j, box.spec_at(i));
    return flags;
}

std::vector<std::uint8_t> classify_box_parallel(std::int64_t j, const ParameterBox& box) {
    if (j < 1) throw DomainError("j must be >= 1");
    const std::int64_t total = box.total();
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(total));

    // Exceptions cannot cross the parallel region; keep the one from the
    // lowest index so the error matches the serial run.
    std::int64_t failed_at = std::numeric_limits<std::int64_t>::max();
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1024)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            flags[static_cast<std::size_t>(i)] = classify_flags(j, box.spec_at(i));
        } catch (...) {
#pragma omp critical(nestrec_kernel_failure)
            if (i < failed_at) {
                failed_at = i;
                failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    return flags;
}

std::vector<std::int64_t> eval_C_range_serial(std::int64_t j, std::int64_t from, std::int64_t to) {
    if (to < from) return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(to - from + 1));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = eval_C(j, from + static_cast<std::int64_t>(k));
    return out;
}

std::vector<std::int64_t> eval_C_range_parallel(std::int64_t j, std::int64_t from, std::int64_t to) {
    if (j < 1) throw DomainError("j must be >= 1");
    if (to < from) return {};
    const std::int64_t len = to - from + 1;
    std::vector<std::int64_t> out(static_cast<std::size_t>(len));
    std::int64_t failed_at = std::numeric_limits<std::int64_t>::max();
    std::exception_ptr failure;

#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < len; ++k) {
        try {
            out[static_cast<std::size_t>(k)] = eval_C(j, from + k);
        } catch (...) {
#pragma omp critical(nestrec_kernel_failure)
            if (k < failed_at) {
                failed_at = k;
                failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace nestrec::kernels
