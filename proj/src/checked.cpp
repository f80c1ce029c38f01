#include "nestrec/checked.hpp"

#include <numeric>
#include <string>

#include "nestrec/errors.hpp"

namespace nestrec::checked {

namespace {

[[noreturn]] void overflow(const char* op, std::int64_t a, std::int64_t b) {
    throw OverflowError(std::string("64-bit overflow in ") + op + "(" + std::to_string(a) + ", " +
                        std::to_string(b) + ")");
}

}  // namespace

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add", a, b);
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("sub", a, b);
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul", a, b);
    return r;
}

std::int64_t neg(std::int64_t a) { return sub(0, a); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) throw DomainError("lcm expects positive arguments");
    return mul(a / std::gcd(a, b), b);
}

}  // namespace nestrec::checked
