#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's arithmetic paths.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "nestrec/ceiling.hpp"
#include "nestrec/recursion.hpp"

namespace oracle {

/// ceil(n/d) as -floor(-n/d), through long double. Exact for the small
/// magnitudes the tests use.
inline std::int64_t ceil_div(std::int64_t n, std::int64_t d) {
    return -static_cast<std::int64_t>(std::floor(static_cast<long double>(-n) / static_cast<long double>(d)));
}

/// sum_{i<j} ceil((n-i)/2j), term by term.
inline std::int64_t C(std::int64_t j, std::int64_t n) {
    std::int64_t s = 0;
    for (std::int64_t i = 0; i < j; ++i) s += ceil_div(n - i, 2 * j);
    return s;
}

inline std::int64_t h(std::int64_t j, const nestrec::RecursionSpec& y, std::int64_t n) {
    return C(j, n - y.s1 - C(j, n - y.a1)) + C(j, n - y.s2 - C(j, n - y.a2)) - C(j, n);
}

/// Piecewise values of C on -j..4j-1.
inline std::int64_t C_table_forward(std::int64_t j, std::int64_t n) {
    if (n >= -j && n <= -1) return 0;
    if (n >= 0 && n <= j - 1) return n;
    if (n >= j && n <= 2 * j - 1) return j;
    if (n >= 2 * j && n <= 3 * j - 1) return n - j;
    if (n >= 3 * j && n <= 4 * j - 1) return 2 * j;
    throw std::out_of_range("outside table");
}

/// Piecewise values of C on -2j..2j.
inline std::int64_t C_table_backward(std::int64_t j, std::int64_t n) {
    if (n >= -2 * j && n <= -j - 1) return n + j;
    if (n >= -j && n <= 0) return 0;
    if (n >= 1 && n <= j - 1) return n;
    if (n >= j && n <= 2 * j) return j;
    throw std::out_of_range("outside table");
}

/// Conditions (i)-(iii) evaluated with plain % arithmetic.
inline bool conditions(std::int64_t j, const nestrec::RecursionSpec& y) {
    auto md = [](std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; };
    return md(y.s1, j) == 0 && md(y.s2, j) == 0 && md(y.a1, 2 * j) == j && md(y.a2, 2 * j) == j &&
           2 * (y.s1 + y.s2) == y.a1 + y.a2;
}

inline nestrec::RecursionSpec random_spec(std::mt19937_64& rng, std::int64_t j) {
    std::uniform_int_distribution<std::int64_t> s(-4 * j, 4 * j);
    std::uniform_int_distribution<std::int64_t> a(0, 6 * j - 1);
    return {s(rng), a(rng), s(rng), a(rng)};
}

/// Random form with up to 5 terms, slope denominators up to 12.
inline nestrec::CeilingSumForm random_form(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<std::int64_t> small(-6, 6);
    std::uniform_int_distribution<std::int64_t> den(1, 12);
    std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
    nestrec::CeilingSumForm f;
    f.constant = small(rng);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        f.terms.push_back({nestrec::Rational(small(rng), den(rng)), nestrec::Rational(small(rng), den(rng)), coeff(rng)});
    return f;
}

/// Window whose differences repeat `diffs` for `periods` periods.
inline nestrec::SequenceWindow periodic_window(std::int64_t start, std::int64_t first,
                                               const std::vector<std::int64_t>& diffs, std::int64_t periods) {
    nestrec::SequenceWindow w{start, {first}};
    for (std::int64_t r = 0; r < periods; ++r)
        for (auto d : diffs) w.values.push_back(w.values.back() + d);
    return w;
}

}  // namespace oracle
