#include "nestrec/recursion.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "nestrec/ceiling.hpp"
#include "nestrec/checked.hpp"
#include "nestrec/errors.hpp"

namespace nestrec {

namespace {

class SpecScanner {
public:
    explicit SpecScanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::int64_t integer() {
        skip_ws();
        std::int64_t v = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        if (first < last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range) fail("integer out of range");
        if (ec != std::errc()) fail("expected integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }

    void finish() {
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bad recursion spec '" + std::string(text_) + "': " + what + " at column " +
                         std::to_string(pos_ + 1));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RecursionSpec parse_spec(std::string_view text) {
    SpecScanner sc(text);
    RecursionSpec s;
    sc.expect('<');
    s.s1 = sc.integer();
    sc.expect(',');
    s.a1 = sc.integer();
    sc.expect(':');
    s.s2 = sc.integer();
    sc.expect(',');
    s.a2 = sc.integer();
    sc.expect('>');
    sc.finish();
    return s;
}

RecursionSpec parse_spec_plain(std::string_view text) {
    SpecScanner sc(text);
    RecursionSpec s;
    s.s1 = sc.integer();
    sc.expect(',');
    s.a1 = sc.integer();
    sc.expect(',');
    s.s2 = sc.integer();
    sc.expect(',');
    s.a2 = sc.integer();
    sc.finish();
    return s;
}

std::string to_string(const RecursionSpec& spec) {
    std::ostringstream os;
    os << spec;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RecursionSpec& s) {
    return os << '<' << s.s1 << ',' << s.a1 << ':' << s.s2 << ',' << s.a2 << '>';
}

namespace {

// Index referenced by one summand at step n, given the values so far
// (values[k] holds R(k + 1)).
std::int64_t summand_index(std::int64_t n, std::int64_t s, std::int64_t a, const std::vector<std::int64_t>& values) {
    const std::int64_t inner = n - a;
    if (inner < 1 || inner > n - 1) throw DeadSequence(n, inner);
    const std::int64_t outer =
        checked::sub(checked::sub(n, s), values[static_cast<std::size_t>(inner - 1)]);
    if (outer < 1 || outer > n - 1) throw DeadSequence(n, outer);
    return outer;
}

}  // namespace

SequenceWindow generate(const RecursionSpec& spec, const SequenceWindow& ics, std::int64_t count) {
    if (ics.start != 1) throw DomainError("initial conditions must start at index 1");
    if (ics.empty()) throw DomainError("initial conditions must be non-empty");
    if (spec.a1 <= 0 || spec.a2 <= 0) throw DomainError("generation requires a1 > 0 and a2 > 0: " + to_string(spec));
    if (count < static_cast<std::int64_t>(ics.size()))
        throw DomainError("count " + std::to_string(count) + " is shorter than the initial conditions");

    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(count));
    values.assign(ics.values.begin(), ics.values.end());
    for (auto n = static_cast<std::int64_t>(values.size()) + 1; n <= count; ++n) {
        const std::int64_t i1 = summand_index(n, spec.s1, spec.a1, values);
        const std::int64_t i2 = summand_index(n, spec.s2, spec.a2, values);
        values.push_back(checked::add(values[static_cast<std::size_t>(i1 - 1)],
                                      values[static_cast<std::size_t>(i2 - 1)]));
    }
    return {1, std::move(values)};
}

std::optional<std::int64_t> audit_generation(const RecursionSpec& spec, const SequenceWindow& window,
                                             std::int64_t ics_length) {
    if (window.start != 1) throw DomainError("audit expects a window starting at 1");
    const auto& v = window.values;
    for (auto n = ics_length + 1; n <= static_cast<std::int64_t>(v.size()); ++n) {
        try {
            const std::int64_t i1 = summand_index(n, spec.s1, spec.a1, v);
            const std::int64_t i2 = summand_index(n, spec.s2, spec.a2, v);
            if (v[static_cast<std::size_t>(i1 - 1)] + v[static_cast<std::size_t>(i2 - 1)] !=
                v[static_cast<std::size_t>(n - 1)])
                return n;
        } catch (const DeadSequence&) {
            return n;
        }
    }
    return std::nullopt;
}

std::int64_t h_value(std::int64_t j, const RecursionSpec& spec, std::int64_t n) {
    using checked::sub;
    const std::int64_t first = eval_C(j, sub(sub(n, spec.s1), eval_C(j, sub(n, spec.a1))));
    const std::int64_t second = eval_C(j, sub(sub(n, spec.s2), eval_C(j, sub(n, spec.a2))));
    return sub(checked::add(first, second), eval_C(j, n));
}

SatisfactionReport formally_satisfies(std::int64_t j, const RecursionSpec& spec) {
    if (j < 1) throw DomainError("j must be >= 1");
    SatisfactionReport rep;
    rep.j = j;
    const std::int64_t window = checked::mul(4, j);
    rep.h_values.reserve(static_cast<std::size_t>(window));
    for (std::int64_t n = 0; n < window; ++n) {
        const std::int64_t h = h_value(j, spec, n);
        rep.h_values.emplace_back(n, h);
        if (h != 0 && !rep.witness_n) rep.witness_n = n;
    }
    rep.satisfied = !rep.witness_n.has_value();
    return rep;
}

bool formally_satisfies_fast(std::int64_t j, const RecursionSpec& spec) {
    if (j < 1) throw DomainError("j must be >= 1");
    const std::int64_t window = checked::mul(4, j);
    for (std::int64_t n = 0; n < window; ++n)
        if (h_value(j, spec, n) != 0) return false;
    return true;
}

bool is_slow(const SequenceWindow& window) {
    if (window.size() < 2) throw DomainError("slowness needs a window of length >= 2");
    for (std::size_t i = 0; i + 1 < window.size(); ++i) {
        const std::int64_t d = checked::sub(window.values[i + 1], window.values[i]);
        if (d != 0 && d != 1) return false;
    }
    return true;
}

std::int64_t ics_search_cap(std::int64_t j, const RecursionSpec& spec) {
    using checked::add;
    return add(add(add(add(checked::mul(20, j), std::llabs(spec.s1)), std::llabs(spec.s2)), spec.a1), spec.a2);
}

namespace {

SequenceWindow c_prefix(std::int64_t j, std::int64_t m) {
    SequenceWindow w{1, {}};
    w.values.reserve(static_cast<std::size_t>(m));
    for (std::int64_t n = 1; n <= m; ++n) w.values.push_back(eval_C(j, n));
    return w;
}

}  // namespace

SequenceWindow ics_for_C(std::int64_t j, const RecursionSpec& spec, std::optional<std::int64_t> requested) {
    const auto report = formally_satisfies(j, spec);
    if (!report.satisfied) {
        throw NotSatisfied("C with j=" + std::to_string(j) + " does not formally satisfy " + to_string(spec) +
                           " (h(" + std::to_string(*report.witness_n) + ") != 0)");
    }
    if (spec.a1 <= 0 || spec.a2 <= 0) throw DomainError("generation requires a1 > 0 and a2 > 0: " + to_string(spec));
    if (requested) {
        if (*requested < 1) throw DomainError("requested number of initial conditions must be >= 1");
        return c_prefix(j, *requested);
    }

    const std::int64_t cap = ics_search_cap(j, spec);
    for (std::int64_t m = 1; m <= cap; ++m) {
        const std::int64_t horizon = std::max(checked::mul(10, m), checked::mul(40, j));
        auto ics = c_prefix(j, m);
        try {
            const auto gen = generate(spec, ics, horizon);
            bool ok = true;
            for (std::int64_t n = 1; n <= horizon && ok; ++n) ok = gen.values[static_cast<std::size_t>(n - 1)] == eval_C(j, n);
            if (ok) return ics;
        } catch (const DeadSequence&) {
        }
    }
    throw NoValidIcs("no m <= " + std::to_string(cap) + " initial conditions regenerate C for " + to_string(spec));
}

}  // namespace nestrec
