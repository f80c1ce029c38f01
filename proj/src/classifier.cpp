#include "nestrec/classifier.hpp"

#include <algorithm>
#include <sstream>

#include "nestrec/ceiling.hpp"
#include "nestrec/checked.hpp"
#include "nestrec/errors.hpp"
#include "nestrec/kernels.hpp"

namespace nestrec {

char to_char(RelationKind kind) noexcept {
    switch (kind) {
        case RelationKind::A: return 'A';
        case RelationKind::B: return 'B';
        case RelationKind::C: return 'C';
    }
    return '?';
}

std::string to_string(const Relation& rel) { return std::string(1, to_char(rel.kind)) + "(" + std::to_string(rel.multiplier) + ")"; }

RecursionSpec apply_relation(std::int64_t j, const RecursionSpec& spec, const Relation& rel) {
    using checked::add;
    using checked::mul;
    if (j < 1) throw DomainError("j must be >= 1");
    const std::int64_t step = mul(rel.multiplier, j);
    RecursionSpec out = spec;
    switch (rel.kind) {
        case RelationKind::A:
            out.s1 = add(spec.s1, step);
            out.a1 = add(spec.a1, mul(2, step));
            break;
        case RelationKind::B:
            out.s2 = add(spec.s2, step);
            out.a2 = add(spec.a2, mul(2, step));
            break;
        case RelationKind::C:
            out.s1 = checked::sub(spec.s1, mul(2, step));
            out.s2 = add(spec.s2, mul(2, step));
            break;
    }
    return out;
}

RecursionSpec replay(std::int64_t j, RecursionSpec spec, const std::vector<Relation>& trace) {
    for (const auto& rel : trace) spec = apply_relation(j, spec, rel);
    return spec;
}

CanonicalForm normalize(std::int64_t j, const RecursionSpec& spec) {
    if (j < 1) throw DomainError("j must be >= 1");
    const std::int64_t period = checked::mul(2, j);
    CanonicalForm out{spec, {}};
    out.trace.reserve(3);

    auto step = [&](RelationKind kind, std::int64_t multiplier) {
        const Relation rel{kind, multiplier};
        out.spec = apply_relation(j, out.spec, rel);
        out.trace.push_back(rel);
    };
    // a2 = 2j q + a2'  ->  B(-q)
    step(RelationKind::B, -floor_div(out.spec.a2, period));
    // s2 = 2j c + s2'  ->  C(-c), moving 2j c onto s1
    step(RelationKind::C, -floor_div(out.spec.s2, period));
    // a1 = 2j d + a1'  ->  A(-d)
    step(RelationKind::A, -floor_div(out.spec.a1, period));
    return out;
}

RecursionSpec swap_normalized(const RecursionSpec& spec) { return std::min(spec, spec.swapped()); }

bool equivalent(std::int64_t j, const RecursionSpec& x, const RecursionSpec& y, bool ignore_summand_order) {
    if (!ignore_summand_order) return normalize(j, x).spec == normalize(j, y).spec;
    const auto nx = normalize(j, x).spec;
    return nx == normalize(j, y).spec || nx == normalize(j, y.swapped()).spec;
}

ConditionCheck conditions_hold(std::int64_t j, const RecursionSpec& spec) {
    if (j < 1) throw DomainError("j must be >= 1");
    const std::int64_t period = checked::mul(2, j);
    ConditionCheck c;
    c.shifts_divisible = mod_floor(spec.s1, j) == 0 && mod_floor(spec.s2, j) == 0;
    c.lags_odd_multiple = mod_floor(spec.a1, period) == j && mod_floor(spec.a2, period) == j;
    c.balanced = checked::mul(2, checked::add(spec.s1, spec.s2)) == checked::add(spec.a1, spec.a2);
    return c;
}

namespace {

std::string describe(std::int64_t j, const RecursionSpec& spec, const ConditionCheck& c, const SatisfactionReport& rep) {
    std::ostringstream os;
    os << "j=" << j << " spec=" << spec << " conditions=(" << c.shifts_divisible << ',' << c.lags_odd_multiple << ','
       << c.balanced << ") satisfied=" << rep.satisfied << " h=[";
    for (std::size_t i = 0; i < rep.h_values.size(); ++i) os << (i ? " " : "") << rep.h_values[i].second;
    os << ']';
    return os.str();
}

}  // namespace

Verdict classify(std::int64_t j, const RecursionSpec& spec) {
    Verdict v;
    v.spec = spec;
    v.j = j;
    v.conditions = conditions_hold(j, spec);
    v.satisfaction = formally_satisfies(j, spec);
    v.canonical = normalize(j, spec);
    if (v.conditions.holds() != v.satisfaction.satisfied)
        throw TheoremViolation("condition check and satisfaction check disagree: " +
                               describe(j, spec, v.conditions, v.satisfaction));
    return v;
}

Range parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("range must look like lo:hi, got '" + text + "'");
    try {
        std::size_t used = 0;
        Range r;
        const std::string lo = text.substr(0, colon);
        const std::string hi = text.substr(colon + 1);
        r.lo = std::stoll(lo, &used);
        if (used != lo.size()) throw ParseError("bad range '" + text + "'");
        r.hi = std::stoll(hi, &used);
        if (used != hi.size()) throw ParseError("bad range '" + text + "'");
        return r;
    } catch (const std::logic_error&) {
        throw ParseError("bad range '" + text + "'");
    }
}

ParameterBox ParameterBox::standard(std::int64_t j) {
    if (j < 1) throw DomainError("j must be >= 1");
    const Range s{checked::mul(-4, j), checked::mul(4, j)};
    const Range a{0, checked::sub(checked::mul(6, j), 1)};
    return {s, a, s, a};
}

std::int64_t ParameterBox::total() const {
    using checked::mul;
    return mul(mul(s1.size(), a1.size()), mul(s2.size(), a2.size()));
}

RecursionSpec ParameterBox::spec_at(std::int64_t index) const {
    RecursionSpec s;
    s.a2 = a2.lo + index % a2.size();
    index /= a2.size();
    s.s2 = s2.lo + index % s2.size();
    index /= s2.size();
    s.a1 = a1.lo + index % a1.size();
    index /= a1.size();
    s.s1 = s1.lo + index;
    return s;
}

SweepResult sweep(std::int64_t j, const ParameterBox& box, Execution exec, bool keep_rows) {
    SweepResult res;
    res.j = j;
    res.box = box;
    res.total = box.total();
    if (res.total == 0) return res;

    const auto flags = exec == Execution::Parallel ? kernels::classify_box_parallel(j, box)
                                                   : kernels::classify_box_serial(j, box);
    using namespace kernels;
    if (keep_rows) res.rows.reserve(flags.size());
    for (std::int64_t i = 0; i < res.total; ++i) {
        const std::uint8_t f = flags[static_cast<std::size_t>(i)];
        const ConditionCheck c{(f & kShiftsDivisible) != 0, (f & kLagsOddMultiple) != 0, (f & kBalanced) != 0};
        const bool sat = (f & kSatisfied) != 0;
        if (c.holds() != sat) {
            // Re-run the full check so the error carries the h profile.
            const auto spec = box.spec_at(i);
            throw TheoremViolation("sweep aborted: " + describe(j, spec, c, formally_satisfies(j, spec)));
        }
        if (sat) res.satisfying.push_back(box.spec_at(i));
        if (keep_rows) {
            const auto spec = box.spec_at(i);
            res.rows.push_back({spec, c, sat, normalize(j, spec).spec});
        }
    }
    return res;
}

}  // namespace nestrec
