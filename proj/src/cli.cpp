#include "nestrec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nestrec/ceiling.hpp"
#include "nestrec/classifier.hpp"
#include "nestrec/errors.hpp"
#include "nestrec/io.hpp"
#include "nestrec/kernels.hpp"
#include "nestrec/recursion.hpp"

namespace nestrec::cli {

namespace {

struct SpecOptions {
    std::string spec;
    std::string plain;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--spec", spec, "Recursion as <s1,a1:s2,a2>");
        auto* b = cmd->add_option("--spec-plain", plain, "Recursion as s1,a1,s2,a2");
        a->excludes(b);
    }

    RecursionSpec get() const {
        if (!spec.empty()) return parse_spec(spec);
        if (!plain.empty()) return parse_spec_plain(plain);
        throw CLI::RequiredError("--spec or --spec-plain");
    }
};

struct FormOptions {
    std::string text;
    std::string json_path;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--form", text, "Ceiling-sum form in text syntax");
        auto* b = cmd->add_option("--form-json", json_path, "File holding a ceiling-sum form as JSON");
        a->excludes(b);
    }

    CeilingSumForm get() const {
        if (!text.empty()) return io::parse_form(text);
        if (!json_path.empty()) {
            std::ifstream f(json_path);
            if (!f) throw DomainError("cannot open " + json_path);
            nlohmann::json j;
            try {
                f >> j;
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("bad JSON in ") + json_path + ": " + e.what());
            }
            return io::form_from_json(j);
        }
        throw CLI::RequiredError("--form or --form-json");
    }
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw ParseError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_verdict_text(std::ostream& out, const Verdict& v) {
    out << "spec " << v.spec << '\n'
        << "j " << v.j << '\n'
        << "cond_i " << yes_no(v.conditions.shifts_divisible) << '\n'
        << "cond_ii " << yes_no(v.conditions.lags_odd_multiple) << '\n'
        << "cond_iii " << yes_no(v.conditions.balanced) << '\n'
        << "conditions_hold " << yes_no(v.conditions.holds()) << '\n'
        << "satisfied " << yes_no(v.satisfaction.satisfied) << '\n'
        << "canonical " << v.canonical.spec << '\n'
        << "trace";
    for (const auto& r : v.canonical.trace) out << ' ' << to_string(r);
    out << '\n';
}

void print_report_text(std::ostream& out, const RecursionSpec& spec, const SatisfactionReport& rep) {
    out << "spec " << spec << '\n' << "j " << rep.j << '\n' << "satisfied " << yes_no(rep.satisfied) << '\n';
    out << "witness ";
    if (rep.witness_n)
        out << *rep.witness_n << '\n';
    else
        out << "none\n";
    out << "h";
    for (const auto& [n, h] : rep.h_values) out << ' ' << h;
    out << '\n';
}

SequenceWindow read_input(const std::string& path, const std::string& format, std::istream& in) {
    const auto fmt = format.empty() ? io::detect_format(path) : io::parse_seq_format(format);
    if (path == "-") return io::read_window(in, fmt);
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return io::read_window(f, fmt);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nested recursions solved by sums of ceiling functions"};
    app.name("nestrec");
    app.require_subcommand(1);

    const std::vector<std::string> seq_formats{"bfile", "csv", "json"};
    const std::vector<std::string> report_formats{"text", "json"};

    // eval-c
    std::int64_t j = 1, from = 0, to = 0;
    std::string format = "bfile";
    auto* eval_c = app.add_subcommand("eval-c", "Evaluate C(n) = sum_{i<j} ceil((n-i)/2j) over a range");
    eval_c->add_option("--j", j, "j >= 1")->required();
    eval_c->add_option("--from", from)->required();
    eval_c->add_option("--to", to)->required();
    eval_c->add_option("--format", format)->check(CLI::IsMember(seq_formats));

    // eval-form
    FormOptions form_opts;
    auto* eval_form_cmd = app.add_subcommand("eval-form", "Evaluate a ceiling-sum form over a range");
    form_opts.attach(eval_form_cmd);
    eval_form_cmd->add_option("--from", from)->required();
    eval_form_cmd->add_option("--to", to)->required();
    eval_form_cmd->add_option("--format", format)->check(CLI::IsMember(seq_formats));

    // gen
    SpecOptions spec_opts;
    std::string ics_text;
    std::optional<std::int64_t> ics_from_c, ics_count;
    std::int64_t count = 0;
    auto* gen = app.add_subcommand("gen", "Generate a recursion's solution from initial conditions");
    spec_opts.attach(gen);
    auto* ics_opt = gen->add_option("--ics", ics_text, "Comma-separated R(1), R(2), ...");
    auto* ics_c_opt = gen->add_option("--ics-from-c", ics_from_c, "Take initial conditions from C with this j");
    ics_opt->excludes(ics_c_opt);
    gen->add_option("--ics-count", ics_count, "Number of initial conditions taken from C (default: searched)")
        ->needs(ics_c_opt);
    gen->add_option("--count", count, "Number of terms")->required();
    gen->add_option("--format", format)->check(CLI::IsMember(seq_formats));

    // check
    std::string rformat = "text";
    auto* check = app.add_subcommand("check", "Decide whether C formally satisfies a recursion");
    spec_opts.attach(check);
    check->add_option("--j", j)->required();
    check->add_option("--format", rformat)->check(CLI::IsMember(report_formats));

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Conditions, satisfaction and canonical form of a recursion");
    spec_opts.attach(classify_cmd);
    classify_cmd->add_option("--j", j)->required();
    classify_cmd->add_option("--format", rformat)->check(CLI::IsMember(report_formats));

    // equiv
    std::vector<std::string> pair_specs;
    bool ignore_order = false;
    auto* equiv = app.add_subcommand("equiv", "Test two recursions for equivalence");
    equiv->add_option("--spec", pair_specs, "Give exactly twice")->required();
    equiv->add_option("--j", j)->required();
    equiv->add_flag("--ignore-order", ignore_order, "Also identify specs differing only by summand order");

    // normalize
    bool swap = false;
    auto* normalize_cmd = app.add_subcommand("normalize", "Reduce a recursion to its canonical representative");
    spec_opts.attach(normalize_cmd);
    normalize_cmd->add_option("--j", j)->required();
    normalize_cmd->add_flag("--swap", swap, "Put the lexicographically smaller summand order first");

    // sweep
    std::string r_s1, r_a1, r_s2, r_a2;
    std::string sweep_format = "json";
    bool serial = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "Classify every recursion in a parameter box");
    sweep_cmd->add_option("--j", j)->required();
    sweep_cmd->add_option("--s1", r_s1, "lo:hi (default -4j:4j)");
    sweep_cmd->add_option("--a1", r_a1, "lo:hi (default 0:6j-1)");
    sweep_cmd->add_option("--s2", r_s2, "lo:hi (default -4j:4j)");
    sweep_cmd->add_option("--a2", r_a2, "lo:hi (default 0:6j-1)");
    sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_flag("--serial", serial, "Use the serial reference kernel");

    // synthesize
    std::string in_path = "-", in_format;
    std::int64_t min_repeats = 3;
    std::optional<std::int64_t> known_period;
    auto* synth = app.add_subcommand("synthesize", "Fit a ceiling-sum closed form to a sequence with periodic differences");
    synth->add_option("--in", in_path, "Sequence file, '-' for stdin");
    synth->add_option("--in-format", in_format)->check(CLI::IsMember(seq_formats));
    synth->add_option("--min-repeats", min_repeats, "Repetitions required to accept a period");
    synth->add_option("--period", known_period, "Use this period instead of detecting one");
    synth->add_option("--format", rformat)->check(CLI::IsMember(report_formats));

    // nonnested
    auto* nonnested = app.add_subcommand("nonnested", "Non-nested recurrence A(n) = A(n-q) + increment for a form");
    form_opts.attach(nonnested);

    // qdemo
    std::int64_t qcount = 12;
    auto* qdemo = app.add_subcommand("qdemo", "Hofstadter Q from 3,2,1 with the three-residue pattern check");
    qdemo->add_option("--count", qcount);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (*eval_c) {
            auto values = kernels::eval_C_range_parallel(j, from, to);
            if (values.empty()) throw DomainError("empty range");
            io::write_window(out, {from, std::move(values)}, io::parse_seq_format(format));
        } else if (*eval_form_cmd) {
            io::write_window(out, eval_form_window(form_opts.get(), from, to), io::parse_seq_format(format));
        } else if (*gen) {
            const auto spec = spec_opts.get();
            SequenceWindow ics;
            if (ics_from_c)
                ics = ics_for_C(*ics_from_c, spec, ics_count);
            else if (!ics_text.empty())
                ics = {1, parse_int_list(ics_text)};
            else
                throw CLI::RequiredError("--ics or --ics-from-c");
            io::write_window(out, generate(spec, ics, count), io::parse_seq_format(format));
        } else if (*check) {
            const auto spec = spec_opts.get();
            const auto rep = formally_satisfies(j, spec);
            if (rformat == "json")
                out << io::report_to_json(spec, rep).dump(2) << '\n';
            else
                print_report_text(out, spec, rep);
        } else if (*classify_cmd) {
            const auto v = classify(j, spec_opts.get());
            if (rformat == "json")
                out << io::verdict_to_json(v).dump(2) << '\n';
            else
                print_verdict_text(out, v);
        } else if (*equiv) {
            if (pair_specs.size() != 2) throw CLI::ValidationError("--spec", "equiv needs exactly two specs");
            const auto x = parse_spec(pair_specs[0]);
            const auto y = parse_spec(pair_specs[1]);
            out << "equivalent " << yes_no(equivalent(j, x, y, ignore_order)) << '\n'
                << "canonical " << normalize(j, x).spec << ' ' << normalize(j, y).spec << '\n';
        } else if (*normalize_cmd) {
            auto spec = spec_opts.get();
            if (swap) spec = swap_normalized(spec);
            const auto c = normalize(j, spec);
            out << "canonical " << c.spec << '\n' << "trace";
            for (const auto& r : c.trace) out << ' ' << to_string(r);
            out << '\n';
        } else if (*sweep_cmd) {
            auto box = ParameterBox::standard(j);
            if (!r_s1.empty()) box.s1 = parse_range(r_s1);
            if (!r_a1.empty()) box.a1 = parse_range(r_a1);
            if (!r_s2.empty()) box.s2 = parse_range(r_s2);
            if (!r_a2.empty()) box.a2 = parse_range(r_a2);
            const bool csv = sweep_format == "csv";
            const auto res = sweep(j, box, serial ? Execution::Serial : Execution::Parallel, csv);
            if (csv)
                io::write_sweep_csv(out, res);
            else
                out << io::sweep_to_json(res).dump(2) << '\n';
        } else if (*synth) {
            const auto window = read_input(in_path, in_format, in);
            const auto prof = known_period ? difference_profile_with_period(window, *known_period)
                                           : difference_profile(window, min_repeats);
            if (!prof.period)
                throw DomainError("no period with at least " + std::to_string(min_repeats) +
                                  " repetitions in the differences");
            const auto form = synthesize_form(window, prof);
            if (rformat == "json") {
                out << nlohmann::json{{"period", *prof.period}, {"form", io::form_to_json(form)}, {"text", io::format_form(form)}}
                           .dump(2)
                    << '\n';
            } else {
                out << io::format_form(form) << '\n';
            }
        } else if (*nonnested) {
            const auto rec = non_nested_equivalent(form_opts.get());
            out << "q " << rec.q << '\n'
                << "increment " << rec.increment << '\n'
                << "A(n) = A(n-" << rec.q << ") + " << rec.increment << '\n';
        } else if (*qdemo) {
            if (qcount < 3) throw DomainError("--count must be >= 3");
            const auto q = generate({0, 1, 0, 2}, {1, {3, 2, 1}}, qcount);
            out << "# Q(n) = Q(n-Q(n-1)) + Q(n-Q(n-2)), Q(1..3) = 3,2,1\n";
            std::int64_t matches = 0;
            for (std::int64_t n = 1; n <= qcount; ++n) {
                const std::int64_t v = q.at(n);
                // n = 3k+1 -> 3, n = 3k+2 -> 3k+2, n = 3k -> 3k-2
                const std::int64_t expected = n % 3 == 1 ? 3 : (n % 3 == 2 ? n : n - 2);
                if (v == expected) ++matches;
                out << n << ' ' << v << '\n';
            }
            out << "# pattern Q(3k+1)=3, Q(3k+2)=3k+2, Q(3k)=3k-2: " << (matches == qcount ? "holds" : "fails") << " ("
                << matches << '/' << qcount << ")\n";
            if (matches != qcount) return kDomainError;
        }
        return kOk;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << '\n';
        return kTheoremViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace nestrec::cli
