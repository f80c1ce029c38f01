#include "nestrec/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "nestrec/checked.hpp"
#include "nestrec/errors.hpp"

namespace nestrec::io {

SeqFormat detect_format(std::string_view path) {
    const auto dot = path.rfind('.');
    if (dot != std::string_view::npos) {
        std::string ext(path.substr(dot + 1));
        for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (ext == "csv") return SeqFormat::Csv;
        if (ext == "json") return SeqFormat::Json;
    }
    return SeqFormat::BFile;
}

SeqFormat parse_seq_format(std::string_view name) {
    if (name == "bfile" || name == "b-file") return SeqFormat::BFile;
    if (name == "csv") return SeqFormat::Csv;
    if (name == "json") return SeqFormat::Json;
    throw ParseError("unknown sequence format '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, std::int64_t& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

SequenceWindow read_window(std::istream& in, SeqFormat format) {
    if (format == SeqFormat::Json) {
        nlohmann::json j;
        try {
            in >> j;
            SequenceWindow w{j.at("start").get<std::int64_t>(), j.at("values").get<std::vector<std::int64_t>>()};
            if (w.empty()) throw ParseError("sequence has no values");
            return w;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad sequence JSON: ") + e.what());
        }
    }

    SequenceWindow w;
    std::string line;
    std::int64_t line_no = 0;
    bool first_data = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view v = trim(line);
        if (v.empty() || v.front() == '#') continue;

        std::string_view idx_text, val_text;
        if (format == SeqFormat::Csv) {
            const auto comma = v.find(',');
            if (comma == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected n,value");
            idx_text = v.substr(0, comma);
            val_text = v.substr(comma + 1);
        } else {
            const auto sp = v.find_first_of(" \t");
            if (sp == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected 'n value'");
            idx_text = v.substr(0, sp);
            val_text = v.substr(sp + 1);
        }

        std::int64_t n = 0, value = 0;
        if (!parse_int(idx_text, n) || !parse_int(val_text, value)) {
            if (format == SeqFormat::Csv && first_data && w.empty()) {
                first_data = false;  // header row
                continue;
            }
            throw ParseError("line " + std::to_string(line_no) + ": malformed entry '" + std::string(v) + "'");
        }
        first_data = false;
        if (w.empty()) {
            w.start = n;
        } else if (n != w.end()) {
            throw ParseError("line " + std::to_string(line_no) + ": index " + std::to_string(n) + " follows " +
                             std::to_string(w.end() - 1) + "; indices must be consecutive");
        }
        w.values.push_back(value);
    }
    if (w.empty()) throw ParseError("sequence input has no entries");
    return w;
}

void write_window(std::ostream& out, const SequenceWindow& window, SeqFormat format) {
    switch (format) {
        case SeqFormat::BFile:
            for (std::size_t k = 0; k < window.size(); ++k)
                out << window.start + static_cast<std::int64_t>(k) << ' ' << window.values[k] << '\n';
            break;
        case SeqFormat::Csv:
            out << "n,value\n";
            for (std::size_t k = 0; k < window.size(); ++k)
                out << window.start + static_cast<std::int64_t>(k) << ',' << window.values[k] << '\n';
            break;
        case SeqFormat::Json:
            out << nlohmann::json{{"start", window.start}, {"values", window.values}}.dump() << '\n';
            break;
    }
}

// ---------------------------------------------------------------------------
// Ceiling-sum text syntax

namespace {

class FormParser {
public:
    explicit FormParser(std::string_view text) : text_(text) {}

    CeilingSumForm parse() {
        CeilingSumForm form;
        bool negate = false;
        skip_ws();
        if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
        item(form, negate);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek('+') || peek('-')) {
                negate = text_[pos_++] == '-';
                item(form, negate);
            } else {
                fail("expected '+' or '-'");
            }
        }
        return form;
    }

private:
    void item(CeilingSumForm& form, bool negate) {
        skip_ws();
        std::int64_t coefficient = 1;
        if (!peek_word("ceil")) {
            const std::int64_t k = integer();
            skip_ws();
            if (!peek('*')) {
                form.constant = checked::add(form.constant, negate ? checked::neg(k) : k);
                return;
            }
            ++pos_;
            coefficient = k;
        }
        if (negate) coefficient = checked::neg(coefficient);
        form.terms.push_back(ceil_call(coefficient));
    }

    CeilingTerm ceil_call(std::int64_t coefficient) {
        skip_ws();
        if (!peek_word("ceil")) fail("expected 'ceil'");
        pos_ += 4;
        expect('(');
        Rational slope, offset;
        skip_ws();
        if (peek('(')) {
            ++pos_;
            linear(slope, offset);
            expect(')');
        } else if (peek('n')) {
            linear(slope, offset);
        } else {
            offset = rational();
        }
        skip_ws();
        if (peek('*')) {
            ++pos_;
            const Rational q = rational();
            slope = slope * q;
            offset = offset * q;
        } else if (peek('/')) {
            ++pos_;
            const std::int64_t d = integer();
            if (d == 0) fail("division by zero");
            slope = slope / Rational(d);
            offset = offset / Rational(d);
        }
        expect(')');
        return {slope, offset, coefficient};
    }

    // n [(+|-) rational]
    void linear(Rational& slope, Rational& offset) {
        skip_ws();
        if (!peek('n')) fail("expected 'n'");
        ++pos_;
        slope = Rational(1);
        skip_ws();
        if (peek('+') || peek('-')) {
            const bool minus = text_[pos_++] == '-';
            const Rational r = rational();
            offset = minus ? -r : r;
        }
    }

    Rational rational() {
        const std::int64_t num = integer();
        skip_ws();
        if (peek('/')) {
            // A '/' followed by a digit belongs to this rational.
            std::size_t save = pos_++;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const std::int64_t den = integer();
                if (den == 0) fail("zero denominator");
                return Rational(num, den);
            }
            pos_ = save;
        }
        return Rational(num);
    }

    std::int64_t integer() {
        skip_ws();
        bool minus = false;
        if (peek('+') || peek('-')) minus = text_[pos_++] == '-';
        skip_ws();
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec == std::errc::result_out_of_range) fail("integer out of range");
        if (ec != std::errc()) fail("expected integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return minus ? checked::neg(v) : v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
    bool peek_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }
    void expect(char c) {
        skip_ws();
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bad ceiling form '" + std::string(text_) + "': " + what + " at column " +
                         std::to_string(pos_ + 1));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CeilingSumForm parse_form(std::string_view text) { return FormParser(text).parse(); }

std::string format_form(const CeilingSumForm& form) {
    std::ostringstream os;
    os << form.constant;
    for (const auto& t : form.terms) {
        if (t.coefficient < 0 && t.coefficient != INT64_MIN)
            os << " - " << -t.coefficient;
        else
            os << " + " << t.coefficient;
        os << "*ceil(";
        if (t.slope.is_zero()) {
            os << t.offset;
        } else {
            const Rational shift = t.offset / t.slope;
            os << "(n" << (shift.num() < 0 ? '-' : '+') << (shift.num() < 0 ? -shift.num() : shift.num()) << '/'
               << shift.den() << ")*" << t.slope;
        }
        os << ')';
    }
    return os.str();
}

namespace {

nlohmann::json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from(const nlohmann::json& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

}  // namespace

nlohmann::json form_to_json(const CeilingSumForm& form) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : form.terms)
        terms.push_back({{"coefficient", t.coefficient}, {"slope", rational_json(t.slope)}, {"offset", rational_json(t.offset)}});
    return {{"constant", form.constant}, {"terms", terms}};
}

CeilingSumForm form_from_json(const nlohmann::json& j) {
    try {
        CeilingSumForm form;
        form.constant = j.at("constant").get<std::int64_t>();
        for (const auto& t : j.at("terms")) {
            form.terms.push_back({rational_from(t.at("slope")), rational_from(t.at("offset")),
                                  t.value("coefficient", std::int64_t{1})});
        }
        return form;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad ceiling form JSON: ") + e.what());
    }
}

nlohmann::json report_to_json(const RecursionSpec& spec, const SatisfactionReport& report) {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& [n, v] : report.h_values) h.push_back({n, v});
    nlohmann::json out{{"spec", to_string(spec)}, {"j", report.j}, {"satisfied", report.satisfied}, {"h_values", h}};
    out["witness_n"] = report.witness_n ? nlohmann::json(*report.witness_n) : nlohmann::json(nullptr);
    return out;
}

nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& r : v.canonical.trace) trace.push_back(to_string(r));
    return {{"spec", to_string(v.spec)},
            {"j", v.j},
            {"conditions",
             {{"i", v.conditions.shifts_divisible}, {"ii", v.conditions.lags_odd_multiple}, {"iii", v.conditions.balanced}}},
            {"conditions_hold", v.conditions.holds()},
            {"satisfaction", report_to_json(v.spec, v.satisfaction)},
            {"canonical", to_string(v.canonical.spec)},
            {"trace", trace}};
}

nlohmann::json sweep_to_json(const SweepResult& r) {
    auto range = [](const Range& x) { return nlohmann::json::array({x.lo, x.hi}); };
    nlohmann::json sat = nlohmann::json::array();
    for (const auto& s : r.satisfying) sat.push_back(to_string(s));
    return {{"j", r.j},
            {"box", {{"s1", range(r.box.s1)}, {"a1", range(r.box.a1)}, {"s2", range(r.box.s2)}, {"a2", range(r.box.a2)}}},
            {"total", r.total},
            {"satisfying", sat},
            {"violations", nlohmann::json::array()}};
}

void write_sweep_csv(std::ostream& out, const SweepResult& r) {
    out << "spec,cond_i,cond_ii,cond_iii,satisfied,canonical\n";
    auto b = [](bool x) { return x ? "true" : "false"; };
    for (const auto& row : r.rows) {
        out << '"' << row.spec << "\"," << b(row.conditions.shifts_divisible) << ',' << b(row.conditions.lags_odd_multiple)
            << ',' << b(row.conditions.balanced) << ',' << b(row.satisfied) << ",\"" << row.canonical << "\"\n";
    }
}

}  // namespace nestrec::io
