#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nestrec/ceiling.hpp"
#include "nestrec/classifier.hpp"

namespace nestrec::io {

enum class SeqFormat { BFile, Csv, Json };

/// `.csv` means CSV; anything else is read as a b-file.
SeqFormat detect_format(std::string_view path);
SeqFormat parse_seq_format(std::string_view name);

/// Reads `n value` (b-file) or `n,value` (CSV) lines. Blank lines and `#`
/// comments are skipped, as is a non-numeric CSV header. Indices must be
/// consecutive.
SequenceWindow read_window(std::istream& in, SeqFormat format);
void write_window(std::ostream& out, const SequenceWindow& window, SeqFormat format);

/// Text syntax, e.g. `1 + 2*ceil((n-1/1)*1/3) - ceil(n/2)`. Accepted term
/// shapes are `[k*]ceil(X)` where X is `(n+r)*q`, `(n+r)/d`, `n*q`, `n/d`,
/// `n` or a constant `r`.
CeilingSumForm parse_form(std::string_view text);
/// Canonical text `c + k*ceil((n+r_num/r_den)*q_num/q_den) + ...`.
std::string format_form(const CeilingSumForm& form);

nlohmann::json form_to_json(const CeilingSumForm& form);
CeilingSumForm form_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RecursionSpec& spec, const SatisfactionReport& report);
nlohmann::json verdict_to_json(const Verdict& verdict);
nlohmann::json sweep_to_json(const SweepResult& result);
/// Header `spec,cond_i,cond_ii,cond_iii,satisfied,canonical`, one row per spec.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace nestrec::io
