#pragma once

#include "recur/rational.hpp"
#include "recur/zeroing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recur {

// On-disk description of a recurrence:
//   { "coefficients": ["0", "2", "1"], "initial": ["3", "-2", "1"] }
// Values are decimal strings so arbitrary precision survives the trip.
// "initial" is optional; rationals like "1/2" are accepted there.
struct RecurrenceFile {
    std::vector<Int> coefficients;
    std::optional<std::vector<Rat>> initial;
};

RecurrenceFile parse_recurrence_json(const std::string& text);
RecurrenceFile read_recurrence_json(const std::string& path);
std::string render_recurrence_json(const RecurrenceFile& file);

// Comma-separated value lists used by the CLI flags: "3,-2,1" or "1/2,0,-5".
std::vector<Rat> parse_rat_list(const std::string& text);
std::vector<Int> parse_int_list(const std::string& text);

// Tabular trace: one row per kept step with the k coefficients of Q_t from
// x^{k-1} down to the constant, tab-separated; then one status line:
// "terminated t=<t>", "non-terminating sign=<s>" or "budget exhausted t=<t>".
std::string render_trace(const ZeroingResult& result, std::size_t k);

} // namespace recur
