// Curve file format: line 1 is "m <integer>", then one coefficient per line
// as "<rat> <rat>" meaning a + b*sqrt(m), in the order a1 a2 a3 a4 a5 a6.
// The writer always emits six coefficient lines with a5 = "0 0"; the parser
// also accepts the five-line form (a1 a2 a3 a4 a6), and when six lines are
// present a5 must be zero.

#pragma once

#include <string>

#include "egr/curves.hpp"

namespace egr {

std::string curve_to_text(const CurveModel& E);

// Throws std::invalid_argument on malformed input (bad syntax, zero
// denominator, non-square-free m, nonzero a5, singular equation).
CurveModel curve_from_text(const std::string& text);

}  // namespace egr
