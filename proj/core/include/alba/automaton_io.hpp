// Serialization of automata.
//
// JSON (native format, round-trips everything including gf_annotations):
//
//   {"ap": ["a", "b"],
//    "states": ["s0", "s1"],
//    "initial": "s0",
//    "transitions": [{"src": "s0", "guard": "a & !b", "dst": "s1"}],
//    "accepting": ["s1"],
//    "gf_annotations": [{"states": ["s1"], "alpha0": "tt", "alphas": ["a"]}]}
//
// HOA v1 (Buchi acceptance "1 Inf(0)", guards compiled to label
// expressions over AP indices, state names kept as quoted labels).  The
// reader accepts what the writer emits and doubles as a validity checker;
// gf_annotations have no HOA slot and do not round-trip.
//
// DOT is write-only; accepting states are drawn with double circles.

#ifndef ALBA_AUTOMATON_IO_HPP
#define ALBA_AUTOMATON_IO_HPP

#include <string>

#include "alba/automaton.hpp"

namespace alba {

std::string to_json(const BuchiAutomaton& a);
BuchiAutomaton from_json(const std::string& text);

std::string to_hoa(const BuchiAutomaton& a);
// Parses (and thereby validates) an HOA document of the dialect emitted by
// to_hoa; throws std::runtime_error with a diagnostic on any deviation.
BuchiAutomaton from_hoa(const std::string& text);

std::string to_dot(const BuchiAutomaton& a);

}  // namespace alba

#endif  // ALBA_AUTOMATON_IO_HPP
