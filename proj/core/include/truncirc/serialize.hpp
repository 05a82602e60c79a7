#ifndef TRUNCIRC_SERIALIZE_HPP
#define TRUNCIRC_SERIALIZE_HPP

#include <string>
#include <variant>

#include "truncirc/states.hpp"

namespace truncirc {

std::string to_json(const PureState& state);
std::string to_json(const MomentState& state);
std::string to_json(const CircleMeasure& measure);

using AnyState = std::variant<PureState, MomentState, CircleMeasure>;

/// Parses a tagged state document: {"type": "pure" | "moment" | "measure", ...}.
/// Throws DomainError with context on malformed input.
AnyState parse_state_json(const std::string& text);
AnyState load_state_file(const std::string& path);

/// Moment coordinates of any parsed state at size n (pure states must match n).
MomentState to_moment_state(const AnyState& state, int n);
/// Pullback measure of any parsed state.
CircleMeasure to_measure(const AnyState& state);

}  // namespace truncirc

#endif
