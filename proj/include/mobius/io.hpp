#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mobius/decoration.hpp"
#include "mobius/perm_group.hpp"
#include "mobius/realizability.hpp"

namespace mobius {

/// Malformed decoration or graph input. `context()` names the place: a
/// "line L, column C" for syntax errors, a JSON path such as
/// "knots[2].orientation" for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string context, const std::string& message)
      : std::runtime_error(context + ": " + message),
        context_(std::move(context)) {}

  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

/// Reads the decoration file format:
///
///   {"graph": "k33" | "mobius:<n>" | {"vertices": N, "edges": [[u,v], ...]},
///    "knots": [{"edge": [u,v], "label": "A", "invertible": false,
///               "orientation": [u,v]}, ...],
///    "knotted_around": [{"outer": [u,v], "around": [u,w]}, ...]}
///
/// Edges are named by endpoints, so multigraphs are rejected. "knots" and
/// "knotted_around" are optional; "orientation" is required for
/// non-invertible knots. Throws ParseError.
Decoration parse_decoration_json(std::string_view text);

/// Writes a decoration in the same format (graph inline, keys sorted).
std::string decoration_to_json(const Decoration& d);

/// {"n": 3, "groups": [{"name": "D3xD3", "order": 36, "witness":
/// "fan-D3xD3"}, ...]}; witness is null when there is none.
std::string report_to_json(const RealizabilityReport& report);
std::string report_to_text(const RealizabilityReport& report);

/// Summary of a group: order, recognized name and generators.
std::string group_to_json(const PermGroup& g, const GroupName& name);

}  // namespace mobius
