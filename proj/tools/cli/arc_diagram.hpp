#pragma once

#include <string>
#include <vector>

#include "skolemgen/open_state.hpp"

namespace skolemgen::cli {

struct ClosedArc {
  int left = 0;  // 1-based positions
  int right = 0;
  int span() const noexcept { return right - left; }
};

struct OpenArc {
  int position = 0;
  int star_value = 0;
};

/// Geometry of an (open) arc diagram, arcs ordered by left endpoint.
struct ArcDiagram {
  int vertices = 0;
  std::vector<std::string> labels;  // token text under each vertex
  std::vector<ClosedArc> closed;
  std::vector<OpenArc> open;
};

ArcDiagram arc_diagram(const OpenState& state);

/// Header row of tokens, then one row per arc in left-endpoint order: `+` at
/// endpoints joined by `-` for a closed arc, `+` followed by `~` to the right
/// edge for an open arc. Each row ends with the arc's value.
std::string render_ascii(const ArcDiagram& diagram);

/// SVG 1.1. Closed arcs are semicircle paths (class "closed"), open arcs are
/// quarter-arc stubs (class "open"). Integer coordinates only.
std::string render_svg(const ArcDiagram& diagram);

}  // namespace skolemgen::cli
