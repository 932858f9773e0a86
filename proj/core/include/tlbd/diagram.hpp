#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace tlbd {

/// Decorated crossingless matching with m bottom and k top boundary points.
///
/// Boundary numbering: positions 1..m run along the bottom left to right,
/// positions m+1..m+k along the top right to left, so the left wall sits in
/// the gap between position m+k and position 1.  Arcs are chords of this
/// circular order; a dot is a parity bit on an arc and is only allowed on
/// wall-exposed arcs (no enclosing chord).
struct Diagram {
  int bottom = 0;
  int top = 0;
  std::vector<std::pair<int, int>> arcs;  ///< sorted pairs, sorted list
  std::vector<int> dots;                  ///< parallel to arcs, 0 or 1

  auto operator<=>(const Diagram&) const = default;

  int points() const { return bottom + top; }
  bool on_bottom(int idx) const { return idx <= bottom; }
  /// Horizontal position, left to right, of a boundary index on its side.
  int phys(int idx) const { return on_bottom(idx) ? idx : top - (idx - bottom) + 1; }
};

/// No enclosing arc {k,l} with k < i and l > j; such arcs can be isotoped to
/// touch the left wall and are the only ones allowed to carry a dot.
bool left_exposed(const Diagram& d, int arc_index);

/// Asserts the structural invariants (even point count, perfect matching,
/// non-crossing, dotted arcs exposed).  Throws contract_violation.
void validate(const Diagram& d);

/// Normalize arc pair order and joint (arcs, dots) sort order in place.
void normalize(Diagram& d);

/// All crossingless matchings of m bottom + k top points with every subset
/// of wall-exposed arcs dotted, in lexicographic (arcs, dots) order.
/// Size binom(m+k, (m+k)/2); empty when m+k is odd.
std::vector<Diagram> enumerate_basis(int m, int k);

/// Identity pattern arcs {i, m+k+1-i}; convenience for building diagrams.
Diagram identity_diagram(int n);

}  // namespace tlbd
