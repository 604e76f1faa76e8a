#pragma once

#include <string>

#include "ncsurf/rational.hpp"

namespace ncsurf {

/// Compact surface with boundary: the closed surface with `count` handles
/// (orientable) or cross-caps (non-orientable) with `beta` open disks removed.
struct Surface {
  bool orientable = true;
  int count = 0;
  int beta = 1;

  static Surface orient(int g, int b);
  static Surface nonorient(int h, int b);

  /// chi of the closed surface.
  int closed_euler() const { return orientable ? 2 - 2 * count : 2 - count; }
  int euler_characteristic() const { return closed_euler() - beta; }

  /// The same surface with one boundary component glued shut by a disk.
  Surface capped() const;

  /// Canonical descriptor, e.g. "orient:g=0,b=2".
  std::string descriptor() const;
  /// Alias if one exists ("disk", "cylinder", ...), else the descriptor.
  std::string name() const;

  friend bool operator==(const Surface&, const Surface&) = default;
};

/// Parses `orient:g=<int>,b=<int>`, `nonorient:h=<int>,b=<int>` or one of
/// the aliases disk, cylinder, mobius, torus1, klein1.
Surface parse_surface(const std::string& text);

int euler_characteristic(const Surface& s);

/// chi(total) == chi(v1) + chi(v2) - 2.
bool split_check(const Surface& total, const Surface& v1, const Surface& v2);

/// -3/2 chi + beta - 1: the polynomial exponent in the growth n^e 4^n.
Rational asymptotic_exponent(const Surface& s);

}  // namespace ncsurf
