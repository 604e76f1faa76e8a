#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsurf/series.hpp"
#include "ncsurf/xexpansion.hpp"

namespace ncsurf {

/// z marks danglings, u marks block vertices.
///   T   tree hanging from a block vertex
///   B   tree hanging from a non-block vertex (B = zT + z(1-u))
///   T1  double tree with two block ends
///   T2  double tree with one block end and one non-block end
///   T3  double tree with two non-block ends
///   Tdot, Bdot  T and B with one dangling pointed (z d/dz)
enum class TreeFamily { T, B, T1, T2, T3, Tdot, Bdot };

const std::array<TreeFamily, 7>& all_tree_families();
std::string family_name(TreeFamily f);
std::optional<TreeFamily> parse_family(const std::string& name);

struct TreeGFSet {
  TruncatedSeries T, B, T1, T2, T3, Tdot, Bdot;
  /// T/u and Tdot/u; equal to T and Tdot in univariate mode.
  TruncatedSeries S, Sdot;

  int order() const { return T.order(); }
  bool bivariate() const { return !T.is_univariate(); }
  const TruncatedSeries& get(TreeFamily f) const;
};

/// u-order used for bivariate tree series at z-order `order`. Generous
/// enough that no product appearing in surface assembly hits the cap.
int default_u_order(int order);

/// Builds T and B from the system T = u/(1-B), B = z/(1-zT) and again from
/// the closed form of the quadratic zT^2 + (z(1-u)-1)T + u = 0; throws if
/// the two disagree. u_order == 0 gives the u = 1 specialization.
std::pair<TruncatedSeries, TruncatedSeries> build_T_B(int order, int u_order = 0);

struct DoubleTrees {
  TruncatedSeries T1, T2, T3;
};

/// T2 = Seq(u B^2 S^2), T1 = B^2 T2, T3 = u S^2 T2 with S = T/u. Also checks
/// T1 against the first three terms of its geometric development.
DoubleTrees build_double_trees(const TruncatedSeries& T, const TruncatedSeries& B);

std::pair<TruncatedSeries, TruncatedSeries> build_pointed(const TruncatedSeries& T,
                                                          const TruncatedSeries& B);

TreeGFSet build_tree_gfs(int order, bool bivariate = false);

/// Exact u = 1 closed form of each family in z and X = sqrt(1 - 4z).
ClosedForm closed_form(TreeFamily f);

/// Expands every closed form and checks it against the constructive series.
std::map<TreeFamily, TruncatedSeries> univariate_closed_forms(int order);

struct SingularDatum {
  TreeFamily family;
  int leading_power;       // power of X in the leading term
  Rational leading_coeff;  // its coefficient
  Rational value_at_quarter;  // X^0 coefficient; 0 when the family is singular
};

/// Leading behaviour of each family at z = 1/4.
std::vector<SingularDatum> singular_constants();

}  // namespace ncsurf
