#pragma once

#include <array>
#include <map>
#include <vector>

#include "ncsurf/schemes.hpp"
#include "ncsurf/series.hpp"
#include "ncsurf/surface.hpp"
#include "ncsurf/trees.hpp"

namespace ncsurf {

/// Exponents of the product a scheme contributes; schemes sharing a
/// signature contribute the same series.
struct ContributionSignature {
  bool degenerate = false;
  int v1 = 0, e1 = 0, e2 = 0, e3 = 0;
  int block_excess = 0, nonblock_excess = 0;
  int b = 0, w = 0;

  static ContributionSignature of(const Scheme& sch);
  auto operator<=>(const ContributionSignature&) const = default;
};

/// u^v1 T1^e1 T2^e2 T3^e3 (T/u)^block_excess B^nonblock_excess (Tdot/u)^b Bdot^w,
/// or u (T/u) B + 1 for the disk's degenerate scheme.
TruncatedSeries scheme_contribution(const Scheme& sch, const TreeGFSet& gfs);
TruncatedSeries signature_contribution(const ContributionSignature& sig, const TreeGFSet& gfs);

struct SurfaceSeries {
  Surface surface;
  TruncatedSeries series;
  std::vector<Scheme> schemes;
  /// schemes[i] contributes signature_series[scheme_signature[i]].
  std::vector<int> scheme_signature;
  std::vector<ContributionSignature> signatures;
  std::vector<TruncatedSeries> signature_series;

  const TruncatedSeries& per_scheme(std::size_t i) const {
    return signature_series[static_cast<std::size_t>(scheme_signature[i])];
  }
  /// [z^n] at u = 1.
  Rational coeff_at_one(int n) const;
};

struct AssemblyOptions {
  bool bivariate = false;
  bool cubic_only = false;
};

/// Sums the contributions of every scheme of s (or only the cubic ones).
SurfaceSeries p_series(const Surface& s, int order, AssemblyOptions opts = {});
/// Same, reusing an already enumerated scheme list and tree series.
SurfaceSeries p_series(const Surface& s, std::vector<Scheme> schemes, const TreeGFSet& gfs);

}  // namespace ncsurf
