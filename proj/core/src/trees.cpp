#include "ncsurf/trees.hpp"

namespace ncsurf {

namespace {

TruncatedSeries u_or_one(int order, int u_order) {
  if (u_order == 0) return TruncatedSeries::constant(order, 1);
  return TruncatedSeries::u(order, u_order);
}

TruncatedSeries div_u(const TruncatedSeries& s) { return s.is_univariate() ? s : s.shift_u(-1); }

void require_equal(const TruncatedSeries& a, const TruncatedSeries& b, const std::string& what) {
  if (!(a == b)) throw Error("internal consistency failure: " + what);
}

// Order-by-order solution of T = u + B T, B = z + z T B.
std::pair<TruncatedSeries, TruncatedSeries> solve_system(int order, int u_order) {
  const int stride = u_order + 1;
  std::vector<BigInt> t(static_cast<std::size_t>((order + 1) * stride));
  std::vector<BigInt> b(t.size());
  auto at = [stride](std::vector<BigInt>& v, int n, int m) -> BigInt& {
    return v[static_cast<std::size_t>(n * stride + m)];
  };
  auto overflow = [u_order] { throw SeriesError("tree system exceeds u cap " + std::to_string(u_order)); };

  at(t, 0, u_order == 0 ? 0 : 1) = 1;
  for (int n = 1; n <= order; ++n) {
    if (n == 1) at(b, 1, 0) = 1;
    for (int i = 0; i + 1 < n; ++i) {
      const int j = n - 1 - i;
      for (int p = 0; p < stride; ++p) {
        if (at(t, i, p) == 0) continue;
        for (int q = 0; q < stride; ++q) {
          if (at(b, j, q) == 0) continue;
          if (p + q > u_order) overflow();
          at(b, n, p + q) += at(t, i, p) * at(b, j, q);
        }
      }
    }
    for (int k = 1; k <= n; ++k) {
      for (int p = 0; p < stride; ++p) {
        if (at(b, k, p) == 0) continue;
        for (int q = 0; q < stride; ++q) {
          if (at(t, n - k, q) == 0) continue;
          if (p + q > u_order) overflow();
          at(t, n, p + q) += at(b, k, p) * at(t, n - k, q);
        }
      }
    }
  }

  TruncatedSeries T(order, u_order);
  TruncatedSeries B(order, u_order);
  for (int n = 0; n <= order; ++n)
    for (int m = 0; m <= u_order; ++m) {
      if (at(t, n, m) != 0) T.set_coeff(n, m, Rational(at(t, n, m)));
      if (at(b, n, m) != 0) B.set_coeff(n, m, Rational(at(b, n, m)));
    }
  return {T, B};
}

// T = (1 - z(1-u) - sqrt((1 - z(1-u))^2 - 4zu)) / (2z).
TruncatedSeries closed_form_T(int order, int u_order) {
  const int N = order + 1;
  const TruncatedSeries one = TruncatedSeries::constant(N, 1, u_order);
  const TruncatedSeries z = TruncatedSeries::z(N, u_order);
  const TruncatedSeries u = u_or_one(N, u_order);
  const TruncatedSeries w = one - z * (one - u);
  const TruncatedSeries radicand = w * w - Rational(4) * z * u;
  TruncatedSeries numerator = w - sqrt(radicand);
  return (numerator.shift_z(-1) * Rational(1, 2)).truncated(order);
}

}  // namespace

const std::array<TreeFamily, 7>& all_tree_families() {
  static const std::array<TreeFamily, 7> all = {TreeFamily::T,  TreeFamily::B,    TreeFamily::T1,
                                                TreeFamily::T2, TreeFamily::T3,   TreeFamily::Tdot,
                                                TreeFamily::Bdot};
  return all;
}

std::string family_name(TreeFamily f) {
  switch (f) {
    case TreeFamily::T: return "T";
    case TreeFamily::B: return "B";
    case TreeFamily::T1: return "T1";
    case TreeFamily::T2: return "T2";
    case TreeFamily::T3: return "T3";
    case TreeFamily::Tdot: return "Tdot";
    case TreeFamily::Bdot: return "Bdot";
  }
  return "?";
}

std::optional<TreeFamily> parse_family(const std::string& name) {
  for (TreeFamily f : all_tree_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

const TruncatedSeries& TreeGFSet::get(TreeFamily f) const {
  switch (f) {
    case TreeFamily::T: return T;
    case TreeFamily::B: return B;
    case TreeFamily::T1: return T1;
    case TreeFamily::T2: return T2;
    case TreeFamily::T3: return T3;
    case TreeFamily::Tdot: return Tdot;
    case TreeFamily::Bdot: return Bdot;
  }
  throw Error("unknown tree family");
}

int default_u_order(int order) { return 2 * order + 8; }

std::pair<TruncatedSeries, TruncatedSeries> build_T_B(int order, int u_order) {
  if (order < 0) throw Error("negative order");
  auto [T, B] = solve_system(order, u_order);
  require_equal(T, closed_form_T(order, u_order), "T from system vs closed form");
  // The system gives B = zT + z(1 - u); at u = 1 this is B = zT.
  const TruncatedSeries z = TruncatedSeries::z(order, u_order);
  const TruncatedSeries one = TruncatedSeries::constant(order, 1, u_order);
  require_equal(B, z * T + z * (one - u_or_one(order, u_order)), "B vs zT + z(1-u)");
  return {T, B};
}

DoubleTrees build_double_trees(const TruncatedSeries& T, const TruncatedSeries& B) {
  const int N = T.order();
  const int M = T.u_order();
  const TruncatedSeries u = u_or_one(N, M);
  const TruncatedSeries S = div_u(T);
  const TruncatedSeries B2 = B * B;
  const TruncatedSeries S2 = S * S;
  const TruncatedSeries ratio = u * B2 * S2;  // T^2 B^2 / u

  DoubleTrees d;
  d.T2 = seq(ratio);
  d.T1 = B2 * d.T2;
  d.T3 = u * S2 * d.T2;

  // Development check: T1 minus the first three geometric terms is the tail.
  TruncatedSeries head(N, M);
  TruncatedSeries term = B2;
  for (int k = 0; k < 3; ++k) {
    head += term;
    term = term * ratio;
  }
  require_equal(d.T1 - head, term * d.T2, "T1 vs its geometric development");
  return d;
}

std::pair<TruncatedSeries, TruncatedSeries> build_pointed(const TruncatedSeries& T,
                                                          const TruncatedSeries& B) {
  return {point(T), point(B)};
}

TreeGFSet build_tree_gfs(int order, bool bivariate) {
  TreeGFSet g;
  std::tie(g.T, g.B) = build_T_B(order, bivariate ? default_u_order(order) : 0);
  DoubleTrees d = build_double_trees(g.T, g.B);
  g.T1 = std::move(d.T1);
  g.T2 = std::move(d.T2);
  g.T3 = std::move(d.T3);
  std::tie(g.Tdot, g.Bdot) = build_pointed(g.T, g.B);
  g.S = div_u(g.T);
  g.Sdot = div_u(g.Tdot);
  return g;
}

ClosedForm closed_form(TreeFamily f) {
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  switch (f) {
    case TreeFamily::T:  // (1 - X)/(2z)
      return ClosedForm::term(-1, 0, half).add(-1, 1, -half);
    case TreeFamily::B:  // (1 - X)/2
      return ClosedForm::term(0, 0, half).add(0, 1, -half);
    case TreeFamily::T1:  // z^2 / X
      return ClosedForm::term(2, -1, 1);
    case TreeFamily::T2:  // (1 + X)^2 / (4X)
      return ClosedForm::term(0, -1, quarter).add(0, 0, half).add(0, 1, quarter);
    case TreeFamily::T3:  // 1 / X
      return ClosedForm::term(0, -1, 1);
    case TreeFamily::Tdot:  // 1/X - (1 - X)/(2z)
      return ClosedForm::term(0, -1, 1).add(-1, 0, -half).add(-1, 1, half);
    case TreeFamily::Bdot:  // z / X
      return ClosedForm::term(1, -1, 1);
  }
  throw Error("unknown tree family");
}

std::map<TreeFamily, TruncatedSeries> univariate_closed_forms(int order) {
  const TreeGFSet g = build_tree_gfs(order, false);
  std::map<TreeFamily, TruncatedSeries> out;
  for (TreeFamily f : all_tree_families()) {
    TruncatedSeries s = closed_form(f).to_series(order);
    require_equal(s, g.get(f), "closed form of " + family_name(f));
    out.emplace(f, std::move(s));
  }
  return out;
}

std::vector<SingularDatum> singular_constants() {
  std::vector<SingularDatum> out;
  for (TreeFamily f : all_tree_families()) {
    const XExpansion e = closed_form(f).to_x(2);
    const int lead = e.leading_power().value();
    out.push_back({f, lead, e.leading_coeff(), lead >= 0 ? e.coeff(0) : Rational(0)});
  }
  return out;
}

}  // namespace ncsurf
