#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncsurf/assembly.hpp"
#include "ncsurf/asymptotics.hpp"
#include "ncsurf/oracle.hpp"
#include "ncsurf/schemes.hpp"
#include "ncsurf/surface.hpp"
#include "ncsurf/trees.hpp"

namespace ncsurf::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string surface;
  int order = 10;
  int n = -1;
  int precision = 50;
  std::string format = "json";
  std::string tg;
  bool cubic = false;
  bool bivariate = false;
  bool per_scheme = false;
  bool partitions = false;
  int compare_series = 0;
  int max_darts = OracleOptions{}.max_darts;
  std::vector<int> points;
};

Surface surface_of(const RunConfig& cfg) {
  try {
    return parse_surface(cfg.surface);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string format_decimal(const Decimal& d, int precision) { return d.to_string(precision); }

// ---- scheme cache -------------------------------------------------------

ordered_json scheme_to_json(const Scheme& sch) {
  ordered_json j;
  j["darts"] = sch.map.num_darts();
  j["sigma"] = sch.map.sigma;
  j["alpha"] = sch.map.alpha;
  j["signs"] = sch.map.sign;
  std::vector<std::string> colors;
  for (VertexColor c : sch.color) colors.push_back(color_name(c));
  j["colors"] = colors;
  j["roots"] = sch.roots;
  j["root_sides"] = sch.root_side;
  j["degenerate"] = sch.degenerate;
  const SchemeStats st = stats(sch);
  j["stats"] = {{"v1", st.v1},
                {"v2", st.v2},
                {"e1", st.e1},
                {"e2", st.e2},
                {"e3", st.e3},
                {"b", st.b},
                {"w", st.w},
                {"e_total", st.e_total},
                {"block_excess", st.block_excess},
                {"nonblock_excess", st.nonblock_excess}};
  return j;
}

Scheme scheme_from_json(const ordered_json& j) {
  Scheme sch;
  sch.map.sigma = j.at("sigma").get<std::vector<int>>();
  sch.map.alpha = j.at("alpha").get<std::vector<int>>();
  sch.map.sign = j.at("signs").get<std::vector<int>>();
  for (const auto& c : j.at("colors")) {
    const std::string name = c.get<std::string>();
    if (name == color_name(VertexColor::Root)) {
      sch.color.push_back(VertexColor::Root);
    } else if (name == color_name(VertexColor::Block)) {
      sch.color.push_back(VertexColor::Block);
    } else if (name == color_name(VertexColor::NonBlock)) {
      sch.color.push_back(VertexColor::NonBlock);
    } else {
      throw Error("unknown colour in scheme cache: " + name);
    }
  }
  sch.roots = j.at("roots").get<std::vector<int>>();
  sch.root_side = j.at("root_sides").get<std::vector<int>>();
  sch.degenerate = j.at("degenerate").get<bool>();
  return sch;
}

std::vector<Scheme> load_schemes(const Surface& s, bool cubic) {
  const char* dir = std::getenv("NCSURF_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return cubic ? enumerate_cubic_schemes(s) : enumerate_schemes(s);

  std::string key = s.descriptor() + (cubic ? "-cubic" : "-all");
  for (char& c : key) {
    if (c == ':' || c == ',' || c == '=') c = '_';
  }
  const std::filesystem::path path = std::filesystem::path(dir) / ("schemes-" + key + ".json");
  if (std::ifstream in(path); in) {
    try {
      const ordered_json j = ordered_json::parse(in);
      if (j.at("schema").get<int>() == 1 && j.at("surface").get<std::string>() == s.descriptor()) {
        std::vector<Scheme> out;
        for (const auto& e : j.at("schemes")) {
          out.push_back(scheme_from_json(e));
          validate_scheme(out.back(), s);
        }
        return out;
      }
    } catch (const std::exception&) {
      // Stale or damaged entry: fall through and rebuild it.
    }
  }
  std::vector<Scheme> out = cubic ? enumerate_cubic_schemes(s) : enumerate_schemes(s);
  ordered_json j;
  j["schema"] = 1;
  j["surface"] = s.descriptor();
  j["schemes"] = ordered_json::array();
  for (const Scheme& sch : out) j["schemes"].push_back(scheme_to_json(sch));
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path tmp = path.string() + ".tmp";
  if (std::ofstream o(tmp); o) {
    o << j.dump() << '\n';
    o.close();
    std::filesystem::rename(tmp, path, ec);
  }
  return out;
}

// ---- output helpers -----------------------------------------------------

void emit_csv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

ordered_json header(const char* command, const Surface& s) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["surface"] = s.descriptor();
  return j;
}

// ---- commands -----------------------------------------------------------

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const Surface s = surface_of(cfg);
  if (cfg.order < 0) throw UsageError("--order must be non-negative");
  const TreeGFSet gfs = build_tree_gfs(cfg.order, cfg.bivariate);
  const SurfaceSeries ss = p_series(s, load_schemes(s, cfg.cubic), gfs);

  if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    if (cfg.bivariate) {
      for (int n = 0; n <= cfg.order; ++n) {
        for (int k = 0; k <= ss.series.u_order(); ++k) {
          const Rational& c = ss.series.coeff(n, k);
          if (c != 0) rows.push_back({std::to_string(n), std::to_string(k), to_string(c)});
        }
      }
      emit_csv(out, {"n", "k", "coefficient"}, rows);
    } else {
      for (int n = 0; n <= cfg.order; ++n) rows.push_back({std::to_string(n), to_string(ss.coeff_at_one(n))});
      emit_csv(out, {"n", "p_n"}, rows);
    }
    return kOk;
  }

  ordered_json j = header("count", s);
  j["order"] = cfg.order;
  j["cubic_only"] = cfg.cubic;
  j["schemes"] = ss.schemes.size();
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n <= cfg.order; ++n) coeffs.push_back(to_string(ss.coeff_at_one(n)));
  j["coefficients"] = coeffs;
  if (cfg.bivariate) {
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= cfg.order; ++n) {
      ordered_json row = ordered_json::object();
      for (int k = 0; k <= ss.series.u_order(); ++k) {
        const Rational& c = ss.series.coeff(n, k);
        if (c != 0) row[std::to_string(k)] = to_string(c);
      }
      rows.push_back(row);
    }
    j["bivariate"] = rows;
  }
  if (cfg.per_scheme) {
    std::vector<int> uses(ss.signatures.size(), 0);
    for (int id : ss.scheme_signature) ++uses[static_cast<std::size_t>(id)];
    ordered_json parts = ordered_json::array();
    for (std::size_t i = 0; i < ss.signatures.size(); ++i) {
      const ContributionSignature& sig = ss.signatures[i];
      ordered_json p;
      p["signature"] = {{"degenerate", sig.degenerate}, {"v1", sig.v1},   {"e1", sig.e1},
                        {"e2", sig.e2},                 {"e3", sig.e3},   {"block_excess", sig.block_excess},
                        {"nonblock_excess", sig.nonblock_excess},         {"b", sig.b},
                        {"w", sig.w}};
      p["schemes"] = uses[i];
      ordered_json c = ordered_json::array();
      const std::vector<Rational> one = ss.signature_series[i].at_u_one();
      for (int n = 0; n <= cfg.order; ++n) c.push_back(to_string(one[static_cast<std::size_t>(n)]));
      p["coefficients"] = c;
      parts.push_back(p);
    }
    j["per_signature"] = parts;
  }
  emit_json(out, j);
  return kOk;
}

int cmd_schemes(const RunConfig& cfg, std::ostream& out) {
  const Surface s = surface_of(cfg);
  const std::vector<Scheme> schemes = load_schemes(s, cfg.cubic);
  if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < schemes.size(); ++i) {
      const SchemeStats st = stats(schemes[i]);
      rows.push_back({std::to_string(i), std::to_string(schemes[i].map.num_darts()), std::to_string(st.v1),
                      std::to_string(st.v2), std::to_string(st.e1), std::to_string(st.e2),
                      std::to_string(st.e3), std::to_string(st.b), std::to_string(st.w),
                      std::to_string(st.e_total)});
    }
    emit_csv(out, {"index", "darts", "v1", "v2", "e1", "e2", "e3", "b", "w", "e_total"}, rows);
    return kOk;
  }
  ordered_json j = header("schemes", s);
  j["cubic_only"] = cfg.cubic;
  j["count"] = schemes.size();
  ordered_json list = ordered_json::array();
  for (const Scheme& sch : schemes) list.push_back(scheme_to_json(sch));
  j["schemes"] = list;
  emit_json(out, j);
  return kOk;
}

std::vector<long> ratio_points(int order) {
  std::vector<long> out;
  const int step = std::max(1, order / 10);
  for (int n = step; n <= order; n += step) out.push_back(n);
  if (out.empty() || out.back() != order) out.push_back(order);
  return out;
}

int cmd_asymptotic(const RunConfig& cfg, std::ostream& out) {
  const Surface s = surface_of(cfg);
  const CSigma cs = c_sigma_details(s);
  const AsymptoticEstimate est = asymptotic_estimate(s, cfg.precision);
  const long n = cfg.n >= 1 ? cfg.n : 100;

  struct Row {
    long n;
    std::string p_n, estimate, ratio;
  };
  std::vector<Row> table;
  if (cfg.compare_series > 0) {
    const SurfaceSeries ss = p_series(s, cfg.compare_series);
    for (long m : ratio_points(cfg.compare_series)) {
      const Rational p = ss.coeff_at_one(static_cast<int>(m));
      const Decimal e = upper_bound(est, m);
      table.push_back({m, to_string(p), format_decimal(e, cfg.precision),
                       format_decimal(Decimal(p, cfg.precision) / e, cfg.precision)});
    }
  }

  std::optional<LiteratureBound> lit;
  std::string tg_value, tg_source;
  if (!cfg.tg.empty()) {
    const auto colon = cfg.tg.find(':');
    if (colon == std::string::npos || colon + 1 == cfg.tg.size()) {
      throw UsageError("--tg expects <value>:<provenance>");
    }
    tg_value = cfg.tg.substr(0, colon);
    tg_source = cfg.tg.substr(colon + 1);
    try {
      lit = c_sigma_literature_bound(s, Decimal::parse(tg_value, cfg.precision));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const Row& r : table) rows.push_back({std::to_string(r.n), r.p_n, r.estimate, r.ratio});
    if (table.empty()) rows.push_back({std::to_string(n), "", format_decimal(upper_bound(est, n), cfg.precision), ""});
    emit_csv(out, {"n", "p_n", "estimate", "ratio"}, rows);
    return kOk;
  }

  ordered_json j = header("asymptotic", s);
  j["precision"] = cfg.precision;
  j["c_sigma"] = to_string(cs.value);
  j["schemes_summed"] = cs.schemes.size();
  j["cancellation"] = cs.cancellation;
  j["alpha"] = to_string(est.alpha);
  j["exponent"] = to_string(est.exponent);
  j["base"] = est.base;
  j["error_order"] = est.error_order;
  j["constant"] = format_decimal(est.constant, cfg.precision);
  j["bound_at_n"] = {{"n", n}, {"value", format_decimal(upper_bound(est, n), cfg.precision)}};
  ordered_json rt = ordered_json::array();
  for (const Row& r : table) {
    rt.push_back({{"n", r.n}, {"p_n", r.p_n}, {"estimate", r.estimate}, {"ratio", r.ratio}});
  }
  j["ratio_table"] = rt;
  if (lit) {
    j["literature_bound"] = {{"t_g", tg_value},
                             {"provenance", tg_source},
                             {"value", format_decimal(lit->value, cfg.precision)},
                             {"binomial_zero", lit->binomial_zero}};
  }
  emit_json(out, j);
  return kOk;
}

ordered_json partition_to_json(const NcPartition& p) {
  ordered_json blocks = ordered_json::array();
  for (const auto& b : p.blocks) {
    ordered_json block = ordered_json::array();
    for (const OraclePoint& pt : b) block.push_back({pt.boundary, pt.index});
    blocks.push_back(block);
  }
  return blocks;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Surface s = surface_of(cfg);
  if (cfg.n < 0) throw UsageError("oracle needs --n");
  const OracleOptions opts{cfg.max_darts};

  ordered_json j = header("oracle", s);
  j["n"] = cfg.n;
  std::vector<std::vector<std::string>> rows;
  if (!cfg.points.empty()) {
    const BigInt c = count_partitions(s, cfg.points, opts);
    j["points"] = cfg.points;
    j["distinct_partitions"] = to_string(c);
    std::string pts;
    for (int p : cfg.points) pts += (pts.empty() ? "" : ";") + std::to_string(p);
    rows.push_back({"points", pts, to_string(c)});
  }
  const std::vector<BipartiteDualMap> duals = enumerate_duals(s, cfg.n, opts);
  j["duals"] = std::to_string(duals.size());
  rows.push_back({"duals", std::to_string(cfg.n), std::to_string(duals.size())});
  if (cfg.partitions) {
    std::map<std::vector<int>, std::set<NcPartition>> by_distribution;
    for (const BipartiteDualMap& d : duals) by_distribution[dangling_distribution(d)].insert(dual_to_partition(d));
    ordered_json groups = ordered_json::array();
    for (const auto& [dist, parts] : by_distribution) {
      ordered_json g;
      g["points"] = dist;
      g["distinct"] = parts.size();
      ordered_json list = ordered_json::array();
      for (const NcPartition& p : parts) list.push_back(partition_to_json(p));
      g["partitions"] = list;
      groups.push_back(g);
      std::string pts;
      for (int p : dist) pts += (pts.empty() ? "" : ";") + std::to_string(p);
      rows.push_back({"distribution", pts, std::to_string(parts.size())});
    }
    j["partitions"] = groups;
  }
  if (cfg.format == "csv") {
    emit_csv(out, {"kind", "key", "count"}, rows);
  } else {
    emit_json(out, j);
  }
  return kOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Surface s = surface_of(cfg);
  if (cfg.order < 0) throw UsageError("--order must be non-negative");
  const SurfaceSeries ss = p_series(s, load_schemes(s, false), build_tree_gfs(cfg.order, false));
  const AsymptoticEstimate est = asymptotic_estimate(s, cfg.precision);
  const OracleOptions opts{cfg.max_darts};
  // Fault injection for exercising the alarm path.
  const char* inject = std::getenv("NCSURF_INJECT_MISMATCH");
  const bool corrupt = inject != nullptr && std::string(inject) == "1";

  ordered_json rows = ordered_json::array();
  std::vector<std::vector<std::string>> csv;
  std::vector<int> mismatched;
  for (int n = 0; n <= cfg.order; ++n) {
    Rational series = ss.coeff_at_one(n);
    if (corrupt && n == cfg.order) series += 1;
    const BigInt oracle = count_duals(s, n, opts);
    const bool match = series == Rational(oracle);
    if (!match) mismatched.push_back(n);
    std::string estimate, ratio;
    if (n >= 1) {
      const Decimal e = upper_bound(est, n);
      estimate = format_decimal(e, cfg.precision);
      ratio = format_decimal(Decimal(series, cfg.precision) / e, cfg.precision);
    }
    rows.push_back({{"n", n},
                    {"series", to_string(series)},
                    {"oracle", to_string(oracle)},
                    {"match", match},
                    {"estimate", estimate},
                    {"ratio", ratio}});
    csv.push_back({std::to_string(n), to_string(series), to_string(oracle), match ? "1" : "0", estimate, ratio});
  }
  if (cfg.format == "csv") {
    emit_csv(out, {"n", "series", "oracle", "match", "estimate", "ratio"}, csv);
  } else {
    ordered_json j = header("compare", s);
    j["order"] = cfg.order;
    j["precision"] = cfg.precision;
    j["rows"] = rows;
    j["mismatches"] = mismatched;
    emit_json(out, j);
  }
  if (!mismatched.empty()) {
    err << "error: series and oracle disagree at n =";
    for (int n : mismatched) err << ' ' << n;
    err << '\n';
    return kComputationError;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts non-crossing partitions on surfaces with boundary", "ncsurf"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("surface", cfg.surface, "disk, cylinder, mobius, torus1, klein1, orient:g=G,b=B or nonorient:h=H,b=B")
        ->required();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--precision", cfg.precision, "Significant digits of decimal output")
        ->check(CLI::Range(10, 1000));
  };

  CLI::App* count = app.add_subcommand("count", "Coefficients of the counting series");
  add_common(count);
  count->add_option("--order", cfg.order, "Highest power of z")->check(CLI::NonNegativeNumber);
  count->add_flag("--cubic", cfg.cubic, "Sum cubic schemes only");
  count->add_flag("--bivariate", cfg.bivariate, "Also report the u-refinement");
  count->add_flag("--per-scheme", cfg.per_scheme, "Break the series down by contribution signature");

  CLI::App* schemes = app.add_subcommand("schemes", "Catalogue of schemes");
  add_common(schemes);
  schemes->add_flag("--cubic", cfg.cubic, "Cubic schemes only");

  CLI::App* asym = app.add_subcommand("asymptotic", "Constant c, growth exponent and bound");
  add_common(asym);
  asym->add_option("--n", cfg.n, "Evaluate the bound at n")->check(CLI::PositiveNumber);
  asym->add_option("--compare-series", cfg.compare_series, "Series order for the ratio table")
      ->check(CLI::NonNegativeNumber);
  asym->add_option("--tg", cfg.tg, "Constant t_g as <value>:<provenance>");

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force dual enumeration");
  add_common(oracle);
  oracle->add_option("--n", cfg.n, "Number of points")->required()->check(CLI::NonNegativeNumber);
  oracle->add_flag("--partitions", cfg.partitions, "List the distinct partitions realized");
  oracle->add_option("--points", cfg.points, "Points per boundary for a distinct-partition count")
      ->delimiter(',');
  oracle->add_option("--max-darts", cfg.max_darts, "Search cap")->check(CLI::PositiveNumber);

  CLI::App* compare = app.add_subcommand("compare", "Series against oracle and transfer estimate");
  add_common(compare);
  compare->add_option("--order", cfg.order, "Highest n")->check(CLI::NonNegativeNumber);
  compare->add_option("--max-darts", cfg.max_darts, "Oracle search cap")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (count->parsed()) return cmd_count(cfg, out);
    if (schemes->parsed()) return cmd_schemes(cfg, out);
    if (asym->parsed()) return cmd_asymptotic(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    return cmd_compare(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
}

}  // namespace ncsurf::cli
