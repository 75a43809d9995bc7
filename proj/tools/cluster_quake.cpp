#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cluster_quake/experiments.hpp"

using namespace cluster_quake;

namespace {

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty coordinate in '" + text + "'");
    out.push_back(to_double(parse_rational(item)));
  }
  if (out.empty()) throw ParseError("no coordinates in '" + text + "'");
  return out;
}

std::string read_matrix_argument(const std::string& arg) {
  if (arg.empty()) return arg;
  const char c = arg.find_first_not_of(" \t") == std::string::npos ? ' ' : arg[arg.find_first_not_of(" \t")];
  if (c == '[' || c == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open matrix file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("CLUSTER_QUAKE_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ParseError("CLUSTER_QUAKE_CAP must be a positive integer");
  }
  return 50000;
}

struct Options {
  RunConfig cfg;
  std::string matrix;
  std::string g0 = "1,1";
  std::string g;
  std::string L;
  std::string out;
  std::string orientation = "linear";
  std::string method = "analytic";
  std::string mode = "L";
  std::string suite = "all";
  std::vector<double> range;
  double t = 1000;
  double M = 30;
  bool no_permutations = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void print_json(const Options& o, const Json& j) {
  Output out(o.out);
  out.stream() << j.dump(2) << '\n';
}

ExchangePattern load_pattern(Options& o) {
  o.cfg.matrix_json = read_matrix_argument(o.matrix);
  return pattern_for(o.cfg, enumeration_cap());
}

PositivePoint positive_arg(const std::string& text, std::size_t chart, std::size_t n) {
  const auto v = parse_vector(text);
  if (v.size() != n) throw DomainError("expected " + std::to_string(n) + " positive coordinates");
  return PositivePoint::from_values(chart, v);
}

TropicalPoint tropical_arg(const std::string& text, std::size_t chart, std::size_t n) {
  const auto v = parse_vector(text);
  if (v.size() != n) throw DomainError("expected " + std::to_string(n) + " tropical coordinates");
  return {chart, v};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster earthquakes on finite-type exchange patterns"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", o.cfg.type, "Dynkin type such as A2, B3, G2, A1xA1")->capture_default_str();
    sub->add_option("--matrix", o.matrix, "exchange matrix as JSON text or a JSON file");
    sub->add_option("--chart", o.cfg.chart, "chart (vertex id) of the input coordinates")->capture_default_str();
    sub->add_option("--out", o.out, "write output to this file");
  };

  auto* cartan = app.add_subcommand("cartan", "print the initial exchange matrix of a Dynkin type");
  common(cartan);
  cartan->add_option("--orientation", o.orientation, "linear or bipartite")->check(CLI::IsMember({"linear", "bipartite"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate the exchange pattern as JSON");
  common(enumerate_cmd);
  enumerate_cmd->add_flag("--no-permutations", o.no_permutations, "omit relabeling edges");
  enumerate_cmd->add_flag("--json", "JSON output (default)");

  auto* fan_cmd = app.add_subcommand("fan", "print the maximal cones of the fan in the base chart");
  common(fan_cmd);

  auto* quake_cmd = app.add_subcommand("quake", "evaluate the cluster earthquake E(g0, L)");
  common(quake_cmd);
  quake_cmd->add_option("--g0", o.g0, "positive coordinates of g0")->capture_default_str();
  quake_cmd->add_option("--L", o.L, "tropical coordinates of L")->required();

  auto* inverse_cmd = app.add_subcommand("inverse", "find L with E(g0, L) = g");
  common(inverse_cmd);
  inverse_cmd->add_option("--g0", o.g0, "positive coordinates of g0")->capture_default_str();
  inverse_cmd->add_option("--g", o.g, "positive coordinates of g")->required();

  auto* dquake_cmd = app.add_subcommand("dquake", "tangent vector d/dt E(g, tL) at t = 0+");
  common(dquake_cmd);
  dquake_cmd->add_option("--g", o.g, "positive coordinates of g")->required();
  dquake_cmd->add_option("--L", o.L, "tropical coordinates of L")->required();
  dquake_cmd->add_option("--method", o.method, "analytic or fd")->check(CLI::IsMember({"analytic", "fd"}));

  auto* limits_cmd = app.add_subcommand("limits", "asymptotic limits of earthquakes for every vertex");
  common(limits_cmd);
  limits_cmd->add_option("--mode", o.mode, "L (t L_k, t large) or g (log X(g) = (M,..,M))")
      ->check(CLI::IsMember({"L", "g"}));
  limits_cmd->add_option("--t", o.t, "scaling parameter for mode L")->capture_default_str();
  limits_cmd->add_option("--M", o.M, "log-coordinate of g for mode g")->capture_default_str();
  limits_cmd->add_option("--g0", o.g0, "positive coordinates of g0 for mode L")->capture_default_str();

  auto* horocycle_cmd = app.add_subcommand("horocycle", "compare the earthquake flow with the horocycle flow");
  common(horocycle_cmd);
  horocycle_cmd->add_option("--g", o.g, "positive coordinates of g")->required();
  horocycle_cmd->add_option("--L", o.L, "tropical coordinates of L (cone interior)")->required();
  horocycle_cmd->add_option("--t", o.t, "flow time")->required();

  auto* grid_cmd = app.add_subcommand("plot-grid", "earthquake images of a rectangular grid (rank 2)");
  common(grid_cmd);
  grid_cmd->add_option("--g0", o.g0, "positive coordinates of g0")->capture_default_str();
  grid_cmd->add_option("--range", o.range, "lower and upper grid bound")->expected(2)->allow_extra_args(false);
  grid_cmd->add_option("--step", o.cfg.step, "grid spacing")->capture_default_str();
  grid_cmd->add_option("--format", o.cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run property suites; exit status 0 iff all pass");
  common(verify_cmd);
  verify_cmd->add_option("suite", o.suite, "matrices, fan, earthquake, derivatives, limits, horocycle or all")
      ->check(CLI::IsMember({"matrices", "fan", "earthquake", "derivatives", "limits", "horocycle", "all"}));
  verify_cmd->add_option("--seed", o.cfg.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--format", o.cfg.format, "csv (plain text) or json")->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cartan->parsed()) {
      const auto orientation = o.orientation == "bipartite" ? Orientation::bipartite : Orientation::linear;
      const ExchangeMatrix eps = o.matrix.empty()
                                     ? build_cartan_seed(parse_dynkin_type(o.cfg.type), orientation)
                                     : exchange_matrix_from_json(Json::parse(read_matrix_argument(o.matrix)));
      Json j = to_json(eps);
      if (o.matrix.empty()) j["cartan"] = to_json(cartan_matrix(parse_dynkin_type(o.cfg.type)));
      print_json(o, j);
      return 0;
    }

    if (enumerate_cmd->parsed() && o.no_permutations) {
      o.cfg.matrix_json = read_matrix_argument(o.matrix);
      EnumerateOptions opts;
      opts.cap = enumeration_cap();
      opts.include_permutations = false;
      const ExchangePattern p = o.cfg.matrix_json.empty()
                                    ? enumerate(parse_dynkin_type(o.cfg.type), opts)
                                    : enumerate(exchange_matrix_from_json(Json::parse(o.cfg.matrix_json)), opts);
      print_json(o, to_json(p));
      return 0;
    }

    const ExchangePattern p = load_pattern(o);
    const std::size_t n = p.rank();
    const std::size_t chart = p.vertex(o.cfg.chart).id;

    if (enumerate_cmd->parsed()) {
      print_json(o, to_json(p));
    } else if (fan_cmd->parsed()) {
      print_json(o, Json{{"type", p.type_tag()}, {"cones", to_json(fan(p))}});
    } else if (quake_cmd->parsed()) {
      const auto g0 = positive_arg(o.g0, chart, n);
      const auto L = tropical_arg(o.L, chart, n);
      const auto r = quake(p, g0, L);
      print_json(o, Json{{"g0", to_json(g0)}, {"L", to_json(L)}, {"cone_vertex", r.cone_vertex}, {"g", to_json(r.g)}});
    } else if (inverse_cmd->parsed()) {
      const auto g0 = positive_arg(o.g0, chart, n);
      const auto g = positive_arg(o.g, chart, n);
      const auto L = tropical_transport(inverse_quake(p, g0, g), p, chart);
      const auto check = quake(p, g0, L).g;
      double residual = 0;
      for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(check.log_X[i] - g.log_X[i]));
      print_json(o, Json{{"L", to_json(L)}, {"residual", residual}});
    } else if (dquake_cmd->parsed()) {
      const auto g = positive_arg(o.g, chart, n);
      const auto L = tropical_arg(o.L, chart, n);
      const auto method = o.method == "fd" ? DerivativeMethod::finite_difference : DerivativeMethod::analytic;
      const auto tv = dquake(p, g, L, method);
      print_json(o, Json{{"g", to_json(g)}, {"L", to_json(L)}, {"chart", tv.chart}, {"xi", tv.delta}});
    } else if (limits_cmd->parsed()) {
      Json rows = Json::array();
      double worst = 0;
      if (o.mode == "L") {
        const auto g0 = positive_arg(o.g0, chart, n);
        for (const auto& v : p.vertices())
          for (std::size_t k = 0; k < n; ++k) {
            const auto r = limit_L(p, g0, v.id, k, o.t);
            worst = std::max(worst, r.error);
            rows.push_back(Json{{"vertex", v.id}, {"k", k}, {"estimate", r.estimate}, {"target", r.target}, {"residual", r.error}});
          }
        print_json(o, Json{{"mode", "L"}, {"t", o.t}, {"max_residual", worst}, {"results", rows}});
      } else {
        const PositivePoint g{p.base(), std::vector<double>(n, o.M)};
        for (const auto& v : p.vertices()) {
          const auto r = limit_g(p, g, v.id);
          worst = std::max(worst, r.error);
          rows.push_back(Json{{"vertex", v.id}, {"estimate", to_json(r.u)}, {"target", to_json(r.target)}, {"residual", r.error}});
        }
        print_json(o, Json{{"mode", "g"}, {"M", o.M}, {"max_residual", worst}, {"results", rows}});
      }
    } else if (horocycle_cmd->parsed()) {
      const auto g = positive_arg(o.g, chart, n);
      const auto L = tropical_arg(o.L, chart, n);
      const auto lifted = lift(p, g, L);
      const auto flowed = horocycle_flow(lifted, o.t);
      const auto moved = lift(p, quake(p, g, scale(L, o.t)).g, L);
      print_json(o, Json{{"lift", to_json(lifted)},
                         {"horocycle", to_json(flowed)},
                         {"earthquake", to_json(moved)},
                         {"residual", max_abs_difference(flowed, moved)}});
    } else if (grid_cmd->parsed()) {
      if (!o.range.empty()) {
        o.cfg.range_lo = o.range[0];
        o.cfg.range_hi = o.range[1];
      }
      o.cfg.chart = chart;
      o.cfg.g0 = parse_vector(o.g0);
      const auto rows = plot_grid(p, o.cfg);
      Output out(o.out);
      if (o.cfg.format == "json") {
        Json j = Json::array();
        for (const auto& r : rows)
          j.push_back(Json{{"x1", r.x1}, {"x2", r.x2}, {"cone", r.cone}, {"logX1", r.logX1}, {"logX2", r.logX2}, {"u1", r.u1}, {"u2", r.u2}});
        out.stream() << j.dump() << '\n';
      } else {
        write_grid_csv(out.stream(), rows);
      }
    } else if (verify_cmd->parsed()) {
      const auto report = verify(o.suite, p, o.cfg.seed);
      Output out(o.out);
      if (o.cfg.format == "json") out.stream() << report.to_json().dump(2) << '\n';
      else write_report(out.stream(), report);
      return report.passed() ? 0 : 1;
    }
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << " (" << e.partial()->size() << " vertices found)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
