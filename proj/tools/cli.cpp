#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "conforma/diff.hpp"
#include "conforma/errors.hpp"
#include "conforma/integ.hpp"
#include "conforma/laplace.hpp"
#include "conforma/ode.hpp"
#include "conforma/series.hpp"
#include "expr.hpp"

namespace conforma::cli {

namespace {

/// Bad flag combinations and unreadable inputs.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  double alpha = 1.0;
  double a = 0.0;
  double b = 1.0;
  double t = 0.0;
  std::string grid;
  double tol = 0.0;
  std::string format = "table";
  std::string f;
  std::string g;
  int count = 0;
  std::string backend = "limit";
  bool rl = false;
  double power = 0.0;
  std::string kind;
  int K = 10;
  int n = -1;
  bool radius = false;
  double remainder = 0.0;
  std::string load;
  std::string save;
  double s = 1.0;
  double tail = 0.0;
  double param = 0.0;
  std::string inner = "one";
  double inner_param = 0.0;
  bool numeric = false;
  double lambda = 0.0;
  double y0 = 1.0;
  int picard = -1;
  bool literal = false;
  std::string file;
  double delta = 0.0;
  double k = 0.0;
  int points = 11;
};

struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> echo;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

bool given(const CLI::App& sub, const std::string& name) {
  const CLI::Option* opt = sub.get_option_no_throw(name);
  return opt && opt->count() > 0;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit(const Table& tab, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (std::size_t i = 0; i < tab.columns.size(); ++i) {
      out << (i ? "," : "") << tab.columns[i];
    }
    out << '\n';
    for (const auto& row : tab.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << num(row[i]);
      }
      out << '\n';
    }
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["command"] = tab.command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : tab.echo) inputs[k] = v;
    j["inputs"] = inputs;
    j["columns"] = tab.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : tab.rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (double v : row) {
        if (std::isfinite(v)) {
          r.push_back(v);
        } else {
          r.push_back(num(v));
        }
      }
      rows.push_back(r);
    }
    j["rows"] = rows;
    out << j.dump(2) << '\n';
  } else {
    out << "# " << tab.command << '\n';
    for (const auto& [k, v] : tab.echo) out << "# " << k << " = " << v << '\n';
    auto cell = [&](const std::string& s) {
      out << s;
      for (std::size_t i = s.size(); i < 20; ++i) out << ' ';
    };
    for (const auto& c : tab.columns) cell(c);
    out << '\n';
    for (const auto& row : tab.rows) {
      for (double v : row) cell(num(v));
      out << '\n';
    }
  }
}

QuadratureSpec make_spec(const CLI::App& sub, const Options& o) {
  QuadratureSpec spec = QuadratureSpec::from_env();
  if (given(sub, "--tol")) spec.rel_tol = o.tol;
  spec.validate();
  return spec;
}

std::vector<double> sample_points(const CLI::App& sub, const Options& o) {
  if (given(sub, "--grid")) {
    double lo = 0, hi = 0;
    long n = 0;
    char extra = 0;
    if (std::sscanf(o.grid.c_str(), "%lf:%lf:%ld%c", &lo, &hi, &n, &extra) != 3) {
      throw UsageError("--grid expects t_min:t_max:count, got '" + o.grid + "'");
    }
    if (n < 1 || n > 1000000) throw UsageError("--grid count must be in [1, 1e6]");
    if (!(lo <= hi)) throw UsageError("--grid needs t_min <= t_max");
    std::vector<double> ts;
    for (long i = 0; i < n; ++i) {
      ts.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    }
    if (n > 1) ts.back() = hi;
    return ts;
  }
  if (given(sub, "--t")) return {o.t};
  throw UsageError("give the evaluation point with --t or --grid");
}

std::shared_ptr<const Expr> parse_shared(const std::string& src) {
  return std::make_shared<const Expr>(parse_expr(src));
}

RealFn user_function(const CLI::App& sub, const Options& o) {
  if (!given(sub, "--f")) throw UsageError("--f is required");
  return expr_function(parse_shared(o.f));
}

DerivBackend make_backend(const Options& o) {
  if (o.backend == "limit") return DerivBackend::limit();
  if (o.backend == "reduction") return DerivBackend::reduction();
  throw UsageError("--backend must be limit or reduction");
}

TableKind table_kind(const std::string& name) {
  static const std::pair<const char*, TableKind> kinds[] = {
      {"one", TableKind::one},         {"t", TableKind::t},
      {"t_pow", TableKind::t_pow},     {"frac_exp", TableKind::frac_exp},
      {"frac_sin", TableKind::frac_sin}, {"frac_cos", TableKind::frac_cos},
      {"damped", TableKind::damped},
  };
  for (const auto& [n, k] : kinds) {
    if (name == n) return k;
  }
  throw UsageError("unknown table kind '" + name + "'");
}

SeriesKind series_kind(const std::string& name) {
  if (name == "exp") return SeriesKind::frac_exp;
  if (name == "sin") return SeriesKind::frac_sin;
  if (name == "cos") return SeriesKind::frac_cos;
  if (name == "geom") return SeriesKind::frac_geom;
  throw UsageError("--kind must be exp, sin, cos or geom");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearFracSystem load_system(const CLI::App& sub, const Options& o) {
  if (!given(sub, "--file")) throw UsageError("--file is required");
  std::istringstream in(read_file(o.file));
  long n = 0;
  if (!(in >> n) || n < 1 || n > 1000) {
    throw UsageError("system file must start with a dimension in [1, 1000]");
  }
  LinearFracSystem sys;
  sys.A.resize(n, n);
  sys.c.resize(n);
  for (long i = 0; i < n * n; ++i) {
    if (!(in >> sys.A(i / n, i % n))) throw UsageError("system file: matrix too short");
  }
  for (long i = 0; i < n; ++i) {
    if (!(in >> sys.c(i))) throw UsageError("system file: initial vector too short");
  }
  std::string rest;
  if (in >> rest) throw UsageError("system file: unexpected '" + rest + "'");
  sys.a = o.a;
  sys.alpha = o.alpha;
  if (given(sub, "--f")) {
    std::vector<std::shared_ptr<const Expr>> parts;
    std::string piece;
    std::istringstream fs(o.f);
    while (std::getline(fs, piece, ';')) parts.push_back(parse_shared(piece));
    if (static_cast<long>(parts.size()) != n) {
      throw UsageError("--f needs " + std::to_string(n) +
                       " ';'-separated components");
    }
    sys.forcing = [parts](double t) {
      Vector v(static_cast<Eigen::Index>(parts.size()));
      for (std::size_t i = 0; i < parts.size(); ++i) v(i) = eval_expr(*parts[i], t);
      return v;
    };
  }
  return sys;
}

void echo_common(Table& tab, const CLI::App& sub, const Options& o) {
  if (given(sub, "--f")) tab.echo.emplace_back("f", o.f);
  if (given(sub, "--alpha")) tab.echo.emplace_back("alpha", num(o.alpha));
  if (given(sub, "--a")) tab.echo.emplace_back("a", num(o.a));
  if (given(sub, "--b")) tab.echo.emplace_back("b", num(o.b));
}

Table cmd_deriv(const CLI::App& sub, const Options& o, bool right) {
  Table tab;
  tab.command = right ? "rderiv" : "deriv";
  echo_common(tab, sub, o);
  RealFn f = user_function(sub, o);
  DerivBackend backend = make_backend(o);
  FracOrder ord = make_order(o.alpha);
  std::optional<RealFn> g;
  if (given(sub, "--g")) {
    if (right) throw UsageError("--g is only available for deriv");
    tab.echo.emplace_back("g", o.g);
    g = expr_function(parse_shared(o.g));
  }
  if (given(sub, "--count")) tab.echo.emplace_back("count", std::to_string(o.count));
  tab.columns = {"t", "value"};
  for (double t : sample_points(sub, o)) {
    double v;
    if (given(sub, "--count")) {
      v = right ? sequential_right_deriv(f, o.b, o.alpha, o.count, t)
                : sequential_left_deriv(f, o.a, o.alpha, o.count, t);
    } else if (g) {
      v = chain_deriv(f, *g, o.a, o.alpha, t, backend);
    } else {
      v = right ? higher_right_deriv(f, o.b, ord, t, backend)
                : higher_left_deriv(f, o.a, ord, t, backend);
    }
    tab.rows.push_back({t, v});
  }
  return tab;
}

Table cmd_integ(const CLI::App& sub, const Options& o, bool right) {
  Table tab;
  tab.command = right ? "rinteg" : "integ";
  echo_common(tab, sub, o);
  QuadratureSpec spec = make_spec(sub, o);
  FracOrder ord = make_order(o.alpha);
  bool closed = given(sub, "--power");
  if (closed) tab.echo.emplace_back("power", num(o.power));
  if (o.rl) {
    if (right) throw UsageError("--rl is only available for integ");
    tab.echo.emplace_back("kernel", "riemann-liouville");
  }
  std::optional<RealFn> f;
  if (!closed) f = user_function(sub, o);
  tab.columns = {"t", "value"};
  for (double t : sample_points(sub, o)) {
    double v;
    if (closed) {
      v = power_integral_closed(o.power, ord, right ? o.b : o.a,
                                right ? Side::right : Side::left, t);
    } else if (o.rl) {
      v = rl_integral(*f, o.a, o.alpha, t, spec);
    } else {
      v = right ? right_integral(*f, o.b, ord, t, spec)
                : left_integral(*f, o.a, ord, t, spec);
    }
    tab.rows.push_back({t, v});
  }
  return tab;
}

Table cmd_series(const CLI::App& sub, const Options& o) {
  Table tab;
  tab.command = "series";
  echo_common(tab, sub, o);
  if (given(sub, "--remainder")) {
    if (o.n < 0) throw UsageError("--remainder needs --n");
    tab.echo.emplace_back("M", num(o.remainder));
    tab.echo.emplace_back("n", std::to_string(o.n));
    tab.columns = {"t", "bound"};
    for (double t : sample_points(sub, o)) {
      tab.rows.push_back({t, remainder_bound(o.remainder, o.n, o.alpha, o.a, t)});
    }
    return tab;
  }
  FracSeries s;
  if (given(sub, "--load")) {
    tab.echo.emplace_back("load", o.load);
    s = series_from_text(read_file(o.load));
  } else if (given(sub, "--kind")) {
    tab.echo.emplace_back("kind", o.kind);
    tab.echo.emplace_back("K", std::to_string(o.K));
    s = builtin_series(series_kind(o.kind), o.a, o.alpha, o.K);
  } else if (given(sub, "--f")) {
    tab.echo.emplace_back("K", std::to_string(o.K));
    s = taylor_coeffs(user_function(sub, o), o.a, o.alpha, o.K);
  } else {
    throw UsageError("series needs --kind, --f or --load");
  }
  if (given(sub, "--save")) {
    std::ofstream save(o.save);
    if (!save) throw UsageError("cannot write '" + o.save + "'");
    save << to_text(s);
  }
  if (o.radius) {
    tab.columns = {"radius"};
    tab.rows.push_back({ratio_radius(s)});
  } else if (given(sub, "--t") || given(sub, "--grid")) {
    if (o.n >= 0) tab.echo.emplace_back("n", std::to_string(o.n));
    tab.columns = {"t", "value"};
    for (double t : sample_points(sub, o)) {
      tab.rows.push_back({t, o.n >= 0 ? partial_sum(s, o.n, t) : eval_series(s, t)});
    }
  } else {
    tab.columns = {"k", "coefficient"};
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
      tab.rows.push_back({static_cast<double>(k), s.coeffs[k]});
    }
  }
  return tab;
}

Table cmd_laplace(const CLI::App& sub, const Options& o) {
  Table tab;
  tab.command = "laplace";
  echo_common(tab, sub, o);
  tab.echo.emplace_back("tail", num(o.tail));
  RealFn f = user_function(sub, o);
  TransformQuery q{o.a, o.alpha, o.s, o.tail};
  tab.columns = {"s", "value"};
  tab.rows.push_back({o.s, laplace_numeric(f, q, make_spec(sub, o))});
  return tab;
}

Table cmd_table(const CLI::App& sub, const Options& o) {
  Table tab;
  tab.command = "table";
  echo_common(tab, sub, o);
  if (!given(sub, "--kind")) throw UsageError("--kind is required");
  TableEntry e{table_kind(o.kind), o.param, table_kind(o.inner), o.inner_param};
  tab.echo.emplace_back("kind", o.kind);
  tab.echo.emplace_back("param", num(o.param));
  if (e.kind == TableKind::damped) {
    tab.echo.emplace_back("inner", o.inner);
    tab.echo.emplace_back("inner_param", num(o.inner_param));
  }
  double closed = laplace_table(e, o.a, o.alpha, o.s);
  if (o.numeric) {
    TransformQuery q{o.a, o.alpha, o.s, region_boundary(e)};
    double numeric = laplace_numeric(table_function(e, o.a, o.alpha), q,
                                     make_spec(sub, o));
    tab.columns = {"s", "closed", "numeric"};
    tab.rows.push_back({o.s, closed, numeric});
  } else {
    tab.columns = {"s", "value"};
    tab.rows.push_back({o.s, closed});
  }
  return tab;
}

Table cmd_solve(const CLI::App& sub, const Options& o) {
  Table tab;
  tab.command = "solve";
  echo_common(tab, sub, o);
  tab.echo.emplace_back("lambda", num(o.lambda));
  tab.echo.emplace_back("y0", num(o.y0));
  if (o.picard >= 0) tab.echo.emplace_back("picard", std::to_string(o.picard));
  if (o.literal && o.picard < 0) throw UsageError("--literal needs --picard");
  QuadratureSpec spec = make_spec(sub, o);
  tab.columns = {"t", "y"};
  for (double t : sample_points(sub, o)) {
    double y;
    if (o.picard < 0) {
      y = solve_scalar(o.lambda, o.y0, o.a, o.alpha, t);
    } else if (o.literal) {
      y = picard_iterate(o.lambda, o.y0, o.a, o.alpha, o.picard, t, spec);
    } else {
      y = picard_partial(o.lambda, o.y0, o.a, o.alpha, o.picard, t);
    }
    tab.rows.push_back({t, y});
  }
  return tab;
}

Table cmd_system(const CLI::App& sub, const Options& o) {
  Table tab;
  tab.command = "system";
  LinearFracSystem sys = load_system(sub, o);
  echo_common(tab, sub, o);
  tab.echo.emplace_back("file", o.file);
  QuadratureSpec spec = make_spec(sub, o);
  tab.columns = {"t"};
  for (Eigen::Index i = 0; i < sys.c.size(); ++i) {
    tab.columns.push_back("y" + std::to_string(i + 1));
  }
  for (double t : sample_points(sub, o)) {
    Vector y = solve_system(sys, t, spec);
    std::vector<double> row{t};
    row.insert(row.end(), y.data(), y.data() + y.size());
    tab.rows.push_back(row);
  }
  return tab;
}

Table cmd_gronwall(const CLI::App& sub, const Options& o) {
  Table tab;
  tab.command = "gronwall";
  echo_common(tab, sub, o);
  tab.echo.emplace_back("delta", num(o.delta));
  tab.echo.emplace_back("k", num(o.k));
  GronwallInstance g{user_function(sub, o), o.delta, o.k, o.a, o.b, o.alpha};
  GronwallReport rep = gronwall_check(g, o.points, make_spec(sub, o));
  tab.columns = {"t",     "r",           "hypothesis_rhs", "hypothesis_slack",
                 "bound", "conclusion_slack", "hypothesis_holds", "violation"};
  for (const auto& p : rep.points) {
    tab.rows.push_back({p.t, p.r, p.hypothesis_rhs, p.hypothesis_slack, p.bound,
                        p.conclusion_slack, p.hypothesis_holds ? 1.0 : 0.0,
                        p.violation ? 1.0 : 0.0});
  }
  return tab;
}

void cmd_export(const CLI::App& sub, const Options& o, std::ostream& out) {
  std::vector<double> ts = sample_points(sub, o);
  std::vector<Vector> ys;
  std::string header = "t";
  if (given(sub, "--file")) {
    LinearFracSystem sys = load_system(sub, o);
    QuadratureSpec spec = make_spec(sub, o);
    for (double t : ts) ys.push_back(solve_system(sys, t, spec));
    for (Eigen::Index i = 0; i < sys.c.size(); ++i) {
      header += ",y" + std::to_string(i + 1);
    }
  } else {
    for (double t : ts) {
      ys.push_back(Vector::Constant(1, solve_scalar(o.lambda, o.y0, o.a, o.alpha, t)));
    }
    header += ",y1";
  }
  std::ostringstream body;
  write_trajectory_csv(body, ts, ys);
  out << header << '\n' << body.str();
}

void add_common(CLI::App* sub, Options& o, bool base_b) {
  sub->add_option("--alpha", o.alpha, "order alpha > 0");
  if (base_b) {
    sub->add_option("--b", o.b, "right terminal point");
  } else {
    sub->add_option("--a", o.a, "left base point");
  }
  sub->add_option("--t", o.t, "evaluation point");
  sub->add_option("--grid", o.grid, "sample grid t_min:t_max:count");
  sub->add_option("--tol", o.tol, "relative quadrature tolerance");
  sub->add_option("--format", o.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Conformable fractional calculus toolkit", "conforma"};
  app.require_subcommand(1);
  Options o;

  auto* deriv = app.add_subcommand("deriv", "left conformable derivative");
  add_common(deriv, o, false);
  deriv->add_option("--f", o.f, "function of t");
  deriv->add_option("--g", o.g, "inner function for the chain rule path");
  deriv->add_option("--count", o.count, "sequential derivative: apply T_alpha count times")
      ->check(CLI::PositiveNumber);
  deriv->add_option("--backend", o.backend, "limit or reduction");

  auto* rderiv = app.add_subcommand("rderiv", "right conformable derivative");
  add_common(rderiv, o, true);
  rderiv->add_option("--f", o.f, "function of t");
  rderiv->add_option("--count", o.count, "sequential derivative")
      ->check(CLI::PositiveNumber);
  rderiv->add_option("--backend", o.backend, "limit or reduction");

  auto* integ = app.add_subcommand("integ", "left conformable integral");
  add_common(integ, o, false);
  integ->add_option("--f", o.f, "function of t");
  integ->add_flag("--rl", o.rl, "Riemann-Liouville integral instead");
  integ->add_option("--power", o.power, "closed form for f = (t-a)^mu");

  auto* rinteg = app.add_subcommand("rinteg", "right conformable integral");
  add_common(rinteg, o, true);
  rinteg->add_option("--f", o.f, "function of t");
  rinteg->add_option("--power", o.power, "closed form for f = (b-t)^mu");

  auto* series = app.add_subcommand("series", "fractional power series");
  add_common(series, o, false);
  series->add_option("--f", o.f, "function to expand numerically (K <= 4)");
  series->add_option("--kind", o.kind, "exp, sin, cos or geom");
  series->add_option("--K", o.K, "highest power slot")->check(CLI::NonNegativeNumber);
  series->add_option("--n", o.n, "partial sum / remainder index")
      ->check(CLI::NonNegativeNumber);
  series->add_flag("--radius", o.radius, "print the ratio-test radius");
  series->add_option("--remainder", o.remainder, "Taylor remainder bound with this M");
  series->add_option("--load", o.load, "read a series from a text file");
  series->add_option("--save", o.save, "write the series as text");

  auto* laplace = app.add_subcommand("laplace", "numeric fractional Laplace transform");
  add_common(laplace, o, false);
  laplace->add_option("--f", o.f, "function of t");
  laplace->add_option("--s", o.s, "transform variable");
  laplace->add_option("--tail", o.tail, "growth rate c with |f| <= C e^{c u}");

  auto* table = app.add_subcommand("table", "closed-form Laplace table entry");
  add_common(table, o, false);
  table->add_option("--kind", o.kind, "one, t, t_pow, frac_exp, frac_sin, frac_cos, damped");
  table->add_option("--param", o.param, "p, lambda, omega or k");
  table->add_option("--inner", o.inner, "inner kind of a damped entry");
  table->add_option("--inner-param", o.inner_param, "inner parameter");
  table->add_option("--s", o.s, "transform variable");
  table->add_flag("--numeric", o.numeric, "also evaluate the transform by quadrature");

  auto* solve = app.add_subcommand("solve", "scalar T_alpha y = lambda y");
  add_common(solve, o, false);
  solve->add_option("--lambda", o.lambda, "rate");
  solve->add_option("--y0", o.y0, "value at a");
  solve->add_option("--picard", o.picard, "n-th successive approximation instead")
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--literal", o.literal, "build the Picard iterate by quadrature");

  auto* system = app.add_subcommand("system", "linear system T_alpha y = A y + f");
  add_common(system, o, false);
  system->add_option("--file", o.file, "n, then A row by row, then c");
  system->add_option("--f", o.f, "forcing components separated by ';'");

  auto* gronwall = app.add_subcommand("gronwall", "check the Gronwall bound on a grid");
  add_common(gronwall, o, false);
  gronwall->add_option("--b", o.b, "right end of the interval");
  gronwall->add_option("--f", o.f, "r(t)");
  gronwall->add_option("--delta", o.delta, "delta >= 0");
  gronwall->add_option("--k", o.k, "k >= 0");
  gronwall->add_option("--points", o.points, "grid size");

  auto* exporter = app.add_subcommand("export", "sampled trajectory as CSV");
  add_common(exporter, o, false);
  exporter->add_option("--lambda", o.lambda, "scalar rate");
  exporter->add_option("--y0", o.y0, "scalar value at a");
  exporter->add_option("--file", o.file, "system file instead of the scalar problem");
  exporter->add_option("--f", o.f, "forcing components separated by ';'");

  std::vector<std::string> argv_store{"conforma"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUserError;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "export") {
      cmd_export(*sub, o, out);
      return kOk;
    }
    Table tab;
    if (name == "deriv" || name == "rderiv") {
      tab = cmd_deriv(*sub, o, name == "rderiv");
    } else if (name == "integ" || name == "rinteg") {
      tab = cmd_integ(*sub, o, name == "rinteg");
    } else if (name == "series") {
      tab = cmd_series(*sub, o);
    } else if (name == "laplace") {
      tab = cmd_laplace(*sub, o);
    } else if (name == "table") {
      tab = cmd_table(*sub, o);
    } else if (name == "solve") {
      tab = cmd_solve(*sub, o);
    } else if (name == "system") {
      tab = cmd_system(*sub, o);
    } else {
      tab = cmd_gronwall(*sub, o);
    }
    emit(tab, o.format, out);
    return kOk;
  } catch (const ParseError& e) {
    err << "error: in expression: " << e.what() << '\n';
  } catch (const EvalError& e) {
    err << "error: evaluating expression: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kUserError;
}

}  // namespace conforma::cli
