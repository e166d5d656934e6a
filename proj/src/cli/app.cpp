#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gjef/basis_checker.hpp"
#include "gjef/elliptic.hpp"
#include "gjef/fourier.hpp"
#include "gjef/k_analysis.hpp"
#include "gjef/operator.hpp"
#include "gjef/parallel.hpp"
#include "gjef/trig.hpp"
#include "grid.hpp"
#include "output.hpp"

namespace gjef::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Options {
  std::string p = "2";
  std::string q = "2";
  std::string k = "0";
  std::string r = "2";
  std::string x = "0";
  std::string func;
  std::string criterion;
  int M = kDefaultCutoff;
  double alpha = 2.0;
  int N = 4096;
  int n_exp = 16;
  std::string input;
  std::string out;
  std::string format;
  Tolerance tol;
};

enum class FuncKind { Trig, Hyp, Elliptic, K, Pi, Sandwich };

struct FuncSpec {
  FuncKind kind;
  int which;  // TrigKind, HypKind or EllipticKind
};

const std::map<std::string, FuncSpec>& func_table() {
  static const std::map<std::string, FuncSpec> t = {
      {"sin", {FuncKind::Trig, static_cast<int>(TrigKind::Sin)}},
      {"cos", {FuncKind::Trig, static_cast<int>(TrigKind::Cos)}},
      {"tan", {FuncKind::Trig, static_cast<int>(TrigKind::Tan)}},
      {"sinh", {FuncKind::Hyp, static_cast<int>(HypKind::Sinh)}},
      {"cosh", {FuncKind::Hyp, static_cast<int>(HypKind::Cosh)}},
      {"tanh", {FuncKind::Hyp, static_cast<int>(HypKind::Tanh)}},
      {"sn", {FuncKind::Elliptic, static_cast<int>(EllipticKind::Sn)}},
      {"cn", {FuncKind::Elliptic, static_cast<int>(EllipticKind::Cn)}},
      {"dn", {FuncKind::Elliptic, static_cast<int>(EllipticKind::Dn)}},
      {"K", {FuncKind::K, 0}},
      {"pi", {FuncKind::Pi, 0}},
      {"sandwich", {FuncKind::Sandwich, 0}},
  };
  return t;
}

double scalar(const std::string& spec, const char* flag) {
  const auto v = parse_grid(spec, flag);
  if (v.size() != 1) {
    throw UsageError(std::string(flag) + " takes a single value for this subcommand");
  }
  return v.front();
}

// Builds every (p, q) pair up front so invalid exponents are reported before
// any work starts.
std::vector<ExponentPair> exponent_grid(const Options& o) {
  std::vector<ExponentPair> out;
  for (double p : parse_grid(o.p, "--p")) {
    for (double q : parse_grid(o.q, "--q")) {
      out.emplace_back(p, q);
    }
  }
  return out;
}

std::vector<EllipticParams> elliptic_grid(const Options& o) {
  const auto ks = parse_grid(o.k, "--k");
  std::vector<EllipticParams> out;
  for (const auto& e : exponent_grid(o)) {
    for (double k : ks) {
      out.emplace_back(e, k);
    }
  }
  for (const auto& ep : out) {
    if (ep.k > kMaxModulus) {
      throw DomainError("modulus k must not exceed 1 - 1e-9");
    }
  }
  return out;
}

std::vector<double> table_row_values(const std::vector<double>& xs, const std::function<double(double)>& f) {
  std::vector<double> v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      v[i] = f(xs[i]);
    } catch (const DomainError&) {
      v[i] = kNaN;  // points past the escape of sinh_pq
    } catch (const PoleError&) {
      v[i] = kNaN;
    }
  }
  return v;
}

Table function_table(const Options& o, bool single) {
  const auto it = func_table().find(o.func);
  if (it == func_table().end()) {
    throw UsageError("--func: unknown function '" + o.func + "'");
  }
  const FuncSpec spec = it->second;
  const auto xs = parse_grid(o.x, "--x");
  if (single) {
    for (const auto& [spec_str, flag] : {std::pair{o.x, "--x"}, {o.p, "--p"}, {o.q, "--q"}, {o.k, "--k"}}) {
      if (parse_grid(spec_str, flag).size() != 1) {
        throw UsageError(std::string(flag) + " takes a single value for eval; use table for grids");
      }
    }
  }
  Table t;
  std::vector<std::vector<std::vector<Cell>>> blocks;

  switch (spec.kind) {
    case FuncKind::Trig:
    case FuncKind::Hyp: {
      const auto es = exponent_grid(o);
      t.columns = {"p", "q", "x", o.func};
      blocks.resize(es.size());
      parallel_for(es.size(), [&](std::size_t i) {
        const auto& e = es[i];
        std::vector<double> v;
        if (spec.kind == FuncKind::Trig) {
          const TrigFunctions tf(e, o.tol);
          const auto kind = static_cast<TrigKind>(spec.which);
          v = single ? std::vector{tf.eval(kind, xs[0])}
                     : table_row_values(xs, [&](double x) { return tf.eval(kind, x); });
        } else {
          const HyperbolicFunctions hf(e, o.tol);
          const auto kind = static_cast<HypKind>(spec.which);
          v = single ? std::vector{hf.eval(kind, xs[0])}
                     : table_row_values(xs, [&](double x) { return hf.eval(kind, x); });
        }
        for (std::size_t j = 0; j < xs.size(); ++j) {
          blocks[i].push_back({e.p(), e.q(), xs[j], v[j]});
        }
      });
      break;
    }
    case FuncKind::Elliptic: {
      const auto eps = elliptic_grid(o);
      t.columns = {"p", "q", "k", "x", o.func};
      blocks.resize(eps.size());
      parallel_for(eps.size(), [&](std::size_t i) {
        const EllipticFunction ef(eps[i], o.tol);
        const auto kind = static_cast<EllipticKind>(spec.which);
        for (double x : xs) {
          blocks[i].push_back({eps[i].e.p(), eps[i].e.q(), eps[i].k, x, ef.eval(kind, x)});
        }
      });
      break;
    }
    case FuncKind::K: {
      const auto eps = elliptic_grid(o);
      t.columns = {"p", "q", "k", "K"};
      blocks.resize(eps.size());
      parallel_for(eps.size(), [&](std::size_t i) {
        blocks[i].push_back({eps[i].e.p(), eps[i].e.q(), eps[i].k, EllipticFunction(eps[i], o.tol).K()});
      });
      break;
    }
    case FuncKind::Pi: {
      t.columns = {"p", "q", "pi"};
      for (const auto& e : exponent_grid(o)) {
        blocks.push_back({{e.p(), e.q(), pi_pq(e)}});
      }
      break;
    }
    case FuncKind::Sandwich: {
      if (single) {
        throw UsageError("--func sandwich is only available in table");
      }
      const auto rs = parse_grid(o.r, "--r");
      const auto ks = parse_grid(o.k, "--k");
      for (double r : rs) {
        ExponentPair::conjugate_pair(r);
      }
      t.columns = {"r", "k", "lower", "K", "upper_tanh", "upper_alg"};
      blocks.resize(rs.size() * ks.size());
      parallel_for(blocks.size(), [&](std::size_t i) {
        const double r = rs[i / ks.size()];
        const double k = ks[i % ks.size()];
        const SandwichBounds b = sandwich(r, k);
        blocks[i].push_back({r, k, b.lower, b.value, b.upper_tanh, b.upper_alg});
      });
      break;
    }
  }
  for (auto& b : blocks) {
    for (auto& row : b) {
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

nlohmann::json report_json(const CheckReport& r) {
  nlohmann::json j = {{"criterion", std::string(to_string(r.criterion))},
                      {"p", r.params.e.p()},
                      {"q", r.params.e.q()},
                      {"k", r.params.k},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"margin", r.margin},
                      {"satisfied", r.satisfied},
                      {"verdict", std::string(to_string(r.verdict))}};
  if (r.criterion == Criterion::NeumannDirect) {
    j["M"] = r.M;
  }
  nlohmann::json d = nlohmann::json::object();
  for (const auto& [name, value] : r.details) {
    d[name] = value;
  }
  j["details"] = d;
  return j;
}

Table report_table(const std::vector<CheckReport>& reps) {
  Table t;
  t.columns = {"criterion", "p", "q", "k", "lhs", "rhs", "margin", "verdict", "M"};
  for (const auto& r : reps) {
    t.rows.push_back({std::string(to_string(r.criterion)), r.params.e.p(), r.params.e.q(), r.params.k, r.lhs,
                      r.rhs, r.margin, std::string(to_string(r.verdict)), static_cast<long long>(r.M)});
  }
  return t;
}

// Two-column CSV (x, u(x)); lines whose first field is not numeric are
// skipped, so a header row is allowed.
std::vector<std::pair<double, double>> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("--input: cannot open '" + path + "'");
  }
  std::vector<std::pair<double, double>> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      continue;
    }
    try {
      pts.emplace_back(parse_number(line.substr(0, comma), "--input"),
                       parse_number(line.substr(comma + 1), "--input"));
    } catch (const UsageError&) {
      if (!pts.empty()) {
        throw;
      }
    }
  }
  if (pts.size() < 2) {
    throw UsageError("--input: need at least two (x, u) rows");
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].first > pts[i - 1].first)) {
      throw UsageError("--input: x values must be strictly increasing");
    }
  }
  return pts;
}

double resample(const std::vector<std::pair<double, double>>& pts, double x) {
  auto it = std::upper_bound(pts.begin(), pts.end(), x, [](double v, const auto& pt) { return v < pt.first; });
  std::size_t hi = static_cast<std::size_t>(it - pts.begin());
  hi = std::clamp<std::size_t>(hi, 1, pts.size() - 1);
  const auto& [x0, u0] = pts[hi - 1];
  const auto& [x1, u1] = pts[hi];
  return u0 + (u1 - u0) * (x - x0) / (x1 - x0);
}

struct Emitter {
  const Options& o;
  std::ostream& out;

  bool json() const { return o.format == "json"; }

  void emit(const std::string& text, const std::string& summary) {
    if (o.out.empty()) {
      out << text;
      return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      throw UsageError("--out: cannot write '" + o.out + "'");
    }
    f << text;
    out << summary << " -> " << o.out << '\n';
  }

  void table(const Table& t, const std::string& what) {
    std::ostringstream s;
    if (json()) {
      s << to_json(t).dump(2) << '\n';
    } else {
      write_csv(s, t);
    }
    emit(s.str(), what + ": " + std::to_string(t.rows.size()) + " rows");
  }
};

void add_params(CLI::App* sub, Options& o, bool with_k) {
  sub->add_option("--p", o.p, "exponent p: value, list a,b,c or start:stop:count");
  sub->add_option("--q", o.q, "exponent q: value, list or start:stop:count");
  if (with_k) {
    sub->add_option("--k", o.k, "modulus k in [0,1): value, list or start:stop:count");
  }
}

void add_output(CLI::App* sub, Options& o, const std::string& default_format) {
  o.format = default_format;
  sub->add_option("--out", o.out, "write output to this file instead of stdout");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_tolerance(CLI::App* sub, Options& o) {
  sub->add_option("--abs-tol", o.tol.abs_tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--rel-tol", o.tol.rel_tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-levels", o.tol.max_subdivisions, "maximum quadrature refinement levels")
      ->check(CLI::Range(1, 24));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Jacobian elliptic functions and basis criteria"};
  app.require_subcommand(1);
  std::string func_names;
  for (const auto& [name, spec] : func_table()) {
    func_names += (func_names.empty() ? "" : "|") + name;
  }

  Options eval_o, table_o, check_o, kstar_o, fourier_o, expand_o;

  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  add_params(eval, eval_o, true);
  eval->add_option("--func", eval_o.func, func_names)->required();
  eval->add_option("--x", eval_o.x, "argument");
  add_output(eval, eval_o, "csv");
  add_tolerance(eval, eval_o);

  auto* table = app.add_subcommand("table", "tabulate a function over parameter and argument grids");
  add_params(table, table_o, true);
  table->add_option("--func", table_o.func, func_names)->required();
  table->add_option("--x", table_o.x, "argument grid");
  table->add_option("--r", table_o.r, "exponent r for --func sandwich");
  add_output(table, table_o, "csv");
  add_tolerance(table, table_o);

  auto* check = app.add_subcommand("check", "evaluate a basis criterion; exit 2 when violated");
  add_params(check, check_o, true);
  check->add_option("--criterion", check_o.criterion)
      ->required()
      ->check(CLI::IsMember({"thm-main", "cor-main", "cor-13", "thm-general", "neumann"}));
  check->add_option("--M", check_o.M, "odd coefficient cutoff for neumann");
  add_output(check, check_o, "csv");

  auto* kstar = app.add_subcommand("kstar", "largest modulus at which a criterion holds");
  add_params(kstar, kstar_o, false);
  kstar->add_option("--criterion", kstar_o.criterion)
      ->required()
      ->check(CLI::IsMember({"thm-main", "cor-main", "cor-13", "thm-general", "neumann"}));
  kstar->add_option("--M", kstar_o.M, "odd coefficient cutoff for neumann");
  add_output(kstar, kstar_o, "csv");

  auto* fourier = app.add_subcommand("fourier", "sine coefficients tau_m and their bounds");
  add_params(fourier, fourier_o, true);
  fourier->add_option("--M", fourier_o.M, "coefficient cutoff");
  add_output(fourier, fourier_o, "csv");
  add_tolerance(fourier, fourier_o);

  auto* expand = app.add_subcommand("expand", "coefficients of sampled data in the basis f_n");
  add_params(expand, expand_o, true);
  expand->add_option("--input", expand_o.input, "two-column CSV of (x, u(x))")->required();
  expand->add_option("--M", expand_o.M, "odd coefficient cutoff");
  expand->add_option("--alpha", expand_o.alpha, "norm exponent");
  expand->add_option("--N", expand_o.N, "grid size (power of two >= 64)");
  expand->add_option("--n-exp", expand_o.n_exp, "number of expansion coefficients");
  add_output(expand, expand_o, "json");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      Emitter{eval_o, out}.table(function_table(eval_o, true), "eval");
      return kExitOk;
    }
    if (table->parsed()) {
      Emitter{table_o, out}.table(function_table(table_o, false), "table");
      return kExitOk;
    }
    if (check->parsed()) {
      const Criterion c = parse_criterion(check_o.criterion);
      const auto eps = elliptic_grid(check_o);
      std::vector<CheckReport> reps(eps.size());
      parallel_for(eps.size(), [&](std::size_t i) { reps[i] = gjef::check(c, eps[i], check_o.M); });
      const auto n_ok = std::count_if(reps.begin(), reps.end(), [](const auto& r) { return r.satisfied; });
      Emitter em{check_o, out};
      const std::string summary = "check " + check_o.criterion + ": " + std::to_string(n_ok) + "/" +
                                  std::to_string(reps.size()) + " satisfied";
      if (em.json()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reps) {
          j.push_back(report_json(r));
        }
        em.emit((reps.size() == 1 ? j[0] : j).dump(2) + "\n", summary);
      } else {
        std::ostringstream s;
        write_csv(s, report_table(reps));
        em.emit(s.str(), summary);
      }
      return n_ok == static_cast<long>(reps.size()) ? kExitOk : kExitViolated;
    }
    if (kstar->parsed()) {
      const Criterion c = parse_criterion(kstar_o.criterion);
      const auto es = exponent_grid(kstar_o);
      std::vector<KStar> ks(es.size());
      parallel_for(es.size(), [&](std::size_t i) { ks[i] = k_star(es[i], c, kstar_o.M); });
      Table t;
      t.columns = {"p", "q", "criterion", "status", "k_star"};
      for (std::size_t i = 0; i < es.size(); ++i) {
        t.rows.push_back({es[i].p(), es[i].q(), kstar_o.criterion, std::string(to_string(ks[i].status)), ks[i].k});
      }
      Emitter{kstar_o, out}.table(t, "kstar");
      return kExitOk;
    }
    if (fourier->parsed()) {
      const EllipticParams ep(ExponentPair(scalar(fourier_o.p, "--p"), scalar(fourier_o.q, "--q")),
                              scalar(fourier_o.k, "--k"));
      const SineCoefficients c = sine_coefficients(EllipticFunction(ep, fourier_o.tol), fourier_o.M);
      Table t;
      t.columns = {"m", "tau_m", "bound_m"};
      for (int m = 1; m <= c.M; m += 2) {
        t.rows.push_back({static_cast<long long>(m), c.tau(m), tau_bound_from_K(c.K, m)});
      }
      Emitter{fourier_o, out}.table(t, "fourier");
      return kExitOk;
    }
    if (expand->parsed()) {
      const EllipticParams ep(ExponentPair(scalar(expand_o.p, "--p"), scalar(expand_o.q, "--q")),
                              scalar(expand_o.k, "--k"));
      if (expand_o.N < 64 || (expand_o.N & (expand_o.N - 1)) != 0) {
        throw UsageError("--N must be a power of two >= 64");
      }
      if (expand_o.n_exp < 1 || expand_o.n_exp > expand_o.N / 4) {
        throw UsageError("--n-exp must lie in 1..N/4");
      }
      if (expand_o.M < 3 || expand_o.M % 2 == 0) {
        throw UsageError("--M must be odd and >= 3");
      }
      const auto pts = read_samples(expand_o.input);
      const GridFunction u = GridFunction::sample([&](double x) { return resample(pts, x); },
                                                  static_cast<std::size_t>(expand_o.N), expand_o.alpha);
      const EllipticFunction ef(ep);
      const SineCoefficients c = sine_coefficients(ef, expand_o.M);
      const BasisExpansion ex = expand_in_basis(u, c, expand_o.n_exp, BasisSampler(ef, u.N()));
      Emitter em{expand_o, out};
      std::ostringstream s;
      if (em.json()) {
        nlohmann::json j = {{"params", {{"p", ep.e.p()}, {"q", ep.e.q()}, {"k", ep.k}}},
                            {"alpha", ex.alpha},
                            {"N", ex.N},
                            {"N_exp", ex.N_exp},
                            {"coefficients", ex.coefficients},
                            {"residual_norm", ex.residual_norm},
                            {"iterations", ex.iterations}};
        s << j.dump(2) << '\n';
      } else {
        Table t;
        t.columns = {"n", "alpha_n"};
        for (int n = 1; n <= ex.N_exp; ++n) {
          t.rows.push_back({static_cast<long long>(n), ex.coefficients[n - 1]});
        }
        write_csv(s, t);
      }
      std::ostringstream summary;
      summary.precision(6);
      summary << "expand: " << ex.N_exp << " coefficients, residual " << ex.residual_norm;
      em.emit(s.str(), summary.str());
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gjef::cli
