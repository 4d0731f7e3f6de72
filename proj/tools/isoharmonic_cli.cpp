#include "acceptance.hpp"

#include "isoharmonic/billiard.hpp"
#include "isoharmonic/comb.hpp"
#include "isoharmonic/deform.hpp"
#include "isoharmonic/io.hpp"
#include "isoharmonic/pell.hpp"
#include "isoharmonic/schlesinger.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace isoharmonic;
using io::json;

struct Global {
  std::optional<double> tol;
  int nodes = QuadOptions{}.nodes;
  std::uint64_t seed = acceptance::Options{}.seed;
  std::string out;
  std::string csv;

  QuadOptions quad() const {
    QuadOptions q;
    q.nodes = nodes;
    q.max_nodes = std::max(q.max_nodes, nodes);
    return q;
  }
  double bound(double fallback) const { return tol.value_or(fallback); }
};

struct Gate {
  std::string criterion;
  double value;
  double bound;
  bool pass() const { return value <= bound; }
};

json report_json(const std::vector<Gate>& gates) {
  json r = json::array();
  for (const Gate& g : gates) r.push_back({{"criterion", g.criterion}, {"value", g.value}, {"bound", g.bound}, {"pass", g.pass()}});
  return r;
}

// Writes the JSON document to --out (or stdout) and returns the exit code of the gates.
int finish(const Global& gl, json doc, const std::vector<Gate>& gates) {
  doc["seed"] = gl.seed;
  doc["nodes"] = gl.nodes;
  doc["report"] = report_json(gates);
  const std::string text = io::dump(doc) + "\n";
  if (gl.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(gl.out);
    if (!os) throw std::invalid_argument("cannot write " + gl.out);
    os << text;
  }
  int code = 0;
  for (const Gate& g : gates)
    if (!g.pass()) {
      std::cerr << "gate failed: " << g.criterion << " = " << io::format_double(g.value) << " > "
                << io::format_double(g.bound) << "\n";
      code = 1;
    }
  return code;
}

void write_csv_to(const std::string& path, const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& rows) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot write " + path);
  io::write_csv(os, header, rows);
}

std::vector<std::string> indexed(const std::string& base, Eigen::Index n, int first = 1) {
  std::vector<std::string> h;
  for (Eigen::Index k = 0; k < n; ++k) h.push_back(base + std::to_string(k + first));
  return h;
}

int cmd_measure(const Global& gl, const std::string& e_path, const std::string& cfg_path, std::optional<double> pole) {
  const QuadOptions q = gl.quad();
  json doc;
  Eigen::VectorXd masses;
  if (!cfg_path.empty()) {
    const TCurveConfig c = io::config_from_json(io::read_file(cfg_path));
    const HarmonicMeasures hm = harmonic_measures(c, q);
    masses = hm.masses;
    doc["kind"] = "harmonic measures of a normalized configuration";
    doc["raw_sum"] = hm.raw_sum;
  } else {
    if (e_path.empty()) throw std::invalid_argument("measure needs --E or --config");
    const IntervalSystem E = io::intervals_from_json(io::read_file(e_path));
    // ascending interval order, leftmost first
    masses = pole ? harmonic_measures(E, *pole, q).reverse().eval() : equilibrium_measure(E, q).reverse().eval();
    doc["kind"] = pole ? "harmonic measures" : "equilibrium measure";
    if (pole) doc["pole"] = *pole;
  }
  const Eigen::VectorXd cum = partial_sums(masses);
  std::vector<std::vector<double>> rows;
  double acc = 0.0;
  for (Eigen::Index k = 0; k < masses.size(); ++k) {
    acc += masses[k];
    rows.push_back({double(k + 1), masses[k], acc});
  }
  write_csv_to(gl.csv, {"interval", "mass", "cumulative"}, rows);
  doc["masses"] = io::to_json(masses);
  doc["frequencies"] = io::to_json(cum);
  return finish(gl, doc, {{"mass sum defect", std::abs(masses.sum() - 1.0), gl.bound(1e-10)}});
}

int cmd_deform(const Global& gl, const std::string& path) {
  const json request = io::read_file(path);
  const TCurveConfig start = io::config_from_json(request.at("start"));
  const Eigen::VectorXd x_end = io::vector_from_json(request.at("x_end"));
  const int steps = request.value("steps", 100);
  const std::string pol = request.value("policy", std::string("evolve"));
  if (pol != "evolve" && pol != "pinned") throw std::invalid_argument("policy must be \"evolve\" or \"pinned\"");
  const PolePolicy policy = pol == "evolve" ? PolePolicy::evolve : PolePolicy::pinned_at_infinity;
  const Eigen::VectorXd x0 = policy == PolePolicy::evolve ? start.x : denormalize(start).x_hat;
  if (x_end.size() != x0.size()) throw std::invalid_argument("x_end must have length g");
  const DeformationPath dp = integrate_path(start, linear_path(x0, x_end), steps, policy, {}, gl.quad());

  const int g = start.g;
  std::vector<std::string> header{"s"};
  for (const auto& v : {indexed("x", g), indexed("u", g - 1)}) header.insert(header.end(), v.begin(), v.end());
  header.push_back("y0");
  for (const auto& v : indexed("f", g)) header.push_back(v);
  header.push_back("drift");
  std::vector<std::vector<double>> rows;
  double drift = 0.0;
  const Eigen::VectorXd f0 = harmonic_frequencies(start, gl.quad());
  for (const PathStep& s : dp.steps) {
    std::vector<double> row{s.s};
    for (Eigen::Index k = 0; k < s.config.x.size(); ++k) row.push_back(s.config.x[k]);
    for (Eigen::Index k = 0; k < s.config.u.size(); ++k) row.push_back(s.config.u[k]);
    row.push_back(s.config.y0);
    const Eigen::VectorXd f = harmonic_frequencies(s.config, gl.quad());
    for (Eigen::Index k = 0; k < f.size(); ++k) row.push_back(f[k]);
    row.push_back(s.drift);
    drift = std::max(drift, (f - f0).cwiseAbs().maxCoeff());
    rows.push_back(row);
  }
  if (gl.csv.empty()) {
    io::write_csv(std::cout, header, rows);
  } else {
    write_csv_to(gl.csv, header, rows);
  }
  json doc{{"policy", pol}, {"steps", int(dp.steps.size()) - 1}, {"complete", dp.complete}, {"diagnostic", dp.diagnostic}};
  doc["end"] = io::to_json(dp.steps.back().config);
  std::vector<Gate> gates{{"frequency drift", drift, gl.bound(1e-9)}, {"incomplete path", dp.complete ? 0.0 : 1.0, 0.0}};
  // the CSV goes to stdout when --csv is absent, so the JSON then needs --out
  if (gl.out.empty() && gl.csv.empty()) {
    int code = 0;
    for (const Gate& gt : gates)
      if (!gt.pass()) code = 1;
    return code;
  }
  return finish(gl, doc, gates);
}

int cmd_schlesinger(const Global& gl, const std::string& path, double h, std::vector<double> t_in) {
  const TCurveConfig c = io::config_from_json(io::read_file(path));
  if (t_in.size() != 2) throw std::invalid_argument("--t takes re and im");
  const cplx t(t_in[0], t_in[1]);
  const double bound = gl.bound(c.g <= 2 ? 1e-6 : 1e-5);
  json dirs = json::array();
  std::vector<Gate> gates;
  for (int i = 0; i < c.g; ++i) {
    const SchlesingerReport rep = verify_schlesinger(c, t, i, h, gl.quad());
    Eigen::VectorXd entry = rep.entry_residual.colwise().maxCoeff().transpose();
    dirs.push_back({{"direction", i + 1},
                    {"residual", rep.residual},
                    {"entry_max", {{"11", entry[0]}, {"12", entry[1]}, {"21", entry[2]}, {"22", entry[3]}}},
                    {"self_form_gap", rep.self_form_gap}});
    gates.push_back({"schlesinger residual x_" + std::to_string(i + 1), rep.residual, bound});
  }
  const IdentityReport ir = identity_checks(c, t, gl.quad());
  json ids = json::object();
  for (const auto& [name, v] : ir.defects) ids[name] = v;
  gates.push_back({"identity defect", ir.max_defect(), 1e-9});
  return finish(gl, {{"h", h}, {"t", {t.real(), t.imag()}}, {"directions", dirs}, {"identities", ids}}, gates);
}

int cmd_pell(const Global& gl, const std::string& path, int n) {
  const IntervalSystem E = io::intervals_from_json(io::read_file(path));
  const PellCertificate c = chebyshev_poly(E, n, gl.quad());
  json doc{{"n", c.n},
           {"P", io::to_json(c.P)},
           {"Q", io::to_json(c.Q)},
           {"signature", io::to_json(c.signature)},
           {"winding", io::to_json(c.winding)},
           {"winding_consistent", c.winding_consistent},
           {"residual", c.residual},
           {"division_remainder", c.division_remainder},
           {"sqrt_defect", c.sqrt_defect},
           {"equioscillation", equioscillation_count(c.P, E)}};
  return finish(gl, doc, {{"pell residual", c.residual, gl.bound(1e-10)}});
}

int cmd_comb(const Global& gl, const std::string& path, std::optional<double> top) {
  const IntervalSystem E = io::intervals_from_json(io::read_file(path));
  const CombRegion r = comb_region(E, gl.quad());
  const double h_max = r.h.size() ? r.h.maxCoeff() : 0.0;
  std::vector<std::vector<double>> rows;
  for (const auto& [x, y] : comb_boundary(r, top.value_or(1.0 + h_max))) rows.push_back({x, y});
  write_csv_to(gl.csv, {"re", "im"}, rows);
  // theta at the left end of E is 0 and Re theta on each gap is the slit abscissa
  const EtaData et = eta(E, gl.quad());
  double q_gap = 0.0;
  for (Eigen::Index j = 0; j < r.q.size(); ++j)
    q_gap = std::max(q_gap, std::abs(comb_map(E, et, cplx(et.gap_zeros[j], 0.0), gl.quad()).real() - r.q[j]));
  return finish(gl, {{"q", io::to_json(r.q)}, {"h", io::to_json(r.h)}}, {{"slit abscissa defect", q_gap, gl.bound(1e-9)}});
}

int cmd_billiard(const Global& gl, const std::string& path, bool five, int bounces, std::vector<double> lambda) {
  BilliardConfig c;
  if (five) {
    c = five_periodic_config(gl.quad());
  } else {
    if (path.empty()) throw std::invalid_argument("billiard needs --config or --five-periodic");
    c = io::billiard_from_json(io::read_file(path));
  }
  const int d = c.d();
  Eigen::VectorXd lam(d - 1);
  if (lambda.empty()) {
    for (int i = 1; i < d; ++i) lam[i - 1] = 0.5 * (c.segment(i).first + c.segment(i).second);
  } else {
    if (int(lambda.size()) != d - 1) throw std::invalid_argument("--lambda needs d - 1 values");
    for (int i = 1; i < d; ++i) lam[i - 1] = lambda[i - 1];
  }
  const Trajectory t = simulate(c, tangent_start(c, lam), bounces);
  std::vector<std::string> header{"bounce"};
  for (const auto& v : {indexed("x", d), indexed("v", d)}) header.insert(header.end(), v.begin(), v.end());
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < t.points.size(); ++k) {
    std::vector<double> row{double(k)};
    for (int i = 0; i < d; ++i) row.push_back(t.points[k][i]);
    for (int i = 0; i < d; ++i) row.push_back(t.directions[k][i]);
    rows.push_back(row);
  }
  write_csv_to(gl.csv, header, rows);
  const IntervalSystem E = reciprocal_system(c);
  const Eigen::VectorXd f = frequency_map(E, gl.quad());
  json doc{{"config", io::to_json(c)},
           {"bounces", bounces},
           {"winding", io::to_json(t.winding)},
           {"closure_gap", t.closure_gap},
           {"tangency_drift", t.tangency_drift},
           {"reflection_defect", t.reflection_defect},
           {"monitor_agrees", t.monitor_agrees},
           {"frequencies", io::to_json(f)}};
  if (const auto reg = detect_regular(f, 1000, 1e-8)) {
    doc["regular_n"] = reg->n;
    doc["expected_winding"] = io::to_json(reg->winding);
    if (reg->n == bounces) {
      const PellCertificate cert = chebyshev_poly(E, reg->n, gl.quad());
      doc["pell_residual"] = cert.residual;
      doc["signature"] = io::to_json(cert.signature);
    }
  }
  return finish(gl, doc,
                {{"closure gap", t.closure_gap, gl.bound(1e-6)}, {"tangency drift", t.tangency_drift, 1e-8}});
}

int cmd_selftest(const Global& gl) {
  acceptance::Options opt;
  opt.seed = gl.seed;
  opt.quad = gl.quad();
  json rows = json::array();
  std::vector<std::string> failed;
  for (int id = 1; id <= 12; ++id) {
    const acceptance::CriterionResult r = acceptance::run_criterion(id, opt);
    std::cout << acceptance::summary_line(r) << std::endl;
    rows.push_back(acceptance::to_json(r, opt.seed));
    if (!r.pass()) failed.push_back(std::to_string(id) + " (" + r.title + ")");
  }
  if (!gl.out.empty()) {
    std::ofstream os(gl.out);
    if (!os) throw std::invalid_argument("cannot write " + gl.out);
    os << io::dump(json{{"seed", opt.seed}, {"criteria", rows}}) << "\n";
  }
  for (const auto& f : failed) std::cerr << "failed criterion " << f << "\n";
  return failed.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoharmonic deformations: measures, Pell certificates, Schlesinger checks, billiards"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--tol", gl.tol, "override the gate bound of the subcommand")->check(CLI::PositiveNumber);
  app.add_option("--nodes", gl.nodes, "initial quadrature node count")->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "seed for randomized suites (recorded in outputs)");
  app.add_option("--out", gl.out, "JSON output path (default stdout)");
  app.add_option("--csv", gl.csv, "CSV output path");

  std::string e_path, cfg_path, path_file;
  std::optional<double> pole, top;
  int n = 0, bounces = 5;
  double h = 1e-4;
  std::vector<double> t_in{1.0, 0.0}, lambda;
  bool five = false;

  auto* measure = app.add_subcommand("measure", "equilibrium or harmonic measures; CSV interval,mass,cumulative");
  measure->add_option("--E", e_path, "interval system JSON {\"endpoints\": [...]}");
  measure->add_option("--config", cfg_path, "normalized configuration JSON");
  measure->add_option("--pole", pole, "pole y0 for harmonic measures of E");
  auto* deform = app.add_subcommand("deform", "isoharmonic path; CSV s,x..,u..,y0,f..,drift");
  deform->add_option("--path", path_file, "{\"start\": config, \"x_end\": [...], \"steps\": N, \"policy\": ..}")
      ->required();
  auto* schl = app.add_subcommand("schlesinger-verify", "constrained Schlesinger FD residuals and identities");
  schl->add_option("--config", cfg_path, "configuration JSON")->required();
  schl->add_option("--step", h, "finite-difference step")->check(CLI::PositiveNumber);
  schl->add_option("--t", t_in, "scale t as re im")->expected(2);
  auto* pell = app.add_subcommand("pell", "Chebyshev polynomial certificate for an n-regular E");
  pell->add_option("--E", e_path, "interval system JSON")->required();
  pell->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
  auto* comb = app.add_subcommand("comb", "comb region of E; CSV re,im of the boundary");
  comb->add_option("--E", e_path, "interval system JSON")->required();
  comb->add_option("--top", top, "height at which the boundary is closed");
  auto* bill = app.add_subcommand("billiard", "trajectory CSV bounce,x..,v..; winding and periodicity report");
  bill->add_option("--config", cfg_path, "billiard JSON {\"b\": [...], \"alpha\": [...]}");
  bill->add_flag("--five-periodic", five, "use the five-periodic example support");
  bill->add_option("--bounces", bounces, "number of reflections")->check(CLI::PositiveNumber);
  bill->add_option("--lambda", lambda, "starting Jacobi coordinates lambda_2..lambda_d");
  auto* self = app.add_subcommand("selftest", "acceptance suite; exit 0 iff every criterion passes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*measure) return cmd_measure(gl, e_path, cfg_path, pole);
    if (*deform) return cmd_deform(gl, path_file);
    if (*schl) return cmd_schlesinger(gl, cfg_path, h, t_in);
    if (*pell) return cmd_pell(gl, e_path, n);
    if (*comb) return cmd_comb(gl, e_path, top);
    if (*bill) return cmd_billiard(gl, cfg_path, five, bounces, lambda);
    if (*self) return cmd_selftest(gl);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::argument ? 2 : 1;
  }
  return 2;
}
