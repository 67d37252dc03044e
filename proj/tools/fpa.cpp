// fpa: exact shuffle/Hopf algebra, cascade and feedback products, and
// numerical evaluation for truncated Chen-Fliess series.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpa/compose.hpp"
#include "fpa/convergence.hpp"
#include "fpa/errors.hpp"
#include "fpa/feedback.hpp"
#include "fpa/hopf.hpp"
#include "fpa/io.hpp"
#include "fpa/shuffle.hpp"
#include "fpa/simulate.hpp"
#include "fpa/state_space.hpp"

namespace {

using nlohmann::json;

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  int maxdeg = -1;
  std::string result_path;
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void emit(bool as_json) const {
    if (as_json) {
      json j;
      j["command"] = command;
      j["inputs"] = inputs;
      j["maxdeg"] = maxdeg;
      j["result_path"] = result_path;
      j["checks"] = json::array();
      for (const auto& c : checks)
        j["checks"].push_back(
            {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      std::cout << j.dump(2) << "\n";
      return;
    }
    for (const auto& c : checks)
      std::cout << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name
                << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
};

void write_result(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  fpa::save_series_file(path, content);
}

fpa::CommSeries sine_series(int degree) {
  fpa::CommSeries d(1, 1, degree);
  fpa::Rat sign(1);
  for (int k = 1; k <= degree; k += 2) {
    d.set_coeff(fpa::CommMonomial::variable(1, 0, k), 0,
                sign / fpa::factorial(static_cast<unsigned long>(k)));
    sign = -sign;
  }
  return d;
}

std::function<double(double)> parse_signal_spec(const std::string& spec) {
  auto fail = [&]() -> std::function<double(double)> {
    throw fpa::ParseError("bad signal spec '" + spec +
                              "' (const:<v> | step:<t> | sin:<amp>:<omega> | "
                              "poly:<a0>,<a1>,...)",
                          0, 0);
  };
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "const") {
      const double v = std::stod(args);
      return [v](double) { return v; };
    }
    if (kind == "step") {
      const double t0 = std::stod(args);
      return [t0](double t) { return t >= t0 ? 1.0 : 0.0; };
    }
    if (kind == "sin") {
      const auto c = args.find(':');
      const double amp = std::stod(args.substr(0, c));
      const double omega = c == std::string::npos ? 1.0 : std::stod(args.substr(c + 1));
      return [amp, omega](double t) { return amp * std::sin(omega * t); };
    }
    if (kind == "poly") {
      std::vector<double> coeffs;
      std::istringstream is(args);
      std::string tok;
      while (std::getline(is, tok, ',')) coeffs.push_back(std::stod(tok));
      return [coeffs](double t) {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
          acc = acc * t + *it;
        return acc;
      };
    }
  } catch (const std::exception&) {
    return fail();
  }
  return fail();
}

fpa::SignalGrid load_signal_csv(const std::string& path, int channels) {
  std::ifstream in(path);
  if (!in) throw fpa::ParseError("cannot open '" + path + "'", 0, 0);
  std::vector<double> times;
  std::vector<std::vector<double>> values(static_cast<std::size_t>(channels));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.find_first_not_of("0123456789.,+-eE \t") !=
                            std::string::npos)
      continue;  // header row
    std::istringstream row(line);
    std::string cell;
    std::vector<double> fields;
    while (std::getline(row, cell, ',')) {
      try {
        fields.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw fpa::ParseError("bad number '" + cell + "'", line_no, 1);
      }
    }
    if (static_cast<int>(fields.size()) != channels + 1)
      throw fpa::ParseError("expected t plus " + std::to_string(channels) +
                                " channel values",
                            line_no, 1);
    times.push_back(fields[0]);
    for (int i = 0; i < channels; ++i)
      values[static_cast<std::size_t>(i)].push_back(
          fields[static_cast<std::size_t>(i) + 1]);
  }
  if (times.size() < 2)
    throw fpa::ParseError("need at least two samples", line_no, 1);
  const double dt = times[1] - times[0];
  for (std::size_t k = 1; k < times.size(); ++k)
    if (std::fabs(times[k] - times[k - 1] - dt) > 1e-9 * std::max(1.0, dt))
      throw fpa::ParseError("samples must be uniformly spaced",
                            static_cast<int>(k + 1), 1);
  fpa::SignalGrid grid;
  grid.t0 = times.front();
  grid.dt = dt;
  grid.channels = std::move(values);
  return grid;
}

// max |F_e[v] - (t + double integral of v)| on the grid
double double_integrator_error(const fpa::NCSeries& e,
                               const std::function<double(double)>& v,
                               double T, double dt) {
  auto grid = fpa::SignalGrid::sampled(0.0, T, dt, {v});
  auto y = fpa::fliess_eval(e, grid);
  // reference by high-order-enough trapezoid on the same grid
  const int samples = grid.samples();
  std::vector<double> inner(static_cast<std::size_t>(samples), 0.0);
  std::vector<double> ref(static_cast<std::size_t>(samples), 0.0);
  for (int k = 1; k < samples; ++k) {
    inner[k] = inner[k - 1] +
               0.5 * dt * (grid.channels[0][k - 1] + grid.channels[0][k]);
    ref[k] = ref[k - 1] + 0.5 * dt * (inner[k - 1] + inner[k]) + dt;
  }
  double err = 0.0;
  for (int k = 0; k < samples; ++k)
    err = std::max(err, std::fabs(y[0][k] - ref[k]));
  return err;
}

int run(int argc, char** argv) {
  CLI::App app{"formal power series algebra for Chen-Fliess systems"};
  app.require_subcommand(1);

  struct {
    std::string a, b, out;
    int N = 4;
    bool as_json = false;
    bool mode_static = false, mode_dynamic = false;
    double R = 1.0, eps = 0.5, gevrey = 1.0, T = 0.3, dt = 1e-3;
    std::vector<std::string> input_specs;
    std::string input_csv;
    std::string feedback_path;
    std::string seminorm_a, seminorm_b;
  } opt;

  auto add_common = [&](CLI::App* cmd, bool with_output) {
    cmd->add_option("-N,--maxdeg", opt.N, "truncation degree");
    if (with_output) cmd->add_option("-o,--output", opt.out, "output path");
    cmd->add_flag("--json", opt.as_json, "machine-readable report");
  };

  auto* shuffle_cmd = app.add_subcommand("shuffle", "shuffle product a (sh) b");
  shuffle_cmd->add_option("a", opt.a)->required();
  shuffle_cmd->add_option("b", opt.b)->required();
  add_common(shuffle_cmd, true);

  auto* shinv_cmd =
      app.add_subcommand("shuffle-inv", "shuffle-group inverse");
  shinv_cmd->add_option("a", opt.a)->required();
  add_common(shinv_cmd, true);

  auto* compose_cmd = app.add_subcommand("compose", "cascade product c o d");
  compose_cmd->add_option("c", opt.a)->required();
  compose_cmd->add_option("d", opt.b)->required();
  add_common(compose_cmd, true);

  auto* mixcomp_cmd =
      app.add_subcommand("mixcomp", "mixed composition c o~ (delta + d)");
  mixcomp_cmd->add_option("c", opt.a)->required();
  mixcomp_cmd->add_option("d", opt.b)->required();
  add_common(mixcomp_cmd, true);

  auto* wfcomp_cmd =
      app.add_subcommand("wfcomp", "Wiener-Fliess composition d o` c");
  wfcomp_cmd->add_option("d", opt.a)->required();
  wfcomp_cmd->add_option("c", opt.b)->required();
  add_common(wfcomp_cmd, true);

  auto* feedback_cmd = app.add_subcommand("feedback", "feedback products");
  feedback_cmd->add_option("plant", opt.a)->required();
  feedback_cmd->add_option("fb", opt.b)->required();
  feedback_cmd->add_flag("--static", opt.mode_static,
                         "additive static output feedback (fb: .cfps)");
  feedback_cmd->add_flag("--dynamic", opt.mode_dynamic,
                         "dynamic output feedback (fb: .ncfps)");
  add_common(feedback_cmd, true);

  auto* fixed_cmd = app.add_subcommand(
      "fixed-point", "static feedback by fixed-point iteration");
  fixed_cmd->add_option("plant", opt.a)->required();
  fixed_cmd->add_option("fb", opt.b)->required();
  add_common(fixed_cmd, true);

  auto* reldeg_cmd = app.add_subcommand("reldeg", "SISO relative degree");
  reldeg_cmd->add_option("a", opt.a)->required();
  reldeg_cmd->add_option("-N,--maxdeg", opt.N,
                         "analysis degree (default: series degree)");
  reldeg_cmd->add_flag("--json", opt.as_json);

  auto* norm_cmd = app.add_subcommand("norm", "truncated seminorm");
  norm_cmd->add_option("a", opt.a)->required();
  norm_cmd->add_option("-R,--radius", opt.R, "seminorm radius")->required();
  norm_cmd->add_option("-N,--maxdeg", opt.N);
  norm_cmd->add_flag("--json", opt.as_json);

  auto* fit_cmd = app.add_subcommand("fit-growth", "fit (K, M) growth bound");
  fit_cmd->add_option("a", opt.a)->required();
  fit_cmd->add_option("--gevrey", opt.gevrey, "class exponent s")->required();
  fit_cmd->add_option("-N,--maxdeg", opt.N);
  fit_cmd->add_flag("--json", opt.as_json);

  auto* bounds_cmd =
      app.add_subcommand("check-bounds", "numeric bound validators");
  bounds_cmd->add_option("--seminorm-pair", opt.seminorm_a,
                         "first series for the shuffle seminorm bound");
  bounds_cmd->add_option("--seminorm-with", opt.seminorm_b,
                         "second series for the shuffle seminorm bound");
  bounds_cmd->add_option("-R,--radius", opt.R);
  bounds_cmd->add_option("--eps", opt.eps);
  bounds_cmd->add_option("-N,--maxdeg", opt.N);
  bounds_cmd->add_flag("--json", opt.as_json);

  auto* sim_cmd = app.add_subcommand("simulate", "evaluate F_c numerically");
  sim_cmd->add_option("c", opt.a)->required();
  sim_cmd->add_option("--input", opt.input_specs,
                      "per-channel signal spec (const:v, step:t, "
                      "sin:amp:omega, poly:a0,a1,...)");
  sim_cmd->add_option("--input-csv", opt.input_csv,
                      "uniformly sampled input: rows t,u1,...,um");
  sim_cmd->add_option("--feedback", opt.feedback_path,
                      "close the loop with this static map (.cfps)");
  sim_cmd->add_option("-T,--horizon", opt.T);
  sim_cmd->add_option("--dt", opt.dt);
  sim_cmd->add_option("-o,--output", opt.out, "CSV output path");
  sim_cmd->add_flag("--json", opt.as_json);

  auto* pend_cmd = app.add_subcommand("pendulum-demo",
                                      "reproduce the forced-pendulum study");
  add_common(pend_cmd, true);
  opt.N = 4;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 1;
  }

  Report report;
  report.maxdeg = opt.N;

  auto finish = [&](int code) {
    report.emit(opt.as_json);
    return code;
  };

  if (shuffle_cmd->parsed() || compose_cmd->parsed() ||
      mixcomp_cmd->parsed()) {
    report.inputs = {opt.a, opt.b};
    fpa::NCSeries a = fpa::load_nc_file(opt.a);
    fpa::NCSeries b = fpa::load_nc_file(opt.b);
    fpa::NCSeries result = shuffle_cmd->parsed()
                               ? fpa::shuffle(a, b, opt.N)
                               : compose_cmd->parsed()
                                     ? fpa::compose(a, b, opt.N)
                                     : fpa::mixed_compose(
                                           a, fpa::delta_plus(b), opt.N);
    report.command = shuffle_cmd->parsed()
                         ? "shuffle"
                         : compose_cmd->parsed() ? "compose" : "mixcomp";
    report.result_path = opt.out;
    write_result(opt.out, fpa::serialize_nc(result));
    if (opt.as_json) report.emit(true);
    return 0;
  }

  if (shinv_cmd->parsed()) {
    report.command = "shuffle-inv";
    report.inputs = {opt.a};
    fpa::NCSeries a = fpa::load_nc_file(opt.a);
    fpa::NCSeries result = fpa::shuffle_inverse(a, opt.N);
    report.result_path = opt.out;
    write_result(opt.out, fpa::serialize_nc(result));
    if (opt.as_json) report.emit(true);
    return 0;
  }

  if (wfcomp_cmd->parsed()) {
    report.command = "wfcomp";
    report.inputs = {opt.a, opt.b};
    fpa::CommSeries d = fpa::load_comm_file(opt.a);
    fpa::NCSeries c = fpa::load_nc_file(opt.b);
    fpa::NCSeries result = fpa::wf_compose(d, c, opt.N);
    report.result_path = opt.out;
    write_result(opt.out, fpa::serialize_nc(result));
    if (opt.as_json) report.emit(true);
    return 0;
  }

  if (feedback_cmd->parsed()) {
    report.command = "feedback";
    report.inputs = {opt.a, opt.b};
    if (opt.mode_static == opt.mode_dynamic)
      throw CLI::ValidationError("feedback",
                                 "choose exactly one of --static/--dynamic");
    fpa::NCSeries plant = fpa::load_nc_file(opt.a);
    fpa::NCSeries result =
        opt.mode_static
            ? fpa::static_feedback(
                  {plant, fpa::load_comm_file(opt.b), opt.N})
            : fpa::dynamic_feedback(plant, fpa::load_nc_file(opt.b), opt.N);
    report.result_path = opt.out;
    write_result(opt.out, fpa::serialize_nc(result));
    if (opt.as_json) report.emit(true);
    return 0;
  }

  if (fixed_cmd->parsed()) {
    report.command = "fixed-point";
    report.inputs = {opt.a, opt.b};
    fpa::NCSeries plant = fpa::load_nc_file(opt.a);
    fpa::CommSeries d = fpa::load_comm_file(opt.b);
    auto trace = fpa::static_feedback_fixed_point({plant, d, opt.N});
    report.result_path = opt.out;
    report.checks.push_back(
        {"stabilized within N+1 iterations", trace.iterations <= opt.N + 1,
         std::to_string(trace.iterations) + " iterations"});
    write_result(opt.out, fpa::serialize_nc(trace.result));
    return finish(report.all_pass() ? 0 : 1);
  }

  if (reldeg_cmd->parsed()) {
    report.command = "reldeg";
    report.inputs = {opt.a};
    fpa::NCSeries a = fpa::load_nc_file(opt.a);
    const int N = reldeg_cmd->count("-N") ? opt.N : a.maxdeg();
    report.maxdeg = N;
    auto rd = fpa::relative_degree(a, N);
    std::ostringstream detail;
    if (rd.defined)
      detail << "r = " << rd.r << ", K = " << fpa::rat_str(rd.K)
             << (rd.truncation_limited ? " (truncation-limited)" : "");
    else
      detail << "undefined up to degree " << N;
    report.checks.push_back({"relative degree", rd.defined, detail.str()});
    return finish(0);
  }

  if (norm_cmd->parsed()) {
    report.command = "norm";
    report.inputs = {opt.a};
    fpa::NCSeries a = fpa::load_nc_file(opt.a);
    const int N = norm_cmd->count("-N") ? opt.N : a.maxdeg();
    report.maxdeg = N;
    const double value = fpa::seminorm(a, opt.R, N);
    std::ostringstream detail;
    detail << "||c||_{R=" << opt.R << "} (words <= " << N << ") = " << value;
    report.checks.push_back({"seminorm", true, detail.str()});
    return finish(0);
  }

  if (fit_cmd->parsed()) {
    report.command = "fit-growth";
    report.inputs = {opt.a};
    fpa::NCSeries a = fpa::load_nc_file(opt.a);
    const int N = fit_cmd->count("-N") ? opt.N : a.maxdeg();
    report.maxdeg = N;
    auto fit = fpa::fit_growth(a, N, opt.gevrey);
    std::ostringstream detail;
    if (fit)
      detail << "K = " << fit->K << ", M = " << fit->M << ", s = "
             << fit->gevrey;
    else
      detail << "no bounded fit on the grid at s = " << opt.gevrey;
    report.checks.push_back({"growth fit", fit.has_value(), detail.str()});
    return finish(0);
  }

  if (bounds_cmd->parsed()) {
    report.command = "check-bounds";
    bool gamma_ok = true;
    for (double r = 0.1; r <= 1.0001; r += 0.1)
      for (double x = 0.0; x <= 50.0; x += 1.0)
        gamma_ok = gamma_ok && fpa::gamma_inequality_check(x, r);
    report.checks.push_back({"gamma inequality grid", gamma_ok,
                             "x in [0,50], r in {0.1,...,1.0}"});

    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    bool neo_ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      const double r = 0.05 + 0.95 * unif(rng);
      const int m = 1 + static_cast<int>(unif(rng) * 4);
      const int n = static_cast<int>(unif(rng) * 13);
      std::vector<double> x(static_cast<std::size_t>(m));
      for (auto& v : x) v = 4.0 * unif(rng);
      neo_ok = neo_ok && fpa::neoclassical_check(r, m, n, x);
    }
    report.checks.push_back(
        {"neoclassical inequality sweep", neo_ok, "200 random instances"});

    bool amp_ok = true;
    double prev = 0.0;
    for (double K = 0.125; K <= 64.0; K *= 2.0) {
      const double a = fpa::antipode_amplification(K, 1);
      amp_ok = amp_ok && std::isfinite(a) && a > 0 && a > prev;
      prev = a;
    }
    report.checks.push_back({"antipode amplification monotone/finite", amp_ok,
                             "K_c in {1/8,...,64}"});

    if (!opt.seminorm_a.empty() && !opt.seminorm_b.empty()) {
      report.inputs = {opt.seminorm_a, opt.seminorm_b};
      fpa::NCSeries a = fpa::load_nc_file(opt.seminorm_a);
      fpa::NCSeries b = fpa::load_nc_file(opt.seminorm_b);
      const bool ok =
          fpa::check_shuffle_seminorm_bound({a, b}, opt.R, opt.eps, opt.N);
      report.checks.push_back({"shuffle seminorm bound", ok, ""});
    }
    return finish(report.all_pass() ? 0 : 1);
  }

  if (sim_cmd->parsed()) {
    report.command = "simulate";
    report.inputs = {opt.a};
    fpa::NCSeries c = fpa::load_nc_file(opt.a);
    fpa::SignalGrid grid;
    if (!opt.input_csv.empty()) {
      report.inputs.push_back(opt.input_csv);
      grid = load_signal_csv(opt.input_csv, c.m());
    } else {
      if (static_cast<int>(opt.input_specs.size()) != c.m())
        throw fpa::ShapeError("need one --input per input channel (m = " +
                              std::to_string(c.m()) + ")");
      std::vector<std::function<double(double)>> signals;
      for (const auto& spec : opt.input_specs)
        signals.push_back(parse_signal_spec(spec));
      grid = fpa::SignalGrid::sampled(0.0, opt.T, opt.dt, signals);
    }

    std::vector<std::vector<double>> y;
    if (opt.feedback_path.empty()) {
      y = fpa::fliess_eval(c, grid);
    } else {
      report.inputs.push_back(opt.feedback_path);
      auto closed =
          fpa::closed_loop_sim(c, fpa::load_comm_file(opt.feedback_path), grid);
      y = closed.channels;
    }

    std::ostringstream csv;
    csv << "t";
    for (std::size_t i = 0; i < y.size(); ++i) csv << ",y" << i + 1;
    csv << "\n";
    for (int k = 0; k < grid.samples(); ++k) {
      csv << grid.time(k);
      for (const auto& channel : y)
        csv << "," << channel[static_cast<std::size_t>(k)];
      csv << "\n";
    }
    write_result(opt.out, csv.str());
    report.result_path = opt.out;
    if (opt.as_json) report.emit(true);
    return 0;
  }

  if (pend_cmd->parsed()) {
    report.command = "pendulum-demo";
    const int N = opt.N;
    report.maxdeg = N;

    auto model = fpa::pendulum_model();
    fpa::NCSeries c = fpa::series_from_statespace(model, std::max(N, 6));

    // open-loop coefficients through degree 6
    const std::vector<std::pair<fpa::Word, long>> listed = {
        {{0}, 1},          {{0, 1}, 1},          {{0, 0, 0}, -1},
        {{0, 0, 0, 1}, -1}, {{0, 0, 0, 0, 0}, 2}, {{0, 0, 0, 0, 0, 1}, 4},
        {{0, 0, 0, 0, 1, 0}, 2}, {{0, 0, 0, 1, 0, 0}, 1}};
    bool golden_ok = true;
    for (const auto& [w, value] : listed)
      golden_ok = golden_ok && c.coeff(w) == value;
    report.checks.push_back(
        {"open-loop series matches the degree-6 table", golden_ok, ""});

    auto d = sine_series(7);
    fpa::FeedbackProblem problem{c.truncated(N), d, N};
    fpa::NCSeries closed = fpa::static_feedback(problem);
    auto fixed = fpa::static_feedback_fixed_point(problem);

    fpa::NCSeries expected = fpa::zero_series(fpa::Alphabet(1), 1, N);
    expected.set_coeff(fpa::Word{0}, 0, fpa::Rat(1));
    expected.set_coeff(fpa::Word{0, 1}, 0, fpa::Rat(1));
    report.checks.push_back({"closed loop equals the double integrator",
                             closed == expected, "c@^d = " + fpa::pretty(closed)});
    report.checks.push_back(
        {"fixed-point route agrees", fixed.result == closed,
         std::to_string(fixed.iterations) + " iterations"});

    auto rd = fpa::relative_degree(closed, N);
    report.checks.push_back({"closed-loop relative degree is 2",
                             rd.defined && rd.r == 2, ""});

    const double T = 0.3, dt = 1e-3;
    struct NamedInput {
      const char* name;
      std::function<double(double)> v;
    };
    const NamedInput inputs[] = {
        {"v=0", [](double) { return 0.0; }},
        {"v=1", [](double) { return 1.0; }},
        {"v=sin", [](double t) { return std::sin(t); }}};
    std::cout << "simulation error versus y = t + iint v (T = " << T
              << ", dt = " << dt << ")\n";
    for (const auto& input : inputs) {
      const double series_err = double_integrator_error(closed, input.v, T, dt);
      auto grid = fpa::SignalGrid::sampled(0.0, T, dt, {input.v});
      auto rk4 = fpa::closed_loop_sim(model, d, grid);
      auto series = fpa::fliess_eval(closed, grid);
      double cross = 0.0;
      for (int k = 0; k < grid.samples(); ++k)
        cross = std::max(cross, std::fabs(series[0][k] - rk4.channels[0][k]));
      std::ostringstream detail;
      detail << "max |F_e[v] - ref| = " << series_err
             << ", |F_e[v] - RK4 closed loop| = " << cross;
      report.checks.push_back(
          {std::string("simulation ") + input.name,
           series_err <= 1e-4 && cross <= 1e-4, detail.str()});
      std::cout << "  " << input.name << ": " << detail.str() << "\n";
    }

    if (!opt.out.empty()) {
      write_result(opt.out, fpa::serialize_nc(closed));
      report.result_path = opt.out;
    }
    return finish(report.all_pass() ? 0 : 1);
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fpa::AdmissibilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fpa::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
