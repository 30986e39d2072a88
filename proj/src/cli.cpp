#include "eulerwalk/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eulerwalk/defect.hpp"
#include "eulerwalk/experiments.hpp"
#include "eulerwalk/green.hpp"
#include "eulerwalk/reversal.hpp"
#include "eulerwalk/sampler.hpp"
#include "eulerwalk/snapshot.hpp"
#include "eulerwalk/tour.hpp"

namespace eulerwalk::cli {

using nlohmann::json;

namespace {

constexpr std::pair<Command, std::string_view> kCommandNames[] = {
    {Command::Sample, "sample"},          {Command::Tour, "tour"},
    {Command::Correlations, "correlations"}, {Command::DeltaDist, "delta-dist"},
    {Command::Msd, "msd"},                {Command::PlanarCheck, "planar-check"},
    {Command::Conjecture, "conjecture"},  {Command::Green, "green"},
    {Command::Predict, "predict"},        {Command::Compare, "compare"},
};

// Reference diffusion constants for the msd slope check.
constexpr double kClockwiseDiffusion = 0.83;
constexpr double kCrossDiffusion = 1.32;
constexpr double kMsdSmokeTolerance = 0.1;
constexpr double kExpectedTourDelta = 4.0;
constexpr double kShapeTolerance = 0.1;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Artifacts {
  json summary;
  std::string csv;
};

json base_summary(const RunConfig& config) {
  return {{"tool", "eulerwalk"},
          {"command", command_name(config.command)},
          {"config", to_json(config)},
          {"seed", config.seed},
          {"n_samples", config.samples},
          {"checks", json::object()}};
}

const LatticeSpec& require_lattice(const RunConfig& config) {
  if (!config.lattice) throw InputError(std::string(command_name(config.command)) + " needs --torus or --grid");
  return *config.lattice;
}

Lattice require_torus(const RunConfig& config) {
  const auto& spec = require_lattice(config);
  if (spec.topology != Lattice::Topology::Torus) {
    throw InputError(std::string(command_name(config.command)) + " runs on a torus (--torus MxN)");
  }
  return spec.build();
}

json moments_json(const Moments& m) {
  return {{"count", m.count},       {"mean", m.mean},         {"mean_se", m.mean_standard_error},
          {"m2", m.m2},             {"m3", m.m3},             {"m4", m.m4},
          {"skewness", m.skewness}, {"excess_kurtosis", m.excess_kurtosis},
          {"min", m.min},           {"max", m.max}};
}

std::string histogram_csv(const Histogram& h) {
  std::string csv = "delta,count\n";
  for (const auto& [value, count] : h) csv += std::to_string(value) + "," + std::to_string(count) + "\n";
  return csv;
}

json histogram_json(const Histogram& h) {
  json out = json::array();
  for (const auto& [value, count] : h) out.push_back({value, count});
  return out;
}

SampleConfig sample_config(const RunConfig& config) {
  return {config.seed, config.samples, config.threads};
}

Artifacts run_sample(const RunConfig& config) {
  const Lattice lattice = require_lattice(config).build();
  SeededRng rng(config.seed, config.stream);
  const VertexId chip = config.chip.value_or(0);
  if (!lattice.valid(chip)) throw InputError("chip " + std::to_string(chip) + " is not a vertex");
  const RotorState state = sample_unicycle(lattice, chip, rng);
  const CycleInfo cycle = find_cycle(state, lattice);

  Artifacts a{base_summary(config), "vertex,x,y,arrow\n"};
  a.summary["results"] = {
      {"state", to_json(lattice, state)},
      {"cycle",
       {{"length", cycle.length},
        {"kind", to_string(cycle.kind)},
        {"winding", {cycle.winding.x, cycle.winding.y}},
        {"orientation", to_string(cycle.orientation)},
        {"area", cycle.enclosed_area()}}}};
  a.summary["checks"]["is_unicycle"] = is_unicycle(state, lattice);
  for (VertexId v = 0; v < lattice.vertex_count(); ++v) {
    a.csv += std::to_string(v) + "," + std::to_string(lattice.x_of(v)) + "," + std::to_string(lattice.y_of(v)) +
             "," + to_char(state.arrows[static_cast<std::size_t>(v)]) + "\n";
  }
  return a;
}

Artifacts run_tour(const RunConfig& config) {
  const RoutingOrder order = RoutingOrder::parse(config.order);
  std::optional<Snapshot> snap;
  if (!config.state_path.empty()) {
    std::ifstream in(config.state_path);
    if (!in) throw InputError("cannot read state file " + config.state_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InputError("state file is not JSON: " + std::string(e.what()));
    }
    // Accept either a bare snapshot or a `sample` summary.
    if (j.contains("results") && j["results"].contains("state")) j = j["results"]["state"];
    snap = snapshot_from_json(j);
  } else {
    const Lattice lattice = require_lattice(config).build();
    SeededRng rng(config.seed, config.stream);
    const VertexId chip = config.chip.value_or(0);
    if (!lattice.valid(chip)) throw InputError("chip " + std::to_string(chip) + " is not a vertex");
    RotorState state = sample_unicycle(lattice, chip, rng);
    snap = Snapshot{lattice, std::move(state)};
  }
  const Lattice& lattice = snap->lattice;

  TourOptions options;
  options.record_msd = true;
  options.track_rotors = true;
  options.track_edges = true;
  const TourLog log = run_euler_tour(snap->state, lattice, order, options);
  const PairFrequencies f = accumulate_pair_correlations(log);

  Artifacts a{base_summary(config), "t,kind,delta,r2\n"};
  a.summary["results"] = {
      {"start", to_json(lattice, snap->state)},
      {"steps", log.steps},
      {"dimers", log.dimers},
      {"contours", log.contours},
      {"delta", log.delta()},
      {"pairs", {{"dd", log.pairs.dd}, {"dc", log.pairs.dc}, {"cd", log.pairs.cd}, {"cc", log.pairs.cc}}},
      {"frequencies", {{"pdd", f.dd}, {"pdc", f.dc}, {"pcd", f.cd}, {"pcc", f.cc}}}};
  auto& checks = a.summary["checks"];
  // run_euler_tour throws on any of these; reaching here means they hold.
  checks["returns_to_start"] = true;
  checks["rotors_full_turn"] = true;
  checks["edges_traversed_once"] = true;
  checks["kinds_partition_steps"] = log.dimers + log.contours == log.steps;
  for (std::int64_t t = 0; t < log.steps; ++t) {
    const auto i = static_cast<std::size_t>(t);
    a.csv += std::to_string(t) + "," + std::string(to_string(log.kinds[i])) + "," +
             std::to_string(log.delta_trajectory[i + 1]) + "," + std::to_string(log.msd[i]) + "\n";
  }
  return a;
}

json observable(double value, double se) { return {{"value", value}, {"se", se}}; }

Artifacts run_correlations(const RunConfig& config) {
  const Lattice lattice = require_torus(config);
  const RoutingOrder order = RoutingOrder::parse(config.order);
  const CorrelationEstimate e = estimate_correlations(lattice, order, sample_config(config));
  const CorrelationPrediction p = predict_correlations(order);
  const double pd = predict_dimer_probability(lattice.width(), lattice.height());

  Artifacts a{base_summary(config), "observable,empirical,se,predicted\n"};
  json observables = {{"pd", observable(e.dimer_fraction, e.dimer_fraction_se)},
                      {"pdd", observable(e.frequencies.dd, e.standard_errors.dd)},
                      {"pdc", observable(e.frequencies.dc, e.standard_errors.dc)},
                      {"pcd", observable(e.frequencies.cd, e.standard_errors.cd)},
                      {"pcc", observable(e.frequencies.cc, e.standard_errors.cc)}};
  json predicted = {{"pd", pd}, {"pdd", p.dd}, {"pdc", p.dc}, {"pcd", p.cd}, {"pcc", p.cc}, {"source", "analytic"}};
  a.summary["observables"] = observables;
  a.summary["results"] = {{"tours", e.tours},
                          {"states", e.states},
                          {"pair_events", e.pairs.total()},
                          {"pairs", {{"dd", e.pairs.dd}, {"dc", e.pairs.dc}, {"cd", e.pairs.cd}, {"cc", e.pairs.cc}}},
                          {"predicted", predicted}};
  for (const Comparison& c : compare(a.summary, predicted)) {
    a.summary["checks"][c.observable + "_within_4se"] = c.passed;
    a.csv += c.observable + "," + format_double(c.empirical) + "," + format_double(c.standard_error) + "," +
             format_double(c.predicted) + "\n";
  }
  return a;
}

Artifacts run_delta_dist(const RunConfig& config) {
  const Lattice lattice = require_torus(config);
  const RoutingOrder order = RoutingOrder::parse(config.order);
  const DeltaDistribution d = delta_distribution(lattice, order, sample_config(config));

  Artifacts a{base_summary(config), histogram_csv(d.histogram)};
  a.summary["moments"] = moments_json(d.moments);
  a.summary["results"] = {{"histogram", histogram_json(d.histogram)}, {"expected_mean", kExpectedTourDelta}};
  auto& checks = a.summary["checks"];
  checks["mean_within_3se_of_4"] =
      std::abs(d.moments.mean - kExpectedTourDelta) <= 3.0 * d.moments.mean_standard_error;
  if (order.kind() == RoutingOrder::Kind::Clockwise) {
    checks["min_delta_nonnegative"] = d.moments.min >= 0;
  } else {
    checks["skewness_small"] = std::abs(d.moments.skewness) <= kShapeTolerance;
    checks["excess_kurtosis_small"] = std::abs(d.moments.excess_kurtosis) <= kShapeTolerance;
  }
  return a;
}

Artifacts run_msd(const RunConfig& config) {
  const Lattice lattice = require_torus(config);
  const RoutingOrder order = RoutingOrder::parse(config.order);
  FitWindow window = default_msd_window(lattice);
  if (config.window_first) window.first = *config.window_first;
  if (config.window_last) window.last = *config.window_last;
  const std::int64_t t_max = config.t_max.value_or(window.last);
  if (window.last > t_max) throw InputError("fit window ends after --t-max");
  const MsdCurve curve = estimate_msd(lattice, order, sample_config(config), t_max, window);

  const double reference = order.kind() == RoutingOrder::Kind::Clockwise ? kClockwiseDiffusion : kCrossDiffusion;
  Artifacts a{base_summary(config), "t,mean_r2\n"};
  for (std::size_t t = 0; t < curve.mean_r2.size(); ++t) {
    a.csv += std::to_string(t) + "," + format_double(curve.mean_r2[t]) + "\n";
  }
  a.summary["slopes"] = {{"slope", curve.fit.slope},
                         {"intercept", curve.fit.intercept},
                         {"window", {window.first, window.last}},
                         {"reference", reference}};
  a.summary["results"] = {{"t_max", t_max}, {"samples", curve.samples}};
  a.summary["checks"]["slope_near_reference"] = std::abs(curve.fit.slope - reference) <= kMsdSmokeTolerance;
  return a;
}

Artifacts run_planar_check(const RunConfig& config) {
  const auto& spec = require_lattice(config);
  if (spec.topology != Lattice::Topology::PlanarGrid) throw InputError("planar-check runs on --grid WxH");
  const Lattice lattice = spec.build();
  const PlanarCheckReport r = planar_check(lattice, sample_config(config));

  Artifacts a{base_summary(config), histogram_csv(r.delta_histogram)};
  a.summary["results"] = {{"samples", r.samples},
                          {"rejected_draws", r.rejected_draws},
                          {"delta_violations", r.delta_violations},
                          {"external_violations", r.external_violations},
                          {"internal_violations", r.internal_violations},
                          {"reversal_failures", r.reversal_failures},
                          {"stage_samples", r.stage_samples},
                          {"stage_violations", r.stage_violations},
                          {"max_steps", r.max_steps},
                          {"max_area", r.max_area},
                          {"histogram", histogram_json(r.delta_histogram)}};
  auto& checks = a.summary["checks"];
  checks["delta_is_minus_one"] = r.delta_violations == 0;
  checks["external_rotors_untouched"] = r.external_violations == 0;
  checks["internal_rotors_full_turn"] = r.internal_violations == 0;
  checks["cycle_reversed"] = r.reversal_failures == 0;
  checks["stage_areas_sum"] = r.stage_violations == 0;
  return a;
}

Artifacts run_conjecture(const RunConfig& config) {
  const Lattice lattice = require_torus(config);
  const ConjectureReport r = conjecture_check(lattice, sample_config(config));

  Artifacts a{base_summary(config), histogram_csv(r.return_delta)};
  a.summary["results"] = {{"samples", r.samples},
                          {"rejected_draws", r.rejected_draws},
                          {"min_return_delta", r.min_return_delta()},
                          {"conjecture_holds", r.min_return_delta() >= 2},
                          {"return_delta_histogram", histogram_json(r.return_delta)},
                          {"tour_delta_histogram", histogram_json(r.tour_delta)},
                          {"additivity_failures", r.additivity_failures},
                          {"first_segment_failures", r.first_segment_failures}};
  a.summary["checks"]["segments_additive"] = r.additivity_failures == 0;
  a.summary["checks"]["first_segment_minus_one"] = r.first_segment_failures == 0;
  return a;
}

Artifacts run_green(const RunConfig& config) {
  const double g = green(config.p, config.q, config.tolerance);
  const auto exact = green_exact(config.p, config.q);
  Artifacts a{base_summary(config), "p,q,g\n"};
  a.summary["results"] = {{"p", config.p}, {"q", config.q}, {"g", g}, {"tolerance", config.tolerance}};
  a.summary["results"]["exact"] = exact ? json(*exact) : json(nullptr);
  if (exact) a.summary["checks"]["matches_exact"] = std::abs(g - *exact) <= std::max(config.tolerance, 1e-12) * 10;
  a.csv += std::to_string(config.p) + "," + std::to_string(config.q) + "," + format_double(g) + "\n";
  return a;
}

Artifacts run_predict(const RunConfig& config) {
  const RoutingOrder order = RoutingOrder::parse(config.order);
  const CorrelationPrediction p = predict_correlations(order);
  Artifacts a{base_summary(config), "observable,predicted\n"};
  auto& s = a.summary;
  s["order"] = order.name();
  s["pdd"] = p.dd;
  s["pdc"] = p.dc;
  s["pcd"] = p.cd;
  s["pcc"] = p.cc;
  s["source"] = "analytic";
  if (config.lattice && config.lattice->topology == Lattice::Topology::Torus) {
    s["pd"] = predict_dimer_probability(config.lattice->width, config.lattice->height);
    a.csv += "pd," + format_double(s["pd"].get<double>()) + "\n";
  }
  for (const char* name : {"pdd", "pdc", "pcd", "pcc"}) a.csv += std::string(name) + "," + format_double(s[name].get<double>()) + "\n";
  s["checks"]["normalized"] = std::abs(p.dd + p.dc + p.cd + p.cc - 1.0) <= 1e-12;
  return a;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + " is not JSON: " + e.what());
  }
}

Artifacts run_compare(const RunConfig& config, bool& all_passed) {
  if (config.empirical_path.empty() || config.predicted_path.empty()) {
    throw InputError("compare needs --empirical and --predicted");
  }
  const auto comparisons = compare(read_json_file(config.empirical_path), read_json_file(config.predicted_path));
  Artifacts a{base_summary(config), "observable,empirical,se,predicted,z,passed\n"};
  json rows = json::array();
  all_passed = true;
  for (const Comparison& c : comparisons) {
    rows.push_back({{"observable", c.observable},
                    {"empirical", c.empirical},
                    {"se", c.standard_error},
                    {"predicted", c.predicted},
                    {"z", std::isfinite(c.z) ? json(c.z) : json(nullptr)},
                    {"passed", c.passed}});
    a.summary["checks"][c.observable + "_within_4se"] = c.passed;
    all_passed = all_passed && c.passed;
    a.csv += c.observable + "," + format_double(c.empirical) + "," + format_double(c.standard_error) + "," +
             format_double(c.predicted) + "," + format_double(c.z) + "," + (c.passed ? "true" : "false") + "\n";
  }
  a.summary["results"] = {{"comparisons", rows}, {"max_abs_z", kMaxAbsZ}, {"passed", all_passed}};
  return a;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [command, name] : kCommandNames) {
    if (command == c) return name;
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (const auto& [command, n] : kCommandNames) {
    if (n == name) return command;
  }
  throw InputError("unknown command '" + std::string(name) + "'");
}

Lattice LatticeSpec::build() const {
  return topology == Lattice::Topology::Torus ? Lattice::torus(width, height) : Lattice::planar_grid(width, height);
}

LatticeSpec parse_lattice(std::string_view text, Lattice::Topology topology) {
  const auto x = text.find('x');
  LatticeSpec spec{topology, 0, 0};
  try {
    if (x == std::string_view::npos) throw std::invalid_argument("missing x");
    std::size_t used = 0;
    const std::string w(text.substr(0, x)), h(text.substr(x + 1));
    spec.width = std::stoi(w, &used);
    if (used != w.size()) throw std::invalid_argument("trailing characters");
    spec.height = std::stoi(h, &used);
    if (used != h.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw InputError("lattice size must look like 100x100, got '" + std::string(text) + "'");
  }
  return spec;
}

json to_json(const RunConfig& c) {
  json j = {{"command", command_name(c.command)},
            {"order", c.order},
            {"seed", c.seed},
            {"n_samples", c.samples},
            {"stream", c.stream},
            {"format", c.format},
            {"output", c.output}};
  if (c.lattice) {
    j["lattice"] = {{"topology", c.lattice->topology == Lattice::Topology::Torus ? "torus" : "grid"},
                    {"width", c.lattice->width},
                    {"height", c.lattice->height}};
  } else {
    j["lattice"] = nullptr;
  }
  j["chip"] = c.chip ? json(*c.chip) : json(nullptr);
  switch (c.command) {
    case Command::Green:
      j["p"] = c.p;
      j["q"] = c.q;
      j["tolerance"] = c.tolerance;
      break;
    case Command::Msd:
      j["t_max"] = c.t_max ? json(*c.t_max) : json(nullptr);
      j["window"] = {c.window_first ? json(*c.window_first) : json(nullptr),
                     c.window_last ? json(*c.window_last) : json(nullptr)};
      break;
    case Command::Tour:
      j["state"] = c.state_path;
      break;
    case Command::Compare:
      j["empirical"] = c.empirical_path;
      j["predicted"] = c.predicted_path;
      break;
    default:
      break;
  }
  return j;
}

void validate(const RunConfig& c) {
  if (c.samples < 1) throw InputError("--samples must be at least 1");
  if (c.format != "csv" && c.format != "json") throw InputError("--format must be csv or json");
  RoutingOrder::parse(c.order);
  if (c.lattice) c.lattice->build();
  if (c.command == Command::Green && !(c.tolerance > 0)) throw InputError("--tol must be positive");
  if (c.t_max && *c.t_max < 1) throw InputError("--t-max must be at least 1");
  if (c.window_first && c.window_last && *c.window_last <= *c.window_first) {
    throw InputError("--window needs first < last");
  }
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"eulerwalk: rotor-router Euler tours, unicycle statistics and lattice Green functions"};
  app.require_subcommand(1);
  RunConfig config;
  std::string torus, grid, window;

  auto lattice_opts = [&](CLI::App* sub) {
    auto* t = sub->add_option("--torus", torus, "MxN torus, e.g. 64x64");
    auto* g = sub->add_option("--grid", grid, "WxH planar grid, e.g. 12x12");
    t->excludes(g);
  };
  auto sampling_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "master seed")->envname("EULERWALK_SEED");
    sub->add_option("--samples", config.samples, "number of samples");
    sub->add_option("--threads", config.threads, "worker threads (0 = all cores)");
  };
  auto output_opts = [&](CLI::App* sub) {
    sub->add_option("--out", config.output, "write <prefix>.csv and <prefix>.json");
    sub->add_option("--format", config.format, "stdout format when --out is absent")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto order_opt = [&](CLI::App* sub) {
    sub->add_option("--order", config.order, "routing order")->check(CLI::IsMember({"clockwise", "cross"}));
  };

  auto* sample = app.add_subcommand("sample", "draw one uniform unicycle");
  lattice_opts(sample);
  sample->add_option("--seed", config.seed, "master seed")->envname("EULERWALK_SEED");
  sample->add_option("--stream", config.stream, "stream id");
  sample->add_option("--chip", config.chip, "chip vertex id");
  output_opts(sample);

  auto* tour = app.add_subcommand("tour", "run one full Euler tour");
  lattice_opts(tour);
  order_opt(tour);
  tour->add_option("--state", config.state_path, "snapshot JSON to start from");
  tour->add_option("--seed", config.seed, "master seed")->envname("EULERWALK_SEED");
  tour->add_option("--stream", config.stream, "stream id");
  tour->add_option("--chip", config.chip, "chip vertex id");
  output_opts(tour);

  for (auto [name, help] : {std::pair{"correlations", "dimer/contour pair frequencies over full tours"},
                            std::pair{"delta-dist", "distribution of contours - dimers over full tours"},
                            std::pair{"msd", "mean-square displacement of the walker"},
                            std::pair{"planar-check", "contour reversal on a planar grid"},
                            std::pair{"conjecture", "return-segment balance on the torus"}}) {
    auto* sub = app.add_subcommand(name, help);
    lattice_opts(sub);
    sampling_opts(sub);
    output_opts(sub);
    if (std::string_view(name) != "planar-check" && std::string_view(name) != "conjecture") order_opt(sub);
    if (std::string_view(name) == "msd") {
      sub->add_option("--t-max", config.t_max, "last time step to record (default: window end)");
      sub->add_option("--window", window, "fit window FIRST:LAST");
    }
  }

  auto* green_cmd = app.add_subcommand("green", "lattice Green function g(p,q)");
  green_cmd->add_option("p", config.p)->required();
  green_cmd->add_option("q", config.q)->required();
  green_cmd->add_option("--tol", config.tolerance, "absolute quadrature tolerance");
  output_opts(green_cmd);

  auto* predict = app.add_subcommand("predict", "analytic correlation predictions");
  order_opt(predict);
  predict->add_option("--torus", torus, "also predict the dimer probability on MxN");
  output_opts(predict);

  auto* cmp = app.add_subcommand("compare", "z-scores of an empirical summary against a prediction");
  cmp->add_option("--empirical", config.empirical_path)->required();
  cmp->add_option("--predicted", config.predicted_path)->required();
  output_opts(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw InputError(e.what());
  }

  for (auto* sub : app.get_subcommands()) {
    config.command = parse_command(sub->get_name());
    if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
      out << sub->help();
      return std::nullopt;
    }
  }
  if (!torus.empty()) config.lattice = parse_lattice(torus, Lattice::Topology::Torus);
  if (!grid.empty()) config.lattice = parse_lattice(grid, Lattice::Topology::PlanarGrid);
  if (!window.empty()) {
    const auto colon = window.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("no colon");
      config.window_first = std::stoll(window.substr(0, colon));
      config.window_last = std::stoll(window.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("--window must look like FIRST:LAST");
    }
  }
  validate(config);
  return config;
}

std::vector<Comparison> compare(const json& empirical, const json& predicted) {
  if (!empirical.contains("observables") || !empirical["observables"].is_object()) {
    throw InputError("empirical summary has no observables");
  }
  const json& observed = empirical["observables"];
  std::vector<Comparison> out;
  for (const char* name : {"pd", "pdd", "pdc", "pcd", "pcc"}) {
    if (!predicted.contains(name)) continue;
    if (!observed.contains(name)) {
      throw InputError(std::string("predicted observable '") + name + "' missing from empirical summary");
    }
    Comparison c;
    c.observable = name;
    try {
      c.empirical = observed[name].at("value").get<double>();
      c.standard_error = observed[name].at("se").get<double>();
      c.predicted = predicted[name].get<double>();
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed observable '") + name + "': " + e.what());
    }
    const double diff = c.empirical - c.predicted;
    if (diff == 0) {
      c.z = 0;
    } else if (c.standard_error > 0) {
      c.z = diff / c.standard_error;
    } else {
      c.z = std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    c.passed = std::abs(c.z) <= kMaxAbsZ;
    out.push_back(c);
  }
  if (out.empty()) throw InputError("no common observables between empirical and predicted summaries");
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    bool compare_passed = true;
    Artifacts a;
    switch (config.command) {
      case Command::Sample: a = run_sample(config); break;
      case Command::Tour: a = run_tour(config); break;
      case Command::Correlations: a = run_correlations(config); break;
      case Command::DeltaDist: a = run_delta_dist(config); break;
      case Command::Msd: a = run_msd(config); break;
      case Command::PlanarCheck: a = run_planar_check(config); break;
      case Command::Conjecture: a = run_conjecture(config); break;
      case Command::Green: a = run_green(config); break;
      case Command::Predict: a = run_predict(config); break;
      case Command::Compare: a = run_compare(config, compare_passed); break;
    }
    const std::string summary = a.summary.dump(2) + "\n";
    if (!config.output.empty()) {
      write_file(config.output + ".json", summary);
      write_file(config.output + ".csv", a.csv);
    } else if (config.format == "csv") {
      out << a.csv;
    } else {
      out << summary;
    }
    return compare_passed ? kExitOk : kExitCheckFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StateError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const QuadratureError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace eulerwalk::cli
