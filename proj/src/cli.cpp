#include "kcenter/cli.hpp"

#include "kcenter/error.hpp"
#include "kcenter/io.hpp"
#include "kcenter/random.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

namespace kcenter::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::TooLarge:
      return kResourceGuard;
    case ErrorCode::NonConvergence:
    case ErrorCode::DegenerateFacets:
    case ErrorCode::WitnessNotFound:
      return kNumerical;
    default:
      return kValidation;
  }
}

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  return std::atoi(raw);
}

struct Options {
  std::string instance;
  std::size_t k = 2;
  std::string method = "exact";
  double tol = 1e-9;
  double cert_tol = kDefaultOneCenterEps;
  double eps = kDefaultOneCenterEps;
  int restarts = 20;
  std::uint64_t seed = 0;
  double radius = 1e-3;
  long samples = 10000;
  std::string centers;
  std::string out;
  bool force = false;
  std::vector<std::string> reports;
  std::size_t gen_m = 8;
  int gen_d = 2;
  double gen_box = 1.0;
  std::string gen_gauge = "euclidean";
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  std::string instance_id() const { return std::filesystem::path(opt_.instance).stem().string(); }

  // Writes the report to --out (atomically) or to stdout.
  void emit(const std::string& kind, std::optional<std::uint64_t> seed, const io::Json& body,
            const std::string& summary) {
    std::optional<double> elapsed;
    if (env_int("KCENTER_TIMING", 0) != 0) {
      elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }
    const auto text = io::dump(io::make_report(kind, instance_id(), seed, elapsed, body));
    if (opt_.out.empty()) {
      out_ << text;
    } else {
      io::write_atomic(opt_.out, text);
      out_ << summary << "\n";
    }
  }

  int validate() {
    const Instance inst = io::load_instance(opt_.instance);
    const auto& k = inst.gauge().constants();
    out_ << "m=" << inst.size() << " d=" << inst.dimension() << " gauge=" << inst.gauge().kind()
         << " set_norm=" << k.set_norm << " polar_norm=" << k.polar_norm
         << (k.exact ? "" : " (bounded numerically)") << "\n";
    return kOk;
  }

  int solve() {
    const Instance inst = io::load_instance(opt_.instance);
    SolveReport report;
    if (opt_.method == "exact") {
      report = exact_by_partition(inst, opt_.k, ExactOptions{opt_.eps, opt_.force});
    } else if (opt_.method == "heuristic") {
      MultiStartOptions ms;
      ms.restarts = opt_.restarts;
      ms.seed = opt_.seed;
      ms.heuristic.tol = opt_.tol;
      ms.heuristic.eps = opt_.eps;
      ms.workers = std::max(1, env_int("KCENTER_WORKERS", 1));
      report = multi_start(inst, opt_.k, ms);
    } else {
      throw Error(ErrorCode::InvalidParameter, "--method must be exact or heuristic");
    }
    std::ostringstream summary;
    summary << "value = " << io::Json(report.value).dump();
    emit("solve", report.seed, io::to_json(report), summary.str());
    return kOk;
  }

  int one_center() {
    const Instance inst = io::load_instance(opt_.instance);
    const auto result = solve_one_center(inst.gauge(), inst.points(), opt_.eps);
    if (!result.converged) {
      throw Error(ErrorCode::NonConvergence, "1-center budget exhausted");
    }
    emit("one_center", std::nullopt, io::to_json(result),
         "radius = " + io::Json(result.radius).dump());
    return kOk;
  }

  int certify() {
    const Instance inst = io::load_instance(opt_.instance);
    const auto x = io::centers_from_text(opt_.centers, inst.dimension());
    const auto cert = certify_local(inst, x, opt_.cert_tol);
    io::Json body = io::to_json(cert);
    body["clustering"] = io::to_json(natural_clustering(inst, x, 0.0));
    emit("certify", std::nullopt, body, std::string(to_string(cert.verdict)));
    return kOk;
  }

  int compactness() {
    const Instance inst = io::load_instance(opt_.instance);
    const auto verdict = compactness_diagnostic(inst, opt_.k, opt_.eps, opt_.force);
    emit("compactness", std::nullopt, io::to_json(verdict), std::string(to_string(verdict.verdict)));
    return kOk;
  }

  int probe() {
    const Instance inst = io::load_instance(opt_.instance);
    const auto x = io::centers_from_text(opt_.centers, inst.dimension());
    const auto outcome = perturbation_probe(inst, x, opt_.radius, opt_.samples, opt_.seed);
    io::Json body = io::to_json(outcome);
    // Non-attractive centers can slide freely; record which ones keep the value.
    io::Json free = io::Json::array();
    const auto attraction = attraction_sets(inst, x, 0.0);
    const std::vector<double> scales = {1.0, 10.0, 1e6};
    for (std::size_t l = 0; l < x.size(); ++l) {
      if (!attraction[l].empty()) continue;
      io::Json item;
      item["center"] = l + 1;
      item["ray_constant"] = unbounded_ray_probe(inst, x, l, scales);
      free.push_back(item);
    }
    body["free_centers"] = free;
    emit("probe", opt_.seed, body, body["verdict"].get<std::string>());
    return kOk;
  }

  int bound2() {
    const Instance inst = io::load_instance(opt_.instance);
    if (!inst.gauge().is_euclidean()) {
      throw Error(ErrorCode::WrongGaugeKind, "bound2 needs the euclidean gauge");
    }
    const auto bound = two_center_split_bound(inst.points(), opt_.eps, opt_.seed);
    emit("bound2", opt_.seed, io::to_json(bound), "bound = " + io::Json(bound.bound).dump());
    return kOk;
  }

  int emit_csv() {
    std::vector<io::Json> reports;
    for (const auto& path : opt_.reports) reports.push_back(io::read_json_file(path));
    const auto csv = io::emit_csv(reports);
    if (opt_.out.empty()) {
      out_ << csv;
    } else {
      io::write_atomic(opt_.out, csv);
    }
    return kOk;
  }

  int gen() {
    std::mt19937_64 rng(opt_.seed);
    io::Json j;
    j["dimension"] = opt_.gen_d;
    io::Json pts = io::Json::array();
    for (std::size_t i = 0; i < opt_.gen_m; ++i) {
      io::Json p = io::Json::array();
      for (int c = 0; c < opt_.gen_d; ++c) p.push_back(opt_.gen_box * uniform01(rng));
      pts.push_back(p);
    }
    j["points"] = pts;
    j["gauge"] = io::Json{{"kind", opt_.gen_gauge}};
    // Round-trip through the validator so gen never writes an unusable file.
    (void)io::instance_from_json(j);
    if (opt_.out.empty()) {
      out_ << io::dump(j);
    } else {
      io::write_atomic(opt_.out, io::dump(j));
    }
    return kOk;
  }

 private:
  using Clock = std::chrono::steady_clock;
  const Options& opt_;
  std::ostream& out_;
  Clock::time_point start_ = Clock::now();
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized k-center problems under Minkowski gauges"};
  app.require_subcommand(1);
  Options opt;

  auto instance_opt = [&](CLI::App* sub) {
    sub->add_option("--instance", opt.instance, "instance JSON file")->required();
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "report path (default stdout)"); };

  auto* validate = app.add_subcommand("validate", "parse and validate an instance");
  instance_opt(validate);

  auto* solve = app.add_subcommand("solve", "solve the k-center problem");
  instance_opt(solve);
  solve->add_option("--k", opt.k, "number of centers")->required()->check(CLI::PositiveNumber);
  solve->add_option("--method", opt.method, "exact | heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
  solve->add_option("--tol", opt.tol, "heuristic stopping tolerance");
  solve->add_option("--eps", opt.eps, "1-center accuracy");
  solve->add_option("--restarts", opt.restarts, "heuristic restarts");
  solve->add_option("--seed", opt.seed, "random seed");
  solve->add_flag("--force", opt.force, "lift the exact enumeration guard");
  out_opt(solve);

  auto* one = app.add_subcommand("one-center", "solve the 1-center problem");
  instance_opt(one);
  one->add_option("--eps", opt.eps, "accuracy");
  out_opt(one);

  auto* certify = app.add_subcommand("certify", "sufficient local-optimality certificate");
  instance_opt(certify);
  certify->add_option("--centers", opt.centers, "centers as inline JSON or a file")->required();
  certify->add_option("--tol", opt.cert_tol, "1-center tolerance");
  out_opt(certify);

  auto* compact = app.add_subcommand("compactness", "is the optimal solution set compact?");
  instance_opt(compact);
  compact->add_option("--k", opt.k, "number of centers")->required();
  compact->add_option("--eps", opt.eps, "1-center accuracy");
  compact->add_flag("--force", opt.force, "lift the exact enumeration guard");
  out_opt(compact);

  auto* probe = app.add_subcommand("probe", "search for local improvements by perturbation");
  instance_opt(probe);
  probe->add_option("--centers", opt.centers, "centers as inline JSON or a file")->required();
  probe->add_option("--radius", opt.radius, "perturbation radius per center");
  probe->add_option("--samples", opt.samples, "number of samples");
  probe->add_option("--seed", opt.seed, "random seed");
  out_opt(probe);

  auto* bound2 = app.add_subcommand("bound2", "constructive Euclidean 2-center bound");
  instance_opt(bound2);
  bound2->add_option("--eps", opt.eps, "1-center accuracy");
  bound2->add_option("--seed", opt.seed, "witness seed");
  out_opt(bound2);

  auto* csv = app.add_subcommand("emit-csv", "flatten reports to CSV");
  csv->add_option("reports", opt.reports, "report files");
  out_opt(csv);

  auto* gen = app.add_subcommand("gen", "uniform random instance in a box");
  gen->add_option("--m", opt.gen_m, "number of points")->check(CLI::PositiveNumber);
  gen->add_option("--d", opt.gen_d, "dimension")->check(CLI::PositiveNumber);
  gen->add_option("--box", opt.gen_box, "box side length");
  gen->add_option("--gauge", opt.gen_gauge, "euclidean | linf");
  gen->add_option("--seed", opt.seed, "random seed");
  out_opt(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner runner(opt, out);
  const std::vector<std::pair<CLI::App*, std::function<int()>>> table = {
      {validate, [&] { return runner.validate(); }},
      {solve, [&] { return runner.solve(); }},
      {one, [&] { return runner.one_center(); }},
      {certify, [&] { return runner.certify(); }},
      {compact, [&] { return runner.compactness(); }},
      {probe, [&] { return runner.probe(); }},
      {bound2, [&] { return runner.bound2(); }},
      {csv, [&] { return runner.emit_csv(); }},
      {gen, [&] { return runner.gen(); }},
  };
  try {
    for (const auto& [sub, fn] : table) {
      if (sub->parsed()) return fn();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::TooLarge) err << "hint: use --method heuristic or --force\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

}  // namespace kcenter::cli
