// Command-line front end: transforms, convolutions, algebra diagnostics, the
// Fredholm and heat solvers, the verification suites and the direct-vs-
// spectral benchmark. Exit codes: 0 success, 1 verification failure,
// 2 usage or parameter error.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hartley/algebra.hpp"
#include "hartley/convolution.hpp"
#include "hartley/io.hpp"
#include "hartley/solvers.hpp"
#include "hartley/suites.hpp"
#include "hartley/transform.hpp"
#include "hartley/wiener_levy.hpp"

namespace {

using namespace hartley;

struct CommonOpts {
  double a = 1.0, b = 1.0, grid_l = 20.0;
  int grid_n = 2049;
  std::uint64_t seed = 12345;
  std::string config;
  CLI::Option *oa = nullptr, *ob = nullptr, *ol = nullptr, *on = nullptr, *oseed = nullptr,
              *oconfig = nullptr;

  void attach(CLI::App* cmd) {
    oa = cmd->add_option("--a", a, "kernel coefficient a");
    ob = cmd->add_option("--b", b, "kernel coefficient b");
    ol = cmd->add_option("--grid-L", grid_l, "grid half-width L");
    on = cmd->add_option("--grid-N", grid_n, "grid size N (odd)");
    oseed = cmd->add_option("--seed", seed, "seed for property-test generators");
    oconfig = cmd->add_option("--config", config, "JSON run-config file (flags take precedence)");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (oconfig->count()) cfg = load_config(config);
    if (oa->count()) cfg.a = a;
    if (ob->count()) cfg.b = b;
    if (ol->count()) cfg.L = grid_l;
    if (on->count()) cfg.N = grid_n;
    if (oseed->count()) cfg.seed = seed;
    return cfg;
  }

  bool grid_given() const { return ol->count() > 0 || on->count() > 0; }
};

SampledFunction load_input(const std::string& path, const CommonOpts& common,
                           const RunConfig& cfg) {
  return common.grid_given() ? read_function(path, make_grid(cfg.L, cfg.N))
                             : read_function(path);
}

Spectrum load_input_spectrum(const std::string& path, const CommonOpts& common,
                             const RunConfig& cfg) {
  return common.grid_given() ? read_spectrum(path, make_grid(cfg.L, cfg.N))
                             : read_spectrum(path);
}

template <class Series>
void emit(const Series& s, const std::string& output) {
  if (output.empty()) {
    if constexpr (std::is_same_v<Series, Spectrum>)
      write_spectrum(std::cout, s);
    else
      write_function(std::cout, s);
  } else {
    if constexpr (std::is_same_v<Series, Spectrum>)
      write_spectrum(output, s);
    else
      write_function(output, s);
  }
}

TransformMethod parse_transform_method(const std::string& m) {
  return m == "quadrature" ? TransformMethod::Quadrature : TransformMethod::Accelerated;
}

int emit_reports(const std::vector<VerificationReport>& reports, bool json) {
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << to_line(r) << "\n";
  }
  return verify::all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized Hartley-type transform, its convolution algebra and solvers"};
  app.require_subcommand(1);
  std::function<int()> action;

  // transform / inverse ------------------------------------------------
  {
    auto* cmd = app.add_subcommand("transform", "forward transform of a sampled function");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("accelerated");
    cmd->add_option("--input", *input, "function CSV")->required();
    cmd->add_option("--output", *output, "output CSV (stdout if omitted)");
    cmd->add_option("--method", *method, "evaluation method")
        ->check(CLI::IsMember({"quadrature", "accelerated"}));
    cmd->callback([&action, common, input, output, method] {
      action = [common, input, output, method] {
        const RunConfig cfg = common->resolve();
        const SampledFunction f = load_input(*input, *common, cfg);
        emit(h_forward(f, cfg.params(), f.grid(), parse_transform_method(*method)), *output);
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("inverse", "inverse transform of a spectrum");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("accelerated");
    cmd->add_option("--input", *input, "spectrum CSV")->required();
    cmd->add_option("--output", *output, "output CSV (stdout if omitted)");
    cmd->add_option("--method", *method, "evaluation method")
        ->check(CLI::IsMember({"quadrature", "accelerated"}));
    cmd->callback([&action, common, input, output, method] {
      action = [common, input, output, method] {
        const RunConfig cfg = common->resolve();
        const Spectrum F = load_input_spectrum(*input, *common, cfg);
        emit(h_inverse(F, cfg.params(), F.grid(), parse_transform_method(*method)), *output);
        return 0;
      };
    });
  }

  // convolve / power / radius -------------------------------------------
  {
    auto* cmd = app.add_subcommand("convolve", "convolution of two sampled functions");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto input = std::make_shared<std::string>();
    auto input2 = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("spectral");
    cmd->add_option("--input", *input, "first operand CSV")->required();
    cmd->add_option("--input2", *input2, "second operand CSV")->required();
    cmd->add_option("--output", *output, "output CSV (stdout if omitted)");
    cmd->add_option("--method", *method, "convolution method")
        ->check(CLI::IsMember({"direct", "spectral"}));
    cmd->callback([&action, common, input, input2, output, method] {
      action = [common, input, input2, output, method] {
        const RunConfig cfg = common->resolve();
        const SampledFunction f = load_input(*input, *common, cfg);
        const SampledFunction g = read_function(*input2, f.grid());
        emit(convolve(f, g, cfg.params(),
                      *method == "direct" ? ConvMethod::DirectKernel
                                          : ConvMethod::SpectralFactorization),
             *output);
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("power", "k-th convolution power");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto k = std::make_shared<int>(2);
    cmd->add_option("--input", *input, "function CSV")->required();
    cmd->add_option("--output", *output, "output CSV (stdout if omitted)");
    cmd->add_option("--k", *k, "power index (>= 1)")->required();
    cmd->callback([&action, common, input, output, k] {
      action = [common, input, output, k] {
        const RunConfig cfg = common->resolve();
        const SampledFunction f = load_input(*input, *common, cfg);
        emit(conv_power(f, *k, cfg.params()), *output);
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("radius", "spectral-radius trace via convolution powers");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto input = std::make_shared<std::string>();
    auto kmax = std::make_shared<int>(20);
    auto json = std::make_shared<bool>(false);
    cmd->add_option("--input", *input, "function CSV")->required();
    cmd->add_option("--kmax", *kmax, "largest power in the trace");
    cmd->add_flag("--json", *json, "emit JSON instead of CSV");
    cmd->callback([&action, common, input, kmax, json] {
      action = [common, input, kmax, json] {
        const RunConfig cfg = common->resolve();
        const SampledFunction f = load_input(*input, *common, cfg);
        const RadiusTrace trace = spectral_radius_trace(f, cfg.params(), *kmax);
        if (*json) {
          nlohmann::json j;
          j["k_max"] = trace.k_max;
          j["roots"] = trace.roots;
          j["gelfand_value"] = trace.gelfand_value;
          j["outer_mass"] = trace.outer_mass;
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "k,root,gelfand\n";
          char buf[96];
          for (int k = 1; k <= trace.k_max; ++k) {
            std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", k,
                          trace.roots[static_cast<size_t>(k - 1)], trace.gelfand_value);
            std::cout << buf;
          }
        }
        return 0;
      };
    });
  }

  // wiener-levy / solve-fredholm / solve-heat -----------------------------
  {
    auto* cmd = app.add_subcommand("wiener-levy",
                                   "eta with (H eta) = (Hg)/(1 + Hg); ell is its negation");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    cmd->add_option("--input", *input, "generator g CSV")->required();
    cmd->add_option("--output", *output, "output CSV (stdout if omitted)");
    cmd->callback([&action, common, input, output] {
      action = [common, input, output] {
        const RunConfig cfg = common->resolve();
        const SampledFunction g = load_input(*input, *common, cfg);
        emit(wiener_levy_eta(g, cfg.params(), TransformMethod::Accelerated,
                             cfg.tol("nonvanishing_threshold")),
             *output);
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("solve-fredholm", "solve f + f conv g = g conv k");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto input = std::make_shared<std::string>();
    auto input2 = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    cmd->add_option("--input", *input, "kernel generator g CSV")->required();
    cmd->add_option("--input2", *input2, "right-hand generator k CSV")->required();
    cmd->add_option("--output", *output, "output CSV (stdout if omitted)");
    cmd->callback([&action, common, input, input2, output] {
      action = [common, input, input2, output] {
        const RunConfig cfg = common->resolve();
        const SampledFunction g = load_input(*input, *common, cfg);
        const SampledFunction k = read_function(*input2, g.grid());
        emit(solve_fredholm({g, k, cfg.params()}), *output);
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("solve-heat", "Cauchy problem k u_xx = u_t");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("spectral");
    auto t = std::make_shared<double>(0.0);
    auto diffusion = std::make_shared<double>(1.0);
    cmd->add_option("--input", *input, "initial datum CSV")->required();
    cmd->add_option("--output", *output, "output CSV (stdout if omitted)");
    cmd->add_option("--time", *t, "evolution time t")->required();
    cmd->add_option("--diffusion", *diffusion, "diffusion coefficient k (> 0)");
    cmd->add_option("--method", *method, "spectral, or direct for the convolution form")
        ->check(CLI::IsMember({"spectral", "direct"}));
    cmd->callback([&action, common, input, output, method, t, diffusion] {
      action = [common, input, output, method, t, diffusion] {
        const RunConfig cfg = common->resolve();
        const SampledFunction phi = load_input(*input, *common, cfg);
        const HeatProblem prob{*diffusion, *t, phi, cfg.params()};
        emit(*method == "direct" ? solve_heat_convolution(prob) : solve_heat_spectral(prob),
             *output);
        return 0;
      };
    });
  }

  // verify / bench -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("verify", "run verification suites (or one explicit check)");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto suite = std::make_shared<std::string>("all");
    auto json = std::make_shared<bool>(false);
    auto input = std::make_shared<std::string>();
    auto input2 = std::make_shared<std::string>();
    auto input3 = std::make_shared<std::string>();
    auto p = std::make_shared<double>(1.0);
    auto q = std::make_shared<double>(1.0);
    auto r = std::make_shared<double>(1.0);
    cmd->add_option("--suite", *suite, "all|young|algebra|heat|fredholm")
        ->check(CLI::IsMember({"all", "young", "algebra", "heat", "fredholm"}));
    cmd->add_flag("--json", *json, "emit a JSON array of reports");
    cmd->add_option("--input", *input, "explicit f CSV: check a single Young instance");
    cmd->add_option("--input2", *input2, "explicit g CSV");
    auto* o3 = cmd->add_option("--input3", *input3, "explicit h CSV (trilinear mode)");
    auto* op = cmd->add_option("--p", *p, "Young exponent p");
    auto* oq = cmd->add_option("--q", *q, "Young exponent q");
    auto* orr = cmd->add_option("--r", *r, "Young exponent r");
    cmd->callback([&action, common, suite, json, input, input2, input3, p, q, r, o3, op, oq, orr] {
      action = [common, suite, json, input, input2, input3, p, q, r, o3, op, oq, orr] {
        const RunConfig cfg = common->resolve();
        if (!input->empty() || !input2->empty()) {
          if (input->empty() || input2->empty())
            throw InvalidParams("explicit verification needs both --input and --input2");
          if (!op->count() || !oq->count() || !orr->count())
            throw InvalidParams("explicit verification needs --p, --q and --r");
          const SampledFunction f = load_input(*input, *common, cfg);
          const SampledFunction g = read_function(*input2, f.grid());
          std::vector<VerificationReport> reports;
          if (o3->count()) {
            const SampledFunction h = read_function(*input3, f.grid());
            reports.push_back(verify_young_trilinear(f, g, h, {*p, *q, *r}, cfg.params()));
          } else {
            reports.push_back(verify_young_conv(f, g, {*p, *q, *r}, cfg.params()));
          }
          return emit_reports(reports, *json);
        }
        return emit_reports(verify::run_suite(*suite, cfg), *json);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("bench", "direct vs spectral convolution timings");
    auto common = std::make_shared<CommonOpts>();
    common->attach(cmd);
    auto sizes = std::make_shared<std::vector<int>>();
    auto output = std::make_shared<std::string>();
    cmd->add_option("sizes", *sizes, "odd grid sizes, ascending");
    cmd->add_option("--output", *output, "output CSV (stdout if omitted)");
    cmd->callback([&action, common, sizes, output] {
      action = [common, sizes, output] {
        const RunConfig cfg = common->resolve();
        const auto rows = verify::run_bench(cfg, *sizes);
        const std::string csv = verify::bench_csv(rows);
        if (output->empty()) {
          std::cout << csv;
        } else {
          std::ofstream out(*output);
          out << csv;
          if (!out) throw FormatError(*output + ": write failed");
        }
        for (const auto& row : rows)
          if (row.max_discrepancy > 1e-6) return 1;
        return 0;
      };
    });
  }

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
    return action ? action() : 2;
  } catch (const hartley::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
