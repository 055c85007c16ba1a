// tfloc: command-line front end.
//
// Precedence: command-line flags override values from --config, which
// override built-in defaults.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <variant>

#include "tfloc/config.hpp"
#include "tfloc/error.hpp"
#include "tfloc/io.hpp"
#include "tfloc/locop.hpp"
#include "tfloc/modulation.hpp"
#include "tfloc/orlicz.hpp"
#include "tfloc/stft.hpp"
#include "tfloc/verify.hpp"

namespace {

using namespace tfloc;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;
constexpr int kNumeric = 3;

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> n, K, C, M;
  std::optional<int> threads;
  std::string out;
};

Config load_config(const Common& o) {
  Config c = o.config.empty() || o.config == "default" ? default_config()
                                                       : parse_config(read_text(o.config));
  if (o.seed) {
    for (auto& s : c.checks) {
      if (s.seed == c.seed) s.seed = *o.seed;
    }
    c.seed = *o.seed;
  }
  if (o.n || o.K || o.C) {
    const int n = o.n.value_or(c.lattice.n);
    const int K = o.K.value_or(c.lattice.K);
    const int C = o.C.value_or(o.K ? 3 * K : std::max(c.lattice.C, 3 * K));
    c.lattice = LatticeSpec(n, K, C);
    if (!o.M) c.M = std::max(c.M, 6 * K + 1);
  }
  if (o.M) c.M = *o.M;
  if (c.M < 6 * c.lattice.K + 1) throw UsageError("M must be >= 6K+1");
  if (o.threads) c.threads = *o.threads;
  return c;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

void print_value(double v) { std::printf("%#.17g\n", v); }

double parse_p(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double p = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw UsageError("bad exponent '" + s + "'");
  return p;
}

Signal window_for(const std::string& path, const Config& cfg, const LatticeSpec& lattice) {
  if (!path.empty()) return signal_from_json(read_text(path));
  WindowSpec w = cfg.window;
  if (w.kind == WindowSpec::Kind::file) w.samples = signal_from_json(read_text(w.path));
  return make_window(w, lattice);
}

TorusGrid torus_for(const LatticeSpec& lattice, const Config& cfg, const Common& o) {
  const int M = o.M ? *o.M : std::max(cfg.M, 6 * lattice.K + 1);
  return TorusGrid(lattice.n, M);
}

int run(int argc, char** argv) {
  CLI::App app{"tfloc: time-frequency localization operators on Z^n x T^n"};
  app.require_subcommand(1);
  Common o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON config file or 'default'");
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--n", o.n, "lattice dimension");
    sub->add_option("--K", o.K, "support radius");
    sub->add_option("--C", o.C, "computation radius");
    sub->add_option("--M", o.M, "torus samples per axis");
    sub->add_option("-o,--out", o.out, "output path ('-' for stdout)");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random signal or symbol");
  add_common(gen);
  std::string gen_kind = "gaussian-signal";
  gen->add_option("--kind", gen_kind,
                  "gaussian-signal | trig-symbol | indicator-symbol | rank-one-symbol");

  // stft
  auto* st = app.add_subcommand("stft", "short-time Fourier transform of a signal");
  add_common(st);
  std::string st_signal, st_window;
  st->add_option("--signal", st_signal, "signal JSON")->required();
  st->add_option("--window", st_window, "window JSON (default: config window)");

  // norm
  auto* nm = app.add_subcommand("norm", "print a norm with 17 significant digits");
  add_common(nm);
  std::string nm_space, nm_input, nm_window, nm_phi, nm_psi, nm_p = "2";
  nm->add_option("--space", nm_space,
                 "lPhi | L-mixed | L-star | M<p> | MPhi | MPhiPsi | WPhiPsi | symbol-M<p>")
      ->required();
  nm->add_option("--input", nm_input, "signal or field JSON")->required();
  nm->add_option("--window", nm_window, "window JSON (default: config window)");
  nm->add_option("--phi", nm_phi, "Young function (default: config phi)");
  nm->add_option("--psi", nm_psi, "second Young function");
  nm->add_option("--p", nm_p, "exponent for M<p> when not in the space name");

  // locop
  auto* lo = app.add_subcommand("locop", "apply a localization operator or export its kernel");
  add_common(lo);
  std::string lo_symbol, lo_g1, lo_g2, lo_apply, lo_format = "json";
  lo->add_option("--symbol", lo_symbol, "symbol field JSON")->required();
  lo->add_option("--g1", lo_g1, "analysis window JSON (default: config window)");
  lo->add_option("--g2", lo_g2, "synthesis window JSON (default: g1)");
  lo->add_option("--apply", lo_apply, "signal JSON to apply the operator to");
  lo->add_option("--format", lo_format, "kernel export format: json | raw")
      ->check(CLI::IsMember({"json", "raw"}));

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "singular values, trace and Schatten norms");
  add_common(sp);
  std::string sp_symbol, sp_g1, sp_g2;
  std::vector<std::string> sp_ps = {"1", "2", "inf"};
  sp->add_option("--symbol", sp_symbol, "symbol field JSON")->required();
  sp->add_option("--g1", sp_g1, "analysis window JSON (default: config window)");
  sp->add_option("--g2", sp_g2, "synthesis window JSON (default: g1)");
  sp->add_option("--p", sp_ps, "Schatten exponents")->delimiter(',');

  // verify
  auto* vf = app.add_subcommand("verify", "run the verification suite");
  add_common(vf);
  std::vector<std::string> vf_checks;
  std::optional<int> vf_trials;
  bool vf_timing = false;
  vf->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  vf->add_option("--check", vf_checks, "run only these check ids");
  vf->add_option("--trials", vf_trials, "override the trial count of every check");
  vf->add_flag("--timing", vf_timing, "record elapsed seconds");

  if (argc > 1 && argv[1][0] != '-') {
    const auto subs = app.get_subcommands([](CLI::App*) { return true; });
    bool known = false;
    for (const auto* s : subs) known = known || s->check_name(argv[1]);
    if (!known) {
      std::cerr << "tfloc: unknown subcommand \"" << argv[1] << "\"\n" << app.help();
      return kUsage;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "tfloc: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const Config cfg = load_config(o);

  if (gen->parsed()) {
    Environment env = make_environment(cfg);
    const auto v = generate_ensemble(parse_ensemble_kind(gen_kind), env, cfg.seed);
    emit(o.out, std::holds_alternative<Signal>(v) ? signal_to_json(std::get<Signal>(v))
                                                  : field_to_json(std::get<PhaseSpaceField>(v)));
    return kOk;
  }

  if (st->parsed()) {
    const Signal f = signal_from_json(read_text(st_signal));
    const Signal g = window_for(st_window, cfg, f.spec());
    emit(o.out, field_to_json(stft(f, g, torus_for(f.spec(), cfg, o))));
    return kOk;
  }

  if (nm->parsed()) {
    const YoungFunction phi = nm_phi.empty() ? cfg.phi : young_from_json_text(nm_phi);
    std::optional<YoungFunction> psi = cfg.psi;
    if (!nm_psi.empty()) psi = young_from_json_text(nm_psi);
    const std::string text = read_text(nm_input);
    auto need_psi = [&]() -> const YoungFunction& {
      if (!psi) throw UsageError("space " + nm_space + " needs --psi");
      return *psi;
    };
    auto as_signal = [&] { return signal_from_json(text); };
    if (nm_space == "lPhi") {
      // a signal gives the sequence norm, a field the product-measure norm
      if (text.find("\"m_radius\"") != std::string::npos) {
        print_value(orlicz_norm(field_from_json(text), phi));
      } else {
        const Signal f = as_signal();
        print_value(luxemburg(magnitudes(f.values()), MeasureSpec::counting(), phi));
      }
    } else if (nm_space == "L-mixed") {
      print_value(mixed_norm(field_from_json(text), phi, need_psi()));
    } else if (nm_space == "L-star") {
      print_value(mixed_norm_swapped(field_from_json(text), phi, need_psi()));
    } else if (nm_space.rfind("symbol-M", 0) == 0) {
      const std::string ps = nm_space.substr(8);
      const PhaseSpaceField s = field_from_json(text);
      const PhaseSpaceField G = default_symbol_window(s.spec(), s.torus());
      print_value(symbol_modulation_norm(s, G, parse_p(ps.empty() || ps == "p" ? nm_p : ps)));
    } else if (nm_space == "MPhi" || nm_space == "MPhiPsi" || nm_space == "WPhiPsi") {
      const Signal f = as_signal();
      const Signal g = window_for(nm_window, cfg, f.spec());
      const TorusGrid torus = torus_for(f.spec(), cfg, o);
      if (nm_space == "MPhi") {
        print_value(orlicz_modulation_norm(f, g, torus, phi, psi, OrliczVariant::M_Phi));
      } else {
        need_psi();
        print_value(orlicz_modulation_norm(
            f, g, torus, phi, psi,
            nm_space == "MPhiPsi" ? OrliczVariant::M_PhiPsi : OrliczVariant::W_PhiPsi));
      }
    } else if (nm_space.size() >= 1 && nm_space[0] == 'M') {
      const std::string ps = nm_space.substr(1);
      const Signal f = as_signal();
      const Signal g = window_for(nm_window, cfg, f.spec());
      print_value(modulation_norm(f, g, torus_for(f.spec(), cfg, o),
                                  parse_p(ps.empty() || ps == "p" ? nm_p : ps)));
    } else {
      throw UsageError("unknown space '" + nm_space + "'");
    }
    return kOk;
  }

  if (lo->parsed() || sp->parsed()) {
    const bool is_lo = lo->parsed();
    const PhaseSpaceField s = field_from_json(read_text(is_lo ? lo_symbol : sp_symbol));
    const Signal g1 = window_for(is_lo ? lo_g1 : sp_g1, cfg, s.spec());
    const std::string& g2_path = is_lo ? lo_g2 : sp_g2;
    const Signal g2 = g2_path.empty() ? g1 : signal_from_json(read_text(g2_path));
    if (is_lo && !lo_apply.empty()) {
      emit(o.out, signal_to_json(apply(s, g1, g2, signal_from_json(read_text(lo_apply)))));
      return kOk;
    }
    const OperatorKernel K = kernel(s, g1, g2);
    if (is_lo) {
      if (lo_format == "raw") {
        if (o.out.empty() || o.out == "-") throw UsageError("raw export needs --out");
        write_kernel_raw(K, o.out);
      } else {
        emit(o.out, kernel_to_json(K));
      }
      return kOk;
    }
    std::vector<double> ps;
    for (const auto& p : sp_ps) ps.push_back(parse_p(p));
    emit(o.out, summary_to_json(spectrum(K, ps)));
    return kOk;
  }

  if (vf->parsed()) {
    Config c = cfg;
    if (vf_timing) c.timing = true;
    std::vector<CheckSpec> specs = resolved_checks(c);
    if (!vf_checks.empty()) {
      std::vector<CheckSpec> picked;
      for (const auto& id : vf_checks) {
        bool found = false;
        for (const auto& s : specs) {
          if (s.id == id) {
            picked.push_back(s);
            found = true;
          }
        }
        if (!found) {
          const CheckInfo& info = lookup(id);
          picked.push_back({id, info.default_trials, info.default_tolerance, c.seed});
        }
      }
      specs = picked;
    }
    if (vf_trials) {
      if (*vf_trials < 1) throw UsageError("--trials must be >= 1");
      for (auto& s : specs) s.trials = *vf_trials;
    }
    const auto results = run_suite(specs, make_environment(c));
    const std::string report = report_jsonl(results);
    emit(o.out.empty() ? c.output : o.out, report);
    int violations = 0;
    for (const auto& r : results) violations += r.violations;
    return violations == 0 ? kOk : kViolations;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tfloc::PrecisionError& e) {
    std::fprintf(stderr, "tfloc: precision error: %s\n", e.what());
    return kNumeric;
  } catch (const tfloc::NumericError& e) {
    std::fprintf(stderr, "tfloc: numeric failure: %s\n", e.what());
    return kNumeric;
  } catch (const tfloc::ConditioningError& e) {
    std::fprintf(stderr, "tfloc: ill-conditioned: %s\n", e.what());
    return kNumeric;
  } catch (const tfloc::UnboundedError& e) {
    std::fprintf(stderr, "tfloc: unbounded: %s\n", e.what());
    return kNumeric;
  } catch (const tfloc::Error& e) {
    std::fprintf(stderr, "tfloc: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "tfloc: %s\n", e.what());
    return kUsage;
  }
}
