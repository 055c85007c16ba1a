#include "tfloc/config.hpp"

#include <set>
#include <thread>

#include "json.hpp"
#include "tfloc/error.hpp"
#include "tfloc/io.hpp"

namespace tfloc {

using nlohmann::json;

namespace {

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw UsageError("unknown key \"" + k + "\" in " + where);
  }
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError("bad or missing \"" + std::string(key) + "\" in " + where);
  }
}

int get_int(const json& j, const char* key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw UsageError("\"" + std::string(key) + "\" in " + where + " must be an integer");
  return v.get<int>();
}

YoungFunction young_from(const json& j) {
  if (j.is_string()) return parse_young(j.get<std::string>());
  only_keys(j, {"kind", "p", "base"}, "young function");
  const std::string kind = get<std::string>(j, "kind", "young function");
  if (kind == "eq5") return YoungFunction::eq5();
  if (kind == "power") return YoungFunction::power(get<double>(j, "p", "young function"));
  if (kind == "quasi") {
    if (!j.contains("base")) throw UsageError("quasi Young function needs \"base\"");
    return YoungFunction::quasi(young_from(j["base"]), get<double>(j, "p", "young function"));
  }
  if (kind == "conjugate") {
    if (!j.contains("base")) throw UsageError("conjugate Young function needs \"base\"");
    return YoungFunction::conjugate(young_from(j["base"]));
  }
  throw UsageError("unknown Young function kind \"" + kind + "\"");
}

json young_json(const YoungFunction& phi) {
  switch (phi.kind()) {
    case YoungFunction::Kind::eq5:
      return {{"kind", "eq5"}};
    case YoungFunction::Kind::power:
      return {{"kind", "power"}, {"p", phi.order()}};
    case YoungFunction::Kind::quasi:
      return {{"kind", "quasi"}, {"p", phi.order()}, {"base", young_json(*phi.base())}};
    case YoungFunction::Kind::conjugate:
      return {{"kind", "conjugate"}, {"base", young_json(*phi.base())}};
    case YoungFunction::Kind::table:
      break;
  }
  throw UsageError("table Young functions cannot be written to a config");
}

WindowSpec window_from(const json& j) {
  only_keys(j, {"kind", "width", "normalization", "path"}, "window");
  WindowSpec w;
  const std::string kind = j.contains("kind") ? get<std::string>(j, "kind", "window") : "gaussian";
  if (kind == "gaussian") {
    w.kind = WindowSpec::Kind::gaussian;
  } else if (kind == "kronecker") {
    w.kind = WindowSpec::Kind::kronecker;
  } else if (kind == "file") {
    w.kind = WindowSpec::Kind::file;
    w.path = get<std::string>(j, "path", "window");
  } else {
    throw UsageError("unknown window kind \"" + kind + "\"");
  }
  if (j.contains("width")) w.width = get<double>(j, "width", "window");
  if (j.contains("path")) w.path = get<std::string>(j, "path", "window");
  const std::string norm =
      j.contains("normalization") ? get<std::string>(j, "normalization", "window") : "unit";
  if (norm == "unit") {
    w.normalization = WindowSpec::Normalization::unit;
  } else if (norm == "none") {
    w.normalization = WindowSpec::Normalization::none;
  } else {
    throw UsageError("window normalization must be \"unit\" or \"none\"");
  }
  return w;
}

const char* window_kind_name(WindowSpec::Kind k) {
  switch (k) {
    case WindowSpec::Kind::gaussian:
      return "gaussian";
    case WindowSpec::Kind::kronecker:
      return "kronecker";
    case WindowSpec::Kind::file:
      return "file";
  }
  return "gaussian";
}

}  // namespace

bool operator==(const Config& a, const Config& b) {
  auto same_window = [](const WindowSpec& x, const WindowSpec& y) {
    return x.kind == y.kind && x.width == y.width && x.normalization == y.normalization &&
           x.path == y.path;
  };
  return a.seed == b.seed && a.lattice == b.lattice && a.M == b.M &&
         same_window(a.window, b.window) && a.phi == b.phi && a.psi.has_value() == b.psi.has_value() &&
         (!a.psi || *a.psi == *b.psi) && a.checks == b.checks && a.output == b.output &&
         a.threads == b.threads && a.timing == b.timing;
}

Config default_config() { return {}; }

Config parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: malformed JSON: ") + e.what());
  }
  only_keys(j, {"seed", "lattice", "torus", "window", "young", "checks", "output", "threads", "timing"},
            "config");
  Config c;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) throw UsageError("config seed must be an integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("lattice")) {
    const json& l = j["lattice"];
    only_keys(l, {"n", "K", "C"}, "lattice");
    const int n = l.contains("n") ? get_int(l, "n", "lattice") : 1;
    const int K = l.contains("K") ? get_int(l, "K", "lattice") : 8;
    const int C = l.contains("C") ? get_int(l, "C", "lattice") : 3 * K;
    try {
      c.lattice = LatticeSpec(n, K, C);
    } catch (const Error& e) {
      throw UsageError(std::string("lattice: ") + e.what());
    }
  }
  c.M = 6 * c.lattice.K + 1;
  if (j.contains("torus")) {
    only_keys(j["torus"], {"M"}, "torus");
    if (j["torus"].contains("M")) c.M = get_int(j["torus"], "M", "torus");
  }
  if (c.M < 6 * c.lattice.K + 1) {
    throw UsageError("torus M = " + std::to_string(c.M) + " is below 6K+1 = " +
                     std::to_string(6 * c.lattice.K + 1));
  }
  if (j.contains("window")) c.window = window_from(j["window"]);
  if (j.contains("young")) {
    only_keys(j["young"], {"phi", "psi"}, "young");
    try {
      if (j["young"].contains("phi")) c.phi = young_from(j["young"]["phi"]);
      if (j["young"].contains("psi")) c.psi = young_from(j["young"]["psi"]);
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(std::string("young: ") + e.what());
    }
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw UsageError("\"checks\" must be an array");
    for (const auto& e : j["checks"]) {
      only_keys(e, {"id", "trials", "tolerance", "seed"}, "check");
      const std::string id = get<std::string>(e, "id", "check");
      const CheckInfo& info = lookup(id);
      CheckSpec s{id, info.default_trials, info.default_tolerance, c.seed};
      if (e.contains("trials")) s.trials = get_int(e, "trials", "check " + id);
      if (e.contains("tolerance")) s.tolerance = get<double>(e, "tolerance", "check " + id);
      if (e.contains("seed")) {
        if (!e["seed"].is_number_integer()) throw UsageError("check seed must be an integer");
        s.seed = e["seed"].get<std::uint64_t>();
      }
      if (s.trials < 1) throw UsageError("check " + id + ": trials must be >= 1");
      if (!(s.tolerance >= 0.0)) throw UsageError("check " + id + ": tolerance must be >= 0");
      c.checks.push_back(s);
    }
  }
  if (j.contains("output")) c.output = get<std::string>(j, "output", "config");
  if (j.contains("threads")) {
    c.threads = get_int(j, "threads", "config");
    if (c.threads < 0) throw UsageError("threads must be >= 0");
  }
  if (j.contains("timing")) c.timing = get<bool>(j, "timing", "config");
  return c;
}

std::string serialize_config(const Config& c) {
  json j;
  j["seed"] = c.seed;
  j["lattice"] = {{"n", c.lattice.n}, {"K", c.lattice.K}, {"C", c.lattice.C}};
  j["torus"] = {{"M", c.M}};
  json w = {{"kind", window_kind_name(c.window.kind)},
            {"width", c.window.width},
            {"normalization",
             c.window.normalization == WindowSpec::Normalization::unit ? "unit" : "none"}};
  if (!c.window.path.empty()) w["path"] = c.window.path;
  j["window"] = w;
  j["young"] = {{"phi", young_json(c.phi)}};
  if (c.psi) j["young"]["psi"] = young_json(*c.psi);
  j["checks"] = json::array();
  for (const auto& s : c.checks) {
    j["checks"].push_back(
        {{"id", s.id}, {"trials", s.trials}, {"tolerance", s.tolerance}, {"seed", s.seed}});
  }
  j["output"] = c.output;
  j["threads"] = c.threads;
  j["timing"] = c.timing;
  return j.dump(2) + "\n";
}

YoungFunction young_from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    return parse_young(text);
  }
  return young_from(j);
}

std::string young_to_json(const YoungFunction& phi) { return young_json(phi).dump(); }

std::vector<CheckSpec> resolved_checks(const Config& c) {
  return c.checks.empty() ? default_checks(c.seed) : c.checks;
}

Environment make_environment(const Config& c) {
  Environment env;
  env.lattice = c.lattice;
  env.torus = TorusGrid(c.lattice.n, c.M);
  env.window = c.window;
  if (env.window.kind == WindowSpec::Kind::file && !env.window.samples) {
    env.window.samples = signal_from_json(read_text(env.window.path));
  }
  env.phi = c.phi;
  const unsigned hw = std::thread::hardware_concurrency();
  env.threads = c.threads > 0 ? c.threads : static_cast<int>(hw == 0 ? 1 : hw);
  env.timing = c.timing;
  return env;
}

}  // namespace tfloc
