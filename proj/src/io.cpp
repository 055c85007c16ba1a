#include "tfloc/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tfloc/error.hpp"

namespace tfloc {

using nlohmann::json;

namespace {

void append_values(std::string& out, std::span<const cplx> values) {
  out += "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += "[" + format_double(values[i].real()) + "," + format_double(values[i].imag()) + "]";
  }
  out += "]";
}

json parse(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

template <class T>
T field_of(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw UsageError(std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string(what) + ": bad type for \"" + key + "\"");
  }
}

std::vector<cplx> read_values(const json& j, const char* what) {
  if (!j.contains("values") || !j["values"].is_array()) {
    throw UsageError(std::string(what) + ": missing \"values\" array");
  }
  std::vector<cplx> v;
  v.reserve(j["values"].size());
  for (const auto& e : j["values"]) {
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      v.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else if (e.is_number()) {
      v.emplace_back(e.get<double>(), 0.0);
    } else {
      throw UsageError(std::string(what) + ": values must be [re, im] pairs or numbers");
    }
  }
  return v;
}

LatticeSpec read_lattice(const json& j, const char* what) {
  const int n = field_of<int>(j, "n", what);
  const int K = field_of<int>(j, "K", what);
  const int C = j.contains("C") ? field_of<int>(j, "C", what) : 3 * K;
  return {n, K, C};
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string signal_to_json(const Signal& f) {
  const LatticeSpec& s = f.spec();
  std::string out = "{\"n\":" + std::to_string(s.n) + ",\"K\":" + std::to_string(s.K) +
                    ",\"C\":" + std::to_string(s.C) + ",\"values\":";
  append_values(out, f.values());
  return out + "}\n";
}

Signal signal_from_json(std::string_view text) {
  const json j = parse(text, "signal");
  return {read_lattice(j, "signal"), read_values(j, "signal")};
}

std::string field_to_json(const PhaseSpaceField& F) {
  const LatticeSpec& s = F.spec();
  std::string out = "{\"n\":" + std::to_string(s.n) + ",\"K\":" + std::to_string(s.K) +
                    ",\"C\":" + std::to_string(s.C) +
                    ",\"m_radius\":" + std::to_string(F.m_radius()) +
                    ",\"M\":" + std::to_string(F.torus().samples()) +
                    ",\"degree_bound\":" + std::to_string(F.degree_bound()) + ",\"values\":";
  append_values(out, F.values());
  return out + "}\n";
}

PhaseSpaceField field_from_json(std::string_view text) {
  const json j = parse(text, "field");
  const LatticeSpec spec = read_lattice(j, "field");
  const int M = field_of<int>(j, "M", "field");
  return {spec, TorusGrid(spec.n, M), field_of<int>(j, "m_radius", "field"),
          field_of<int>(j, "degree_bound", "field"), read_values(j, "field")};
}

std::string kernel_to_json(const OperatorKernel& K) {
  const auto N = K.matrix.rows();
  std::string out = "{\"size\":" + std::to_string(N) + ",\"order\":\"row-major\",\"values\":[";
  for (Eigen::Index r = 0; r < N; ++r) {
    for (Eigen::Index c = 0; c < N; ++c) {
      if (r || c) out += ",";
      const cplx v = K.matrix(r, c);
      out += "[" + format_double(v.real()) + "," + format_double(v.imag()) + "]";
    }
  }
  return out + "]}\n";
}

void write_kernel_raw(const OperatorKernel& K, const std::string& path) {
  static_assert(std::endian::native == std::endian::little, "raw export assumes little-endian");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  const auto N = K.matrix.rows();
  for (Eigen::Index r = 0; r < N; ++r) {
    for (Eigen::Index c = 0; c < N; ++c) {
      const double re = K.matrix(r, c).real();
      const double im = K.matrix(r, c).imag();
      out.write(reinterpret_cast<const char*>(&re), sizeof re);
      out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
  }
  write_text(path + ".json", "{\"size\":" + std::to_string(N) + ",\"order\":\"row-major\"}\n");
}

std::string summary_to_json(const SpectralSummary& s) {
  std::string out = "{\"singular_values\":[";
  for (std::size_t i = 0; i < s.singular_values.size(); ++i) {
    if (i) out += ",";
    out += format_double(s.singular_values[i]);
  }
  out += "],\"trace\":[" + format_double(s.trace.real()) + "," + format_double(s.trace.imag()) +
         "],\"hs_norm\":" + format_double(s.hs_norm) + ",\"schatten\":{";
  bool first = true;
  for (const auto& [p, v] : s.schatten) {
    if (!first) out += ",";
    first = false;
    char key[32];
    if (std::isinf(p)) {
      std::strcpy(key, "inf");
    } else {
      std::snprintf(key, sizeof key, "%.17g", p);
    }
    out += "\"" + std::string(key) + "\":" + format_double(v);
  }
  return out + "}}\n";
}

YoungFunction parse_young(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  auto number = [&](std::string_view s) {
    const std::string str(strip(s));
    char* end = nullptr;
    const double v = std::strtod(str.c_str(), &end);
    if (str.empty() || end != str.c_str() + str.size()) {
      throw UsageError("bad number '" + str + "' in Young function spec");
    }
    return v;
  };
  if (text == "eq5") return YoungFunction::eq5();
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw UsageError("unknown Young function '" + std::string(text) + "'");
  }
  const std::string_view head = text.substr(0, open);
  const std::string_view body = text.substr(open + 1, text.size() - open - 2);
  if (head == "power") return YoungFunction::power(number(body));
  if (head == "conjugate") return YoungFunction::conjugate(parse_young(body));
  if (head == "quasi") {
    // split at the last top-level comma
    int depth = 0;
    std::size_t comma = std::string_view::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ',' && depth == 0) comma = i;
    }
    if (comma == std::string_view::npos) throw UsageError("quasi(<phi>,<p>) expected");
    return YoungFunction::quasi(parse_young(body.substr(0, comma)), number(body.substr(comma + 1)));
  }
  throw UsageError("unknown Young function '" + std::string(text) + "'");
}

}  // namespace tfloc
