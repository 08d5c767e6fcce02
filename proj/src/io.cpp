#include "conductor_lab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace conductor_lab::io {

namespace {

void write(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // number arrays stay on one line even when indenting
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number() || e.is_null(); });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(out, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw FormatError("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double number(const Json& v, const std::string& where) {
  if (!v.is_number()) throw FormatError(where + " must be a number");
  return v.get<double>();
}

Complex complex_value(const Json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2) throw FormatError(where + " must be a [re, im] pair");
  return {number(v[0], where + "[0]"), number(v[1], where + "[1]")};
}

ExactScalar exact_value(int p, const Json& v, const std::string& where) {
  if (!v.is_string()) throw FormatError(where + " must be a string \"u0,u1,v0,v1\"");
  try {
    return ExactScalar::parse(p, v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

Level level_of(const Json& doc) {
  const Level lv{int_field(doc, "p"), int_field(doc, "a"), int_field(doc, "b")};
  if (!is_prime(lv.p)) throw FormatError("field 'p' must be a prime");
  if (lv.a + lv.b < 0) throw FormatError("fields 'a', 'b' need a + b >= 0");
  if (lv.a + lv.b > 62 || lv.dim() > kMaxFileCosets)
    throw FormatError("level has more than " + std::to_string(kMaxFileCosets) + " cosets");
  return lv;
}

std::string mode_of(const Json& doc) {
  const Json& m = field(doc, "mode");
  if (!m.is_string() || (m != "exact" && m != "float")) throw FormatError("field 'mode' must be \"exact\" or \"float\"");
  return m.get<std::string>();
}

Json level_header(const Level& lv, const char* mode) {
  Json j;
  j["p"] = lv.p;
  j["a"] = lv.a;
  j["b"] = lv.b;
  j["mode"] = mode;
  return j;
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump(const Json& j) {
  std::string out;
  write(out, j, -1, 0);
  return out;
}

std::string dump_pretty(const Json& j) {
  std::string out;
  write(out, j, 2, 0);
  return out;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

AnyFunction function_from_json(const Json& doc) {
  const Level lv = level_of(doc);
  const std::string mode = mode_of(doc);
  const Json& vals = field(doc, "values");
  if (!vals.is_array()) throw FormatError("field 'values' must be an array");
  if (static_cast<std::int64_t>(vals.size()) != lv.dim())
    throw FormatError("field 'values' has " + std::to_string(vals.size()) + " entries, level needs p^(a+b) = " +
                      std::to_string(lv.dim()));
  if (mode == "exact") {
    std::vector<ExactScalar> v;
    v.reserve(vals.size());
    for (std::size_t n = 0; n < vals.size(); ++n) v.push_back(exact_value(lv.p, vals[n], "values[" + std::to_string(n) + "]"));
    return ExactFunction(lv, std::move(v));
  }
  std::vector<Complex> v;
  v.reserve(vals.size());
  for (std::size_t n = 0; n < vals.size(); ++n) v.push_back(complex_value(vals[n], "values[" + std::to_string(n) + "]"));
  return FloatFunction(lv, std::move(v));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

AnyFunction read_function_file(const std::string& path) {
  try {
    return function_from_json(read_json_file(path));
  } catch (const FormatError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw FormatError(path + ": " + msg);
  }
}

Json function_to_json(const ExactFunction& f) {
  Json j = level_header(f.level(), "exact");
  Json vals = Json::array();
  for (const auto& v : f.values()) vals.push_back(v.to_fields());
  j["values"] = std::move(vals);
  return j;
}

Json function_to_json(const FloatFunction& f) {
  Json j = level_header(f.level(), "float");
  Json vals = Json::array();
  for (const auto& v : f.values()) vals.push_back(complex_to_json(v));
  j["values"] = std::move(vals);
  return j;
}

Json image_to_json(const ExactHImage& h) {
  Json j = function_to_json(h.core);
  j["kappa"] = h.kappa.to_fields();
  j["kappa_symbolic"] = h.kappa.to_symbolic();
  j["cut_exponent"] = h.cut;
  return j;
}

Json image_to_json(const FloatHImage& h) {
  Json j = function_to_json(h.core);
  j["kappa"] = complex_to_json(h.kappa);
  j["cut_exponent"] = h.cut;
  return j;
}

FiniteProfile finite_profile_from_json(const Json& doc) {
  FiniteProfile g;
  g.p = int_field(doc, "p");
  if (!is_prime(g.p)) throw FormatError("field 'p' must be a prime");
  const Json& m = field(doc, "g");
  if (!m.is_object()) throw FormatError("field 'g' must map exponents to values");
  for (auto it = m.begin(); it != m.end(); ++it) {
    int k = 0;
    std::size_t used = 0;
    try {
      k = std::stoi(it.key(), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != it.key().size()) throw FormatError("g key '" + it.key() + "' is not an integer exponent");
    g.g[k] = complex_value(it.value(), "g[\"" + it.key() + "\"]");
  }
  return g;
}

ArchimedeanProfile archimedean_profile_from_json(const Json& doc) {
  ArchimedeanProfile g;
  g.v0 = number(field(doc, "v0"), "field 'v0'");
  g.h = number(field(doc, "h"), "field 'h'");
  if (!(g.h > 0.0)) throw FormatError("field 'h' must be positive");
  const Json& s = field(doc, "samples");
  if (!s.is_array() || s.size() < 4) throw FormatError("field 'samples' must be an array of at least 4 numbers");
  for (std::size_t i = 0; i < s.size(); ++i) g.samples.push_back(number(s[i], "samples[" + std::to_string(i) + "]"));
  if (doc.contains("g_at_zero")) g.g_at_zero = number(doc["g_at_zero"], "field 'g_at_zero'");
  return g;
}

Json report_to_json(const VerificationReport& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["overall_pass"] = r.overall();
  j["check_count"] = r.checks.size();
  j["failures"] = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return !c.pass; });
  if (timing) j["wall_seconds"] = r.wall_seconds;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json row;
    row["id"] = c.id;
    row["anchor"] = c.anchor;
    row["error"] = c.error;
    row["tolerance"] = c.tolerance;
    row["exact"] = c.exact;
    row["pass"] = c.pass;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string report_to_csv(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  os << "# suite=" << r.suite << " seed=" << r.seed << " overall_pass=" << (r.overall() ? "true" : "false");
  if (timing) os << " wall_seconds=" << format_double(r.wall_seconds);
  os << "\nid,anchor,error,tolerance,exact,pass\n";
  for (const auto& c : r.checks) {
    os << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << format_double(c.error) << ','
       << format_double(c.tolerance) << ',' << (c.exact ? "true" : "false") << ',' << (c.pass ? "true" : "false")
       << '\n';
  }
  return os.str();
}

}  // namespace conductor_lab::io
