// conductor-lab: command-line front end.
//
// Exit status: 0 on success, 1 when a check fails, 2 on invalid input.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conductor_lab/characters.hpp"
#include "conductor_lab/circle.hpp"
#include "conductor_lab/conductor.hpp"
#include "conductor_lab/gamma_lambda.hpp"
#include "conductor_lab/io.hpp"
#include "conductor_lab/kernels.hpp"
#include "conductor_lab/mellin.hpp"
#include "conductor_lab/verify.hpp"

namespace cl = conductor_lab;
using cl::Complex;
using cl::io::Json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

/// Invalid command-line input; reported on stderr with exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::optional<double> tol;
  std::uint64_t seed = 7;
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--tol", c.tol, "Tolerance for the checks of this command");
  sub->add_option("--seed", c.seed, "Random seed (used by verify)");
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + c.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(x)) throw InputError(where + ": '" + text + "' is not a number");
  return x;
}

int parse_int(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InputError(where + ": '" + text + "' is not an integer");
  return x;
}

/// "0.5", "2i", "-i", "0.3+1.7i", "1e-3-2.5i"
std::optional<Complex> parse_complex(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const char* s = text.c_str();
  const char* end = s + text.size();
  auto read = [](const char*& at, double& out) {
    char* stop = nullptr;
    out = std::strtod(at, &stop);
    if (stop == at) return false;
    at = stop;
    return true;
  };
  const char* at = s;
  double first = 0.0;
  if (!read(at, first)) {
    // a bare "i", "+i" or "-i"
    if (text == "i" || text == "+i") return Complex(0.0, 1.0);
    if (text == "-i") return Complex(0.0, -1.0);
    return std::nullopt;
  }
  if (at == end) return Complex(first, 0.0);
  if (*at == 'i' && at + 1 == end) return Complex(0.0, first);
  if (*at != '+' && *at != '-') return std::nullopt;
  double second = 0.0;
  const char sign = *at;
  if (at + 2 == end && at[1] == 'i') {
    second = sign == '-' ? -1.0 : 1.0;
  } else {
    if (!read(at, second)) return std::nullopt;
    if (at + 1 != end || *at != 'i') return std::nullopt;
  }
  if (!std::isfinite(first) || !std::isfinite(second)) return std::nullopt;
  return Complex(first, second);
}

std::vector<Complex> parse_s_list(const std::vector<std::string>& items) {
  std::vector<Complex> out;
  int index = 0;
  for (const auto& arg : items) {
    for (const auto& item : split(arg, ',')) {
      ++index;
      const auto z = parse_complex(item);
      if (!z) throw InputError("--s: item " + std::to_string(index) + " ('" + item + "') is not a complex number");
      out.push_back(*z);
    }
  }
  return out;
}

/// a:b:n, n >= 1 evenly spaced values from a to b
std::vector<double> parse_grid(const std::string& spec, const std::string& flag) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw InputError(flag + ": expected a:b:n, got '" + spec + "'");
  const double a = parse_double(parts[0], flag + " field 1");
  const double b = parse_double(parts[1], flag + " field 2");
  const int n = parse_int(parts[2], flag + " field 3");
  if (n < 1) throw InputError(flag + " field 3: need at least one point");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return out;
}

template <class F>
auto with_spec(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw InputError(flag + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw InputError(flag + ": " + e.what());
  }
}

cl::FiniteCharacter finite_character(const std::string& spec, std::optional<int> p, std::optional<int> c) {
  if (!spec.empty()) {
    auto chi = with_spec("--char", [&] { return cl::parse_finite_character(spec); });
    if (p && *p != chi.prime()) throw InputError("--char: prime " + std::to_string(chi.prime()) + " differs from --p");
    return chi;
  }
  if (!p) throw InputError("--p or --char is required at the finite place");
  const int cc = c.value_or(0);
  if (cc == 0) return with_spec("--p", [&] { return cl::FiniteCharacter::unramified(*p); });
  const auto all = with_spec("--c", [&] { return cl::FiniteCharacter::with_conductor(*p, cc); });
  if (all.empty()) throw InputError("--c: no character of conductor exponent " + std::to_string(cc) + " at p = " + std::to_string(*p));
  return all.front();
}

cl::RealCharacter real_character(const std::string& spec, const std::string& parity) {
  if (!spec.empty()) return with_spec("--char", [&] { return cl::parse_real_character(spec); });
  return cl::RealCharacter(parity == "odd");
}

std::string csv_number(double x) { return cl::io::format_double(x); }

// ---------------------------------------------------------------------------

struct GammaArgs {
  Common common;
  std::string place;
  std::optional<int> p, c;
  std::string chr;
  std::string parity = "even";
  std::vector<std::string> s;
  std::string tau_grid;
};

int run_gamma(const GammaArgs& a) {
  std::vector<Complex> points = parse_s_list(a.s);
  if (!a.tau_grid.empty())
    for (double t : parse_grid(a.tau_grid, "--tau-grid")) points.emplace_back(0.5, t);
  if (points.empty()) throw InputError("gamma: give --s or --tau-grid");

  const bool finite = a.place == "qp";
  std::optional<cl::FiniteCharacter> fchi;
  std::optional<cl::RealCharacter> rchi;
  if (finite)
    fchi = finite_character(a.chr, a.p, a.c);
  else
    rchi = real_character(a.chr, a.parity);
  const std::string spec = finite ? fchi->to_spec() : rchi->to_spec();

  Json rows = Json::array();
  std::ostringstream csv;
  csv << "place,character,s_re,s_im,gamma_re,gamma_im,gamma_abs,lambda_re,lambda_im,error\n";
  for (const Complex s : points) {
    std::optional<Complex> g, l;
    std::string err;
    try {
      g = finite ? cl::gamma_finite(*fchi, s) : cl::gamma_real(*rchi, s);
    } catch (const cl::PoleError& e) {
      err = e.what();
    }
    try {
      l = finite ? cl::lambda_finite(*fchi, s) : cl::lambda_real(*rchi, s);
    } catch (const cl::PoleError& e) {
      if (err.empty()) err = e.what();
    }
    Json row;
    row["place"] = a.place;
    row["character"] = spec;
    row["s"] = cl::io::complex_to_json(s);
    row["gamma_re"] = g ? Json(g->real()) : Json(nullptr);
    row["gamma_im"] = g ? Json(g->imag()) : Json(nullptr);
    row["gamma_abs"] = g ? Json(std::abs(*g)) : Json(nullptr);
    row["lambda_re"] = l ? Json(l->real()) : Json(nullptr);
    row["lambda_im"] = l ? Json(l->imag()) : Json(nullptr);
    if (!err.empty()) row["error"] = err;
    rows.push_back(row);
    auto num = [](const std::optional<Complex>& z, bool re) { return z ? csv_number(re ? z->real() : z->imag()) : ""; };
    csv << a.place << ',' << cl::io::csv_field(spec) << ',' << csv_number(s.real()) << ',' << csv_number(s.imag()) << ','
        << num(g, true) << ',' << num(g, false) << ',' << (g ? csv_number(std::abs(*g)) : "") << ',' << num(l, true)
        << ',' << num(l, false) << ',' << cl::io::csv_field(err) << '\n';
  }
  emit(a.common, a.common.format == "csv" ? csv.str() : cl::io::dump_pretty(rows));
  return 0;
}

// ---------------------------------------------------------------------------

struct ApplyHArgs {
  Common common;
  std::string in;
  std::optional<int> p;
  std::string route = "definition";
};

template <class S>
std::string image_csv(const cl::HImage<S>& h) {
  std::ostringstream os;
  const cl::Level& lv = h.core.level();
  auto text = [&](const S& v) {
    if constexpr (std::is_same_v<S, cl::ExactScalar>)
      return cl::io::csv_field(v.to_symbolic());
    else
      return csv_number(v.real()) + "," + csv_number(v.imag());
  };
  os << "# p=" << lv.p << " a=" << lv.a << " b=" << lv.b << " cut_exponent=" << h.cut << " kappa=" << text(h.kappa) << '\n';
  if constexpr (std::is_same_v<S, cl::ExactScalar>)
    os << "n,valuation,value\n";
  else
    os << "n,valuation,re,im\n";
  for (std::int64_t n = 0; n < h.core.dim(); ++n) {
    os << n << ',';
    if (n > 0) os << lv.coset_valuation(n);
    os << ',' << text(h.core.value(n)) << '\n';
  }
  return os.str();
}

int run_apply_h(const ApplyHArgs& a) {
  cl::io::AnyFunction f;
  try {
    f = cl::io::read_function_file(a.in);
  } catch (const cl::io::FormatError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(a.in + ": " + e.what());
  }
  const int fp = std::visit([](const auto& g) { return g.prime(); }, f);
  if (a.p && *a.p != fp) throw InputError("--p " + std::to_string(*a.p) + " differs from p = " + std::to_string(fp) + " in " + a.in);
  const bool oracle = a.route == "oracle";
  std::string text;
  std::visit(
      [&](const auto& g) {
        if (!g.vanishes_near_zero()) throw InputError(a.in + ": the function must vanish on the ball p^b Z_p (values[0] = 0)");
        const auto h = oracle ? cl::apply_H_oracle(g) : cl::apply_H(g);
        text = a.common.format == "csv" ? image_csv(h) : cl::io::dump_pretty(cl::io::image_to_json(h));
      },
      f);
  emit(a.common, text);
  return 0;
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
  Common common;
  int p = 2;
  int N = 512;
};

int run_spectrum(const SpectrumArgs& a) {
  const cl::SpectrumReport r = with_spec("spectrum", [&] { return cl::toeplitz_spectrum(a.p, a.N); });
  const double tol = a.common.tol.value_or(1e-9);
  const bool pass = r.max_outside <= tol;
  if (a.common.format == "csv") {
    std::ostringstream os;
    os << "# p=" << r.p << " N=" << r.N << " support_lo=" << csv_number(r.support_lo)
       << " support_hi=" << csv_number(r.support_hi) << " max_outside=" << csv_number(r.max_outside)
       << " gap_lo=" << csv_number(r.gap_lo) << " gap_hi=" << csv_number(r.gap_hi) << " tolerance=" << csv_number(tol)
       << " pass=" << (pass ? "true" : "false") << "\nindex,eigenvalue\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) os << i << ',' << csv_number(r.eigenvalues[i]) << '\n';
    emit(a.common, os.str());
  } else {
    Json j;
    j["p"] = r.p;
    j["N"] = r.N;
    j["dimension"] = r.eigenvalues.size();
    j["support_lo"] = r.support_lo;
    j["support_hi"] = r.support_hi;
    j["max_outside"] = r.max_outside;
    j["gap_lo"] = r.gap_lo;
    j["gap_hi"] = r.gap_hi;
    j["tolerance"] = tol;
    j["pass"] = pass;
    j["eigenvalues"] = r.eigenvalues;
    emit(a.common, cl::io::dump_pretty(j));
  }
  return pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

cl::ArchimedeanProfile load_profile(const std::string& spec, const std::string& flag) {
  try {
    return cl::io::archimedean_profile_from_json(cl::io::read_json_file(spec));
  } catch (const cl::io::FormatError& e) {
    throw InputError(flag + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(flag + ": " + spec + ": " + e.what());
  }
}

struct PoissonArgs {
  Common common;
  double x = 2.0;
  std::string bump = "default";
  int K = 200;
  int J = 200;
};

int run_poisson(const PoissonArgs& a) {
  if (!(a.x > 1.0)) throw InputError("--x must exceed 1");
  if (a.K < 0 || a.J < 0) throw InputError("--K and --J must be nonnegative");
  const cl::ArchimedeanProfile g = a.bump == "default" ? cl::bump_profile() : load_profile(a.bump, "--bump");
  const cl::PoissonResult r = cl::poisson_check(g, a.x, a.K, a.J);
  const double tol = a.common.tol.value_or(1e-8);
  const bool pass = r.diff <= tol;
  if (a.common.format == "csv") {
    std::ostringstream os;
    os << "x,K,J,lhs_re,lhs_im,rhs_re,rhs_im,diff,tolerance,pass\n"
       << csv_number(r.x) << ',' << r.K << ',' << r.J << ',' << csv_number(r.lhs.real()) << ','
       << csv_number(r.lhs.imag()) << ',' << csv_number(r.rhs.real()) << ',' << csv_number(r.rhs.imag()) << ','
       << csv_number(r.diff) << ',' << csv_number(tol) << ',' << (pass ? "true" : "false") << '\n';
    emit(a.common, os.str());
  } else {
    Json j;
    j["x"] = r.x;
    j["K"] = r.K;
    j["J"] = r.J;
    j["lhs"] = cl::io::complex_to_json(r.lhs);
    j["rhs"] = cl::io::complex_to_json(r.rhs);
    j["diff"] = r.diff;
    j["tolerance"] = tol;
    j["pass"] = pass;
    emit(a.common, cl::io::dump_pretty(j));
  }
  return pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

struct ExplicitArgs {
  Common common;
  std::string place;
  std::optional<int> p, c;
  std::string chr;
  std::string g;
  std::string points;
};

/// "V:U" is p^V U with U a unit integer; "V" alone means U = 1.
std::vector<cl::PAdicPoint> parse_finite_points(const std::string& spec, int p, std::vector<std::string>& labels) {
  std::vector<cl::PAdicPoint> out;
  int index = 0;
  for (const auto& item : split(spec, ',')) {
    ++index;
    const std::string where = "--points item " + std::to_string(index);
    const auto parts = split(item, ':');
    if (parts.empty() || parts.size() > 2) throw InputError(where + ": expected V or V:U, got '" + item + "'");
    const int v = parse_int(parts[0], where);
    const int u = parts.size() == 2 ? parse_int(parts[1], where) : 1;
    if (u == 0 || u % p == 0) throw InputError(where + ": U = " + std::to_string(u) + " is not a unit at p = " + std::to_string(p));
    const int prec = 12;
    out.push_back(cl::PAdicPoint::from_unit(p, v, cl::mod(u, cl::ipow(p, prec)), prec));
    labels.push_back(std::to_string(p) + "^" + std::to_string(v) + "*" + std::to_string(u));
  }
  if (out.empty()) throw InputError("--points: no points given");
  return out;
}

std::vector<double> parse_real_points(const std::string& spec) {
  std::vector<double> out;
  int index = 0;
  for (const auto& item : split(spec, ',')) {
    ++index;
    const double x = parse_double(item, "--points item " + std::to_string(index));
    out.push_back(x);
  }
  if (out.empty()) throw InputError("--points: no points given");
  return out;
}

cl::FiniteProfile finite_profile(const std::string& spec, int p) {
  if (spec.empty()) return cl::FiniteProfile::delta(p, 0);
  if (spec.rfind("delta:", 0) == 0) return cl::FiniteProfile::delta(p, parse_int(spec.substr(6), "--g delta:K"));
  cl::FiniteProfile g;
  try {
    g = cl::io::finite_profile_from_json(cl::io::read_json_file(spec));
  } catch (const cl::io::FormatError& e) {
    throw InputError("--g: " + std::string(e.what()));
  }
  if (g.p != p) throw InputError("--g: profile prime " + std::to_string(g.p) + " differs from the character's");
  if (g.g.empty()) throw InputError("--g: profile has no values");
  return g;
}

/// Level exponents of the section, for the size guard.
void check_section_size(const cl::FiniteCharacter& chi, const cl::FiniteProfile& g) {
  const int depth = g.g.rbegin()->first - g.g.begin()->first + std::max(chi.c(), 1);
  if (depth > 16 || cl::ipow(chi.prime(), depth) > cl::io::kMaxFileCosets)
    throw InputError("--g: profile support is too wide for the direct route");
}

int run_explicit(const ExplicitArgs& a) {
  cl::VerificationReport rep;
  rep.suite = "explicit-cli";
  rep.seed = a.common.seed;
  Json values = Json::array();
  const auto t0 = std::chrono::steady_clock::now();
  if (a.place == "qp") {
    const cl::FiniteCharacter chi = finite_character(a.chr, a.p, a.c);
    const int p = chi.prime();
    const cl::FiniteProfile g = finite_profile(a.g, p);
    check_section_size(chi, g);
    std::vector<std::string> labels;
    const auto pts = parse_finite_points(a.points.empty() ? "-2,-1,0,1,2,0:2,1:3" : a.points, p, labels);
    const double tol = a.common.tol.value_or(1e-8);
    const cl::ExplicitResult ex = cl::explicit_formula_rhs(chi, g, pts);
    const cl::FloatHImage h = cl::apply_H(cl::homogeneous_section(chi, g.g));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Complex ref = h(pts[i]);
      const double err = std::abs(ex.values[i] - ref);
      rep.checks.push_back({"point." + std::to_string(i), "critical-line integral = apply_H at " + labels[i], err,
                            tol, false, err <= tol});
      Json v;
      v["x"] = labels[i];
      v["spectral"] = cl::io::complex_to_json(ex.values[i]);
      v["direct"] = cl::io::complex_to_json(ref);
      values.push_back(v);
    }
    rep.checks.push_back({"quadrature", "tau quadrature error estimate", ex.error_estimate, tol, false,
                          ex.error_estimate <= tol});
  } else {
    const std::string gspec = a.g.empty() ? "gaussian" : a.g;
    cl::ArchimedeanProfile g;
    bool odd = false;
    if (gspec == "gaussian") {
      g = cl::gaussian_profile();
    } else if (gspec == "odd-gaussian") {
      g = cl::odd_gaussian_profile();
      odd = true;
    } else {
      g = load_profile(gspec, "--g");
    }
    if (!a.chr.empty()) {
      const cl::RealCharacter chi = real_character(a.chr, "even");
      if (chi.tau() != 0.0) throw InputError("--char: the direct route needs tau = 0");
      odd = chi.odd();
    }
    const auto xs = parse_real_points(a.points.empty() ? "-1.3,-0.4,0.25,0.8,1.7" : a.points);
    for (double x : xs)
      if (x == 0.0) throw InputError("--points: x = 0 is not in R^x");
    const double tol = a.common.tol.value_or(1e-4);
    const cl::RealHResult r = cl::apply_H_real(g, odd, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double err = std::abs(r.direct[i] - r.spectral[i]);
      rep.checks.push_back({"point." + std::to_string(i), "critical-line integral = direct H at x = " + csv_number(xs[i]),
                            err, tol, false, err <= tol});
      Json v;
      v["x"] = xs[i];
      v["spectral"] = cl::io::complex_to_json(r.spectral[i]);
      v["direct"] = cl::io::complex_to_json(r.direct[i]);
      values.push_back(v);
    }
    rep.checks.push_back({"quadrature", "tau quadrature error estimate", r.quadrature_error, tol, false,
                          r.quadrature_error <= tol});
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (a.common.format == "csv") {
    emit(a.common, cl::io::report_to_csv(rep, false));
  } else {
    Json j = cl::io::report_to_json(rep, false);
    j["place"] = a.place;
    j["values"] = std::move(values);
    emit(a.common, cl::io::dump_pretty(j));
  }
  return rep.overall() ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  bool timing = false;
};

int run_verify(const VerifyArgs& a) {
  cl::VerifyOptions opt;
  opt.seed = a.common.seed;
  opt.tolerance = a.common.tol;
  const cl::VerificationReport rep = with_spec("--suite", [&] { return cl::run_suite(a.suite, opt); });
  emit(a.common, a.common.format == "csv" ? cl::io::report_to_csv(rep, a.timing)
                                          : cl::io::dump_pretty(cl::io::report_to_json(rep, a.timing)));
  return rep.overall() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  cl::kernels::configure_threads();

  CLI::App app{"Local conductor operator: gamma factors, H on Q_p and R, spectra and verification suites.\n"
               "Finite characters: p:c[:gen=T1[,T2]][:chi_p=T], angles in turns (gen: rationals).\n"
               "Real characters: R:even|odd[:tau=X].\n"
               "Thread cap: CONDUCTOR_LAB_THREADS."};
  app.require_subcommand(1);

  GammaArgs ga;
  auto* gamma = app.add_subcommand("gamma", "Gamma and Lambda factors at s values or along the critical line");
  add_common(gamma, ga.common);
  gamma->add_option("--place", ga.place, "qp or real")->required()->check(CLI::IsMember({"qp", "real"}));
  gamma->add_option("--p", ga.p, "Prime (finite place)");
  gamma->add_option("--c", ga.c, "Conductor exponent; picks the first character of that conductor");
  gamma->add_option("--char", ga.chr, "Character spec, overrides --c and --parity");
  gamma->add_option("--parity", ga.parity, "Real place parity")->check(CLI::IsMember({"even", "odd"}));
  gamma->add_option("--s", ga.s, "Comma-separated complex s values, e.g. 0.5,0.3+1.7i");
  gamma->add_option("--tau-grid", ga.tau_grid, "a:b:n, evaluates at s = 1/2 + i tau");

  ApplyHArgs ha;
  auto* applyh = app.add_subcommand("apply-h", "Apply H to a function file");
  add_common(applyh, ha.common);
  applyh->add_option("--in", ha.in, "Function file")->required();
  applyh->add_option("--p", ha.p, "Expected prime");
  applyh->add_option("--route", ha.route, "definition (G convolution) or oracle (Fourier route)")
      ->check(CLI::IsMember({"definition", "oracle"}));

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Toeplitz truncation of H on radial functions");
  add_common(spectrum, sa.common);
  spectrum->add_option("--p", sa.p, "Prime");
  spectrum->add_option("--N", sa.N, "Window -N..N")->check(CLI::Range(2, cl::kMaxToeplitzN));

  PoissonArgs pa;
  auto* poisson = app.add_subcommand("poisson", "Multiplicative Poisson summation check");
  add_common(poisson, pa.common);
  poisson->add_option("--x", pa.x, "Base x > 1");
  poisson->add_option("--bump", pa.bump, "default or a profile file");
  poisson->add_option("--K", pa.K, "Terms on the direct side");
  poisson->add_option("--J", pa.J, "Terms on the dual side");

  ExplicitArgs ea;
  auto* expl = app.add_subcommand("explicit", "Compare H with the critical-line integral of Lambda");
  add_common(expl, ea.common);
  expl->add_option("--place", ea.place, "qp or real")->required()->check(CLI::IsMember({"qp", "real"}));
  expl->add_option("--p", ea.p, "Prime (finite place)");
  expl->add_option("--c", ea.c, "Conductor exponent (finite place)");
  expl->add_option("--char", ea.chr, "Character spec");
  expl->add_option("--g", ea.g, "qp: delta:K or a profile file; real: gaussian, odd-gaussian or a profile file");
  expl->add_option("--points", ea.points, "qp: V[:U],... for p^V U; real: x1,x2,...");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  add_common(verify, va.common);
  verify->add_option("--suite", va.suite, "function-space, gamma, conductor, circle, explicit, poisson or all");
  verify->add_flag("--timing", va.timing, "Include wall time (the report is then not byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (gamma->parsed()) return run_gamma(ga);
    if (applyh->parsed()) return run_apply_h(ha);
    if (spectrum->parsed()) return run_spectrum(sa);
    if (poisson->parsed()) return run_poisson(pa);
    if (expl->parsed()) return run_explicit(ea);
    if (verify->parsed()) return run_verify(va);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInput;
}
