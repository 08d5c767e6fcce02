#include "conductor_lab/characters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace conductor_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t totient_prime_power(int p, int c) { return c == 0 ? 1 : ipow(p, c - 1) * (p - 1); }

std::int64_t multiplicative_order(std::int64_t g, std::int64_t m) {
  std::int64_t x = mod(g, m), k = 1;
  while (x != 1) {
    x = mul_mod(x, g, m);
    ++k;
  }
  return k;
}

/// turn * den as an integer, or throw when the image is not a root of the right order.
std::int64_t turn_numerator(const Rational& turn, std::int64_t order, std::int64_t den) {
  Rational scaled = turn * Rational(static_cast<long>(order));
  scaled.canonicalize();
  if (scaled.get_den() != 1)
    throw std::invalid_argument("generator image order does not divide the generator order");
  Rational num = turn * Rational(static_cast<long>(den));
  num.canonicalize();
  return mod(static_cast<std::int64_t>(num.get_num().get_si()), den);
}

Rational parse_rational(const std::string& text) {
  const auto dot = text.find('.');
  Rational r;
  if (dot == std::string::npos) {
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  } else {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-") throw std::invalid_argument("bad rational '" + text + "'");
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    r = Rational(num, den);
  }
  r.canonicalize();
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

int primitive_root(int p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("primitive_root: p = 2 has no cyclic unit group in general");
  const std::int64_t m = static_cast<std::int64_t>(p) * p;
  const std::int64_t order = static_cast<std::int64_t>(p) * (p - 1);
  for (int g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    if (multiplicative_order(g, m) == order) return g;
  }
  throw std::logic_error("no primitive root found");
}

FiniteCharacter FiniteCharacter::unramified(int p, double chi_p_turns) {
  return FiniteCharacter(p, 0, {}, chi_p_turns);
}

FiniteCharacter::FiniteCharacter(int p, int c, std::vector<Rational> generator_turns, double chi_p_turns)
    : p_(p), c_(c), gen_turns_(std::move(generator_turns)), chi_p_turns_(chi_p_turns) {
  require_prime(p);
  if (c < 0) throw std::invalid_argument("conductor exponent must be >= 0");
  modulus_ = ipow(p, c);
  auto table = std::make_shared<std::vector<std::int64_t>>(static_cast<std::size_t>(modulus_), -1);
  if (c == 0) {
    if (!gen_turns_.empty()) throw std::invalid_argument("unramified character takes no generator images");
    den_ = 1;
    (*table)[0] = 0;
  } else if (p != 2 || c <= 2) {
    if (gen_turns_.size() != 1) throw std::invalid_argument("expected exactly one generator image");
    const std::int64_t order = totient_prime_power(p, c);
    den_ = order;
    const std::int64_t g = (p == 2) ? modulus_ - 1 : primitive_root(p);
    const std::int64_t k = turn_numerator(gen_turns_[0], order, den_);
    std::int64_t r = 1;
    for (std::int64_t e = 0; e < order; ++e) {
      (*table)[static_cast<std::size_t>(r)] = mul_mod(k, e, den_);
      r = mul_mod(r, g, modulus_);
    }
  } else {
    if (gen_turns_.size() != 2) throw std::invalid_argument("p = 2, c >= 3 needs images of -1 and 5");
    den_ = ipow(2, c - 2);
    const std::int64_t k1 = turn_numerator(gen_turns_[0], 2, den_);
    const std::int64_t k2 = turn_numerator(gen_turns_[1], den_, den_);
    for (int e1 = 0; e1 < 2; ++e1) {
      std::int64_t r = (e1 == 0) ? 1 : modulus_ - 1;
      for (std::int64_t e2 = 0; e2 < den_; ++e2) {
        (*table)[static_cast<std::size_t>(r)] = mod(k1 * e1 + k2 * e2, den_);
        r = mul_mod(r, 5, modulus_);
      }
    }
  }
  table_ = std::move(table);
  if (conductor_exponent() != c_)
    throw std::invalid_argument("generator images do not give conductor exponent " + std::to_string(c_) +
                                " (computed " + std::to_string(conductor_exponent()) + ")");
}

std::vector<FiniteCharacter> FiniteCharacter::with_conductor(int p, int c, double chi_p_turns) {
  std::vector<FiniteCharacter> out;
  if (c == 0) {
    out.push_back(unramified(p, chi_p_turns));
    return out;
  }
  auto try_add = [&](std::vector<Rational> turns) {
    try {
      out.emplace_back(p, c, std::move(turns), chi_p_turns);
    } catch (const std::invalid_argument&) {
      // imprimitive: conductor smaller than c
    }
  };
  if (p != 2 || c <= 2) {
    if (p == 2 && c == 1) return out;
    const std::int64_t order = totient_prime_power(p, c);
    for (std::int64_t k = 0; k < order; ++k)
      try_add({Rational(static_cast<long>(k), static_cast<unsigned long>(order))});
  } else {
    const std::int64_t den = ipow(2, c - 2);
    for (int k1 = 0; k1 < 2; ++k1)
      for (std::int64_t k2 = 0; k2 < den; ++k2)
        try_add({Rational(k1, 2), Rational(static_cast<long>(k2), static_cast<unsigned long>(den))});
  }
  return out;
}

std::int64_t FiniteCharacter::unit_turn(std::int64_t residue) const {
  const std::int64_t r = mod(residue, modulus_);
  const std::int64_t t = (*table_)[static_cast<std::size_t>(r)];
  if (t < 0) throw std::domain_error("character evaluated at a non-unit residue");
  return t;
}

std::complex<double> FiniteCharacter::eval_unit(std::int64_t residue) const {
  const double a = kTwoPi * static_cast<double>(unit_turn(residue)) / static_cast<double>(den_);
  return {std::cos(a), std::sin(a)};
}

std::complex<double> FiniteCharacter::value_at_p() const {
  const double a = kTwoPi * chi_p_turns_;
  return {std::cos(a), std::sin(a)};
}

std::complex<double> FiniteCharacter::eval(const PAdicPoint& x) const {
  if (x.is_zero()) throw std::domain_error("character evaluated at 0");
  if (x.prime() != p_) throw std::invalid_argument("mixed primes");
  const std::int64_t r = c_ == 0 ? 0 : x.unit_residue(c_);
  const double a = kTwoPi * (static_cast<double>(unit_turn(r)) / static_cast<double>(den_) +
                             chi_p_turns_ * x.valuation());
  return {std::cos(a), std::sin(a)};
}

int FiniteCharacter::sign() const {
  if (c_ == 0) return 1;
  const std::int64_t t = unit_turn(modulus_ - 1);
  return t == 0 ? 1 : -1;
}

int FiniteCharacter::conductor_exponent() const {
  for (int cc = 0; cc <= c_; ++cc) {
    const std::int64_t step = ipow(p_, cc);
    bool trivial = true;
    // residues congruent to 1 mod p^cc (for cc = 0 every unit)
    for (std::int64_t r = 1; r < modulus_ && trivial; r += (cc == 0 ? 1 : step)) {
      if (r % p_ == 0) continue;
      trivial = (*table_)[static_cast<std::size_t>(r)] == 0;
    }
    if (trivial) return cc;
  }
  return c_;
}

FiniteCharacter FiniteCharacter::twist(double tau) const {
  FiniteCharacter out = *this;
  out.chi_p_turns_ -= tau * std::log(static_cast<double>(p_)) / kTwoPi;
  return out;
}

FiniteCharacter FiniteCharacter::inverse() const {
  FiniteCharacter out = *this;
  for (auto& t : out.gen_turns_) {
    t = -t;
    t.canonicalize();
  }
  out.chi_p_turns_ = -chi_p_turns_;
  auto table = std::make_shared<std::vector<std::int64_t>>(*table_);
  for (auto& t : *table)
    if (t > 0) t = den_ - t;
  out.table_ = std::move(table);
  return out;
}

bool FiniteCharacter::is_real_valued() const {
  for (const auto t : *table_)
    if (t > 0 && 2 * t != den_) return false;
  const double twice = 2.0 * chi_p_turns_;
  return std::abs(twice - std::round(twice)) < 1e-15;
}

std::string FiniteCharacter::to_spec() const {
  std::ostringstream os;
  os.precision(17);
  os << p_ << ':' << c_;
  if (c_ > 0) {
    os << ":gen=";
    for (std::size_t i = 0; i < gen_turns_.size(); ++i) os << (i ? "," : "") << gen_turns_[i].get_str();
  }
  os << ":chi_p=" << chi_p_turns_;
  return os.str();
}

std::complex<double> RealCharacter::eval(double x) const {
  if (x == 0.0) throw std::domain_error("character evaluated at 0");
  const double a = tau_ * std::log(std::abs(x));
  const std::complex<double> w{std::cos(a), std::sin(a)};
  return (odd_ && x < 0) ? -w : w;
}

std::string RealCharacter::to_spec() const {
  std::ostringstream os;
  os.precision(17);
  os << "R:" << (odd_ ? "odd" : "even") << ":tau=" << tau_;
  return os.str();
}

FloatFunction homogeneous_section(const FiniteCharacter& chi, const std::map<int, Complex>& g) {
  const int p = chi.prime();
  if (g.empty()) return FloatFunction::zero(p);
  const int kmin = g.begin()->first;
  const int kmax = g.rbegin()->first;
  const int c = chi.c();
  const Level lv{p, kmax, -kmin + std::max(c, 1)};
  const FiniteCharacter inv = chi.inverse();
  std::vector<Complex> vals(static_cast<std::size_t>(lv.dim()));
  for (std::int64_t n = 1; n < lv.dim(); ++n) {
    const int vn = valuation(n, p);
    const int w = -lv.a + vn;  // valuation of t
    const auto it = g.find(-w);
    if (it == g.end()) continue;
    std::int64_t u = n;
    for (int i = 0; i < vn; ++i) u /= p;
    const Complex chi_val = inv.eval(PAdicPoint::from_unit(p, w, u, std::max(c, 1)));
    vals[static_cast<std::size_t>(n)] = it->second * chi_val;
  }
  return FloatFunction(lv, std::move(vals));
}

ExactFunction homogeneous_section_exact(const FiniteCharacter& chi, const std::map<int, Rational>& g) {
  if (!chi.is_real_valued()) throw std::domain_error("exact homogeneous section needs a real-valued character");
  std::map<int, Complex> gc;
  for (const auto& [k, v] : g) gc[k] = v.get_d();
  const FloatFunction f = homogeneous_section(chi, gc);
  std::vector<ExactScalar> vals(static_cast<std::size_t>(f.dim()));
  for (std::int64_t n = 1; n < f.dim(); ++n) {
    const Complex v = f.value(n);
    if (v == Complex{}) continue;
    const int k = -f.level().coset_valuation(n);
    const Rational& gk = g.at(k);
    vals[static_cast<std::size_t>(n)] = ExactScalar(v.real() * gk.get_d() >= 0 ? gk : Rational(-gk));
  }
  return ExactFunction(f.level(), std::move(vals));
}

FiniteCharacter parse_finite_character(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 2) throw std::invalid_argument("character spec needs at least p:c, got '" + spec + "'");
  int p = 0, c = 0;
  try {
    p = std::stoi(parts[0]);
    c = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw std::invalid_argument("character spec: bad p or c in '" + spec + "'");
  }
  std::vector<Rational> gens;
  double chi_p = 0.0;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw std::invalid_argument("character spec: expected key=value at field " + std::to_string(i + 1));
    const std::string key = parts[i].substr(0, eq);
    const std::string val = parts[i].substr(eq + 1);
    if (key == "gen") {
      for (const auto& t : split(val, ',')) gens.push_back(parse_rational(t));
    } else if (key == "chi_p") {
      chi_p = std::stod(val);
    } else {
      throw std::invalid_argument("character spec: unknown key '" + key + "' at field " + std::to_string(i + 1));
    }
  }
  return FiniteCharacter(p, c, std::move(gens), chi_p);
}

RealCharacter parse_real_character(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 2 || parts[0] != "R") throw std::invalid_argument("real character spec must start with R:, got '" + spec + "'");
  bool odd;
  if (parts[1] == "even")
    odd = false;
  else if (parts[1] == "odd")
    odd = true;
  else
    throw std::invalid_argument("real character spec: parity must be even or odd at field 2");
  double tau = 0.0;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    if (parts[i].rfind("tau=", 0) != 0) throw std::invalid_argument("real character spec: expected tau=... at field " + std::to_string(i + 1));
    tau = std::stod(parts[i].substr(4));
  }
  return RealCharacter(odd, tau);
}

}  // namespace conductor_lab
