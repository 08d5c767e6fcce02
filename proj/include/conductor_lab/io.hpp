#pragma once

// Serialization used by the CLI.
//
// Function files are JSON documents
//
//   {"p": 3, "a": 1, "b": 1, "mode": "float", "values": [[re, im], ...]}
//   {"p": 3, "a": 1, "b": 1, "mode": "exact", "values": ["u0,u1,v0,v1", ...]}
//
// with values[n] the value on coset n of the level (p, a, b). The exact
// fields stand for u0 + u1 sqrt(p) + (v0 + v1 sqrt(p)) log(p), each a rational
// "num" or "num/den". Coset n != 0 is p^{-a} n + p^b Z_p; n = 0 is the ball
// p^b Z_p. Images of H add "kappa" (same encoding as a value) and
// "cut_exponent" A: the function equals kappa / |t| for |t| > p^A.
//
// Doubles are written with 17 significant digits and non-finite doubles as
// null.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "conductor_lab/conductor.hpp"
#include "conductor_lab/function_space.hpp"
#include "conductor_lab/mellin.hpp"
#include "conductor_lab/verify.hpp"
#include "json.hpp"

namespace conductor_lab::io {

using Json = nlohmann::ordered_json;

/// Largest p^{a+b} accepted from a file.
inline constexpr std::int64_t kMaxFileCosets = std::int64_t{1} << 24;

/// Thrown for malformed input documents; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyFunction = std::variant<ExactFunction, FloatFunction>;
using AnyImage = std::variant<ExactHImage, FloatHImage>;

/// Compact JSON with %.17g numbers, one line, keys in insertion order.
std::string dump(const Json& j);
/// Same, indented by two spaces per level.
std::string dump_pretty(const Json& j);
/// %.17g, or "null" for NaN and infinities.
std::string format_double(double x);

Json complex_to_json(Complex z);

AnyFunction function_from_json(const Json& doc);
AnyFunction read_function_file(const std::string& path);
Json function_to_json(const ExactFunction& f);
Json function_to_json(const FloatFunction& f);
Json image_to_json(const ExactHImage& h);
Json image_to_json(const FloatHImage& h);

/// {"p": P, "g": {"k": [re, im], ...}}: g(p^k) for the listed exponents.
FiniteProfile finite_profile_from_json(const Json& doc);
/// {"v0": .., "h": .., "samples": [...], "g_at_zero": ..}
ArchimedeanProfile archimedean_profile_from_json(const Json& doc);
Json read_json_file(const std::string& path);

Json report_to_json(const VerificationReport& r, bool timing);
/// Header row, then one row per check.
std::string report_to_csv(const VerificationReport& r, bool timing);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace conductor_lab::io
