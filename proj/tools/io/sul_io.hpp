#pragma once

// JSON/CSV serialization for the CLI. Output is canonical: sorted keys,
// floats printed with 17 significant digits, non-finite numbers as null.

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"

#include "sul/bounds.hpp"
#include "sul/optimize.hpp"
#include "sul/radius.hpp"
#include "sul/reps.hpp"
#include "sul/shift.hpp"
#include "sul/transform_check.hpp"
#include "sul/weights.hpp"

namespace sul::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Thrown for unreadable, malformed or schema-violating input documents.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string dump(const json& j);
json parse(const std::string& text);

json to_json(const HarmonicFactor& h);
json to_json(const Weight& w);
json to_json(const GaussianMixture& f);
json to_json(const LaguerreFunction& f);
json to_json(const std::variant<LaguerreFunction, GaussianMixture>& f);
json to_json(const RadiusResult& r);
json to_json(const BoundReport& b);
json to_json(const Thm1Result& t);
json to_json(const ShiftRecord& r);
json to_json(const Certification& c);
json to_json(const OptimizeResult& r);
json to_json(const Corollary4Report& r);
json to_json(const SuiteResult& r);
json to_json(const NazarovReport& r);

Weight weight_from_json(const json& j);
using AnyFunction = std::variant<GaussianMixture, LaguerreFunction>;
AnyFunction function_from_json(const json& j);

/// Adds "schema_version" and "type" to an object.
json document(std::string type, json body);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::filesystem::path& path, const std::string& content);
/// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

/// One row per report: s,d,gamma,ell,lower,lower_method,upper_analytic,upper_numeric,sharp.
std::string sweep_csv(const std::vector<BoundReport>& rows);

/// "r,value" samples of the radial profile on [0, r_max].
std::string profile_csv(const std::variant<LaguerreFunction, GaussianMixture>& f, double r_max, int samples);

}  // namespace sul::io
