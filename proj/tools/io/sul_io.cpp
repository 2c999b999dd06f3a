#include "sul_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace sul::io {

namespace {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write(const json& j, std::string& out, int indent) {
  const std::string pad(indent + 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {  // std::map order: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += pad + json(k).dump() + ": ";
        write(v, out, indent + 2);
      }
      out += "\n" + std::string(indent, ' ') + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        write(j[i], out, indent + 2);
      }
      out += "\n" + std::string(indent, ' ') + "]";
      return;
    }
    case json::value_t::number_float:
      out += number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type");
  }
}

double profile(const std::variant<LaguerreFunction, GaussianMixture>& f, double r) {
  return std::visit([r](const auto& g) { return evaluate_radial_profile(g, r); }, f);
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const HarmonicFactor& h) { return {{"kind", std::string(to_string(h.kind))}, {"ell", h.ell}}; }

json to_json(const Weight& w) {
  return {{"d", w.d}, {"harmonic", to_json(w.harmonic)}, {"gamma_r", w.gamma_r}, {"sign_wrap", w.sign_wrap}};
}

json to_json(const GaussianMixture& f) {
  json terms = json::array();
  for (const auto& t : f.terms) terms.push_back({{"c", t.c}, {"a", t.a}});
  return {{"kind", "gaussian"},
          {"d", f.d},
          {"ell", f.harmonic.ell},
          {"harmonic_kind", std::string(to_string(f.harmonic.kind))},
          {"terms", terms}};
}

json to_json(const LaguerreFunction& f) {
  return {{"kind", "laguerre"},
          {"d", f.d},
          {"ell", f.harmonic.ell},
          {"harmonic_kind", std::string(to_string(f.harmonic.kind))},
          {"coeffs", f.coeffs}};
}

json to_json(const std::variant<LaguerreFunction, GaussianMixture>& f) {
  return std::visit([](const auto& g) { return to_json(g); }, f);
}

json to_json(const RadiusResult& r) {
  return {{"r", r.r},
          {"certified_tail_from", r.certified_tail_from},
          {"bracket_lo", r.bracket_lo},
          {"bracket_hi", r.bracket_hi},
          {"sign_at_infinity", r.sign_at_infinity},
          {"eventually_nonnegative", r.eventually_nonnegative()},
          {"value", r.value()}};
}

json to_json(const BoundReport& b) {
  json j = {{"s", b.s},
            {"weight", to_json(b.weight)},
            {"lower", opt(b.lower)},
            {"lower_method", b.lower_method},
            {"lower_floor", opt(b.lower_floor)},
            {"upper_analytic", opt(b.upper_analytic)},
            {"upper_numeric", opt(b.upper_numeric)},
            {"upper_method", b.upper_method},
            {"sharp", opt(b.sharp)},
            {"note", b.note}};
  if (b.shift_ell > 0) {
    j["shift"] = {{"ell", b.shift_ell}, {"dim", b.shifted_dim}, {"gamma", b.shifted_gamma}, {"sign", b.shifted_sign}};
  }
  return j;
}

json to_json(const Thm1Result& t) {
  json van = json::array();
  for (const auto& [a, r] : t.vanishing) van.push_back({{"a1", a}, {"r", r}});
  return {{"regime", t.regime},   {"analytic", t.analytic}, {"numeric", t.numeric}, {"witness", to_json(t.witness)},
          {"a", t.a},             {"b", t.b},               {"amplitude", t.amplitude}, {"rho", t.rho},
          {"r1", t.r1},           {"r2", t.r2},             {"vanishing", van}};
}

json to_json(const ShiftRecord& r) {
  return {{"source_dim", r.source_dim}, {"target_dim", r.target_dim},
          {"ell", r.ell},               {"sign_in", r.sign_in},
          {"sign_out", r.sign_out},     {"direction", std::string(to_string(r.direction))}};
}

json to_json(const Certification& c) {
  return {{"radius", to_json(c.radius)},
          {"integral", c.integral},
          {"coeff_norm", c.coeff_norm},
          {"integral_ok", c.integral_ok}};
}

json to_json(const OptimizeResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"r", s.r}, {"feasible", s.feasible}, {"certified", s.certified}, {"pivots", s.pivots}, {"rounds", s.rounds}});
  }
  return {{"r_upper", r.r_upper},
          {"N", r.N},
          {"lp_iterations", r.lp_iterations},
          {"fallback", r.fallback},
          {"analytic_upper", r.analytic_upper},
          {"witness", to_json(r.witness)},
          {"certification", to_json(r.certification)},
          {"steps", steps}};
}

json to_json(const Corollary4Report& r) {
  return {{"base", r.base},   {"ell", r.ell}, {"d", r.d},         {"s", r.s},
          {"sharp", r.sharp}, {"numeric", r.numeric}, {"gap", r.gap}, {"floor_ok", r.floor_ok},
          {"result", to_json(r.result)}};
}

json to_json(const SuiteResult& r) {
  return {{"name", r.name},         {"passed", r.passed},       {"checks", r.checks},
          {"max_error", r.max_error}, {"tolerance", r.tolerance}, {"failures", r.failures},
          {"notes", r.notes}};
}

json to_json(const NazarovReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) {
    pts.push_back({{"t", p.t}, {"numerator", p.numerator}, {"denominator", p.denominator}, {"ratio", p.ratio}});
  }
  return {{"delta", r.delta}, {"alpha", r.alpha}, {"gamma", r.gamma}, {"q", r.q},
          {"counterexample_regime", r.counterexample_regime}, {"increasing", r.increasing}, {"points", pts}};
}

Weight weight_from_json(const json& j) {
  const json h = field<json>(j, "harmonic");
  try {
    const HarmonicKind kind = harmonic_kind_from_string(field<std::string>(h, "kind"));
    return make_weight(field<int>(j, "d"), {kind, field<int>(h, "ell")}, field<double>(j, "gamma_r"),
                       j.contains("sign_wrap") ? field<bool>(j, "sign_wrap") : false);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid weight: ") + e.what());
  }
}

AnyFunction function_from_json(const json& j) {
  const std::string kind = field<std::string>(j, "kind");
  const int d = field<int>(j, "d");
  const int ell = field<int>(j, "ell");
  const std::string hk = j.contains("harmonic_kind") ? field<std::string>(j, "harmonic_kind") : "ONE";
  try {
    const HarmonicFactor h{harmonic_kind_from_string(hk), ell};
    if (kind == "gaussian") {
      std::vector<GaussianTerm> terms;
      for (const auto& t : field<json>(j, "terms")) terms.push_back({field<double>(t, "c"), field<double>(t, "a")});
      return make_mixture(d, h, std::move(terms));
    }
    if (kind == "laguerre") return make_laguerre(d, h, field<std::vector<double>>(j, "coeffs"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid function: ") + e.what());
  }
  throw ParseError("function kind must be \"gaussian\" or \"laguerre\"");
}

json document(std::string type, json body) {
  body["schema_version"] = kSchemaVersion;
  body["type"] = std::move(type);
  return body;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sweep_csv(const std::vector<BoundReport>& rows) {
  auto cell = [](const std::optional<double>& v) { return v ? number(*v) : std::string(); };
  std::string out = "s,d,gamma,ell,lower,lower_method,upper_analytic,upper_numeric,sharp\n";
  for (const auto& b : rows) {
    out += std::to_string(b.s) + "," + std::to_string(b.weight.d) + "," + number(b.weight.gamma_r) + "," +
           std::to_string(b.weight.harmonic.ell) + "," + cell(b.lower) + "," + b.lower_method + "," +
           cell(b.upper_analytic) + "," + cell(b.upper_numeric) + "," + cell(b.sharp) + "\n";
  }
  return out;
}

std::string profile_csv(const std::variant<LaguerreFunction, GaussianMixture>& f, double r_max, int samples) {
  if (samples < 1 || !(r_max > 0.0)) throw std::invalid_argument("profile_csv: need samples >= 1 and r_max > 0");
  std::string out = "r,value\n";
  for (int i = 0; i <= samples; ++i) {
    const double r = r_max * i / samples;
    out += number(r) + "," + number(profile(f, r)) + "\n";
  }
  return out;
}

}  // namespace sul::io
