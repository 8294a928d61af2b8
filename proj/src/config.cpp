#include "wbm/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wbm/csv.hpp"
#include "wbm/errors.hpp"

namespace wbm {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "name",           "geometry.kind",  "geometry.center_x",
      "geometry.center_y", "geometry.radius", "geometry.a",
      "geometry.b",     "geometry.tau",   "box.origin_x",
      "box.origin_y",   "box.lx",         "box.ly",
      "k",              "bc.type",        "bc.field",
      "bc.angle",       "bc.source_x",    "bc.source_y",
      "bc.value",       "formulations",   "gamma",
      "quad_factor",    "collocation.arc_length_weights",
      "solver.method",  "solver.epsilon", "t_sweep",
      "n_p",            "output"};
  return keys;
}

class KeyValues {
 public:
  explicit KeyValues(std::map<std::string, std::string> values)
      : values_(std::move(values)) {}

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  const std::string& text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing required key '" + key + "'");
    return it->second;
  }

  double number(const std::string& key) const { return parse_number(key, text(key)); }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  static double parse_number(const std::string& key, const std::string& s) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) {
      throw ConfigError("key '" + key + "': cannot parse number '" + s + "'");
    }
    return v;
  }

 private:
  std::map<std::string, std::string> values_;
};

std::vector<double> parse_sweep(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split(s, ',')) {
    if (item.empty()) continue;
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(KeyValues::parse_number("t_sweep", parts[0]));
      continue;
    }
    if (parts.size() > 3) throw ConfigError("t_sweep: malformed range '" + item + "'");
    const double lo = KeyValues::parse_number("t_sweep", parts[0]);
    const double hi = KeyValues::parse_number("t_sweep", parts[1]);
    const double step = parts.size() == 3 ? KeyValues::parse_number("t_sweep", parts[2]) : 1.0;
    if (!(step > 0.0)) throw ConfigError("t_sweep: range step must be positive");
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    if (count < 0 || count > 100000) throw ConfigError("t_sweep: bad range '" + item + "'");
    for (long i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("key '" + key + "': expected true or false, got '" + s + "'");
}

template <typename F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (!known_keys().count(key)) {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (raw.count(key)) {
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    raw[key] = trim(t.substr(eq + 1));
  }
  const KeyValues kv(std::move(raw));

  return wrap([&] {
    ExperimentConfig cfg;
    if (kv.has("name")) cfg.name = kv.text("name");
    if (cfg.name.find(',') != std::string::npos) {
      throw ConfigError("name must not contain commas");
    }

    const Point2 center(kv.number("geometry.center_x"), kv.number("geometry.center_y"));
    switch (curve_kind_from_string(kv.text("geometry.kind"))) {
      case CurveKind::kDisk:
        cfg.curve = BoundaryCurve::disk(center, kv.number("geometry.radius"));
        break;
      case CurveKind::kCrescent:
        cfg.curve = BoundaryCurve::crescent(center, kv.number("geometry.a"),
                                            kv.number("geometry.b"));
        break;
      case CurveKind::kInvertedEllipse:
        cfg.curve = BoundaryCurve::inverted_ellipse(center, kv.number("geometry.tau"));
        break;
    }

    cfg.box = BoundingBox(Point2(kv.number("box.origin_x"), kv.number("box.origin_y")),
                          kv.number("box.lx"), kv.number("box.ly"));
    cfg.k = kv.number("k");

    const BoundaryType type = boundary_type_from_string(kv.text("bc.type"));
    AnalyticField field;
    switch (field_kind_from_string(kv.text("bc.field"))) {
      case FieldKind::kPlaneWave:
        field = AnalyticField::plane_wave(cfg.k, kv.number("bc.angle"));
        break;
      case FieldKind::kPointSource:
        field = AnalyticField::point_source(
            cfg.k, Point2(kv.number("bc.source_x"), kv.number("bc.source_y")));
        break;
      case FieldKind::kConstant:
        field = AnalyticField::constant(kv.number_or("bc.value", 1.0));
        break;
    }
    cfg.bc = BoundaryCondition(type, field);

    if (kv.has("formulations")) {
      cfg.formulations.clear();
      for (const auto& f : split(kv.text("formulations"), ',')) {
        if (!f.empty()) cfg.formulations.push_back(formulation_from_string(f));
      }
    }
    cfg.gamma = kv.number_or("gamma", cfg.gamma);
    cfg.quad_factor = kv.number_or("quad_factor", cfg.quad_factor);
    if (kv.has("collocation.arc_length_weights")) {
      cfg.arc_length_weights = parse_bool("collocation.arc_length_weights",
                                          kv.text("collocation.arc_length_weights"));
    }
    if (kv.has("solver.method")) {
      const auto method = solver_method_from_string(kv.text("solver.method"));
      cfg.solver = method == SolverMethod::kTruncatedSvd ? SolverOptions::tsvd()
                                                         : SolverOptions::cpqr();
    }
    cfg.solver.epsilon = kv.number_or("solver.epsilon", cfg.solver.epsilon);
    cfg.t_sweep = parse_sweep(kv.text("t_sweep"));
    if (kv.has("n_p")) {
      const double np = kv.number("n_p");
      if (np != std::floor(np) || np < 1) throw ConfigError("n_p must be a positive integer");
      cfg.n_points = static_cast<int>(np);
    }
    if (kv.has("output")) cfg.output = kv.text("output");
    validate(cfg);
    return cfg;
  });
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  const auto kv = [&](const std::string& key, const std::string& value) {
    os << key << " = " << value << '\n';
  };
  const auto num = [&](const std::string& key, double v) { kv(key, format_double(v)); };

  kv("name", cfg.name);
  kv("geometry.kind", to_string(cfg.curve.kind()));
  num("geometry.center_x", cfg.curve.center().x());
  num("geometry.center_y", cfg.curve.center().y());
  switch (cfg.curve.kind()) {
    case CurveKind::kDisk: num("geometry.radius", cfg.curve.radius()); break;
    case CurveKind::kCrescent:
      num("geometry.a", cfg.curve.a());
      num("geometry.b", cfg.curve.b());
      break;
    case CurveKind::kInvertedEllipse: num("geometry.tau", cfg.curve.tau()); break;
  }
  num("box.origin_x", cfg.box.origin.x());
  num("box.origin_y", cfg.box.origin.y());
  num("box.lx", cfg.box.lx);
  num("box.ly", cfg.box.ly);
  num("k", cfg.k);
  kv("bc.type", to_string(cfg.bc.type));
  kv("bc.field", to_string(cfg.bc.field.kind));
  switch (cfg.bc.field.kind) {
    case FieldKind::kPlaneWave: num("bc.angle", cfg.bc.field.angle); break;
    case FieldKind::kPointSource:
      num("bc.source_x", cfg.bc.field.source.x());
      num("bc.source_y", cfg.bc.field.source.y());
      break;
    case FieldKind::kConstant: num("bc.value", cfg.bc.field.value.real()); break;
  }
  std::string forms;
  for (const auto f : cfg.formulations) {
    if (!forms.empty()) forms += ",";
    forms += to_string(f);
  }
  kv("formulations", forms);
  num("gamma", cfg.gamma);
  num("quad_factor", cfg.quad_factor);
  kv("collocation.arc_length_weights", cfg.arc_length_weights ? "true" : "false");
  kv("solver.method", to_string(cfg.solver.method));
  num("solver.epsilon", cfg.solver.epsilon);
  std::string sweep;
  for (const double t : cfg.t_sweep) {
    if (!sweep.empty()) sweep += ",";
    sweep += format_double(t);
  }
  kv("t_sweep", sweep);
  kv("n_p", std::to_string(cfg.n_points));
  if (!cfg.output.empty()) kv("output", cfg.output);
  return os.str();
}

}  // namespace wbm
