#include "cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cli/validation.hpp"

namespace cavity::cli {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "model",          "models",       "N",
      "g",              "J",            "omega0",
      "sigma",          "delta",        "epsilon",
      "energy_min",     "energy_max",   "energy_points",
      "compare",        "tmax",         "dt",
      "first_transfer", "threshold",    "bins",
      "noon_threshold", "n_sweep",      "suite",
      "inject_hopping_fault", "out",
  };
  return keys;
}

// 1-based line of the first occurrence of "key" in the document, or 0.
int line_of_key(const std::string& text, const std::string& key) {
  const std::string needle = "\"" + key + "\"";
  const auto pos = text.find(needle);
  if (pos == std::string::npos) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
}

class Reporter {
 public:
  Reporter(const std::string& text, const std::string& origin)
      : text_(text), origin_(origin) {}

  [[noreturn]] void fail(const std::string& key, const std::string& msg,
                         bool from_flag) const {
    std::ostringstream os;
    if (from_flag) {
      os << "flag --" << key << ": " << msg;
    } else {
      os << origin_ << ":" << line_of_key(text_, key) << ": " << key << ": "
         << msg;
    }
    throw ConfigError(os.str());
  }

 private:
  const std::string& text_;
  const std::string& origin_;
};

template <typename T>
T get_as(const json& doc, const std::string& key, const Reporter& rep) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    rep.fail(key, "has the wrong type", false);
  }
}

}  // namespace

Model parse_model(const std::string& name) {
  if (name == "jc") return Model::jc;
  if (name == "harmonic") return Model::harmonic;
  if (name == "anharmonic-rpm") return Model::anharmonic_rpm;
  if (name == "anharmonic-oracle" || name == "anharmonic") {
    return Model::anharmonic_oracle;
  }
  throw ConfigError("unknown model '" + name + "'");
}

std::string model_name(Model m) {
  switch (m) {
    case Model::jc:
      return "jc";
    case Model::harmonic:
      return "harmonic";
    case Model::anharmonic_rpm:
      return "anharmonic-rpm";
    case Model::anharmonic_oracle:
      return "anharmonic-oracle";
  }
  return "unknown";
}

json RunConfig::to_json() const {
  json j;
  j["command"] = command;
  std::vector<std::string> names;
  for (Model m : models) names.push_back(model_name(m));
  j["models"] = names;
  j["N"] = params.n_photons;
  j["g"] = params.g;
  j["J"] = params.j_tun;
  j["omega0"] = params.omega0;
  j["sigma"] = static_cast<int>(params.sigma);
  j["delta"] = params.delta;
  j["epsilon"] = epsilon;
  j["energy_min"] = energy_min ? json(*energy_min) : json(nullptr);
  j["energy_max"] = energy_max ? json(*energy_max) : json(nullptr);
  j["energy_points"] = energy_points;
  j["compare"] = compare;
  j["tmax"] = t_max ? json(*t_max) : json(nullptr);
  j["dt"] = dt ? json(*dt) : json(nullptr);
  j["first_transfer"] = first_transfer;
  j["threshold"] = transfer_threshold;
  j["bins"] = bins;
  j["noon_threshold"] = noon_threshold;
  j["n_sweep"] = n_sweep;
  j["suite"] = suite;
  j["inject_hopping_fault"] = inject_hopping_fault;
  return j;
}

RunConfig load_config(const std::string& command, const std::string& text,
                      const std::string& origin, const Overrides& ov) {
  const Reporter rep(text, origin);
  RunConfig cfg;
  cfg.command = command;

  json doc = json::object();
  if (!text.empty()) {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      // nlohmann reports "parse error at line L, column C: ...".
      throw ConfigError(origin + ": " + e.what());
    }
    if (!doc.is_object()) {
      throw ConfigError(origin + ":1: top level must be a JSON object");
    }
  }
  for (const auto& [key, value] : doc.items()) {
    if (!known_keys().contains(key)) rep.fail(key, "unknown key", false);
  }

  std::vector<std::string> model_names;
  bool models_from_flag = false;
  if (doc.contains("model")) {
    model_names.push_back(get_as<std::string>(doc, "model", rep));
  }
  if (doc.contains("models")) {
    model_names = get_as<std::vector<std::string>>(doc, "models", rep);
  }
  if (!ov.models.empty()) {
    model_names = ov.models;
    models_from_flag = true;
  }
  if (model_names.empty()) {
    if (command == "dynamics") {
      model_names = {"harmonic", "anharmonic-oracle"};
    } else if (command == "noon") {
      model_names = {"anharmonic-oracle"};
    } else {
      model_names = {"anharmonic-rpm"};
    }
  }
  cfg.models.clear();
  for (const auto& name : model_names) {
    try {
      cfg.models.push_back(parse_model(name));
    } catch (const ConfigError& e) {
      rep.fail(doc.contains("models") ? "models" : "model", e.what(),
               models_from_flag);
    }
  }

  auto& p = cfg.params;
  if (doc.contains("N")) p.n_photons = get_as<int>(doc, "N", rep);
  if (doc.contains("g")) p.g = get_as<double>(doc, "g", rep);
  if (doc.contains("J")) p.j_tun = get_as<double>(doc, "J", rep);
  if (doc.contains("omega0")) p.omega0 = get_as<double>(doc, "omega0", rep);
  if (doc.contains("delta")) p.delta = get_as<double>(doc, "delta", rep);
  int sigma = static_cast<int>(p.sigma);
  if (doc.contains("sigma")) sigma = get_as<int>(doc, "sigma", rep);
  if (doc.contains("out")) cfg.out_dir = get_as<std::string>(doc, "out", rep);
  if (doc.contains("epsilon")) cfg.epsilon = get_as<double>(doc, "epsilon", rep);
  if (doc.contains("energy_min")) {
    cfg.energy_min = get_as<double>(doc, "energy_min", rep);
  }
  if (doc.contains("energy_max")) {
    cfg.energy_max = get_as<double>(doc, "energy_max", rep);
  }
  if (doc.contains("energy_points")) {
    cfg.energy_points = get_as<int>(doc, "energy_points", rep);
  }
  if (doc.contains("compare")) cfg.compare = get_as<bool>(doc, "compare", rep);
  if (doc.contains("tmax")) cfg.t_max = get_as<double>(doc, "tmax", rep);
  if (doc.contains("dt")) cfg.dt = get_as<double>(doc, "dt", rep);
  if (doc.contains("first_transfer")) {
    cfg.first_transfer = get_as<bool>(doc, "first_transfer", rep);
  }
  if (doc.contains("threshold")) {
    cfg.transfer_threshold = get_as<double>(doc, "threshold", rep);
  }
  if (doc.contains("bins")) cfg.bins = get_as<int>(doc, "bins", rep);
  if (doc.contains("noon_threshold")) {
    cfg.noon_threshold = get_as<double>(doc, "noon_threshold", rep);
  }
  if (doc.contains("n_sweep")) {
    cfg.n_sweep = get_as<std::vector<int>>(doc, "n_sweep", rep);
  }
  bool suite_given = false;
  if (doc.contains("suite")) {
    cfg.suite = get_as<std::vector<std::string>>(doc, "suite", rep);
    suite_given = true;
  }
  if (doc.contains("inject_hopping_fault")) {
    cfg.inject_hopping_fault = get_as<bool>(doc, "inject_hopping_fault", rep);
  }

  // Flags win over the document.
  if (ov.out_dir) cfg.out_dir = *ov.out_dir;
  if (ov.n_photons) p.n_photons = *ov.n_photons;
  if (ov.g) p.g = *ov.g;
  if (ov.j_tun) p.j_tun = *ov.j_tun;
  if (ov.omega0) p.omega0 = *ov.omega0;
  if (ov.sigma) sigma = *ov.sigma;
  if (ov.epsilon) cfg.epsilon = *ov.epsilon;
  if (ov.t_max) cfg.t_max = *ov.t_max;
  if (ov.dt) cfg.dt = *ov.dt;
  if (ov.bins) cfg.bins = *ov.bins;
  if (ov.compare) cfg.compare = true;
  if (ov.first_transfer) cfg.first_transfer = true;
  if (!ov.suite.empty()) {
    cfg.suite = ov.suite;
    suite_given = true;
  }

  // Semantic checks.
  auto check = [&](bool ok, const std::string& key, const std::string& flag,
                   bool flag_set, const std::string& msg) {
    if (!ok) rep.fail(flag_set ? flag : key, msg, flag_set);
  };
  check(p.n_photons >= 1, "N", "N", ov.n_photons.has_value(), "must be >= 1");
  check(sigma == 1 || sigma == -1, "sigma", "sigma", ov.sigma.has_value(),
        "must be +1 or -1");
  p.sigma = sigma > 0 ? Branch::plus : Branch::minus;
  check(std::isfinite(p.j_tun) && p.j_tun >= 0.0, "J", "J",
        ov.j_tun.has_value(), "must be >= 0");
  check(std::isfinite(p.g), "g", "g", ov.g.has_value(), "must be finite");
  check(std::isfinite(p.omega0), "omega0", "omega0", ov.omega0.has_value(),
        "must be finite");
  check(cfg.epsilon > 0.0, "epsilon", "epsilon", ov.epsilon.has_value(),
        "must be > 0");
  check(cfg.energy_points >= 1, "energy_points", "energy_points", false,
        "must be >= 1");
  check(cfg.bins >= 2, "bins", "bins", ov.bins.has_value(), "must be >= 2");
  check(!cfg.dt || *cfg.dt > 0.0, "dt", "dt", ov.dt.has_value(),
        "must be > 0");
  check(!cfg.t_max || *cfg.t_max >= 0.0, "tmax", "tmax", ov.t_max.has_value(),
        "must be >= 0");
  check(cfg.transfer_threshold > 0.0 && cfg.transfer_threshold <= 1.0,
        "threshold", "threshold", false, "must lie in (0, 1]");
  if (cfg.energy_min && cfg.energy_max) {
    check(*cfg.energy_max > *cfg.energy_min, "energy_max", "energy_max", false,
          "must exceed energy_min");
  }
  for (int n : cfg.n_sweep) {
    check(n >= 1, "n_sweep", "n_sweep", false, "entries must be >= 1");
  }

  std::vector<int> photon_numbers =
      cfg.n_sweep.empty() ? std::vector<int>{p.n_photons} : cfg.n_sweep;
  const std::string model_key = doc.contains("models") ? "models" : "model";
  for (Model m : cfg.models) {
    const bool even_only = m == Model::harmonic || m == Model::anharmonic_rpm;
    for (int n : photon_numbers) {
      if (even_only && n % 2 != 0) {
        rep.fail(model_key,
                 model_name(m) + " is unsupported for odd N = " +
                     std::to_string(n),
                 models_from_flag);
      }
    }
    if (m == Model::jc && p.delta != 0.0) {
      rep.fail("delta", "jc dynamics are only defined at delta = 0", false);
    }
    if (command == "dynamics" || command == "noon") {
      if (m == Model::anharmonic_rpm) {
        rep.fail(model_key,
                 "anharmonic-rpm yields resolvents only; use "
                 "anharmonic-oracle for time series",
                 models_from_flag);
      }
    }
  }
  if (command == "noon" && !(p.j_tun > 0.0) && !cfg.t_max) {
    rep.fail("J", "noon sampling window needs J > 0 (or an explicit tmax)",
             ov.j_tun.has_value());
  }

  if (command == "validate") {
    if (!suite_given) cfg.suite = all_check_names();
    if (cfg.suite.empty()) {
      rep.fail("suite", "empty suite selection", !ov.suite.empty());
    }
    for (const auto& name : cfg.suite) {
      const auto all = all_check_names();
      if (std::find(all.begin(), all.end(), name) == all.end()) {
        rep.fail("suite", "unknown check '" + name + "'", !ov.suite.empty());
      }
    }
  }
  return cfg;
}

}  // namespace cavity::cli
