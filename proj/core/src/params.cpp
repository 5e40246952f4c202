#include "bellsta/params.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "bellsta/errors.hpp"

namespace bellsta {
namespace {

void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

}  // namespace

void SystemParams::validate() const {
  require(std::isfinite(xi) && xi > 0.0, "xi must be finite and > 0");
  require(std::isfinite(omega), "omega must be finite");
  require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be finite and >= 0");
  require(std::isfinite(omega0) && omega0 >= 0.0, "omega0 must be finite and >= 0");
  require(std::isfinite(t_width) && t_width > 0.0, "t_width must be finite and > 0");
  require(std::isfinite(t_i), "t_i must be finite");
  require(std::isfinite(t_f) && t_f > t_i, "t_f must be finite and > t_i");
  require(std::isfinite(kappa0) && kappa0 > 0.0, "kappa0 must be finite and > 0");
}

CrossingTimes crossing_times(const SystemParams& p) {
  if (!(std::isfinite(p.alpha) && p.alpha > 0.0))
    throw DomainError("crossing_times: alpha must be > 0");
  const double sweep2 = p.alpha * p.alpha;
  const double t13 = p.omega / sweep2;
  // Built as t13 +- shift with one shared rounded shift, so the side
  // crossings sit symmetrically around t13 up to one rounding of each sum.
  const double shift = 2.0 * p.xi / sweep2;
  return CrossingTimes{t13 + shift, t13, t13 - shift};
}

double adiabaticity_q(const SystemParams& p) {
  if (!(std::isfinite(p.omega0) && p.omega0 > 0.0))
    throw DomainError("adiabaticity_q: omega0 must be > 0");
  return p.alpha * p.alpha / (2.0 * p.omega0 * p.omega0);
}

void TimeGrid::validate() const {
  require(std::isfinite(t_i) && std::isfinite(t_f) && t_f > t_i,
          "time grid needs finite t_f > t_i");
  require(n_steps >= 2, "time grid needs n_steps >= 2");
}

namespace {

const char* const kConfigKeys[] = {"xi",      "omega", "alpha",  "omega0", "t_width",
                                   "t_i",     "t_f",   "kappa0", "n_steps"};

double number_at(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number())
    throw DomainError(std::string("config key \"") + key + "\" must be a number");
  return v.get<double>();
}

}  // namespace

RunConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : kConfigKeys) known = known || item.key() == key;
    if (!known) throw DomainError("unknown config key \"" + item.key() + "\"");
  }

  RunConfig config;
  SystemParams& p = config.params;
  p.xi = number_at(j, "xi", p.xi);
  p.omega = number_at(j, "omega", p.omega);
  p.alpha = number_at(j, "alpha", p.alpha);
  p.omega0 = number_at(j, "omega0", p.omega0);
  p.t_width = number_at(j, "t_width", p.t_width);
  p.kappa0 = number_at(j, "kappa0", p.kappa0);
  p.t_i = number_at(j, "t_i", 0.0);
  if (j.contains("t_f")) {
    p.t_f = number_at(j, "t_f", 0.0);
  } else {
    // Default window ends one crossing time past t12, i.e. t_f = 2 * t12.
    if (!(p.alpha > 0.0))
      throw DomainError("config key \"t_f\" is required when alpha == 0");
    p.t_f = 2.0 * crossing_times(p).t12;
  }
  if (j.contains("n_steps")) {
    const auto& v = j.at("n_steps");
    if (!v.is_number_integer())
      throw DomainError("config key \"n_steps\" must be an integer");
    config.n_steps = v.get<int>();
    if (config.n_steps < 2) throw DomainError("config key \"n_steps\" must be >= 2");
  }
  p.validate();
  return config;
}

std::string config_to_json(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["xi"] = config.params.xi;
  j["omega"] = config.params.omega;
  j["alpha"] = config.params.alpha;
  j["omega0"] = config.params.omega0;
  j["t_width"] = config.params.t_width;
  j["t_i"] = config.params.t_i;
  j["t_f"] = config.params.t_f;
  j["kappa0"] = config.params.kappa0;
  j["n_steps"] = config.n_steps;
  return j.dump(2) + "\n";
}

}  // namespace bellsta
