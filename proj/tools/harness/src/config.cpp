#include "sbpstab/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace sbpstab::harness {

using nlohmann::json;

std::string_view to_string(Equation value) {
  return value == Equation::Burgers ? "burgers" : "euler2d";
}

std::string_view to_string(RunMode value) {
  switch (value) {
    case RunMode::Simulate: return "simulate";
    case RunMode::Spectrum: return "spectrum";
    case RunMode::Growth: return "growth";
  }
  return "spectrum";
}

std::string_view to_string(PerturbationKind value) {
  switch (value) {
    case PerturbationKind::None: return "none";
    case PerturbationKind::WorstMode: return "worst-mode";
    case PerturbationKind::Cosine: return "cosine";
    case PerturbationKind::Random: return "random";
  }
  return "none";
}

namespace {

// Reads members of one JSON object and rejects keys nobody asked for.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string where) : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) throw ConfigError(where_ + ": expected an object");
  }

  template <typename T>
  void get(const char* key, T& out) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    if (it == obj_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception& err) {
      throw ConfigError(where_ + "." + key + ": " + err.what());
    }
  }

  const json* child(const char* key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  void finish() const {
    for (const auto& item : obj_.items()) {
      if (!seen_.contains(item.key())) {
        throw ConfigError(where_ + ": unknown key '" + item.key() + "'");
      }
    }
  }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> seen_;
};

template <typename Enum, typename Parser>
Enum parse_name(const std::string& name, Parser parser, const std::string& what) {
  const auto parsed = parser(name);
  if (!parsed) throw ConfigError("unknown " + what + " '" + name + "'");
  return *parsed;
}

std::optional<Equation> parse_equation(std::string_view name) {
  if (name == "burgers") return Equation::Burgers;
  if (name == "euler2d") return Equation::Euler2d;
  return std::nullopt;
}

std::optional<RunMode> parse_mode(std::string_view name) {
  if (name == "simulate") return RunMode::Simulate;
  if (name == "spectrum") return RunMode::Spectrum;
  if (name == "growth") return RunMode::Growth;
  return std::nullopt;
}

std::optional<PerturbationKind> parse_perturbation(std::string_view name) {
  if (name == "none") return PerturbationKind::None;
  if (name == "worst-mode") return PerturbationKind::WorstMode;
  if (name == "cosine") return PerturbationKind::Cosine;
  if (name == "random") return PerturbationKind::Random;
  return std::nullopt;
}

}  // namespace

void validate(const ExperimentConfig& c) {
  if (c.degree < 1) throw ConfigError("degree must be >= 1");
  if (c.elements_x < 1 || c.elements_y < 1) throw ConfigError("element counts must be >= 1");
  if (!(c.t_end > 0.0)) throw ConfigError("t_end must be > 0");
  if (!(c.cfl > 0.0)) throw ConfigError("cfl must be > 0");
  if (!(c.fd_step > 0.0)) throw ConfigError("fd_step must be > 0");
  if (c.trace_stride < 1) throw ConfigError("trace_stride must be >= 1");
  if (c.equation == Equation::Burgers) {
    if (c.burgers.alpha < 0.0 || c.burgers.alpha > 1.0) {
      throw ConfigError("alpha must lie in [0, 1]");
    }
    if (c.baseflow.projection_degree < 0 || c.baseflow.projection_degree > c.degree) {
      throw ConfigError("projection_degree must lie in [0, degree]");
    }
    if (c.baseflow.projection == ProjectionKind::EndpointInterpolation &&
        c.baseflow.projection_degree != 1) {
      throw ConfigError("endpoint projection needs projection_degree 1");
    }
    if (c.perturbation.amplitude < 0.0) throw ConfigError("perturbation amplitude must be >= 0");
  } else {
    if (!(c.baseflow.amplitude >= 0.0 && c.baseflow.amplitude < 1.0)) {
      throw ConfigError("density wave amplitude must lie in [0, 1)");
    }
  }
}

json to_json(const ExperimentConfig& c) {
  json doc;
  doc["name"] = c.name;
  doc["description"] = c.description;
  doc["equation"] = to_string(c.equation);
  doc["degree"] = c.degree;
  if (c.equation == Equation::Burgers) {
    doc["mesh"] = {{"elements", c.elements_x}};
    doc["scheme"] = {{"alpha", c.burgers.alpha},
                     {"surface", burgers::to_string(c.burgers.surface)},
                     {"carpenter_volume", c.burgers.carpenter_volume}};
    doc["baseflow"] = {{"frequency", c.baseflow.frequency},
                       {"phase", c.baseflow.phase},
                       {"offset", c.baseflow.offset},
                       {"projection_degree", c.baseflow.projection_degree},
                       {"projection", to_string(c.baseflow.projection)}};
    doc["perturbation"] = {{"kind", to_string(c.perturbation.kind)},
                           {"amplitude", c.perturbation.amplitude}};
  } else {
    doc["mesh"] = {{"elements_x", c.elements_x}, {"elements_y", c.elements_y}};
    doc["scheme"] = {{"volume", euler::to_string(c.euler.volume)},
                     {"surface", euler::to_string(c.euler.surface)}};
    doc["baseflow"] = {{"amplitude", c.baseflow.amplitude}};
  }
  doc["mode"] = to_string(c.mode);
  doc["cfl"] = c.cfl;
  doc["t_end"] = c.t_end;
  doc["integrator"] = to_string(c.integrator);
  doc["fd_step"] = c.fd_step;
  doc["trace_stride"] = c.trace_stride;
  doc["output_dir"] = c.output_dir;
  doc["seed"] = c.seed;
  return doc;
}

ExperimentConfig config_from_json(const json& input) {
  const json& doc = (input.is_object() && input.contains("config")) ? input.at("config") : input;
  ExperimentConfig c;
  ObjectReader top(doc, "config");
  top.get("name", c.name);
  top.get("description", c.description);
  std::string equation(to_string(c.equation));
  top.get("equation", equation);
  c.equation = parse_name<Equation>(equation, parse_equation, "equation");
  if (c.equation == Equation::Euler2d) {
    // Defaults of the density-wave setup.
    c.elements_x = 4;
    c.elements_y = 4;
    c.degree = 5;
    c.integrator = Integrator::Lsrk54;
    c.mode = RunMode::Simulate;
  }
  top.get("degree", c.degree);

  if (const json* mesh = top.child("mesh")) {
    ObjectReader r(*mesh, "config.mesh");
    if (c.equation == Equation::Burgers) {
      r.get("elements", c.elements_x);
    } else {
      r.get("elements_x", c.elements_x);
      r.get("elements_y", c.elements_y);
    }
    r.finish();
  }
  if (const json* scheme = top.child("scheme")) {
    ObjectReader r(*scheme, "config.scheme");
    if (c.equation == Equation::Burgers) {
      r.get("alpha", c.burgers.alpha);
      std::string surface(burgers::to_string(c.burgers.surface));
      r.get("surface", surface);
      c.burgers.surface = parse_name<burgers::FluxId>(
          surface, [](std::string_view s) { return burgers::parse_flux_id(s); }, "Burgers flux");
      r.get("carpenter_volume", c.burgers.carpenter_volume);
    } else {
      std::string volume(euler::to_string(c.euler.volume));
      std::string surface(euler::to_string(c.euler.surface));
      r.get("volume", volume);
      r.get("surface", surface);
      const auto parse = [](std::string_view s) { return euler::parse_flux_id(s); };
      c.euler.volume = parse_name<euler::FluxId>(volume, parse, "Euler flux");
      c.euler.surface = parse_name<euler::FluxId>(surface, parse, "Euler flux");
    }
    r.finish();
  }
  if (const json* base = top.child("baseflow")) {
    ObjectReader r(*base, "config.baseflow");
    if (c.equation == Equation::Burgers) {
      r.get("frequency", c.baseflow.frequency);
      r.get("phase", c.baseflow.phase);
      r.get("offset", c.baseflow.offset);
      r.get("projection_degree", c.baseflow.projection_degree);
      std::string kind(to_string(c.baseflow.projection));
      r.get("projection", kind);
      c.baseflow.projection = parse_name<ProjectionKind>(
          kind, [](std::string_view s) { return parse_projection_kind(s); }, "projection");
    } else {
      r.get("amplitude", c.baseflow.amplitude);
    }
    r.finish();
  }
  if (const json* pert = top.child("perturbation")) {
    if (c.equation != Equation::Burgers) {
      throw ConfigError("config.perturbation only applies to burgers");
    }
    ObjectReader r(*pert, "config.perturbation");
    std::string kind(to_string(c.perturbation.kind));
    r.get("kind", kind);
    c.perturbation.kind = parse_name<PerturbationKind>(kind, parse_perturbation, "perturbation");
    r.get("amplitude", c.perturbation.amplitude);
    r.finish();
  }
  std::string mode(to_string(c.mode));
  top.get("mode", mode);
  c.mode = parse_name<RunMode>(mode, parse_mode, "mode");
  top.get("cfl", c.cfl);
  top.get("t_end", c.t_end);
  std::string integrator(to_string(c.integrator));
  top.get("integrator", integrator);
  c.integrator = parse_name<Integrator>(
      integrator, [](std::string_view s) { return parse_integrator(s); }, "integrator");
  top.get("fd_step", c.fd_step);
  top.get("trace_stride", c.trace_stride);
  top.get("output_dir", c.output_dir);
  top.get("seed", c.seed);
  top.finish();
  validate(c);
  return c;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw ConfigError("'" + path.string() + "': " + err.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return config_from_json(read_json_file(path));
}

}  // namespace sbpstab::harness
