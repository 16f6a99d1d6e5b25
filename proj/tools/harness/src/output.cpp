#include "sbpstab/harness/output.hpp"

#include <fstream>
#include <iomanip>
#include <limits>

#include "sbpstab/harness/runs.hpp"

namespace sbpstab::harness {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw OutputError("cannot create '" + path.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(path);
  if (!out) throw OutputError("cannot write '" + path.string() + "'");
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  return out;
}

void check_written(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw OutputError("write failed for '" + path.string() + "'");
}

nlohmann::json crash_json(const CrashReport& r) {
  return {{"time", r.time},         {"element", r.element}, {"node_i", r.node_i},
          {"node_j", r.node_j},     {"variable", r.variable}, {"value", r.value}};
}

}  // namespace

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out = open_output(path);
  out << doc.dump(2) << '\n';
  check_written(out, path);
}

void write_spectrum_csv(const std::filesystem::path& path, const SpectrumReport& report) {
  std::ofstream out = open_output(path);
  out << "re,im\n";
  for (const auto& z : report.eigenvalues) out << z.real() << ',' << z.imag() << '\n';
  check_written(out, path);
}

void write_mode_csv(const std::filesystem::path& path, const Vector& x, const Vector& values) {
  std::ofstream out = open_output(path);
  out << "x,value\n";
  for (Eigen::Index i = 0; i < values.size(); ++i) out << x(i) << ',' << values(i) << '\n';
  check_written(out, path);
}

void write_growth_trace_csv(const std::filesystem::path& path, const GrowthTrace& trace) {
  std::ofstream out = open_output(path);
  out << "t,amplitude,reference,l2_norm,fluctuation_l2,entropy,mrfvk\n";
  for (const BurgersRecord& r : trace.records) {
    out << r.t << ',' << r.amplitude << ',' << trace.reference(r.t) << ',' << r.l2_norm << ','
        << r.fluctuation_l2 << ',' << r.entropy << ',' << (r.mrfvk ? 1 : 0) << '\n';
  }
  check_written(out, path);
}

void write_euler_trace_csv(const std::filesystem::path& path,
                           const std::vector<EulerRecord>& trace) {
  std::ofstream out = open_output(path);
  out << "t,l2_error,entropy,min_density\n";
  for (const EulerRecord& r : trace) {
    out << r.t << ',' << r.l2_error << ',' << r.entropy << ',' << r.min_density << '\n';
  }
  check_written(out, path);
}

void write_burgers_field_csv(const std::filesystem::path& path, const Vector& x, const Vector& u,
                             const Vector& baseflow) {
  std::ofstream out = open_output(path);
  out << "x,u,baseflow\n";
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    out << x(i) << ',' << u(i) << ',' << baseflow(i) << '\n';
  }
  check_written(out, path);
}

void write_euler_field_csv(const std::filesystem::path& path, const EulerDgsem2D& dg,
                           const EulerField2D& field) {
  std::ofstream out = open_output(path);
  out << "x,y,rho,rho_v1,rho_v2,rho_e\n";
  const int n = field.degree + 1;
  for (int e = 0; e < field.mesh.elements(); ++e) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        out << dg.node_x(e, i) << ',' << dg.node_y(e, j);
        for (int v = 0; v < euler::kVariables; ++v) out << ',' << field.values(field.index(e, i, j, v));
        out << '\n';
      }
    }
  }
  check_written(out, path);
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepEntry>& entries) {
  std::ofstream out = open_output(path);
  out << "name,amplitude,elements_x,elements_y,volume,surface,status,final_time,crash_time,"
         "final_l2_error,final_min_density,error\n";
  for (const SweepEntry& e : entries) {
    std::string error = e.error;
    for (char& ch : error) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    out << e.config.name << ',' << e.config.baseflow.amplitude << ',' << e.config.elements_x << ','
        << e.config.elements_y << ',' << euler::to_string(e.config.euler.volume) << ','
        << euler::to_string(e.config.euler.surface) << ',' << e.status << ',' << e.final_time
        << ',';
    if (e.crash_time) out << *e.crash_time;
    out << ',' << e.final_l2_error << ',' << e.final_min_density << ',' << error << '\n';
  }
  check_written(out, path);
}

nlohmann::json spectrum_meta(const ExperimentConfig& config, const SpectrumResult& result) {
  const auto worst = result.report.worst();
  nlohmann::json doc;
  doc["config"] = to_json(config);
  doc["result"] = {{"kind", "spectrum"},
                   {"fd_step", result.fd_step},
                   {"dofs", result.report.eigenvalues.size()},
                   {"max_real_part", result.report.max_real_part},
                   {"worst_eigenvalue", {worst.real(), worst.imag()}},
                   {"numerically_zero_count", result.report.numerically_zero_count()}};
  if (result.worst_mode) {
    doc["result"]["worst_mode_residual"] = result.worst_mode->residual;
    doc["result"]["worst_mode_defective"] = result.worst_mode->defective;
  }
  return doc;
}

nlohmann::json growth_meta(const ExperimentConfig& config, const GrowthResult& result) {
  nlohmann::json doc;
  doc["config"] = to_json(config);
  const BurgersRecord& last = result.trace.records.back();
  doc["result"] = {{"kind", config.mode == RunMode::Simulate ? "simulate" : "growth"},
                   {"alpha_max", result.trace.alpha_max},
                   {"initial_peak", result.trace.peak},
                   {"final_time", result.final_time},
                   {"final_amplitude", last.amplitude},
                   {"final_l2_norm", last.l2_norm},
                   {"source_norm", result.source_norm},
                   {"records", result.trace.records.size()},
                   {"blowup_time", result.blowup_time ? nlohmann::json(*result.blowup_time)
                                                      : nlohmann::json(nullptr)}};
  return doc;
}

nlohmann::json euler_meta(const ExperimentConfig& config, const EulerRunResult& result) {
  nlohmann::json doc;
  doc["config"] = to_json(config);
  doc["result"] = {{"kind", "simulate"},
                   {"status", result.crash ? "crashed" : "completed"},
                   {"final_time", result.final_time},
                   {"steps", result.steps},
                   {"last_output_time", result.last_output_time},
                   {"final_l2_error", result.trace.back().l2_error},
                   {"final_min_density", result.trace.back().min_density},
                   {"crash", result.crash ? crash_json(*result.crash) : nlohmann::json(nullptr)}};
  return doc;
}

void write_spectrum_outputs(const ExperimentConfig& config, const SpectrumResult& result,
                            const std::filesystem::path& dir) {
  write_spectrum_csv(dir / "spectrum.csv", result.report);
  if (result.worst_mode && result.x.size() == result.worst_mode->values.size()) {
    write_mode_csv(dir / "worst_mode.csv", result.x, result.worst_mode->values);
  }
  write_json(dir / "meta.json", spectrum_meta(config, result));
}

void write_growth_outputs(const ExperimentConfig& config, const GrowthResult& result,
                          const std::filesystem::path& dir, bool with_field) {
  write_growth_trace_csv(dir / "trace.csv", result.trace);
  if (with_field) {
    write_burgers_field_csv(dir / "field_final.csv", result.x, result.final_field, result.baseflow);
  }
  write_json(dir / "meta.json", growth_meta(config, result));
}

void write_euler_outputs(const ExperimentConfig& config, const EulerRunResult& result,
                         const std::filesystem::path& dir, bool with_field) {
  write_euler_trace_csv(dir / "trace.csv", result.trace);
  if (with_field) {
    const EulerDgsem2D dg = make_euler_operator(config);
    write_euler_field_csv(dir / "field_final.csv", dg, result.final_field);
  }
  write_json(dir / "meta.json", euler_meta(config, result));
}

}  // namespace sbpstab::harness
