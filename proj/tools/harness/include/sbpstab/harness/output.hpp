#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbpstab/harness/config.hpp"
#include "sbpstab/harness/runs.hpp"

namespace sbpstab::harness {

/// I/O failure while writing results.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

/// Header `re,im`, one eigenvalue per row.
void write_spectrum_csv(const std::filesystem::path& path, const SpectrumReport& report);
/// Header `x,value`.
void write_mode_csv(const std::filesystem::path& path, const Vector& x, const Vector& values);
/// Header `t,amplitude,reference,l2_norm,fluctuation_l2,entropy,mrfvk`.
void write_growth_trace_csv(const std::filesystem::path& path, const GrowthTrace& trace);
/// Header `t,l2_error,entropy,min_density`.
void write_euler_trace_csv(const std::filesystem::path& path,
                           const std::vector<EulerRecord>& trace);
/// Header `x,u,baseflow`.
void write_burgers_field_csv(const std::filesystem::path& path, const Vector& x, const Vector& u,
                             const Vector& baseflow);
/// Header `x,y,rho,rho_v1,rho_v2,rho_e`.
void write_euler_field_csv(const std::filesystem::path& path, const EulerDgsem2D& dg,
                           const EulerField2D& field);
/// Header `name,amplitude,elements_x,elements_y,volume,surface,status,final_time,
/// crash_time,final_l2_error,final_min_density,error`.
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepEntry>& entries);

nlohmann::json spectrum_meta(const ExperimentConfig& config, const SpectrumResult& result);
nlohmann::json growth_meta(const ExperimentConfig& config, const GrowthResult& result);
nlohmann::json euler_meta(const ExperimentConfig& config, const EulerRunResult& result);

/// Writes spectrum.csv, meta.json and, when present, worst_mode.csv.
void write_spectrum_outputs(const ExperimentConfig& config, const SpectrumResult& result,
                            const std::filesystem::path& dir);
/// Writes trace.csv, meta.json and field_final.csv.
void write_growth_outputs(const ExperimentConfig& config, const GrowthResult& result,
                          const std::filesystem::path& dir, bool with_field = true);
void write_euler_outputs(const ExperimentConfig& config, const EulerRunResult& result,
                         const std::filesystem::path& dir, bool with_field = true);

}  // namespace sbpstab::harness
