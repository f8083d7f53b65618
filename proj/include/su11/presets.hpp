#pragma once

#include <string>
#include <vector>

#include "su11/sweep.hpp"

namespace su11 {

/// A named, pinned parameter set reproducing one published curve family.
/// Most presets are plain sweeps; the shot-noise comparison preset runs the
/// calibrated SQL/HL table instead.
struct PresetSpec {
  std::string name;
  std::string description;
  bool is_compare_sql = false;
  SweepSpec sweep;
  CompareSqlSpec cmp;
};

namespace detail {

inline std::vector<std::pair<unsigned, unsigned>> symmetric_schemes() {
  return {{0u, 0u}, {1u, 1u}, {2u, 2u}, {3u, 3u}};
}
inline std::vector<std::pair<unsigned, unsigned>> single_mode_schemes() {
  return {{0u, 0u}, {1u, 0u}, {2u, 0u}, {3u, 0u}};
}

inline PresetSpec sweep_preset(std::string name, std::string desc, Quantity q,
                               SweepVar var, Range range, ModelParams fixed,
                               std::vector<std::pair<unsigned, unsigned>> schemes) {
  PresetSpec p;
  p.name = std::move(name);
  p.description = std::move(desc);
  p.sweep.quantity = q;
  p.sweep.var = var;
  p.sweep.range = range;
  p.sweep.fixed = fixed;
  p.sweep.schemes = std::move(schemes);
  return p;
}

}  // namespace detail

/// The preset table. Panel "a" sweeps the symmetric schemes (m parallel to
/// n), panel "b" the single-mode schemes (m, 0).
inline std::vector<PresetSpec> figure_presets() {
  using detail::single_mode_schemes;
  using detail::sweep_preset;
  using detail::symmetric_schemes;

  ModelParams base;  // g = 1, theta1 = 0, alpha = 1, T = 1, eta = 1
  ModelParams at06 = base.with_phi(0.6);

  std::vector<PresetSpec> v;
  v.push_back(sweep_preset("fig2a", "sensitivity vs phase, symmetric schemes",
                           Quantity::sensitivity, SweepVar::phi,
                           {0.01, 1.5, 150}, base, symmetric_schemes()));
  v.push_back(sweep_preset("fig2b", "sensitivity vs phase, single-mode schemes",
                           Quantity::sensitivity, SweepVar::phi,
                           {0.01, 1.5, 150}, base, single_mode_schemes()));
  v.push_back(sweep_preset("fig3a", "sensitivity vs gain at phi = 0.6",
                           Quantity::sensitivity, SweepVar::g, {0.1, 1.5, 141},
                           at06, symmetric_schemes()));
  v.push_back(sweep_preset("fig3b", "sensitivity vs gain at phi = 0.6",
                           Quantity::sensitivity, SweepVar::g, {0.1, 1.5, 141},
                           at06, single_mode_schemes()));
  v.push_back(sweep_preset("fig4a", "sensitivity vs coherent amplitude",
                           Quantity::sensitivity, SweepVar::alpha,
                           {0.0, 2.0, 201}, at06, symmetric_schemes()));
  v.push_back(sweep_preset("fig4b", "sensitivity vs coherent amplitude",
                           Quantity::sensitivity, SweepVar::alpha,
                           {0.0, 2.0, 201}, at06, single_mode_schemes()));
  v.push_back(sweep_preset("fig5a", "sensitivity vs transmittance",
                           Quantity::sensitivity, SweepVar::T,
                           {0.02, 1.0, 50}, at06, symmetric_schemes()));
  v.push_back(sweep_preset("fig5b", "sensitivity vs transmittance",
                           Quantity::sensitivity, SweepVar::T,
                           {0.02, 1.0, 50}, at06, single_mode_schemes()));

  {
    PresetSpec p;
    p.name = "fig6";
    p.description =
        "sensitivity vs phase at photon number calibrated to N = 4, against "
        "SQL and Heisenberg limits (g = 0.5, T = 0.5)";
    p.is_compare_sql = true;
    p.cmp.target_n = 4.0;
    p.cmp.T = 0.5;
    p.cmp.g = 0.5;
    p.cmp.phi_range = {0.01, 1.5, 150};
    p.cmp.schemes = symmetric_schemes();
    v.push_back(std::move(p));
  }

  v.push_back(sweep_preset("fig7a", "QFI vs gain", Quantity::qfi, SweepVar::g,
                           {0.2, 1.5, 131}, base, symmetric_schemes()));
  v.push_back(sweep_preset("fig7b", "QFI vs gain", Quantity::qfi, SweepVar::g,
                           {0.2, 1.5, 131}, base, single_mode_schemes()));
  v.push_back(sweep_preset("fig8a", "QFI vs coherent amplitude", Quantity::qfi,
                           SweepVar::alpha, {0.2, 2.0, 181}, base,
                           symmetric_schemes()));
  v.push_back(sweep_preset("fig8b", "QFI vs coherent amplitude", Quantity::qfi,
                           SweepVar::alpha, {0.2, 2.0, 181}, base,
                           single_mode_schemes()));
  v.push_back(sweep_preset("fig9a", "quantum Cramer-Rao bound vs gain",
                           Quantity::qcrb, SweepVar::g, {0.2, 1.5, 131}, base,
                           symmetric_schemes()));
  v.push_back(sweep_preset("fig9b", "quantum Cramer-Rao bound vs gain",
                           Quantity::qcrb, SweepVar::g, {0.2, 1.5, 131}, base,
                           single_mode_schemes()));
  v.push_back(sweep_preset("fig10a", "quantum Cramer-Rao bound vs amplitude",
                           Quantity::qcrb, SweepVar::alpha, {0.2, 2.0, 181},
                           base, symmetric_schemes()));
  v.push_back(sweep_preset("fig10b", "quantum Cramer-Rao bound vs amplitude",
                           Quantity::qcrb, SweepVar::alpha, {0.2, 2.0, 181},
                           base, single_mode_schemes()));
  v.push_back(sweep_preset("fig11a", "total mean photon number vs gain",
                           Quantity::mean_photon, SweepVar::g,
                           {0.0, 1.5, 151}, base, symmetric_schemes()));
  v.push_back(sweep_preset("fig11b", "total mean photon number vs gain",
                           Quantity::mean_photon, SweepVar::g,
                           {0.0, 1.5, 151}, base, single_mode_schemes()));
  v.push_back(sweep_preset("fig12a", "total mean photon number vs amplitude",
                           Quantity::mean_photon, SweepVar::alpha,
                           {0.0, 2.0, 201}, base, symmetric_schemes()));
  v.push_back(sweep_preset("fig12b", "total mean photon number vs amplitude",
                           Quantity::mean_photon, SweepVar::alpha,
                           {0.0, 2.0, 201}, base, single_mode_schemes()));

  v.push_back(sweep_preset("fig14", "lossy QFI vs detection transmittance",
                           Quantity::qfi_lossy, SweepVar::eta,
                           {0.02, 1.0, 50}, base, symmetric_schemes()));
  {
    ModelParams eta08 = base;
    eta08.eta = 0.8;
    v.push_back(sweep_preset("fig15a", "lossy QFI vs gain at eta = 0.8",
                             Quantity::qfi_lossy, SweepVar::g,
                             {0.2, 1.5, 131}, eta08, symmetric_schemes()));
    v.push_back(sweep_preset("fig15b", "lossy QFI vs gain at eta = 0.8",
                             Quantity::qfi_lossy, SweepVar::g,
                             {0.2, 1.5, 131}, eta08, single_mode_schemes()));
    v.push_back(sweep_preset("fig16a", "lossy QFI vs amplitude at eta = 0.8",
                             Quantity::qfi_lossy, SweepVar::alpha,
                             {0.2, 2.0, 181}, eta08, symmetric_schemes()));
    v.push_back(sweep_preset("fig16b", "lossy QFI vs amplitude at eta = 0.8",
                             Quantity::qfi_lossy, SweepVar::alpha,
                             {0.2, 2.0, 181}, eta08, single_mode_schemes()));
  }
  v.push_back(sweep_preset("fig17",
                           "lossy Cramer-Rao bound vs detection transmittance",
                           Quantity::qcrb_lossy, SweepVar::eta,
                           {0.02, 1.0, 50}, base, symmetric_schemes()));
  return v;
}

inline const PresetSpec* find_preset(const std::vector<PresetSpec>& presets,
                                     const std::string& name) {
  for (const PresetSpec& p : presets)
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace su11
