#pragma once

#include <limits>

namespace dsa {

/// Physical-layer scenario: two networks sharing one band on a wrap-around
/// grid. Defaults describe the standard setup (3x3 grid, 200 m spacing,
/// 7 of 9 access points active, 2 CR links, 180 kHz band).
struct ScenarioParams {
  int grid_dim = 3;
  double ap_spacing_m = 200.0;
  double coverage_radius_m = 100.0;  // PN receiver placement disk
  int active_ap_count = 7;
  int cr_count = 2;
  double cr_rx_max_range_m = 50.0;

  double bandwidth_hz = 180e3;
  double noise_dbm = -130.0;         // AWGN per channel
  double underlay_limit = 0.05;      // max relative PN throughput change

  double shadowing_sigma_db = 6.0;
  double penetration_loss_db = 10.0;

  double pn_power_min_dbm = -30.0;
  double pn_power_max_dbm = 20.0;
  // NaN = use the lowest SINR reaching the top AMC mode
  double pn_target_sinr_db = std::numeric_limits<double>::quiet_NaN();
  bool pn_readapt_every_step = false;

  double cr_power_min_dbm = -10.0;
  double cr_power_max_dbm = 20.0;
  double cr_power_step_db = 2.5;

  double torus_width_m() const { return grid_dim * ap_spacing_m; }
  int ap_count() const { return grid_dim * grid_dim; }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace dsa
