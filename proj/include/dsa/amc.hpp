#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dsa {

struct AmcMode {
  double sinr_threshold_db;       // lowest SINR at which the mode is usable
  double spectral_efficiency;     // bits/s/Hz
};

/// Ordered 15-mode adaptive modulation and coding table. Mode selection is
/// closed below: a SINR exactly at a threshold selects that mode.
class AmcTable {
 public:
  static constexpr int kModeCount = 15;

  /// LTE CQI efficiencies with the common 10%-BLER SINR thresholds.
  static AmcTable lte_default();

  /// CSV rows: mode,threshold_db,efficiency (a non-numeric header is skipped).
  static AmcTable from_csv(const std::string& path);

  explicit AmcTable(std::vector<AmcMode> modes);

  const std::vector<AmcMode>& modes() const { return modes_; }

  /// Highest mode with threshold <= sinr; nullopt below the lowest threshold.
  std::optional<int> mode_for(double sinr_db) const;

  /// Spectral efficiency of the selected mode, 0 when no mode is usable.
  double efficiency_for(double sinr_db) const;

  double top_threshold_db() const { return modes_.back().sinr_threshold_db; }

 private:
  std::vector<AmcMode> modes_;
};

/// AMC-quantized throughput: selected-mode efficiency times bandwidth, Mbps.
double throughput_mbps(double sinr_db, const AmcTable& table,
                       double bandwidth_hz);

}  // namespace dsa
