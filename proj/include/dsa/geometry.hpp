#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "dsa/scenario.hpp"

namespace dsa {

/// Point on the wrap-around deployment area, meters in [0, width).
struct Position {
  double x = 0.0;
  double y = 0.0;
};

Position wrap_position(Position p, double torus_width_m);

/// Minimum-image Euclidean distance on the square torus, returned in km.
double toroidal_distance_km(Position a, Position b, double torus_width_m);

/// Link budget gain in dB (add to tx dBm to get rx dBm):
///   -128.1 - 37.6 log10(d_km) - penetration - shadowing.
/// Throws std::invalid_argument for d <= 0 (degenerate geometry).
double link_gain_db(double d_km, double shadow_db, double penetration_loss_db);

/// One Monte Carlo world: node placement plus frozen per-link shadowing and
/// the resulting linear power gains.
///
/// Transmitter order: all grid APs (0..ap_count-1), then CR transmitters.
/// Receiver order: PN receivers aligned with `active_aps`, then CR receivers.
struct NetworkRealization {
  std::vector<Position> ap_positions;
  std::vector<int> active_aps;  // sorted subset of AP indices
  std::vector<Position> pn_rx_positions;
  std::vector<Position> cr_tx_positions;
  std::vector<Position> cr_rx_positions;

  // gain[tx][rx], linear scale, strictly in (0,1) for sampled worlds
  std::vector<std::vector<double>> gain;
  std::vector<std::vector<double>> shadowing_db;

  // AP signal as received at each CR transmitter's own position; used to
  // decide which PN link a CR monitors. Separate links, separate shadowing.
  std::vector<std::vector<double>> ap_to_cr_tx_gain;
  std::vector<std::vector<double>> ap_to_cr_tx_shadow_db;

  int ap_count() const { return static_cast<int>(ap_positions.size()); }
  int active_count() const { return static_cast<int>(active_aps.size()); }
  int cr_count() const { return static_cast<int>(cr_tx_positions.size()); }
  int tx_count() const { return ap_count() + cr_count(); }
  int rx_count() const { return active_count() + cr_count(); }

  int tx_of_ap(int ap) const { return ap; }
  int tx_of_cr(int cr) const { return ap_count() + cr; }
  int rx_of_pn(int link) const { return link; }  // index into active_aps
  int rx_of_cr(int cr) const { return active_count() + cr; }
};

/// Samples one realization. Deterministic given the seed; internally redraws
/// on degenerate geometry (zero link distance or linear gain >= 1).
NetworkRealization sample_realization(std::uint64_t seed,
                                      const ScenarioParams& params);

void to_json(nlohmann::json& j, const Position& p);
void from_json(const nlohmann::json& j, Position& p);
void to_json(nlohmann::json& j, const NetworkRealization& r);
void from_json(const nlohmann::json& j, NetworkRealization& r);

}  // namespace dsa
