#include "dsa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dsa/rng.hpp"

namespace dsa {

Position wrap_position(Position p, double torus_width_m) {
  p.x = std::fmod(p.x, torus_width_m);
  if (p.x < 0) p.x += torus_width_m;
  p.y = std::fmod(p.y, torus_width_m);
  if (p.y < 0) p.y += torus_width_m;
  return p;
}

double toroidal_distance_km(Position a, Position b, double torus_width_m) {
  double dx = std::fabs(a.x - b.x);
  double dy = std::fabs(a.y - b.y);
  dx = std::min(dx, torus_width_m - dx);
  dy = std::min(dy, torus_width_m - dy);
  return std::sqrt(dx * dx + dy * dy) / 1000.0;
}

double link_gain_db(double d_km, double shadow_db, double penetration_loss_db) {
  if (!(d_km > 0.0))
    throw std::invalid_argument("link_gain_db: link distance must be > 0");
  return -128.1 - 37.6 * std::log10(d_km) - penetration_loss_db - shadow_db;
}

namespace {

// uniform draw inside a disk of radius r around c, wrapped onto the torus
Position draw_in_disk(Rng& rng, Position c, double radius_m, double width_m) {
  const double ang = 2.0 * std::numbers::pi * rng.uniform();
  const double rad = radius_m * std::sqrt(rng.uniform());
  return wrap_position({c.x + rad * std::cos(ang), c.y + rad * std::sin(ang)},
                       width_m);
}

// draws shadowing and converts to linear gain; false on degenerate links
bool fill_link(Rng& rng, const ScenarioParams& sc, Position tx, Position rx,
               double& shadow_db, double& lin_gain) {
  const double d = toroidal_distance_km(tx, rx, sc.torus_width_m());
  if (d <= 0.0) return false;
  shadow_db = rng.normal(0.0, sc.shadowing_sigma_db);
  const double g_db = link_gain_db(d, shadow_db, sc.penetration_loss_db);
  lin_gain = std::pow(10.0, g_db / 10.0);
  return lin_gain < 1.0;
}

bool try_sample(Rng& rng, const ScenarioParams& sc, NetworkRealization& out) {
  const double width = sc.torus_width_m();
  NetworkRealization r;

  // APs at cell centers, row-major grid indexing
  r.ap_positions.reserve(sc.ap_count());
  for (int row = 0; row < sc.grid_dim; ++row)
    for (int col = 0; col < sc.grid_dim; ++col)
      r.ap_positions.push_back({sc.ap_spacing_m * (col + 0.5),
                                sc.ap_spacing_m * (row + 0.5)});

  // active subset, uniform without replacement, kept sorted
  std::vector<int> pool(sc.ap_count());
  for (int i = 0; i < sc.ap_count(); ++i) pool[i] = i;
  for (int i = 0; i < sc.active_ap_count; ++i) {
    const int j = i + static_cast<int>(rng.uniform_int(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  r.active_aps.assign(pool.begin(), pool.begin() + sc.active_ap_count);
  std::sort(r.active_aps.begin(), r.active_aps.end());

  for (int ap : r.active_aps)
    r.pn_rx_positions.push_back(
        draw_in_disk(rng, r.ap_positions[ap], sc.coverage_radius_m, width));

  for (int i = 0; i < sc.cr_count; ++i)
    r.cr_tx_positions.push_back(
        {width * rng.uniform(), width * rng.uniform()});
  for (int i = 0; i < sc.cr_count; ++i)
    r.cr_rx_positions.push_back(
        draw_in_disk(rng, r.cr_tx_positions[i], sc.cr_rx_max_range_m, width));

  // link budget for every tx -> rx pair, tx-major draw order
  std::vector<Position> tx_pos = r.ap_positions;
  tx_pos.insert(tx_pos.end(), r.cr_tx_positions.begin(),
                r.cr_tx_positions.end());
  std::vector<Position> rx_pos = r.pn_rx_positions;
  rx_pos.insert(rx_pos.end(), r.cr_rx_positions.begin(),
                r.cr_rx_positions.end());

  r.gain.assign(tx_pos.size(), std::vector<double>(rx_pos.size(), 0.0));
  r.shadowing_db = r.gain;
  for (std::size_t t = 0; t < tx_pos.size(); ++t)
    for (std::size_t x = 0; x < rx_pos.size(); ++x)
      if (!fill_link(rng, sc, tx_pos[t], rx_pos[x], r.shadowing_db[t][x],
                     r.gain[t][x]))
        return false;

  // AP signal at the CR transmitters (monitored-link detection)
  r.ap_to_cr_tx_gain.assign(r.ap_positions.size(),
                            std::vector<double>(sc.cr_count, 0.0));
  r.ap_to_cr_tx_shadow_db = r.ap_to_cr_tx_gain;
  for (std::size_t a = 0; a < r.ap_positions.size(); ++a)
    for (int c = 0; c < sc.cr_count; ++c)
      if (!fill_link(rng, sc, r.ap_positions[a], r.cr_tx_positions[c],
                     r.ap_to_cr_tx_shadow_db[a][c], r.ap_to_cr_tx_gain[a][c]))
        return false;

  out = std::move(r);
  return true;
}

}  // namespace

NetworkRealization sample_realization(std::uint64_t seed,
                                      const ScenarioParams& params) {
  params.validate();
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    NetworkRealization r;
    if (try_sample(rng, params, r)) return r;
  }
  throw std::runtime_error("sample_realization: no valid geometry in 1000 attempts");
}

void to_json(nlohmann::json& j, const Position& p) {
  j = nlohmann::json{p.x, p.y};
}

void from_json(const nlohmann::json& j, Position& p) {
  p.x = j.at(0).get<double>();
  p.y = j.at(1).get<double>();
}

void to_json(nlohmann::json& j, const NetworkRealization& r) {
  j = nlohmann::json{{"ap_positions", r.ap_positions},
                     {"active_aps", r.active_aps},
                     {"pn_rx_positions", r.pn_rx_positions},
                     {"cr_tx_positions", r.cr_tx_positions},
                     {"cr_rx_positions", r.cr_rx_positions},
                     {"gain", r.gain},
                     {"shadowing_db", r.shadowing_db},
                     {"ap_to_cr_tx_gain", r.ap_to_cr_tx_gain},
                     {"ap_to_cr_tx_shadow_db", r.ap_to_cr_tx_shadow_db}};
}

void from_json(const nlohmann::json& j, NetworkRealization& r) {
  j.at("ap_positions").get_to(r.ap_positions);
  j.at("active_aps").get_to(r.active_aps);
  j.at("pn_rx_positions").get_to(r.pn_rx_positions);
  j.at("cr_tx_positions").get_to(r.cr_tx_positions);
  j.at("cr_rx_positions").get_to(r.cr_rx_positions);
  j.at("gain").get_to(r.gain);
  j.at("shadowing_db").get_to(r.shadowing_db);
  j.at("ap_to_cr_tx_gain").get_to(r.ap_to_cr_tx_gain);
  j.at("ap_to_cr_tx_shadow_db").get_to(r.ap_to_cr_tx_shadow_db);
}

}  // namespace dsa
