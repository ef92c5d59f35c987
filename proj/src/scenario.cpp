#include "dsa/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dsa {

void ScenarioParams::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("scenario: " + what);
  };
  if (grid_dim < 1) fail("grid_dim must be >= 1");
  if (ap_spacing_m <= 0) fail("ap_spacing_m must be > 0");
  if (coverage_radius_m <= 0 || coverage_radius_m > ap_spacing_m)
    fail("coverage_radius_m must be in (0, ap_spacing_m]");
  if (active_ap_count < 1 || active_ap_count > ap_count())
    fail("active_ap_count must be in [1, grid_dim^2]");
  if (cr_count < 1) fail("cr_count must be >= 1");
  if (cr_rx_max_range_m <= 0) fail("cr_rx_max_range_m must be > 0");
  if (bandwidth_hz <= 0) fail("bandwidth_hz must be > 0");
  if (underlay_limit < 0 || underlay_limit > 1)
    fail("underlay_limit must be in [0, 1]");
  if (shadowing_sigma_db < 0) fail("shadowing_sigma_db must be >= 0");
  if (penetration_loss_db < 0) fail("penetration_loss_db must be >= 0");
  if (pn_power_min_dbm > pn_power_max_dbm)
    fail("pn_power_min_dbm must be <= pn_power_max_dbm");
  if (cr_power_min_dbm > cr_power_max_dbm)
    fail("cr_power_min_dbm must be <= cr_power_max_dbm");
  if (cr_power_step_db <= 0) fail("cr_power_step_db must be > 0");
}

}  // namespace dsa
