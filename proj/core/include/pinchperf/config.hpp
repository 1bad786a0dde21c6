#pragma once

#include <map>
#include <string>

#include "pinchperf/sweep.hpp"

namespace pinchperf {

// Flat key=value configuration (one pair per line, '#' comments).  Keys match
// the Deployment / SweepSpec field names: d_x, d_y, h, alpha, f_c, n_eff,
// p_t, sigma2, sigma2_dbm, gamma_t_db, n_antennas, gamma_thr, n_samples,
// seed.  Unknown keys are rejected.
std::map<std::string, std::string> parse_config_text(const std::string& text);

std::map<std::string, std::string> load_config_file(const std::string& path);

// Applies configuration values onto a spec (middle precedence layer: callers
// start from defaults, apply the file, then apply command-line overrides).
void apply_config(SweepSpec& spec, const std::map<std::string, std::string>& kv);

} // namespace pinchperf
