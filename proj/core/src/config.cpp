#include "pinchperf/config.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pinchperf {

namespace {

const std::set<std::string> kKnownKeys = {
    "d_x",    "d_y",        "h",          "alpha",      "f_c",
    "n_eff",  "p_t",        "sigma2",     "sigma2_dbm", "gamma_t_db",
    "n_antennas", "gamma_thr", "n_samples", "seed",
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size())
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.find('-') != std::string::npos)
        throw std::invalid_argument("config: bad integer for '" + key + "': " + value);
    return v;
}

} // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                        " is not key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.count(key))
            throw std::invalid_argument("config: unknown key '" + key + "'");
        if (value.empty())
            throw std::invalid_argument("config: empty value for '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void apply_config(SweepSpec& spec, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "d_x") spec.deployment.d_x = parse_double(key, value);
        else if (key == "d_y") spec.deployment.d_y = parse_double(key, value);
        else if (key == "h") spec.deployment.h = parse_double(key, value);
        else if (key == "alpha") spec.deployment.alpha = parse_double(key, value);
        else if (key == "f_c") spec.deployment.f_c = parse_double(key, value);
        else if (key == "n_eff") spec.deployment.n_eff = parse_double(key, value);
        else if (key == "p_t") spec.deployment.p_t = parse_double(key, value);
        else if (key == "sigma2") spec.deployment.sigma2 = parse_double(key, value);
        else if (key == "sigma2_dbm")
            spec.deployment.sigma2 = dbm_to_watts(parse_double(key, value));
        else if (key == "n_antennas")
            spec.deployment.n_antennas = static_cast<int>(parse_u64(key, value));
        else if (key == "gamma_thr") spec.gamma_thr = parse_double(key, value);
        else if (key == "n_samples") spec.n_samples = parse_u64(key, value);
        else if (key == "seed") spec.seed = parse_u64(key, value);
    }
    // after sigma2 so a file can set both and still mean what it says
    if (const auto it = kv.find("gamma_t_db"); it != kv.end())
        spec.deployment.p_t =
            p_t_for_gamma_t_db(parse_double(it->first, it->second),
                               spec.deployment.sigma2);
}

} // namespace pinchperf
