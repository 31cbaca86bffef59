#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gfq/gfq_operators.hpp"

namespace gfq {

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme s);

struct RunConfig {
    std::string case_id = "steady-vortex";
    Scheme scheme = Scheme::SupgGfq;
    int degree = 1;
    int n1 = 0, n2 = 0;       // 0 takes the case default
    std::vector<int> meshes;  // convergence studies, square meshes
    double cfl = 0.1;
    double t_end = -1.0;  // negative keeps the case value
    bool well_balanced = false;
    double mach = 0.0;  // steady vortex only; 0 selects eps = 5
    double tau_scale = 0.5;
    std::string output = "out";
    long cadence = 0;  // steps between snapshots, 0 writes only the first and last
    std::uint64_t seed = 1;
};

// key -> value, keys qualified as "section.key".
using IniMap = std::map<std::string, std::string>;

IniMap parse_ini(const std::string& text);
IniMap read_ini(const std::filesystem::path& path);

// Applies INI entries of [case], [scheme] and [output]. Keys match the
// CLI flag names (case, k, n, n1, n2, meshes, t-end, mach, scheme, cfl,
// wb, tau-scale, output, cadence, seed). Unknown keys are rejected.
void apply_ini(RunConfig& cfg, const IniMap& ini);
// Applies one key=value override with the same key set.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Throws ConfigError when the configuration does not fit the case.
void validate(const RunConfig& cfg);

// Output directory, placed under $GFQ_OUTPUT_ROOT when set and relative.
std::filesystem::path output_directory(const RunConfig& cfg);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace gfq
