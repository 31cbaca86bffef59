#include "gfq/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gfq/benchmark_cases.hpp"
#include "gfq/errors.hpp"
#include "gfq/tensor_basis.hpp"

namespace gfq {

namespace {

std::string trim(const std::string& s) {
    auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return b < e ? std::string(b, e) : std::string();
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const std::string v = trim(value);
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw ConfigError("invalid value '" + value + "' for " + key);
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    std::string v = trim(value);
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw ConfigError("invalid boolean '" + value + "' for " + key);
}

}  // namespace

Scheme parse_scheme(const std::string& name) {
    if (name == "supg-std") return Scheme::SupgStd;
    if (name == "supg-gfq") return Scheme::SupgGfq;
    if (name == "fv-hllc") return Scheme::FvHllc;
    throw ConfigError("unknown scheme '" + name + "' (supg-std, supg-gfq, fv-hllc)");
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::SupgStd: return "supg-std";
        case Scheme::SupgGfq: return "supg-gfq";
        case Scheme::FvHllc: return "fv-hllc";
    }
    return "?";
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        out.push_back(parse_number<int>("meshes", item));
    }
    return out;
}

IniMap parse_ini(const std::string& text) {
    IniMap out;
    std::stringstream ss(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed section header on line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "case" && section != "scheme" && section != "output")
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value on line " + std::to_string(lineno));
        if (section.empty()) throw ConfigError("key outside a section on line " + std::to_string(lineno));
        out[section + "." + trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

IniMap read_ini(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ini(ss.str());
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "case") cfg.case_id = trim(value);
    else if (key == "k") cfg.degree = parse_number<int>(key, value);
    else if (key == "n") cfg.n1 = cfg.n2 = parse_number<int>(key, value);
    else if (key == "n1") cfg.n1 = parse_number<int>(key, value);
    else if (key == "n2") cfg.n2 = parse_number<int>(key, value);
    else if (key == "meshes") cfg.meshes = parse_int_list(value);
    else if (key == "t-end") cfg.t_end = parse_number<double>(key, value);
    else if (key == "mach") cfg.mach = parse_number<double>(key, value);
    else if (key == "scheme") cfg.scheme = parse_scheme(trim(value));
    else if (key == "cfl") cfg.cfl = parse_number<double>(key, value);
    else if (key == "wb") cfg.well_balanced = parse_bool(key, value);
    else if (key == "tau-scale") cfg.tau_scale = parse_number<double>(key, value);
    else if (key == "output") cfg.output = trim(value);
    else if (key == "cadence") cfg.cadence = parse_number<long>(key, value);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else throw ConfigError("unknown setting '" + key + "'");
}

void apply_ini(RunConfig& cfg, const IniMap& ini) {
    static const std::map<std::string, std::string> home = {
        {"case", "case"},     {"k", "case"},       {"n", "case"},         {"n1", "case"},
        {"n2", "case"},       {"meshes", "case"},  {"t-end", "case"},     {"mach", "case"},
        {"scheme", "scheme"}, {"cfl", "scheme"},   {"wb", "scheme"},      {"tau-scale", "scheme"},
        {"seed", "scheme"},   {"output", "output"}, {"cadence", "output"}};
    for (const auto& [qualified, value] : ini) {
        const auto dot = qualified.find('.');
        const std::string section = qualified.substr(0, dot), key = qualified.substr(dot + 1);
        auto it = home.find(key);
        if (it == home.end()) throw ConfigError("unknown key '" + key + "' in [" + section + "]");
        if (it->second != section)
            throw ConfigError("key '" + key + "' belongs in [" + it->second + "], found in [" + section + "]");
        apply_setting(cfg, key, value);
    }
}

void validate(const RunConfig& cfg) {
    const auto& ids = case_ids();
    if (std::find(ids.begin(), ids.end(), cfg.case_id) == ids.end())
        throw ConfigError("unknown case '" + cfg.case_id + "'");
    if (cfg.degree < 1 || cfg.degree > kMaxDegree)
        throw ConfigError("k must lie in [1, " + std::to_string(kMaxDegree) + "]");
    if (cfg.n1 < 0 || cfg.n2 < 0) throw ConfigError("mesh sizes must be positive");
    for (int n : cfg.meshes)
        if (n < 1) throw ConfigError("mesh list entries must be positive");
    if (!(cfg.cfl > 0.0)) throw ConfigError("cfl must be positive");
    if (!(cfg.tau_scale >= 0.0)) throw ConfigError("tau-scale must be non-negative");
    if (cfg.cadence < 0) throw ConfigError("cadence must be non-negative");
    if (cfg.mach != 0.0) {
        if (cfg.case_id != "steady-vortex") throw ConfigError("mach applies to steady-vortex only");
        if (!(cfg.mach > 0.0 && cfg.mach < 1.0)) throw ConfigError("mach must lie in (0,1)");
    }
    const CaseSpec c = make_case(cfg.case_id, cfg.mach);
    if (cfg.well_balanced) {
        if (!c.gravity.active()) throw ConfigError("wb requires a case with gravity");
        if (cfg.scheme != Scheme::SupgGfq) throw ConfigError("wb is available with supg-gfq only");
    }
}

std::filesystem::path output_directory(const RunConfig& cfg) {
    std::filesystem::path out(cfg.output);
    if (out.is_relative()) {
        if (const char* root = std::getenv("GFQ_OUTPUT_ROOT"); root && *root) out = std::filesystem::path(root) / out;
    }
    return out;
}

}  // namespace gfq
