#include "config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nar::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "' is not a number: '" + value + "'");
    }
    if (pos != value.size())
        throw std::runtime_error("config key '" + key + "' is not a number: '" + value + "'");
    return v;
}

}  // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    Config cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config parse error at " + path + ":" +
                                     std::to_string(lineno) + " (expected key=value)");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw std::runtime_error("config parse error at " + path + ":" +
                                     std::to_string(lineno) + " (empty key)");
        cfg.kv_[key] = trim(line.substr(eq + 1));
    }
    return cfg;
}

void Config::set_pair(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || trim(assignment.substr(0, eq)).empty())
        throw std::runtime_error("override must look like key=value, got '" + assignment + "'");
    kv_[trim(assignment.substr(0, eq))] = trim(assignment.substr(eq + 1));
}

void Config::set(const std::string& key, const std::string& value) { kv_[key] = value; }

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::str(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw std::runtime_error("missing config key: " + key);
    return it->second;
}

std::string Config::str_or(const std::string& key, const std::string& dflt) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? dflt : it->second;
}

double Config::num(const std::string& key) const { return parse_double(key, str(key)); }

double Config::num_or(const std::string& key, double dflt) const {
    return has(key) ? num(key) : dflt;
}

long long Config::integer(const std::string& key) const {
    const double v = num(key);
    const long long i = static_cast<long long>(v);
    if (static_cast<double>(i) != v)
        throw std::runtime_error("config key '" + key + "' must be an integer");
    return i;
}

long long Config::integer_or(const std::string& key, long long dflt) const {
    return has(key) ? integer(key) : dflt;
}

std::uint64_t Config::seed_or(std::uint64_t dflt) const {
    if (!has("seed")) return dflt;
    const long long v = integer("seed");
    if (v < 0) throw std::runtime_error("config key 'seed' must be non-negative");
    return static_cast<std::uint64_t>(v);
}

std::vector<double> Config::numbers(const std::string& key) const {
    std::vector<double> out;
    for (const auto& tok : split(str(key), ','))
        out.push_back(parse_double(key, tok));
    return out;
}

std::vector<double> Config::numbers_or(const std::string& key, std::vector<double> dflt) const {
    return has(key) ? numbers(key) : std::move(dflt);
}

std::vector<int> Config::integers_or(const std::string& key, std::vector<int> dflt) const {
    if (!has(key)) return dflt;
    std::vector<int> out;
    for (double v : numbers(key)) {
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw std::runtime_error("config key '" + key + "' must hold integers");
        out.push_back(i);
    }
    return out;
}

std::vector<Eigen::VectorXd> Config::rows(const std::string& key) const {
    std::vector<Eigen::VectorXd> out;
    for (const auto& row : split(str(key), ';')) {
        const auto toks = split(row, ',');
        Eigen::VectorXd v(static_cast<Eigen::Index>(toks.size()));
        for (std::size_t i = 0; i < toks.size(); ++i) v[i] = parse_double(key, toks[i]);
        out.push_back(std::move(v));
    }
    if (out.empty()) throw std::runtime_error("config key '" + key + "' holds no rows");
    return out;
}

void Config::write_manifest(const std::string& dir, const std::string& command) const {
    std::filesystem::create_directories(dir);
    const std::string path = (std::filesystem::path(dir) / "manifest.txt").string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "command = " << command << "\n";
    for (const auto& [k, v] : kv_)
        if (k != "command") out << k << " = " << v << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nar::cli
