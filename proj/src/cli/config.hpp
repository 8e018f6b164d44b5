#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nar::cli {

// Flat key=value experiment configuration. Values stay strings until a command
// asks for a typed view, so a manifest can round-trip any config verbatim.
class Config {
public:
    Config() = default;

    static Config from_file(const std::string& path);

    // "key=value" override, as accepted by --set; flags win over file entries.
    void set_pair(const std::string& assignment);
    void set(const std::string& key, const std::string& value);

    bool has(const std::string& key) const;
    std::string str(const std::string& key) const;
    std::string str_or(const std::string& key, const std::string& dflt) const;
    double num(const std::string& key) const;
    double num_or(const std::string& key, double dflt) const;
    long long integer(const std::string& key) const;
    long long integer_or(const std::string& key, long long dflt) const;
    std::uint64_t seed_or(std::uint64_t dflt) const;

    // Comma-separated scalars, e.g. "0,0.05" or "1,2,5".
    std::vector<double> numbers(const std::string& key) const;
    std::vector<double> numbers_or(const std::string& key, std::vector<double> dflt) const;
    std::vector<int> integers_or(const std::string& key, std::vector<int> dflt) const;

    // Semicolon-separated comma rows, e.g. "0.8,0.1,0.1; 0.1,0.8,0.1".
    std::vector<Eigen::VectorXd> rows(const std::string& key) const;

    // Writes <dir>/manifest.txt: the resolved configuration plus the command
    // name, loadable again via --config for exact reruns.
    void write_manifest(const std::string& dir, const std::string& command) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

}  // namespace nar::cli
