#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace nar::cli {

int cmd_simulate(const Config& cfg, const std::string& out_dir);
int cmd_fit(const Config& cfg, const std::vector<std::string>& data_files,
            const std::string& out_dir);
int cmd_predict(const Config& cfg, const std::string& model_file, const std::string& traj_file,
                const std::string& out_dir);
int cmd_sweep(const Config& cfg, const std::string& out_dir);
int cmd_henon(const Config& cfg, const std::string& out_dir);
int cmd_appendix_c(const Config& cfg, const std::string& out_dir);
int cmd_hausdorff(const Config& cfg, const std::string& file_a, const std::string& file_b,
                  const std::string& out_dir);

}  // namespace nar::cli
