#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace nar::csv {

// All floats are written with 17 significant digits so files round-trip doubles exactly.
std::string format_double(double v);

// Writes header + one row per matrix row. Throws std::runtime_error on I/O failure.
void write_matrix(const std::string& path, const std::vector<std::string>& header,
                  const Eigen::MatrixXd& rows);

// Reads a CSV written by write_matrix (or any numeric CSV with a single header line).
Eigen::MatrixXd read_matrix(const std::string& path, std::vector<std::string>* header = nullptr);

// Trajectory files: header "t,x1,...,xm", first column is the step index.
void write_trajectory(const std::string& path, const std::vector<Eigen::VectorXd>& states);
std::vector<Eigen::VectorXd> read_trajectory(const std::string& path);

}  // namespace nar::csv
