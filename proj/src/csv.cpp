#include "nar/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nar::csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix(const std::string& path, const std::vector<std::string>& header,
                  const Eigen::MatrixXd& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t c = 0; c < header.size(); ++c)
        out << (c ? "," : "") << header[c];
    out << '\n';
    for (Eigen::Index r = 0; r < rows.rows(); ++r) {
        for (Eigen::Index c = 0; c < rows.cols(); ++c)
            out << (c ? "," : "") << format_double(rows(r, c));
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Eigen::MatrixXd read_matrix(const std::string& path, std::vector<std::string>* header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
    if (header) {
        header->clear();
        std::stringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header->push_back(cell);
    }
    std::vector<std::vector<double>> data;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (!data.empty() && row.size() != data.front().size())
            throw std::runtime_error("ragged CSV row in " + path);
        data.push_back(std::move(row));
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(data.size()),
                      data.empty() ? 0 : static_cast<Eigen::Index>(data.front().size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            m(r, c) = data[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

void write_trajectory(const std::string& path, const std::vector<Eigen::VectorXd>& states) {
    const Eigen::Index m = states.empty() ? 0 : states.front().size();
    std::vector<std::string> header{"t"};
    for (Eigen::Index j = 0; j < m; ++j) header.push_back("x" + std::to_string(j + 1));
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(states.size()), m + 1);
    for (std::size_t t = 0; t < states.size(); ++t) {
        rows(static_cast<Eigen::Index>(t), 0) = static_cast<double>(t);
        rows.row(static_cast<Eigen::Index>(t)).tail(m) = states[t].transpose();
    }
    write_matrix(path, header, rows);
}

std::vector<Eigen::VectorXd> read_trajectory(const std::string& path) {
    Eigen::MatrixXd m = read_matrix(path);
    if (m.cols() < 2) throw std::runtime_error("trajectory CSV needs t plus one coordinate: " + path);
    std::vector<Eigen::VectorXd> states;
    states.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        states.push_back(m.row(r).tail(m.cols() - 1).transpose());
    return states;
}

}  // namespace nar::csv
