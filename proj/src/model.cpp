#include "nar/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nar/csv.hpp"
#include "nar/errors.hpp"
#include "nar/solver.hpp"

namespace nar {

NarModel fit(const HankelData& data, const DictionarySpec& dict, double lambda) {
    dict.validate();
    if (dict.max_delay * dict.m_dims != data.stacked.rows())
        throw std::invalid_argument("dictionary depth does not match data stacking");
    if (dict.m_dims != data.m) throw std::invalid_argument("dictionary dimension mismatch");
    if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");

    const Eigen::MatrixXd theta = dict.evaluate_all(data.stacked);
    NarModel model;
    model.dictionary = dict;
    model.lambda = lambda;
    model.solver = lambda == 0.0 ? "least-squares" : "thresholded-least-squares";
    model.xi.resize(data.m, theta.rows());

    bool any_rd = false;
    for (int i = 0; i < data.m; ++i) {
        bool rd = false;
        Eigen::VectorXd row;
        if (lambda == 0.0) {
            row = least_squares(theta, data.next.row(i).transpose(), &rd);
        } else {
            row = thresholded_least_squares(theta, data.next.row(i).transpose(), lambda, &rd);
            // The iterative sparse path can leave numerical dust; the exact
            // least-squares path must not be snapped (true coefficients may be tiny).
            for (Eigen::Index j = 0; j < row.size(); ++j)
                if (std::abs(row[j]) < 1e-8) row[j] = 0.0;
        }
        any_rd = any_rd || rd;
        model.xi.row(i) = row.transpose();
    }
    model.rank_deficient = any_rd;
    model.noise_cov = estimate_noise_covariance(model, data);
    return model;
}

MacroState predict_one_step(const NarModel& model, const std::vector<MacroState>& history) {
    if (history.size() != static_cast<std::size_t>(model.p()))
        throw std::invalid_argument("history must contain exactly p states");
    Eigen::VectorXd stacked(static_cast<Eigen::Index>(model.m()) * model.p());
    for (int k = 0; k < model.p(); ++k) {
        const MacroState& h = history[static_cast<std::size_t>(k)];
        if (h.size() != model.m()) throw std::invalid_argument("history state has wrong dimension");
        stacked.segment(static_cast<Eigen::Index>(k) * model.m(), model.m()) = h;
    }
    return model.xi * model.dictionary.evaluate(stacked);
}

MacroTrajectory rollout(const NarModel& model, const std::vector<MacroState>& initial_history,
                        std::size_t steps) {
    std::vector<MacroState> hist = initial_history;
    MacroTrajectory out;
    out.reserve(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        MacroState next = predict_one_step(model, hist);
        if (!next.allFinite()) {
            std::vector<std::vector<double>> partial;
            partial.reserve(out.size());
            for (const auto& v : out)
                partial.emplace_back(v.data(), v.data() + v.size());
            throw RolloutDivergence(s, std::move(partial));
        }
        out.push_back(next);
        for (std::size_t k = hist.size(); k-- > 1;) hist[k] = hist[k - 1];
        hist[0] = next;
    }
    return out;
}

Eigen::MatrixXd estimate_noise_covariance(const NarModel& model, const HankelData& data) {
    const Eigen::Index n = data.next.cols();
    if (n < 2) throw std::invalid_argument("need at least two samples for a covariance");
    const Eigen::MatrixXd theta = model.dictionary.evaluate_all(data.stacked);
    const Eigen::MatrixXd residual = data.next - model.xi * theta;
    const Eigen::VectorXd mean = residual.rowwise().mean();
    const Eigen::MatrixXd centered = residual.colwise() - mean;
    return centered * centered.transpose() / static_cast<double>(n - 1);
}

CoefficientBlocks coefficients_as_blocks(const NarModel& model) {
    const auto& dict = model.dictionary;
    const int p = dict.max_delay;
    const std::size_t total = dict.terms.size();
    if (total % static_cast<std::size_t>(p) != 0)
        throw std::invalid_argument("per-delay term counts are not uniform");
    const std::size_t per = total / static_cast<std::size_t>(p);
    // Delay-major layout check: term i belongs to delay i/per.
    for (std::size_t i = 0; i < total; ++i)
        if (dict.terms[i].delay != static_cast<int>(i / per))
            throw std::invalid_argument("dictionary is not delay-major with uniform blocks");

    CoefficientBlocks out;
    const Eigen::Index off = dict.constant ? 1 : 0;
    if (dict.constant) out.constant_column = model.xi.col(0);
    for (int k = 0; k < p; ++k)
        out.per_delay.push_back(model.xi.middleCols(
            off + static_cast<Eigen::Index>(k) * static_cast<Eigen::Index>(per),
            static_cast<Eigen::Index>(per)));
    return out;
}

std::string NarModel::to_polynomial_string() const {
    std::ostringstream os;
    for (int i = 0; i < m(); ++i) {
        os << "x" << (i + 1) << "(t+1) =";
        bool first = true;
        for (int j = 0; j < dictionary.n_terms(); ++j) {
            const double c = xi(i, j);
            if (c == 0.0) continue;
            if (first) {
                os << ' ' << csv::format_double(c);
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ") << csv::format_double(std::abs(c));
            }
            const std::string name = dictionary.term_name(j);
            if (name != "1") os << "*" << name;
        }
        if (first) os << " 0";
        os << '\n';
    }
    return os.str();
}

void save_model(const NarModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "nar-model 1\n";
    out << "m " << model.m() << "\n";
    out << "p " << model.p() << "\n";
    out << "lambda " << csv::format_double(model.lambda) << "\n";
    out << "solver " << model.solver << "\n";
    out << "rank_deficient " << (model.rank_deficient ? 1 : 0) << "\n";
    out << "constant " << (model.dictionary.constant ? 1 : 0) << "\n";
    out << "terms " << model.dictionary.terms.size() << "\n";
    for (const auto& t : model.dictionary.terms) {
        out << t.delay;
        for (int e : t.expo) out << ' ' << e;
        out << '\n';
    }
    out << "xi\n";
    for (Eigen::Index i = 0; i < model.xi.rows(); ++i) {
        for (Eigen::Index j = 0; j < model.xi.cols(); ++j)
            out << (j ? " " : "") << csv::format_double(model.xi(i, j));
        out << '\n';
    }
    if (model.noise_cov) {
        out << "noise_cov\n";
        for (Eigen::Index i = 0; i < model.noise_cov->rows(); ++i) {
            for (Eigen::Index j = 0; j < model.noise_cov->cols(); ++j)
                out << (j ? " " : "") << csv::format_double((*model.noise_cov)(i, j));
            out << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

NarModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string tag;
    int version = 0;
    in >> tag >> version;
    if (tag != "nar-model" || version != 1)
        throw std::runtime_error("unrecognised model file: " + path);
    NarModel model;
    int m = 0, p = 0, constant = 0, rank_def = 0;
    std::size_t n_terms = 0;
    in >> tag >> m;
    in >> tag >> p;
    in >> tag >> model.lambda;
    in >> tag >> model.solver;
    in >> tag >> rank_def;
    in >> tag >> constant;
    in >> tag >> n_terms;
    model.rank_deficient = rank_def != 0;
    model.dictionary.m_dims = m;
    model.dictionary.max_delay = p;
    model.dictionary.constant = constant != 0;
    model.dictionary.terms.resize(n_terms);
    for (auto& t : model.dictionary.terms) {
        in >> t.delay;
        t.expo.resize(static_cast<std::size_t>(m));
        for (int& e : t.expo) in >> e;
    }
    in >> tag;  // "xi"
    const int v = model.dictionary.n_terms();
    model.xi.resize(m, v);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < v; ++j) in >> model.xi(i, j);
    if (in >> tag && tag == "noise_cov") {
        Eigen::MatrixXd cov(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) in >> cov(i, j);
        model.noise_cov = cov;
    }
    if (in.fail() && !in.eof()) throw std::runtime_error("malformed model file: " + path);
    model.dictionary.validate();
    return model;
}

}  // namespace nar
