#include "nar/validation.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "nar/csv.hpp"
#include "nar/errors.hpp"

namespace nar {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

std::vector<double> block_errors(const NarModel& model, const MacroTrajectory& trajectory,
                                 std::size_t block_len) {
    const std::size_t p = static_cast<std::size_t>(model.p());
    if (block_len < p) throw std::invalid_argument("block length must be >= memory depth");
    if (trajectory.size() < block_len + p)
        throw std::invalid_argument("trajectory too short for one seeded block");

    const std::size_t n_blocks = trajectory.size() / block_len;  // trailing partial dropped
    std::vector<double> errors;
    errors.reserve(n_blocks > 0 ? n_blocks - 1 : 0);
    for (std::size_t j = 1; j < n_blocks; ++j) {
        std::vector<MacroState> seed(p);
        for (std::size_t k = 0; k < p; ++k) seed[k] = trajectory[j * block_len - 1 - k];
        MacroTrajectory rec;
        try {
            rec = rollout(model, seed, block_len);
        } catch (const RolloutDivergence&) {
            errors.push_back(kInf);
            continue;
        }
        double num = 0.0, den = 0.0;
        for (std::size_t t = 0; t < block_len; ++t) {
            const MacroState& truth = trajectory[j * block_len + t];
            num += (truth - rec[t]).squaredNorm();
            den += truth.squaredNorm();
        }
        if (den == 0.0)
            errors.push_back(num == 0.0 ? 0.0 : kInf);
        else
            errors.push_back(std::sqrt(num) / std::sqrt(den));
    }
    return errors;
}

double one_step_error(const NarModel& model, const MacroTrajectory& trajectory) {
    const std::size_t p = static_cast<std::size_t>(model.p());
    if (trajectory.size() < p + 1) throw std::invalid_argument("trajectory too short");
    double num = 0.0, den = 0.0;
    std::vector<MacroState> hist(p);
    for (std::size_t t = p - 1; t + 1 < trajectory.size(); ++t) {
        for (std::size_t k = 0; k < p; ++k) hist[k] = trajectory[t - k];
        const MacroState pred = predict_one_step(model, hist);
        num += (trajectory[t + 1] - pred).squaredNorm();
        den += trajectory[t + 1].squaredNorm();
    }
    return std::sqrt(num) / std::sqrt(den);
}

SweepResult memory_sweep(const std::vector<MacroTrajectory>& train,
                         const std::vector<MacroTrajectory>& validate,
                         const DictBuilder& dict_builder, const std::vector<int>& p_values,
                         const std::vector<double>& lambdas, std::size_t block_len) {
    if (p_values.empty()) throw std::invalid_argument("empty memory-depth list");
    if (lambdas.empty()) throw std::invalid_argument("empty lambda list");
    for (int p : p_values) {
        for (const auto& tr : validate)
            if (tr.size() < block_len + static_cast<std::size_t>(p))
                throw std::invalid_argument("validation trajectory too short for p=" +
                                            std::to_string(p));
    }

    SweepResult out;
    for (int p : p_values) {
        const HankelData data = build_hankel(train, p);
        const DictionarySpec dict = dict_builder(p);
        for (double lambda : lambdas) {
            SweepCell cell;
            cell.p = p;
            cell.lambda = lambda;
            cell.model = fit(data, dict, lambda);

            double block_sum = 0.0, one_step_sum = 0.0;
            bool any_inf = false;
            for (const auto& tr : validate) {
                for (double e : block_errors(cell.model, tr, block_len)) {
                    ++cell.n_blocks;
                    if (std::isinf(e)) {
                        ++cell.n_diverged;
                        any_inf = true;
                    } else {
                        block_sum += e;
                    }
                }
                one_step_sum += one_step_error(cell.model, tr);
            }
            cell.mean_block_error =
                any_inf ? kInf : (cell.n_blocks ? block_sum / static_cast<double>(cell.n_blocks) : 0.0);
            cell.mean_one_step_error =
                validate.empty() ? 0.0 : one_step_sum / static_cast<double>(validate.size());
            out.cells.push_back(std::move(cell));
        }
    }
    return out;
}

void write_sweep_csv(const SweepResult& sweep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "p,lambda,mean_block_error,mean_one_step_error,n_blocks,n_diverged\n";
    for (const auto& c : sweep.cells)
        out << c.p << ',' << csv::format_double(c.lambda) << ','
            << csv::format_double(c.mean_block_error) << ','
            << csv::format_double(c.mean_one_step_error) << ',' << c.n_blocks << ','
            << c.n_diverged << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nar
