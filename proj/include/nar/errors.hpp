#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nar {

// Thrown when an iterative solver exhausts its sweep budget; carries the last iterate.
class SolverNonConvergence : public std::runtime_error {
public:
    SolverNonConvergence(std::string msg, std::vector<double> last)
        : std::runtime_error(std::move(msg)), last_iterate(std::move(last)) {}
    std::vector<double> last_iterate;
};

// Thrown when a model rollout produces a non-finite state; carries the step index
// and the states produced before divergence.
class RolloutDivergence : public std::runtime_error {
public:
    RolloutDivergence(std::size_t step, std::vector<std::vector<double>> partial)
        : std::runtime_error("rollout diverged at step " + std::to_string(step)),
          diverged_at(step), partial_trajectory(std::move(partial)) {}
    std::size_t diverged_at;
    std::vector<std::vector<double>> partial_trajectory;
};

// Thrown when a simulated orbit escapes the divergence guard; carries the escape step.
class OrbitEscape : public std::runtime_error {
public:
    explicit OrbitEscape(std::size_t step)
        : std::runtime_error("orbit escaped at step " + std::to_string(step)), escape_step(step) {}
    std::size_t escape_step;
};

}  // namespace nar
