#include "nar/dictionary.hpp"

#include <stdexcept>

namespace nar {

void DictionarySpec::validate() const {
    if (m_dims < 1 || max_delay < 1) throw std::invalid_argument("dictionary needs m >= 1, p >= 1");
    for (const auto& t : terms) {
        if (t.delay < 0 || t.delay >= max_delay)
            throw std::invalid_argument("term delay out of range");
        if (static_cast<int>(t.expo.size()) != m_dims)
            throw std::invalid_argument("term exponent vector has wrong dimension");
        int total = 0;
        for (int e : t.expo) {
            if (e < 0) throw std::invalid_argument("negative exponent");
            total += e;
        }
        if (total == 0) throw std::invalid_argument("empty monomial; use the constant flag instead");
    }
}

Eigen::VectorXd DictionarySpec::evaluate(const Eigen::Ref<const Eigen::VectorXd>& stacked) const {
    if (stacked.size() != static_cast<Eigen::Index>(m_dims) * max_delay)
        throw std::invalid_argument("stacked state has wrong dimension");
    Eigen::VectorXd out(n_terms());
    int idx = 0;
    if (constant) out[idx++] = 1.0;
    for (const auto& t : terms) {
        double v = 1.0;
        for (int j = 0; j < m_dims; ++j) {
            const double xj = stacked[static_cast<Eigen::Index>(t.delay) * m_dims + j];
            for (int e = 0; e < t.expo[static_cast<std::size_t>(j)]; ++e) v *= xj;
        }
        out[idx++] = v;
    }
    return out;
}

Eigen::MatrixXd DictionarySpec::evaluate_all(
    const Eigen::Ref<const Eigen::MatrixXd>& stacked_cols) const {
    if (stacked_cols.rows() != static_cast<Eigen::Index>(m_dims) * max_delay)
        throw std::invalid_argument("stacked columns have wrong dimension");
    Eigen::MatrixXd out(n_terms(), stacked_cols.cols());
    int idx = 0;
    if (constant) out.row(idx++).setOnes();
    for (const auto& t : terms) {
        Eigen::RowVectorXd v = Eigen::RowVectorXd::Ones(stacked_cols.cols());
        for (int j = 0; j < m_dims; ++j) {
            const auto row = stacked_cols.row(static_cast<Eigen::Index>(t.delay) * m_dims + j);
            for (int e = 0; e < t.expo[static_cast<std::size_t>(j)]; ++e)
                v.array() *= row.array();
        }
        out.row(idx++) = v;
    }
    return out;
}

std::string DictionarySpec::term_name(int index) const {
    if (index < 0 || index >= n_terms()) throw std::invalid_argument("term index out of range");
    if (constant) {
        if (index == 0) return "1";
        --index;
    }
    const auto& t = terms[static_cast<std::size_t>(index)];
    std::string name;
    for (int j = 0; j < m_dims; ++j) {
        const int e = t.expo[static_cast<std::size_t>(j)];
        if (e == 0) continue;
        if (!name.empty()) name += "*";
        name += "x" + std::to_string(j + 1) + "(t" +
                (t.delay ? "-" + std::to_string(t.delay) : "") + ")";
        if (e > 1) name += "^" + std::to_string(e);
    }
    return name;
}

DictionarySpec make_opinion_dictionary(int p) {
    if (p < 1) throw std::invalid_argument("memory depth must be >= 1");
    DictionarySpec d;
    d.m_dims = 2;
    d.max_delay = p;
    d.constant = false;
    for (int k = 0; k < p; ++k) {
        d.terms.push_back({k, {1, 0}});
        d.terms.push_back({k, {0, 1}});
        d.terms.push_back({k, {2, 0}});
        d.terms.push_back({k, {0, 2}});
        d.terms.push_back({k, {1, 1}});
    }
    d.validate();
    return d;
}

DictionarySpec make_quadratic_scalar_dictionary(int p) {
    if (p < 1) throw std::invalid_argument("memory depth must be >= 1");
    DictionarySpec d;
    d.m_dims = 1;
    d.max_delay = p;
    d.constant = true;
    d.terms.push_back({0, {2}});
    for (int k = 0; k < p; ++k) d.terms.push_back({k, {1}});
    d.validate();
    return d;
}

DictionarySpec make_poly2_dictionary(int m, int p, bool constant) {
    if (m < 1 || p < 1) throw std::invalid_argument("need m >= 1, p >= 1");
    DictionarySpec d;
    d.m_dims = m;
    d.max_delay = p;
    d.constant = constant;
    for (int k = 0; k < p; ++k) {
        for (int j = 0; j < m; ++j) {
            DictionaryTerm t{k, std::vector<int>(static_cast<std::size_t>(m), 0)};
            t.expo[static_cast<std::size_t>(j)] = 1;
            d.terms.push_back(t);
        }
        for (int j = 0; j < m; ++j)
            for (int j2 = j; j2 < m; ++j2) {
                DictionaryTerm t{k, std::vector<int>(static_cast<std::size_t>(m), 0)};
                t.expo[static_cast<std::size_t>(j)] += 1;
                t.expo[static_cast<std::size_t>(j2)] += 1;
                d.terms.push_back(t);
            }
    }
    d.validate();
    return d;
}

DictionarySpec make_linear_dictionary(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("need m >= 1, p >= 1");
    DictionarySpec d;
    d.m_dims = m;
    d.max_delay = p;
    d.constant = false;
    for (int k = 0; k < p; ++k)
        for (int j = 0; j < m; ++j) {
            DictionaryTerm t{k, std::vector<int>(static_cast<std::size_t>(m), 0)};
            t.expo[static_cast<std::size_t>(j)] = 1;
            d.terms.push_back(t);
        }
    d.validate();
    return d;
}

DictionarySpec dictionary_by_name(const std::string& name, int m, int p) {
    if (name == "opinion") return make_opinion_dictionary(p);
    if (name == "quadratic-scalar") return make_quadratic_scalar_dictionary(p);
    if (name == "poly2") return make_poly2_dictionary(m, p, true);
    if (name == "linear") return make_linear_dictionary(m, p);
    throw std::invalid_argument("unknown dictionary: " + name);
}

}  // namespace nar
