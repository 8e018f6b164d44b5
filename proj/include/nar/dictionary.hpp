#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace nar {

// One dictionary term: a monomial over the coordinates of a single delayed
// state, prod_j (x_{t-delay})_j ^ expo[j]. Terms never mix delays.
struct DictionaryTerm {
    int delay = 0;
    std::vector<int> expo;  // length m
};

// Ordered feature map Theta over the stacked delay vector. Term order is fixed
// (optional constant first, then delay-major) so coefficient indices are stable.
struct DictionarySpec {
    int m_dims = 0;
    int max_delay = 0;      // p
    bool constant = false;  // leading constant term
    std::vector<DictionaryTerm> terms;

    int n_terms() const { return static_cast<int>(terms.size()) + (constant ? 1 : 0); }

    // Evaluates all terms on one stacked delay column (size m*p, newest first).
    Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& stacked) const;
    // Evaluates on every column: result is n_terms x n.
    Eigen::MatrixXd evaluate_all(const Eigen::Ref<const Eigen::MatrixXd>& stacked_cols) const;

    std::string term_name(int index) const;  // e.g. "x1(t-1)^2*x2(t-1)"
    void validate() const;                   // structural invariants
};

// Per delay k: (x_{t-k})_1, (x_{t-k})_2, (x_{t-k})_1², (x_{t-k})_2², (x_{t-k})_1(x_{t-k})_2.
// 5p terms, no constant, m=2.
DictionarySpec make_opinion_dictionary(int p);

// [1, x_t², x_t, x_{t-1}, ..., x_{t-p+1}]: constant, quadratic at delay 0,
// linear at every delay. p+2 terms, m=1.
DictionarySpec make_quadratic_scalar_dictionary(int p);

// All monomials of total degree <= 2 per delay over m coordinates, plus a
// constant; the general-m counterpart of the opinion dictionary.
DictionarySpec make_poly2_dictionary(int m, int p, bool constant);

// Linear terms only, every coordinate at every delay; no constant. m·p terms.
DictionarySpec make_linear_dictionary(int m, int p);

DictionarySpec dictionary_by_name(const std::string& name, int m, int p);

}  // namespace nar
