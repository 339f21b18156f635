#pragma once

// Test-only independent membership oracle: f lies in <g_1..g_k> with a
// representation of total degree <= bound iff the Macaulay linear system
// sum_i q_i g_i = f is solvable with deg(q_i g_i) <= bound. Pure linear
// algebra over Q; shares nothing with the Groebner path it cross-checks.

#include "ringbench/ideal.hpp"

#include <map>

namespace ringbench::testing {

using exactalg::Exponents;
using exactalg::FieldElement;
using exactalg::Rat;
using exactalg::SparsePolynomial;

inline bool macaulay_member(const SparsePolynomial& f,
                            const std::vector<SparsePolynomial>& gens, unsigned bound) {
    unsigned nvars = f.variable_count();
    if (f.is_zero()) return true;
    if (f.total_degree() > bound) return false;

    // columns: one unknown per (generator, multiplier monomial) pair
    struct Column {
        std::size_t gen;
        Exponents mono;
    };
    std::vector<Column> columns;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].is_zero()) continue;
        unsigned gd = gens[g].total_degree();
        if (gd > bound) continue;
        for (const Exponents& m : exactalg::monomials_up_to_degree(nvars, bound - gd))
            columns.push_back({g, m});
    }
    if (columns.empty()) return false;

    // rows: every monomial of degree <= bound
    std::map<Exponents, std::size_t> row_of;
    for (const Exponents& m : exactalg::monomials_up_to_degree(nvars, bound)) {
        std::size_t id = row_of.size();
        row_of.emplace(m, id);
    }
    std::size_t rows = row_of.size();
    std::vector<std::vector<Rat>> mat(rows, std::vector<Rat>(columns.size() + 1, Rat(0)));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& col = columns[c];
        for (const auto& t : gens[col.gen].terms()) {
            Exponents m = exactalg::monomial_mul(t.mono, col.mono);
            mat[row_of.at(m)][c] += t.coeff.rational();
        }
    }
    for (const auto& t : f.terms()) mat[row_of.at(t.mono)][columns.size()] = t.coeff.rational();

    // Gaussian elimination; solvable iff no pivot lands in the rhs column
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns.size() && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && mat[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(mat[sel], mat[rank]);
        Rat inv = 1 / mat[rank][col];
        for (std::size_t k = col; k <= columns.size(); ++k) mat[rank][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            Rat factor = mat[r][col];
            for (std::size_t k = col; k <= columns.size(); ++k)
                mat[r][k] -= factor * mat[rank][k];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (mat[r][columns.size()] != 0) return false;
    // also inconsistent when a leftover row is zero except the rhs
    for (std::size_t r = 0; r < rows; ++r) {
        bool all_zero = true;
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (mat[r][c] != 0) { all_zero = false; break; }
        if (all_zero && mat[r][columns.size()] != 0) return false;
    }
    return true;
}

}  // namespace ringbench::testing
