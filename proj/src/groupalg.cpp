#include "tripres/groupalg.hpp"

#include <algorithm>
#include <utility>

namespace tripres {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntegerMatrix relation_matrix(const TrianglePresentation& tri, int n) {
    const std::vector<Triple> reps = orbit_reps(tri);
    IntegerMatrix m(reps.size(), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < reps.size(); ++r) {
        m.at(r, reps[r].x) += 1;
        m.at(r, reps[r].y) += 1;
        m.at(r, reps[r].z) += 1;
    }
    return m;
}

namespace {

struct Reducer {
    IntegerMatrix& m;
    IntegerMatrix* u;  // mirrors row ops (left transform)
    IntegerMatrix* v;  // mirrors column ops (right transform)

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        if (u)
            for (std::size_t c = 0; c < u->cols; ++c) std::swap(u->at(i, c), u->at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        if (v)
            for (std::size_t r = 0; r < v->rows; ++r) std::swap(v->at(r, i), v->at(r, j));
    }
    // row i -= q * row k
    void row_sub(std::size_t i, const BigInt& q, std::size_t k) {
        if (q == 0) return;
        for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(k, c);
        if (u)
            for (std::size_t c = 0; c < u->cols; ++c) u->at(i, c) -= q * u->at(k, c);
    }
    // col j -= q * col k
    void col_sub(std::size_t j, const BigInt& q, std::size_t k) {
        if (q == 0) return;
        for (std::size_t r = 0; r < m.rows; ++r) m.at(r, j) -= q * m.at(r, k);
        if (v)
            for (std::size_t r = 0; r < v->rows; ++r) v->at(r, j) -= q * v->at(r, k);
    }
    void row_add(std::size_t i, std::size_t k) { row_sub(i, -1, k); }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
        if (u)
            for (std::size_t c = 0; c < u->cols; ++c) u->at(i, c) = -u->at(i, c);
    }
};

} // namespace

SnfResult smith_normal_form(IntegerMatrix m, bool want_transforms) {
    SnfResult res;
    IntegerMatrix u, v;
    if (want_transforms) {
        u = IntegerMatrix::identity(m.rows);
        v = IntegerMatrix::identity(m.cols);
    }
    Reducer red{m, want_transforms ? &u : nullptr, want_transforms ? &v : nullptr};

    const std::size_t dim = std::min(m.rows, m.cols);
    std::size_t k = 0;
    while (k < dim) {
        // smallest |entry| in the trailing submatrix; ties by lowest (row, col)
        std::size_t pi = 0, pj = 0;
        BigInt best = 0;
        for (std::size_t i = k; i < m.rows; ++i)
            for (std::size_t j = k; j < m.cols; ++j) {
                const BigInt& e = m.at(i, j);
                if (e == 0) continue;
                BigInt ae = abs(e);
                if (best == 0 || ae < best) {
                    best = ae;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // trailing submatrix is zero
        red.swap_rows(k, pi);
        red.swap_cols(k, pj);

        bool clean = true;
        for (std::size_t i = k + 1; i < m.rows; ++i) {
            if (m.at(i, k) == 0) continue;
            red.row_sub(i, m.at(i, k) / m.at(k, k), k);
            if (m.at(i, k) != 0) clean = false;  // remainder smaller than pivot
        }
        for (std::size_t j = k + 1; j < m.cols; ++j) {
            if (m.at(k, j) == 0) continue;
            red.col_sub(j, m.at(k, j) / m.at(k, k), k);
            if (m.at(k, j) != 0) clean = false;
        }
        if (!clean) continue;  // re-pick the (now smaller) pivot

        // pivot must divide the whole trailing submatrix for the chain
        bool divides = true;
        for (std::size_t i = k + 1; i < m.rows && divides; ++i)
            for (std::size_t j = k + 1; j < m.cols; ++j)
                if (m.at(i, j) % m.at(k, k) != 0) {
                    red.row_add(k, i);  // pull the offending row up, re-reduce
                    divides = false;
                    break;
                }
        if (!divides) continue;

        if (m.at(k, k) < 0) red.negate_row(k);
        ++k;
    }

    res.diagonal.resize(dim);
    for (std::size_t i = 0; i < k; ++i) res.diagonal[i] = m.at(i, i);
    if (want_transforms) {
        res.u = std::move(u);
        res.v = std::move(v);
    }
    return res;
}

AbelianDecomposition abelianization(const TrianglePresentation& tri, int n) {
    IntegerMatrix m = relation_matrix(tri, n);
    SnfResult snf = smith_normal_form(std::move(m));
    AbelianDecomposition dec;
    int rank = 0;
    for (const BigInt& d : snf.diagonal) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) dec.invariant_factors.push_back(d);
    }
    dec.free_rank = n - rank;
    return dec;
}

} // namespace tripres
