#include "mucurve/linalg.hpp"

#include <algorithm>

namespace mucurve::linalg {

namespace {

// Size heuristic for pivot-row selection over Q.
std::size_t row_weight(const Row& r) {
    std::size_t w = 0;
    for (const auto& x : r) {
        if (!x.context()->is_rationals()) return 0;
        const mpq_class& q = x.rational();
        w += mpz_sizeinbase(q.get_num().get_mpz_t(), 2) + mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    }
    return w;
}

}  // namespace

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        // Pick a nonzero pivot; over Q prefer the lightest row.
        std::size_t best = rows;
        std::size_t best_w = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            const std::size_t w = row_weight(m[i]);
            if (best == rows || w < best_w) {
                best = i;
                best_w = w;
            }
            if (w == 0) break;  // not rationals: take the first nonzero row
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        const FieldElem inv = m[r][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            const FieldElem f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++r;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<Row> kernel(Matrix m, std::size_t cols, const ContextPtr& ctx) {
    const std::vector<int> pivots = rref(m);
    std::vector<int> pivot_of_col(cols, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
    std::vector<Row> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        Row v(cols, ctx->zero());
        v[j] = ctx->one();
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const FieldElem& e = m[i][j];
            if (!e.is_zero()) v[pivots[i]] = -e;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Row> solve(Matrix m, const Row& b, const ContextPtr& ctx) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    const std::vector<int> pivots = rref(m);
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    Row x(cols, ctx->zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
    return x;
}

int bareiss_rank(PolyMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    vecpoly::Vec prev;  // previous pivot; empty marks "1" at the first step
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!vecpoly::is_zero(m[i][col])) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                vecpoly::Vec num =
                    vecpoly::sub(vecpoly::mul(m[i][j], m[r][col]), vecpoly::mul(m[r][j], m[i][col]));
                if (!prev.empty()) {
                    auto [q, rem] = vecpoly::divmod(num, prev);
                    if (!vecpoly::is_zero(rem))
                        throw InternalInconsistency("Bareiss exact division left a remainder");
                    num = std::move(q);
                }
                m[i][j] = std::move(num);
            }
            m[i][col] = {};
        }
        prev = m[r][col];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace mucurve::linalg
