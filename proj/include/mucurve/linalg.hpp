#pragma once

#include <optional>
#include <vector>

#include "mucurve/field.hpp"

namespace mucurve::linalg {

using Row = std::vector<FieldElem>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form; returns the pivot columns in order.
// RREF is unique, so the result is deterministic regardless of the pivot-row
// heuristic (over Q a shortest-row heuristic limits coefficient blowup).
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

// Deterministic kernel basis of the column map, one vector per free column of
// the RREF, in ascending free-column order. cols is required so empty
// matrices still report the full kernel.
std::vector<Row> kernel(Matrix m, std::size_t cols, const ContextPtr& ctx);

// Exact solve of m x = b (free variables set to zero); nullopt if inconsistent.
std::optional<Row> solve(Matrix m, const Row& b, const ContextPtr& ctx);

// Fraction-free Bareiss elimination rank for matrices whose entries are dense
// polynomials over a base field (used for K(eps) matrices after clearing
// denominators row by row).
using PolyMatrix = std::vector<std::vector<vecpoly::Vec>>;
int bareiss_rank(PolyMatrix m);

}  // namespace mucurve::linalg
