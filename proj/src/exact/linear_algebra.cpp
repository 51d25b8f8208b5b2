#include "catalan/exact/linear_algebra.hpp"

#include "catalan/errors.hpp"

namespace catalan {

EchelonForm row_reduce(FieldMatrix matrix, std::size_t columns) {
  for (const auto& row : matrix)
    if (row.size() != columns) throw UsageError("row_reduce: ragged matrix");
  EchelonForm out;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < matrix.size(); ++col) {
    // Lightest nonzero entry keeps intermediate expressions small.
    std::size_t best = matrix.size();
    for (std::size_t r = rank; r < matrix.size(); ++r) {
      if (matrix[r][col].is_zero()) continue;
      if (best == matrix.size() || matrix[r][col].weight() < matrix[best][col].weight()) best = r;
    }
    if (best == matrix.size()) continue;
    std::swap(matrix[rank], matrix[best]);
    auto& pivot_row = matrix[rank];
    const FieldElement inverse = pivot_row[col].inverse();
    for (std::size_t c = col; c < columns; ++c)
      if (!pivot_row[c].is_zero()) pivot_row[c] *= inverse;
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      if (r == rank || matrix[r][col].is_zero()) continue;
      const FieldElement factor = matrix[r][col];
      for (std::size_t c = col; c < columns; ++c)
        if (!pivot_row[c].is_zero()) matrix[r][c] -= factor * pivot_row[c];
    }
    out.pivots.push_back(col);
    ++rank;
  }
  matrix.resize(rank);
  out.rows = std::move(matrix);
  return out;
}

std::optional<std::vector<FieldElement>> solve_linear(const FieldMatrix& a, const std::vector<FieldElement>& b,
                                                      std::size_t columns) {
  if (a.size() != b.size()) throw UsageError("solve_linear: row count mismatch");
  FieldMatrix augmented = a;
  for (std::size_t r = 0; r < augmented.size(); ++r) augmented[r].push_back(b[r]);
  const EchelonForm form = row_reduce(std::move(augmented), columns + 1);
  std::vector<FieldElement> x(columns);
  for (std::size_t r = 0; r < form.rows.size(); ++r) {
    if (form.pivots[r] == columns) return std::nullopt;  // 0 = nonzero
    x[form.pivots[r]] = form.rows[r][columns];
  }
  return x;
}

std::vector<std::vector<FieldElement>> nullspace(const FieldMatrix& a, std::size_t columns) {
  const EchelonForm form = row_reduce(a, columns);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : form.pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(columns);
    v[free] = FieldElement(1);
    for (std::size_t r = 0; r < form.rows.size(); ++r) v[form.pivots[r]] = -form.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace catalan
