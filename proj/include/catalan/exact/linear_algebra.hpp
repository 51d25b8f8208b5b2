#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "catalan/exact/field.hpp"

namespace catalan {

using FieldMatrix = std::vector<std::vector<FieldElement>>;

struct EchelonForm {
  FieldMatrix rows;                  // reduced row echelon form; zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Gauss-Jordan elimination over the coefficient field. Every row must have
/// `columns` entries.
EchelonForm row_reduce(FieldMatrix matrix, std::size_t columns);

/// Solution of A x = b with free coordinates set to zero; nullopt if inconsistent.
std::optional<std::vector<FieldElement>> solve_linear(const FieldMatrix& a, const std::vector<FieldElement>& b,
                                                      std::size_t columns);

/// Basis of {x : A x = 0}, one vector per free column in ascending column
/// order; each vector has a 1 at its free column and 0 at the other free columns.
std::vector<std::vector<FieldElement>> nullspace(const FieldMatrix& a, std::size_t columns);

}  // namespace catalan
