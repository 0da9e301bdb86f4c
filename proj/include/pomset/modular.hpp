#pragma once

#include <vector>

namespace pomset {

using Matrix = std::vector<std::vector<int>>;

bool is_prime(int m);

/// Row-reduces in place over the field Z_p and returns the rank. Zero rows are
/// dropped from the result.
int row_reduce_mod_p(Matrix& rows, int p);

int rank_mod_p(Matrix rows, int p);

/// Columns `columns` of `rows`, in the given order.
Matrix select_columns(const Matrix& rows, const std::vector<int>& columns);

}  // namespace pomset
