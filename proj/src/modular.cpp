#include "pomset/modular.hpp"

#include <utility>

#include "pomset/error.hpp"

namespace pomset {

namespace {

int inverse_mod_p(int a, int p) {
    // Fermat; p is small.
    long long result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(result);
}

}  // namespace

bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

int row_reduce_mod_p(Matrix& rows, int p) {
    if (!is_prime(p)) throw Unsupported("row reduction needs a prime modulus, got " + std::to_string(p));
    if (rows.empty()) return 0;
    const size_t cols = rows.front().size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const int inv = inverse_mod_p(rows[rank][c] % p, p);
        for (auto& x : rows[rank]) x = static_cast<int>(static_cast<long long>(x) * inv % p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] % p == 0) continue;
            const long long f = rows[r][c];
            for (size_t j = 0; j < cols; ++j)
                rows[r][j] = static_cast<int>(((rows[r][j] - f * rows[rank][j]) % p + p) % p);
        }
        ++rank;
    }
    rows.resize(rank);
    return static_cast<int>(rank);
}

int rank_mod_p(Matrix rows, int p) { return row_reduce_mod_p(rows, p); }

Matrix select_columns(const Matrix& rows, const std::vector<int>& columns) {
    Matrix out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<int> r;
        r.reserve(columns.size());
        for (int c : columns) r.push_back(row.at(static_cast<size_t>(c)));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace pomset
