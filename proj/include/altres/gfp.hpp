#pragma once

#include <cstdint>
#include <vector>

namespace altres {

// Dense matrix over the prime field F_p, row-major, entries in [0, p).
class GFpMatrix {
public:
    GFpMatrix(int p, int rows, int cols);
    static GFpMatrix identity(int p, int n);
    static GFpMatrix from_rows(int p, const std::vector<std::vector<long long>>& rows);

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint32_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, long long v);
    void add(int r, int c, long long v);

    GFpMatrix operator*(const GFpMatrix& rhs) const;
    GFpMatrix operator-(const GFpMatrix& rhs) const;
    bool operator==(const GFpMatrix& rhs) const = default;

    // Columns as a matrix; used for bases of subspaces (one vector per column).
    static GFpMatrix from_columns(int p, int dim, const std::vector<std::vector<std::uint32_t>>& cols);
    std::vector<std::uint32_t> column(int c) const;

private:
    int p_;
    int rows_;
    int cols_;
    std::vector<std::uint32_t> data_;
};

int rank(const GFpMatrix& m);
// Basis of {x : m x = 0}, one vector per column, in reduced form: free
// variables in increasing order, pivots chosen as first nonzero entries.
GFpMatrix nullspace(const GFpMatrix& m);
// Basis of the common fixed space of the given square matrices.
GFpMatrix fixed_subspace(const std::vector<GFpMatrix>& actions);

}  // namespace altres
