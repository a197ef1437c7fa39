#include "altres/gfp.hpp"

#include "altres/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace altres {

namespace {

std::uint32_t reduce_mod(long long v, int p) {
    long long r = v % p;
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inverse_mod(std::uint32_t a, int p) {
    // p is prime: a^(p-2)
    std::uint64_t result = 1, base = a, e = static_cast<std::uint64_t>(p - 2);
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

struct Echelon {
    std::vector<std::vector<std::uint32_t>> rows;  // reduced, one per pivot
    std::vector<int> pivots;
};

Echelon echelon_gf2(const GFpMatrix& m) {
    const int words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(words, 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c)) a[r][c / 64] |= std::uint64_t{1} << (c % 64);
    Echelon e;
    int next = 0;
    for (int c = 0; c < m.cols() && next < m.rows(); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        int piv = -1;
        for (int r = next; r < m.rows(); ++r)
            if (a[r][c / 64] & bit) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[next]);
        for (int r = 0; r < m.rows(); ++r) {
            if (r != next && (a[r][c / 64] & bit))
                for (int w = 0; w < words; ++w) a[r][w] ^= a[next][w];
        }
        e.pivots.push_back(c);
        ++next;
    }
    for (int r = 0; r < next; ++r) {
        std::vector<std::uint32_t> row(m.cols());
        for (int c = 0; c < m.cols(); ++c) row[c] = (a[r][c / 64] >> (c % 64)) & 1;
        e.rows.push_back(std::move(row));
    }
    return e;
}

Echelon echelon(const GFpMatrix& m) {
    if (m.p() == 2) return echelon_gf2(m);
    const int p = m.p();
    std::vector<std::vector<std::uint32_t>> a(m.rows(), std::vector<std::uint32_t>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
    Echelon e;
    int next = 0;
    for (int c = 0; c < m.cols() && next < m.rows(); ++c) {
        int piv = -1;
        for (int r = next; r < m.rows(); ++r)
            if (a[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[next]);
        auto& prow = a[next];
        std::uint64_t inv = inverse_mod(prow[c], p);
        for (int k = c; k < m.cols(); ++k) prow[k] = static_cast<std::uint32_t>(prow[k] * inv % p);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == next || a[r][c] == 0) continue;
            std::uint64_t f = p - a[r][c];
            auto& row = a[r];
            for (int k = c; k < m.cols(); ++k)
                if (prow[k]) row[k] = static_cast<std::uint32_t>((row[k] + f * prow[k]) % p);
        }
        e.pivots.push_back(c);
        ++next;
    }
    a.resize(next);
    e.rows = std::move(a);
    return e;
}

}  // namespace

GFpMatrix::GFpMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    require_prime(p);
    if (p >= (1 << 16)) throw std::invalid_argument("prime too large");
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

GFpMatrix GFpMatrix::identity(int p, int n) {
    GFpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

GFpMatrix GFpMatrix::from_rows(int p, const std::vector<std::vector<long long>>& rows) {
    const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    GFpMatrix m(p, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("ragged rows");
        for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

GFpMatrix GFpMatrix::from_columns(int p, int dim, const std::vector<std::vector<std::uint32_t>>& cols) {
    GFpMatrix m(p, dim, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (static_cast<int>(cols[c].size()) != dim) throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < dim; ++r) m.set(r, c, cols[c][r]);
    }
    return m;
}

std::vector<std::uint32_t> GFpMatrix::column(int c) const {
    std::vector<std::uint32_t> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void GFpMatrix::set(int r, int c, long long v) {
    data_[static_cast<std::size_t>(r) * cols_ + c] = reduce_mod(v, p_);
}

void GFpMatrix::add(int r, int c, long long v) {
    auto& x = data_[static_cast<std::size_t>(r) * cols_ + c];
    x = reduce_mod(static_cast<long long>(x) + reduce_mod(v, p_), p_);
}

GFpMatrix GFpMatrix::operator*(const GFpMatrix& rhs) const {
    if (p_ != rhs.p_ || cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
    GFpMatrix out(p_, rows_, rhs.cols_);
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t a = at(i, k);
            if (!a) continue;
            const std::uint32_t* b = &rhs.data_[static_cast<std::size_t>(k) * rhs.cols_];
            for (int j = 0; j < rhs.cols_; ++j) acc[j] += a * b[j];
        }
        for (int j = 0; j < rhs.cols_; ++j)
            out.data_[static_cast<std::size_t>(i) * out.cols_ + j] = static_cast<std::uint32_t>(acc[j] % p_);
    }
    return out;
}

GFpMatrix GFpMatrix::operator-(const GFpMatrix& rhs) const {
    if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("dimension mismatch");
    GFpMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
    return out;
}

int rank(const GFpMatrix& m) { return static_cast<int>(echelon(m).pivots.size()); }

GFpMatrix nullspace(const GFpMatrix& m) {
    const int p = m.p();
    Echelon e = echelon(m);
    std::vector<int> pivot_row(m.cols(), -1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) pivot_row[e.pivots[i]] = static_cast<int>(i);
    std::vector<std::vector<std::uint32_t>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (pivot_row[f] >= 0) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            std::uint32_t x = e.rows[i][f];
            if (x) v[e.pivots[i]] = (p - x) % p;
        }
        basis.push_back(std::move(v));
    }
    return GFpMatrix::from_columns(p, m.cols(), basis);
}

GFpMatrix fixed_subspace(const std::vector<GFpMatrix>& actions) {
    if (actions.empty()) throw std::invalid_argument("no actions given");
    const int p = actions.front().p();
    const int n = actions.front().rows();
    for (const auto& g : actions)
        if (g.p() != p || g.rows() != n || g.cols() != n)
            throw std::invalid_argument("actions must be square of equal size over the same field");
    GFpMatrix basis = GFpMatrix::identity(p, n);
    const GFpMatrix id = GFpMatrix::identity(p, n);
    for (const auto& g : actions) {
        if (basis.cols() == 0) break;
        GFpMatrix k = nullspace((g - id) * basis);
        basis = basis * k;
    }
    return basis;
}

}  // namespace altres
