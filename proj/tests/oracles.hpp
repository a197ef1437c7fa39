#pragma once

// Brute-force reference implementations, written independently of the library
// code paths they check.

#include "altres/gfp.hpp"
#include "altres/nodes.hpp"
#include "altres/partition.hpp"
#include "altres/permmod.hpp"
#include "altres/permutation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using altres::Node;
using altres::Partition;

inline int res(int r, int c, int p) { return (((c - r) % p) + p) % p; }

// Removable (-1) and addable (+1) i-nodes, top row first.
inline std::vector<std::pair<int, Node>> word(const Partition& l, int i, int p) {
    std::vector<std::pair<int, Node>> w;
    for (int r = 1; r <= l.length() + 1; ++r) {
        const int len = l.row(r);
        if (len > 0 && len > l.row(r + 1) && res(r, len, p) == i) w.push_back({-1, Node{r, len}});
        if ((r == 1 || l.row(r - 1) > len) && res(r, len + 1, p) == i) w.push_back({+1, Node{r, len + 1}});
    }
    return w;
}

// A removable node survives iff every segment of the word ending at it has
// more removable than addable nodes.
inline std::vector<Node> normal(const Partition& l, int i, int p) {
    const auto w = word(l, i, p);
    std::vector<Node> out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].first != -1) continue;
        bool ok = true;
        int bal = 0;
        for (std::size_t s = j + 1; s-- > 0;) {
            bal += w[s].first == -1 ? 1 : -1;
            if (bal <= 0) ok = false;
        }
        if (ok) out.push_back(w[j].second);
    }
    return out;
}

// An addable node survives iff every segment starting at it has more
// addable than removable nodes.
inline std::vector<Node> conormal(const Partition& l, int i, int p) {
    const auto w = word(l, i, p);
    std::vector<Node> out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].first != 1) continue;
        bool ok = true;
        int bal = 0;
        for (std::size_t s = j; s < w.size(); ++s) {
            bal += w[s].first == 1 ? 1 : -1;
            if (bal <= 0) ok = false;
        }
        if (ok) out.push_back(w[j].second);
    }
    return out;
}

inline int normal_count(const Partition& l, int p) {
    int total = 0;
    for (int i = 0; i < p; ++i) total += static_cast<int>(normal(l, i, p).size());
    return total;
}

inline Partition conjugate(const Partition& l) {
    std::vector<int> c;
    for (int col = 1; col <= l.row(1); ++col) {
        int h = 0;
        while (l.row(h + 1) >= col) ++h;
        c.push_back(h);
    }
    return Partition(c);
}

inline bool regular(const Partition& l, int p) {
    std::map<int, int> count;
    for (int x : l.parts())
        if (++count[x] >= p) return false;
    return true;
}

// All partitions of n by direct recursion, in no particular order.
inline void partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int x = 1; x <= std::min(n, max_part); ++x) {
        cur.push_back(x);
        partitions(n - x, x, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions(n, n, cur, out);
    return out;
}

// Number of solutions of m x = 0, by enumeration; tiny matrices only.
inline long long kernel_size(const altres::GFpMatrix& m) {
    const int p = m.p(), c = m.cols();
    std::vector<int> x(c, 0);
    long long count = 0;
    while (true) {
        bool zero = true;
        for (int r = 0; r < m.rows() && zero; ++r) {
            long long s = 0;
            for (int j = 0; j < c; ++j) s += static_cast<long long>(m.at(r, j)) * x[j];
            if (s % p) zero = false;
        }
        if (zero) ++count;
        int j = 0;
        while (j < c && ++x[j] == p) x[j++] = 0;
        if (j == c) break;
    }
    return count;
}

inline int log_p(long long v, int p) {
    int e = 0;
    while (v > 1) {
        v /= p;
        ++e;
    }
    return e;
}

// Orbits of the generated group on k-subsets, by explicit flood fill.
inline int orbits_on_subsets(const std::vector<altres::Permutation>& gens, int n, int k) {
    auto subs = altres::omega_k(n, k);
    std::set<std::vector<int>> seen;
    int orbits = 0;
    for (const auto& s : subs) {
        if (seen.count(s)) continue;
        ++orbits;
        std::vector<std::vector<int>> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                std::vector<int> img;
                for (int x : cur) img.push_back(g(x - 1) + 1);
                std::sort(img.begin(), img.end());
                if (seen.insert(img).second) stack.push_back(img);
            }
        }
    }
    return orbits;
}

// dim (M_2 / K)^G with K spanned by the all-ones vector and the point sums:
// dim {x : (g-1)x in K for all g} - dim K, solved jointly over all generators.
inline int s2_quotient_invariants(int n, int p, const std::vector<altres::Permutation>& gens) {
    using altres::GFpMatrix;
    const auto subs = altres::omega_k(n, 2);
    const int N = static_cast<int>(subs.size());
    std::vector<std::vector<std::uint32_t>> kc;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint32_t> v(N, 0);
        for (int t = 0; t < N; ++t)
            if (subs[t][0] == i || subs[t][1] == i) v[t] = 1;
        kc.push_back(v);
    }
    kc.push_back(std::vector<std::uint32_t>(N, 1));
    const GFpMatrix K = GFpMatrix::from_columns(p, N, kc);
    const int dk = altres::rank(K);
    const int kcols = K.cols();
    const int G = static_cast<int>(gens.size());
    std::map<std::vector<int>, int> index;
    for (int t = 0; t < N; ++t) index[subs[t]] = t;
    GFpMatrix big(p, N * G, N + kcols * G);
    for (int gi = 0; gi < G; ++gi) {
        for (int c = 0; c < N; ++c) {
            std::vector<int> img{gens[gi](subs[c][0] - 1) + 1, gens[gi](subs[c][1] - 1) + 1};
            std::sort(img.begin(), img.end());
            big.add(gi * N + index[img], c, 1);
            big.add(gi * N + c, c, -1);
        }
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < kcols; ++c) big.set(gi * N + r, N + gi * kcols + c, -static_cast<long long>(K.at(r, c)));
    }
    const GFpMatrix ns = altres::nullspace(big);
    GFpMatrix proj(p, N, ns.cols());
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < ns.cols(); ++c) proj.set(r, c, ns.at(r, c));
    return altres::rank(proj) - dk;
}

// dim (M_1 / <all-ones>)^G, same method.
inline int s1_quotient_invariants(int n, int p, const std::vector<altres::Permutation>& gens) {
    using altres::GFpMatrix;
    const int G = static_cast<int>(gens.size());
    GFpMatrix big(p, n * G, n + G);
    for (int gi = 0; gi < G; ++gi) {
        for (int c = 0; c < n; ++c) {
            big.add(gi * n + gens[gi](c), c, 1);
            big.add(gi * n + c, c, -1);
        }
        for (int r = 0; r < n; ++r) big.set(gi * n + r, n + gi, -1);
    }
    const GFpMatrix ns = altres::nullspace(big);
    GFpMatrix proj(p, n, ns.cols());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < ns.cols(); ++c) proj.set(r, c, ns.at(r, c));
    return altres::rank(proj) - 1;
}

}  // namespace oracle
