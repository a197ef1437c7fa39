#include "altres/mullineux.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace altres {

RimResult p_rim(const Partition& lambda, int p) {
    require_prime(p);
    RimResult res;
    auto v = lambda.parts();
    const int h = lambda.length();
    int r = 1;
    while (r <= h) {
        // one segment: up to p rim nodes starting at the end of row r
        int taken = 0;
        int row = r;
        int col = lambda.row(r);
        while (taken < p) {
            res.nodes.push_back({row, col});
            ++taken;
            int lo = std::max(lambda.row(row + 1), 1);
            if (col > lo) {
                --col;
            } else if (row < h) {
                ++row;
            } else {
                break;
            }
        }
        r = res.nodes.back().row + 1;
    }
    for (const auto& a : res.nodes) v[a.row - 1] -= 1;
    res.remainder = Partition::from_parts(std::move(v));
    return res;
}

MullineuxSymbol mullineux_symbol(const Partition& lambda, int p) {
    if (!is_p_regular(lambda, p)) throw std::invalid_argument("partition is not p-regular");
    MullineuxSymbol sym;
    Partition cur = lambda;
    while (!cur.empty()) {
        auto rim = p_rim(cur, p);
        sym.emplace_back(static_cast<int>(rim.nodes.size()), cur.length());
        cur = rim.remainder;
    }
    return sym;
}

namespace {

// Chooses lengths for rows r..h over inner so that the resulting partition
// has h rows, |outer/inner| == extra and its p-rim is outer/inner.
bool extend(const Partition& inner, int p, int h, int extra, int r, std::vector<int>& rows,
            std::vector<Partition>& found) {
    if (r > h) {
        if (extra != 0) return false;
        Partition outer = Partition::from_parts(rows);
        if (outer.length() != h || !is_p_regular(outer, p)) return false;
        auto rim = p_rim(outer, p);
        if (rim.remainder == inner) found.push_back(outer);
        return found.size() > 1;
    }
    int rows_left = h - r + 1;
    if (extra < rows_left || extra > p * rows_left) return false;
    int base = inner.row(r);
    int hi = base + p;
    if (r > 1) hi = std::min({hi, rows[r - 2], inner.row(r - 1) + 1});
    for (int len = base + 1; len <= hi; ++len) {
        rows[r - 1] = len;
        if (extend(inner, p, h, extra - (len - base), r + 1, rows, found)) return true;
    }
    return false;
}

}  // namespace

Partition partition_from_symbol(const MullineuxSymbol& symbol, int p) {
    require_prime(p);
    Partition cur;
    for (auto it = symbol.rbegin(); it != symbol.rend(); ++it) {
        auto [a, h] = *it;
        if (a < 1 || h < 1 || h < cur.length())
            throw std::invalid_argument("malformed Mullineux symbol");
        std::vector<int> rows(h, 0);
        std::vector<Partition> found;
        extend(cur, p, h, a, 1, rows, found);
        if (found.size() != 1)
            throw std::invalid_argument("Mullineux symbol column (" + std::to_string(a) + "," +
                                        std::to_string(h) + ") does not extend uniquely");
        cur = found.front();
    }
    return cur;
}

Partition mullineux_map(const Partition& lambda, int p) {
    auto sym = mullineux_symbol(lambda, p);
    for (auto& [a, r] : sym) r = a - r + (a % p != 0 ? 1 : 0);
    return partition_from_symbol(sym, p);
}

std::vector<int> good_path(const Partition& lambda, int p) {
    if (!is_p_regular(lambda, p)) throw std::invalid_argument("partition is not p-regular");
    std::vector<int> removed;
    Partition cur = lambda;
    while (!cur.empty()) {
        bool moved = false;
        for (int i = 0; i < p && !moved; ++i) {
            if (auto next = e_tilde(cur, i, p)) {
                removed.push_back(i);
                cur = std::move(*next);
                moved = true;
            }
        }
        if (!moved) throw std::logic_error("nonempty p-regular partition without a good node");
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

Partition mullineux_map_crystal(const Partition& lambda, int p) {
    Partition cur;
    for (int i : good_path(lambda, p)) {
        auto next = f_tilde(cur, (p - i) % p, p);
        if (!next) throw std::logic_error("crystal path cannot be replayed");
        cur = std::move(*next);
    }
    return cur;
}

bool is_mullineux_fixed(const Partition& lambda, int p) { return mullineux_map(lambda, p) == lambda; }

}  // namespace altres
