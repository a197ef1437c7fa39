#include "altres/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace altres {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<char> used(n, 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i] - 1;
            int b = cyc[(i + 1) % cyc.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n || used[a])
                throw std::invalid_argument("bad cycle");
            used[a] = 1;
            v[a] = b;
        }
    }
    return Permutation(std::move(v));
}

Permutation Permutation::parse(int n, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        if (text[i] != '(') throw std::invalid_argument("bad permutation text: " + text);
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("bad permutation text: " + text);
        std::string body = text.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad permutation text: " + text);
            cyc.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    return from_cycles(n, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> v(degree());
    for (int x = 0; x < degree(); ++x) v[x] = images_[rhs.images_[x]];
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(degree());
    for (int x = 0; x < degree(); ++x) v[images_[x]] = x;
    return Permutation(std::move(v));
}

bool Permutation::is_even() const {
    std::vector<char> seen(degree(), 0);
    int transpositions = 0;
    for (int x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = images_[y]) {
            seen[y] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::string to_string(const Permutation& g) {
    std::string out;
    std::vector<char> seen(g.degree(), 0);
    for (int x = 0; x < g.degree(); ++x) {
        if (seen[x] || g(x) == x) continue;
        out += '(';
        for (int y = x; !seen[y]; y = g(y)) {
            seen[y] = 1;
            if (y != x) out += ',';
            out += std::to_string(y + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

long long closure_order(const std::vector<Permutation>& gens, long long limit) {
    if (gens.empty()) return 1;
    std::set<std::vector<int>> seen;
    std::vector<Permutation> frontier{Permutation::identity(gens.front().degree())};
    seen.insert(frontier.front().images());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                Permutation h = s * g;
                if (seen.insert(h.images()).second) {
                    if (static_cast<long long>(seen.size()) > limit)
                        throw std::runtime_error("group too large for closure");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int x = 0; x < n; ++x) {
            int a = find(x), b = find(g(x));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> out;
    std::vector<int> index(n, -1);
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (index[r] < 0) {
            index[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[index[r]].push_back(x);
    }
    return out;
}

}  // namespace altres
