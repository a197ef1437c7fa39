#include "altres/permmod.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace altres {

SubgroupDescriptor SubgroupDescriptor::young(Composition nu) {
    SubgroupDescriptor d;
    d.kind = SubgroupKind::YoungAlternating;
    d.parts = std::move(nu);
    return d;
}

SubgroupDescriptor SubgroupDescriptor::intransitive(int n_minus_k, int k) {
    SubgroupDescriptor d;
    d.kind = SubgroupKind::MaxIntransitive;
    d.parts = {n_minus_k, k};
    return d;
}

SubgroupDescriptor SubgroupDescriptor::wreath(int a, int b) {
    SubgroupDescriptor d;
    d.kind = SubgroupKind::WreathAlternating;
    d.a = a;
    d.b = b;
    return d;
}

SubgroupDescriptor SubgroupDescriptor::point_stabilizer() {
    SubgroupDescriptor d;
    d.kind = SubgroupKind::PointStabilizer;
    return d;
}

SubgroupDescriptor SubgroupDescriptor::full() { return SubgroupDescriptor{}; }

SubgroupDescriptor SubgroupDescriptor::primitive() {
    SubgroupDescriptor d;
    d.kind = SubgroupKind::Primitive;
    return d;
}

Composition SubgroupDescriptor::young_blocks(int n) const {
    switch (kind) {
        case SubgroupKind::YoungAlternating:
        case SubgroupKind::MaxIntransitive: return parts;
        case SubgroupKind::PointStabilizer: return {n - 1, 1};
        case SubgroupKind::FullAlternating: return {n};
        default: throw std::invalid_argument("not an intransitive subgroup");
    }
}

namespace {

Composition parse_ints(const std::string& s) {
    Composition out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
            throw std::invalid_argument("malformed integer list: '" + s + "'");
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

SubgroupDescriptor parse_subgroup(const std::string& text) {
    if (text == "point-stabilizer") return SubgroupDescriptor::point_stabilizer();
    if (text == "full") return SubgroupDescriptor::full();
    if (text == "primitive") return SubgroupDescriptor::primitive();
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown subgroup: '" + text + "'");
    std::string head = text.substr(0, colon), body = text.substr(colon + 1);
    if (head == "young") return SubgroupDescriptor::young(parse_ints(body));
    if (head == "intransitive") {
        auto v = parse_ints(body);
        if (v.size() != 2) throw std::invalid_argument("intransitive needs two sizes");
        return SubgroupDescriptor::intransitive(v[0], v[1]);
    }
    if (head == "wreath") {
        auto x = body.find('x');
        if (x == std::string::npos) throw std::invalid_argument("wreath needs AxB");
        auto a = parse_ints(body.substr(0, x)), b = parse_ints(body.substr(x + 1));
        if (a.size() != 1 || b.size() != 1) throw std::invalid_argument("wreath needs AxB");
        return SubgroupDescriptor::wreath(a[0], b[0]);
    }
    throw std::invalid_argument("unknown subgroup: '" + text + "'");
}

std::string to_string(const SubgroupDescriptor& d) {
    switch (d.kind) {
        case SubgroupKind::YoungAlternating: return "young:" + to_string(d.parts);
        case SubgroupKind::MaxIntransitive: return "intransitive:" + to_string(d.parts);
        case SubgroupKind::WreathAlternating: return "wreath:" + std::to_string(d.a) + "x" + std::to_string(d.b);
        case SubgroupKind::PointStabilizer: return "point-stabilizer";
        case SubgroupKind::FullAlternating: return "full";
        case SubgroupKind::Primitive: return "primitive";
    }
    return "?";
}

void validate(const SubgroupDescriptor& d, int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
    switch (d.kind) {
        case SubgroupKind::YoungAlternating:
        case SubgroupKind::MaxIntransitive: {
            if (d.kind == SubgroupKind::MaxIntransitive && d.parts.size() != 2)
                throw std::invalid_argument("intransitive subgroup needs two orbit sizes");
            int sum = 0;
            for (int x : d.parts) {
                if (x <= 0) throw std::invalid_argument("composition parts must be positive");
                sum += x;
            }
            if (sum != n) throw std::invalid_argument("composition does not sum to n");
            break;
        }
        case SubgroupKind::WreathAlternating:
            if (d.a < 2 || d.b < 2 || d.a * d.b != n)
                throw std::invalid_argument("wreath subgroup needs a, b >= 2 with ab = n");
            break;
        case SubgroupKind::PointStabilizer:
            if (n < 2) throw std::invalid_argument("point stabilizer needs n >= 2");
            break;
        case SubgroupKind::FullAlternating:
        case SubgroupKind::Primitive: break;
    }
}

namespace {

// 1-based blocks given by first point and size
void add_block_alternating(int n, int start, int size, std::vector<Permutation>& out) {
    for (int c = start + 2; c < start + size; ++c)
        out.push_back(Permutation::from_cycles(n, {{start, start + 1, c}}));
}

}  // namespace

std::vector<Permutation> generators(const SubgroupDescriptor& d, int n) {
    validate(d, n);
    std::vector<Permutation> out;
    switch (d.kind) {
        case SubgroupKind::Primitive:
            throw std::invalid_argument("primitive subgroups carry no generator set");
        case SubgroupKind::WreathAlternating: {
            for (int r = 0; r < d.b; ++r) add_block_alternating(n, r * d.a + 1, d.a, out);
            out.push_back(Permutation::from_cycles(n, {{1, 2}, {d.a + 1, d.a + 2}}));
            for (int r = 0; r + 1 < d.b; ++r) {
                std::vector<std::vector<int>> swap;
                for (int t = 1; t <= d.a; ++t) swap.push_back({r * d.a + t, (r + 1) * d.a + t});
                Permutation s = Permutation::from_cycles(n, swap);
                if (!s.is_even()) s = s * Permutation::from_cycles(n, {{r * d.a + 1, r * d.a + 2}});
                out.push_back(s);
            }
            return out;
        }
        default: break;
    }
    Composition blocks = d.young_blocks(n);
    std::vector<int> starts;
    int start = 1;
    for (int size : blocks) {
        add_block_alternating(n, start, size, out);
        if (size >= 2) starts.push_back(start);
        start += size;
    }
    for (std::size_t i = 0; i + 1 < starts.size(); ++i)
        out.push_back(Permutation::from_cycles(n, {{starts[i], starts[i] + 1}, {starts[i + 1], starts[i + 1] + 1}}));
    return out;
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

long long subgroup_order(const SubgroupDescriptor& d, int n) {
    validate(d, n);
    if (d.kind == SubgroupKind::Primitive) throw std::invalid_argument("order of a primitive subgroup is unknown");
    if (d.kind == SubgroupKind::WreathAlternating) {
        long long o = factorial(d.b);
        for (int r = 0; r < d.b; ++r) o *= factorial(d.a);
        return o / 2;
    }
    long long o = 1;
    bool has_odd = false;
    for (int size : d.young_blocks(n)) {
        o *= factorial(size);
        has_odd = has_odd || size >= 2;
    }
    return has_odd ? o / 2 : o;
}

std::vector<Subset> omega_k(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("k out of range");
    std::vector<Subset> out;
    Subset cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int t = i + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

int ModuleSpec::dimension() const {
    switch (kind) {
        case ModuleKind::Permutation: return static_cast<int>(omega_k(n, k).size());
        case ModuleKind::S1Star: return n - 1;
        case ModuleKind::S2Star: return n * (n - 3) / 2;
    }
    return 0;
}

void validate(const ModuleSpec& spec) {
    require_prime(spec.p);
    switch (spec.kind) {
        case ModuleKind::Permutation:
            if (spec.k < 0 || 2 * spec.k > spec.n) throw std::invalid_argument("need 0 <= k <= n/2");
            break;
        case ModuleKind::S1Star:
            if (spec.n < 2) throw std::invalid_argument("S1* needs n >= 2");
            break;
        case ModuleKind::S2Star:
            if (spec.n < 5) throw std::invalid_argument("S2* needs n >= 5");
            break;
    }
}

std::vector<Subset> s2_basis_labels(int n) {
    auto labels = omega_k(n - 2, 2);
    for (int i = 1; i <= n - 3; ++i) labels.push_back({i, n - 1});
    return labels;
}

namespace {

// lexicographic index of {i,j}, i<j, among 2-subsets of {1..m}
int pair_index(int m, int i, int j) { return (i - 1) * (2 * m - i) / 2 + (j - i - 1); }

}  // namespace

std::vector<long long> s2_coordinates(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (n < 5 || i < 1 || j > n || i == j) throw std::invalid_argument("bad pair");
    const int inner = (n - 2) * (n - 3) / 2;
    std::vector<long long> v(inner + n - 3, 0);
    auto inside = [&](int a, int b) -> long long& {
        if (a > b) std::swap(a, b);
        return v[pair_index(n - 2, a, b)];
    };
    auto with_last = [&](int t) -> long long& { return v[inner + t - 1]; };
    if (j <= n - 2) {
        inside(i, j) = 1;
    } else if (j == n - 1 && i <= n - 3) {
        with_last(i) = 1;
    } else if (j == n - 1) {  // {n-2, n-1}
        for (int t = 0; t < inner; ++t) v[t] = -1;
        for (int t = 1; t <= n - 3; ++t) with_last(t) = -1;
    } else if (i <= n - 3) {  // {i, n}
        for (int t = 1; t <= n - 2; ++t)
            if (t != i) inside(i, t) -= 1;
        with_last(i) -= 1;
    } else if (i == n - 2) {  // {n-2, n}
        for (int a = 1; a <= n - 3; ++a)
            for (int b = a + 1; b <= n - 3; ++b) inside(a, b) = 1;
        for (int t = 1; t <= n - 3; ++t) with_last(t) = 1;
    } else {  // {n-1, n}
        for (int t = 0; t < inner; ++t) v[t] = 1;
    }
    return v;
}

GFpMatrix action_matrix(const ModuleSpec& spec, const Permutation& g) {
    validate(spec);
    const int n = spec.n;
    if (g.degree() != n) throw std::invalid_argument("permutation degree does not match module");
    const int dim = spec.dimension();
    GFpMatrix m(spec.p, dim, dim);
    switch (spec.kind) {
        case ModuleKind::Permutation: {
            auto subsets = omega_k(n, spec.k);
            std::map<Subset, int> index;
            for (int t = 0; t < dim; ++t) index[subsets[t]] = t;
            for (int t = 0; t < dim; ++t) {
                Subset img;
                for (int x : subsets[t]) img.push_back(g(x - 1) + 1);
                std::sort(img.begin(), img.end());
                m.set(index.at(img), t, 1);
            }
            break;
        }
        case ModuleKind::S1Star:
            for (int t = 0; t < dim; ++t) {
                int img = g(t);
                if (img < n - 1)
                    m.set(img, t, 1);
                else
                    for (int r = 0; r < dim; ++r) m.set(r, t, -1);
            }
            break;
        case ModuleKind::S2Star: {
            auto labels = s2_basis_labels(n);
            for (int t = 0; t < dim; ++t) {
                auto coords = s2_coordinates(n, g(labels[t][0] - 1) + 1, g(labels[t][1] - 1) + 1);
                for (int r = 0; r < dim; ++r)
                    if (coords[r]) m.set(r, t, coords[r]);
            }
            break;
        }
    }
    return m;
}

std::vector<GFpMatrix> module_matrices(const ModuleSpec& spec, const std::vector<Permutation>& gens) {
    std::vector<GFpMatrix> out;
    for (const auto& g : gens) out.push_back(action_matrix(spec, g));
    return out;
}

std::vector<GFpMatrix> module_matrices(const ModuleSpec& spec, const SubgroupDescriptor& d) {
    return module_matrices(spec, generators(d, spec.n));
}

int invariant_dim(const ModuleSpec& spec, const std::vector<Permutation>& gens) {
    validate(spec);
    if (gens.empty()) return spec.dimension();
    return fixed_subspace(module_matrices(spec, gens)).cols();
}

int invariant_dim(const ModuleSpec& spec, const SubgroupDescriptor& d) {
    return invariant_dim(spec, generators(d, spec.n));
}

int orbit_count(const std::vector<Permutation>& gens, int n, int k) {
    auto subsets = omega_k(n, k);
    std::map<Subset, int> index;
    for (int t = 0; t < static_cast<int>(subsets.size()); ++t) index[subsets[t]] = t;
    std::vector<int> parent(subsets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int count = static_cast<int>(subsets.size());
    for (const auto& g : gens)
        for (int t = 0; t < static_cast<int>(subsets.size()); ++t) {
            Subset img;
            for (int x : subsets[t]) img.push_back(g(x - 1) + 1);
            std::sort(img.begin(), img.end());
            int a = find(t), b = find(index.at(img));
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
                --count;
            }
        }
    return count;
}

int orbit_count(const SubgroupDescriptor& d, int n, int k) {
    if (k < 0 || 2 * k > n) throw std::invalid_argument("need 0 <= k <= n/2");
    return orbit_count(generators(d, n), n, k);
}

}  // namespace altres
