#include "altres/nodes.hpp"

#include <algorithm>
#include <stdexcept>

namespace altres {

int residue(const Node& a, int p) {
    int r = (a.col - a.row) % p;
    return r < 0 ? r + p : r;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int r = 1; r <= lambda.length(); ++r)
        if (lambda.row(r) > lambda.row(r + 1)) out.push_back({r, lambda.row(r)});
    return out;
}

std::vector<Node> addable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int r = 1; r <= lambda.length() + 1; ++r)
        if (r == 1 || lambda.row(r - 1) > lambda.row(r)) out.push_back({r, lambda.row(r) + 1});
    return out;
}

bool is_removable(const Partition& lambda, const Node& a) {
    return a.row >= 1 && a.row <= lambda.length() && a.col == lambda.row(a.row) &&
           lambda.row(a.row + 1) < a.col;
}

Partition remove_node(const Partition& lambda, const Node& a) {
    if (!is_removable(lambda, a)) throw std::invalid_argument("node is not removable");
    auto v = lambda.parts();
    v[a.row - 1] -= 1;
    return Partition::from_parts(std::move(v));
}

Partition add_node(const Partition& lambda, const Node& a) {
    auto v = lambda.parts();
    if (a.row == lambda.length() + 1 && a.col == 1 && (a.row == 1 || v.back() >= 1)) {
        v.push_back(1);
        return Partition(std::move(v));
    }
    if (a.row < 1 || a.row > lambda.length() || a.col != lambda.row(a.row) + 1 ||
        (a.row > 1 && lambda.row(a.row - 1) < a.col))
        throw std::invalid_argument("node is not addable");
    v[a.row - 1] += 1;
    return Partition(std::move(v));
}

Signature signature(const Partition& lambda, int i, int p) {
    require_prime(p);
    Signature sig;
    // In a given row the removable node sits one column left of the addable
    // one, so listing removable before addable follows the rim.
    for (int r = 1; r <= lambda.length() + 1; ++r) {
        int len = lambda.row(r);
        if (len > 0 && len > lambda.row(r + 1)) {
            Node a{r, len};
            if (residue(a, p) == i) sig.push_back({Sign::Minus, a});
        }
        if (r == 1 || lambda.row(r - 1) > len) {
            Node b{r, len + 1};
            if (residue(b, p) == i) sig.push_back({Sign::Plus, b});
        }
    }
    return sig;
}

Signature reduce(const Signature& sig) {
    Signature out;
    for (const auto& e : sig) {
        if (e.sign == Sign::Minus && !out.empty() && out.back().sign == Sign::Plus)
            out.pop_back();
        else
            out.push_back(e);
    }
    return out;
}

Signature reduced_signature(const Partition& lambda, int i, int p) {
    return reduce(signature(lambda, i, p));
}

namespace {

std::vector<Node> with_sign(const Signature& sig, Sign s) {
    std::vector<Node> out;
    for (const auto& e : sig)
        if (e.sign == s) out.push_back(e.node);
    return out;
}

void check_residue(int i, int p) {
    require_prime(p);
    if (i < 0 || i >= p) throw std::invalid_argument("residue out of range");
}

}  // namespace

std::vector<Node> normal_nodes(const Partition& lambda, int i, int p) {
    check_residue(i, p);
    return with_sign(reduced_signature(lambda, i, p), Sign::Minus);
}

std::vector<Node> conormal_nodes(const Partition& lambda, int i, int p) {
    check_residue(i, p);
    return with_sign(reduced_signature(lambda, i, p), Sign::Plus);
}

std::vector<Node> all_normal_nodes(const Partition& lambda, int p) {
    std::vector<Node> out;
    for (int i = 0; i < p; ++i) {
        auto v = normal_nodes(lambda, i, p);
        out.insert(out.end(), v.begin(), v.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Node> good_node(const Partition& lambda, int i, int p) {
    auto v = normal_nodes(lambda, i, p);
    if (v.empty()) return std::nullopt;
    return v.back();
}

std::optional<Node> cogood_node(const Partition& lambda, int i, int p) {
    auto v = conormal_nodes(lambda, i, p);
    if (v.empty()) return std::nullopt;
    return v.front();
}

int epsilon(const Partition& lambda, int i, int p) {
    return static_cast<int>(normal_nodes(lambda, i, p).size());
}

int phi(const Partition& lambda, int i, int p) {
    return static_cast<int>(conormal_nodes(lambda, i, p).size());
}

std::optional<Partition> e_tilde(const Partition& lambda, int i, int p) {
    auto a = good_node(lambda, i, p);
    if (!a) return std::nullopt;
    return remove_node(lambda, *a);
}

std::optional<Partition> f_tilde(const Partition& lambda, int i, int p) {
    auto b = cogood_node(lambda, i, p);
    if (!b) return std::nullopt;
    return add_node(lambda, *b);
}

bool is_js(const Partition& lambda, int p) {
    require_prime(p);
    int total = 0;
    for (int i = 0; i < p; ++i) total += epsilon(lambda, i, p);
    return total == 1;
}

int restriction_multiplicity(const Partition& lambda, const Node& a, int p) {
    require_prime(p);
    if (!is_removable(lambda, a)) throw std::invalid_argument("node is not removable");
    if (!is_p_regular(remove_node(lambda, a), p))
        throw std::invalid_argument("removing the node leaves a p-singular partition");
    auto normal = normal_nodes(lambda, residue(a, p), p);
    auto it = std::find(normal.begin(), normal.end(), a);
    if (it == normal.end()) return 0;
    return 1 + static_cast<int>(it - normal.begin());
}

int dim_end_restriction(const Partition& lambda, int p) {
    require_prime(p);
    int total = 0;
    for (int i = 0; i < p; ++i) total += epsilon(lambda, i, p);
    return total;
}

}  // namespace altres
