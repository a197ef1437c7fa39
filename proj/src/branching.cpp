#include "altres/branching.hpp"

#include <algorithm>
#include <set>

namespace altres {

bool validate_sequence(const RemovalSequence& seq, int p) {
    if (!is_p_regular(seq.origin, p)) return false;
    Partition cur = seq.origin;
    for (const auto& step : seq.steps) {
        auto normal = normal_nodes(cur, residue(step.node, p), p);
        if (std::find(normal.begin(), normal.end(), step.node) == normal.end()) return false;
        Partition next = remove_node(cur, step.node);
        if (next != step.after || !is_p_regular(next, p)) return false;
        cur = std::move(next);
    }
    return true;
}

ReachableSet reachable(const Partition& lambda, int p, int m) {
    require_prime(p);
    if (!is_p_regular(lambda, p)) throw std::invalid_argument("partition is not p-regular");
    if (m < 0 || m > lambda.size()) throw std::invalid_argument("target size out of range");
    std::map<Partition, RemovalSequence> level;
    level.emplace(lambda, RemovalSequence{lambda, {}});
    for (int size = lambda.size(); size > m; --size) {
        std::map<Partition, RemovalSequence> next;
        for (const auto& [mu, seq] : level) {
            for (const Node& a : all_normal_nodes(mu, p)) {
                Partition nu = remove_node(mu, a);
                if (!is_p_regular(nu, p) || next.count(nu)) continue;
                RemovalSequence w = seq;
                w.steps.push_back({a, nu});
                next.emplace(std::move(nu), std::move(w));
            }
        }
        level = std::move(next);
    }
    return ReachableSet{lambda, p, m, std::move(level)};
}

std::vector<Partition> good_descendants(const Partition& lambda, int p, int m) {
    std::vector<Partition> level{lambda};
    for (int size = lambda.size(); size > m; --size) {
        std::vector<Partition> next;
        for (const auto& mu : level)
            for (int i = 0; i < p; ++i)
                if (auto nu = e_tilde(mu, i, p)) next.push_back(std::move(*nu));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    return level;
}

Partition js_truncation(const Partition& lambda) {
    if (!is_p_regular(lambda, 2)) throw std::invalid_argument("partition is not 2-regular");
    auto v = lambda.parts();
    auto at = [&](std::size_t idx) { return idx < v.size() ? v[idx] : 0; };
    // 0-based: row r+1 of the description is index r
    for (std::size_t r = 0; at(r + 1) > 0; ++r) {
        if ((at(r + 1) - at(r)) % 2 == 0) continue;
        std::size_t l = r + 1;
        while (!(at(l + 1) < at(l) - 1 || at(l + 1) == 0)) ++l;
        for (std::size_t t = r + 1; t <= l; ++t) v[t] -= 1;
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    return Partition(std::move(v));
}

std::optional<RemovalSequence> removal_sequence_check(const Partition& lambda, const Composition& nu,
                                                      int j, int p) {
    require_prime(p);
    if (!is_p_regular(lambda, p)) throw HypothesisViolation("partition is not p-regular");
    // block ends h_1 < h_2 < ... (1-based rows)
    std::vector<int> h{0};
    for (int r = 1; r <= lambda.length(); ++r)
        if (lambda.row(r) != lambda.row(r + 1)) h.push_back(r);
    if (j < 1 || j >= static_cast<int>(h.size()))
        throw HypothesisViolation("block count j out of range");
    const int rows = h[j];
    if (static_cast<int>(nu.size()) != rows)
        throw HypothesisViolation("composition must cover exactly the first j blocks");
    for (int x : nu)
        if (x < 0) throw HypothesisViolation("negative entry in composition");
    auto nu_at = [&](int row) { return nu[row - 1]; };

    std::vector<int> mu_parts = lambda.parts();
    for (int r = 1; r <= rows; ++r) mu_parts[r - 1] -= nu_at(r);
    for (std::size_t i = 0; i < mu_parts.size(); ++i) {
        if (mu_parts[i] < 0 || (i > 0 && mu_parts[i] > mu_parts[i - 1]))
            throw HypothesisViolation("lambda - nu is not a partition");
    }
    Partition mu = Partition::from_parts(mu_parts);
    if (!is_p_regular(mu, p)) throw HypothesisViolation("lambda - nu is not p-regular");
    Partition prefix(std::vector<int>(lambda.parts().begin(), lambda.parts().begin() + rows));
    if (!is_js(prefix, p)) throw HypothesisViolation("leading rows of lambda are not JS");
    for (int r = 1; r <= j; ++r) {
        for (int row = h[r - 1] + 1; row < h[r]; ++row)
            if (nu_at(row) > nu_at(row + 1))
                throw HypothesisViolation("composition decreases inside a block");
        if (r < j && nu_at(h[r - 1] + 1) < nu_at(h[r + 1]))
            throw HypothesisViolation("composition increases across blocks");
        int b = h[r] - h[r - 1];
        // h_0 = 0 for r = 1: the first block compares with its own top row
        if (nu_at(h[r]) > nu_at(h[r - 1] + 1) + p - b)
            throw HypothesisViolation("composition spread inside a block exceeds p - b");
    }

    RemovalSequence seq{lambda, {}};
    Partition cur = lambda;
    int left = 0;
    for (int x : nu) left += x;
    while (left > 0) {
        for (int r = 1; r <= j; ++r) {
            for (int row = h[r]; row > h[r - 1]; --row) {
                if (cur.row(row) <= mu.row(row)) continue;
                Node a{row, cur.row(row)};
                if (!is_removable(cur, a)) return std::nullopt;
                auto normal = normal_nodes(cur, residue(a, p), p);
                if (std::find(normal.begin(), normal.end(), a) == normal.end()) return std::nullopt;
                Partition next = remove_node(cur, a);
                if (!is_p_regular(next, p)) return std::nullopt;
                seq.steps.push_back({a, next});
                cur = std::move(next);
                --left;
            }
        }
    }
    return seq;
}

std::optional<std::vector<Partition>> distinct_factor_certificate(const Partition& lambda, int p,
                                                                  int m, int target) {
    auto set = reachable(lambda, p, m);
    if (static_cast<int>(set.members.size()) < target) return std::nullopt;
    std::vector<Partition> out;
    for (const auto& [mu, seq] : set.members) out.push_back(mu);
    return out;
}

bool specht_irreducible(const Partition& lambda, int p) {
    require_prime(p);
    auto valuation = [p](int x) {
        int v = 0;
        for (; x % p == 0; x /= p) ++v;
        return v;
    };
    for (int c = 1; c <= lambda.row(1); ++c) {
        int first = -1;
        for (int r = 1; lambda.row(r) >= c; ++r) {
            int leg = 0;
            while (lambda.row(r + leg + 1) >= c) ++leg;
            const int v = valuation(lambda.row(r) - c + leg + 1);
            if (first < 0) first = v;
            else if (v != first) return false;
        }
    }
    return true;
}

std::vector<Partition> specht_certified_factors(const Partition& lambda, int p, int m) {
    if (m < 0 || m > lambda.size()) throw std::invalid_argument("target size out of range");
    std::set<Partition> out;
    for (int level = lambda.size(); level >= m; --level) {
        std::vector<Partition> labels;
        if (level == lambda.size()) labels.push_back(lambda);
        else
            for (const auto& [mu, seq] : reachable(lambda, p, level).members) labels.push_back(mu);
        for (const auto& mu : labels) {
            if (level == m) {
                out.insert(mu);
                continue;
            }
            if (!is_p_regular(mu, p) || !specht_irreducible(mu, p)) continue;
            std::set<Partition> below{mu};
            for (int s = level; s > m; --s) {
                std::set<Partition> next;
                for (const auto& x : below)
                    for (const auto& a : removable_nodes(x)) next.insert(remove_node(x, a));
                below = std::move(next);
            }
            for (const auto& x : below)
                if (is_p_regular(x, p)) out.insert(x);
        }
    }
    return {out.begin(), out.end()};
}

const std::vector<Partition>& truncation_bound_exceptions() {
    static const std::vector<Partition> list = [] {
        std::vector<Partition> v;
        for (auto s : {"11,1", "9,3", "9,5", "11,5", "11,7", "13,8,3", "13,9,4", "13,9,5,1",
                       "15,11,5,1", "15,11,7,1", "15,11,7,3", "17,13,9,3", "17,13,9,5",
                       "19,15,11,7", "21,17,13,9,4", "21,17,13,9,5,1", "23,19,15,11,7,1",
                       "23,19,15,11,7,3", "25,21,17,13,9,5", "29,25,21,17,13,9,5,1",
                       "31,27,23,19,15,11,7,3"})
            v.push_back(parse_partition(s));
        return v;
    }();
    return list;
}

namespace {

bool is_double_of_any(const Partition& lambda, const std::vector<Partition>& mus) {
    for (const auto& mu : mus)
        if (double_of(mu) == lambda.parts()) return true;
    return false;
}

}  // namespace

bool is_truncation_bound_exception(const Partition& lambda) {
    return is_double_of_any(lambda, truncation_bound_exceptions());
}

bool truncation_bound_holds(const Partition& lambda) {
    const int n = lambda.size();
    if (n % 2 != 0 || !is_p_regular(lambda, 2) || !in_splitting_class(lambda, 2))
        throw std::invalid_argument("expected a splitting 2-regular partition of even size");
    Partition t = js_truncation(lambda);
    if (2 * t.size() < n + 10) return false;
    for (int r = 1; r <= t.length(); r += 2)
        if (t.row(r) - t.row(r + 1) > 2) return false;
    return true;
}

std::string to_string(JsFamily f) {
    switch (f) {
        case JsFamily::I: return "I";
        case JsFamily::II: return "II";
        case JsFamily::III: return "III";
        case JsFamily::IV: return "IV";
    }
    return "?";
}

const std::vector<Partition>& js3_sporadic() {
    static const std::vector<Partition> list = [] {
        std::vector<Partition> v;
        for (auto s : {"1", "4,1,1", "7,3,2", "10,4,4", "13,6,5", "7,3,2,1", "10,4,4,1", "13,6,5,1",
                       "10,6,3,3,1,1", "13,6,5,4,1,1", "13,9,5,4,3,2,1"})
            v.push_back(parse_partition(s));
        return v;
    }();
    return list;
}

std::vector<JsFamily> js3_matching_families(const Partition& lambda) {
    const int n = lambda.size();
    const int h = lambda.length();
    auto l = [&](int r) { return lambda.row(r); };
    std::vector<JsFamily> out;
    if (l(1) >= l(2) + 9 && l(3) >= 7 && 2 * l(1) <= n + 2 && n >= 4 * h) out.push_back(JsFamily::I);
    if (l(1) >= l(2) + 7 && l(2) + 7 >= l(3) + 10 && l(4) >= 6 && 2 * (l(1) + l(2)) <= n + 8 &&
        h >= 6 && n >= 6 * h)
        out.push_back(JsFamily::II);
    if (l(1) >= l(2) + 4 && l(2) + 4 >= l(3) + 8 && l(4) >= 4 && 2 * (l(1) + l(2)) <= n + 8 &&
        h >= 6 && n >= 6 * h)
        out.push_back(JsFamily::III);
    const auto& iv = js3_sporadic();
    if (std::find(iv.begin(), iv.end(), lambda) != iv.end()) out.push_back(JsFamily::IV);
    return out;
}

JsFamily js3_family(const Partition& lambda) {
    if (!is_p_regular(lambda, 3) || !is_js(lambda, 3) || !in_splitting_class(lambda, 3))
        throw std::invalid_argument("expected a JS partition in the splitting class for p = 3");
    auto fams = js3_matching_families(lambda);
    if (fams.empty()) throw std::logic_error("JS partition " + to_string(lambda) + " fits no family");
    return fams.front();
}

Partition explicit_pair_origin(int n) {
    if (n < 12 || n % 4 != 0) throw std::invalid_argument("need n >= 12 with n divisible by 4");
    const int q = n / 4;
    return Partition({q + 2, q + 1, q - 1, q - 2});
}

std::pair<Partition, Partition> explicit_factor_pair(int n, int k) {
    explicit_pair_origin(n);
    if (k < 2 || k > n - 9) throw std::invalid_argument("k out of range");
    const int q = n / 4;
    const int m = k / 4;
    const int b = q - m;
    std::vector<int> mu, nu;
    switch (k % 4) {
        case 0:
            mu = {b + 2, b + 1, b - 1, b - 2};
            nu = {b + 3, b + 1, b - 1, b - 3};
            break;
        case 1:
            mu = {b + 2, b, b - 1, b - 2};
            nu = {b + 2, b + 1, b - 1, b - 3};
            break;
        case 2:
            mu = {b + 2, b, b - 1, b - 3};
            nu = {b + 1, b, b - 1, b - 2};
            break;
        default:
            mu = {b + 1, b, b - 1, b - 3};
            nu = {b + 2, b, b - 2, b - 3};
            break;
    }
    return {Partition::from_parts(mu), Partition::from_parts(nu)};
}

namespace {

std::vector<Partition> parse_all(std::initializer_list<const char*> items) {
    std::vector<Partition> v;
    for (auto s : items) v.push_back(parse_partition(s));
    return v;
}

bool listed(const Partition& lambda, const std::vector<Partition>& v) {
    return std::find(v.begin(), v.end(), lambda) != v.end();
}

}  // namespace

std::optional<std::string> half_restriction_exemption(const Partition& lambda) {
    const int n = lambda.size();
    auto is = [&](std::vector<int> v) { return Partition::from_parts(std::move(v)) == lambda; };
    if (n % 4 == 0 && lambda == beta(n)) return "basic spin with n divisible by 4";
    if (n >= 2) {
        auto v = beta(n - 1).parts();
        v.push_back(1);
        if (is(v)) return "basic spin of n-1 with a row of length 1";
    }
    if (n >= 24 && n % 8 == 0 && is({n / 4 + 3, n / 4 + 1, n / 4 - 1, n / 4 - 3}))
        return "four rows spaced by 2, n divisible by 8";
    if (n >= 10 && n % 4 == 2 && is({(n + 6) / 4, (n + 2) / 4, (n - 2) / 4, (n - 6) / 4}))
        return "four consecutive-odd rows, n = 2 mod 4";
    if (n >= 24 && n % 4 == 0 && is({n / 4 + 2, n / 4 + 1, n / 4 - 1, n / 4 - 2}))
        return "rows q+2, q+1, q-1, q-2 with q = n/4";
    if (n >= 14 && n % 4 == 2 && is({(n + 10) / 4, (n + 6) / 4, (n - 6) / 4, (n - 10) / 4}))
        return "rows (n+10)/4, (n+6)/4, (n-6)/4, (n-10)/4";

    return decomposition_list_reason(lambda);
}

std::optional<std::string> decomposition_list_reason(const Partition& lambda) {
    static const auto e2 = parse_all({"7,5,4,3,2,1", "7,6,5,3,1", "8,7,5,3,2,1", "8,7,5,4,3,1",
                                      "8,7,5,4,3,2,1", "8,7,6,5,3,1", "8,7,6,5,3,2,1",
                                      "8,7,6,5,4,3,1", "8,7,6,5,4,3,2,1"});
    static const auto e3 = parse_all({"7,5,3,1", "7,5,3,2,1", "7,6,2,1", "8,7,5,3,1", "9,7,3,2,1"});
    for (const auto& mu : truncation_bound_exceptions()) {
        const auto& v = mu.parts();
        bool covered_elsewhere = v == std::vector<int>{11, 1} || v == std::vector<int>{9, 5} ||
                                 v == std::vector<int>{11, 7};
        if (!covered_elsewhere && double_of(mu) == lambda.parts())
            return "settled by decomposition numbers (truncation-bound exception)";
    }
    if (listed(lambda, e2)) return "settled by decomposition numbers (staircase list)";
    if (listed(lambda, e3)) return "settled by decomposition numbers (small list)";
    return std::nullopt;
}

std::optional<std::string> js_restriction_exemption(const Partition& lambda, int k) {
    const int n = lambda.size();
    const int h = lambda.length();
    auto l = [&](int r) { return lambda.row(r); };
    auto is = [&](std::vector<int> v) { return Partition::from_parts(std::move(v)) == lambda; };
    if (is({n})) return "one row";
    if (n % 2 == 0 && n >= 2 && is({n - 1, 1})) return "(n-1,1)";
    if (n % 2 == 0 && is({n / 2 + 2, n / 2 - 2})) return "(n/2+2,n/2-2)";
    if (n % 2 == 0 && is({n / 2 + 1, n / 2 - 1})) return "(n/2+1,n/2-1)";
    if (n % 2 == 1 && is({(n + 1) / 2, (n - 3) / 2, 1})) return "((n+1)/2,(n-3)/2,1)";
    if (n % 3 == 0 && is({n / 3 + 2, n / 3, n / 3 - 2})) return "(n/3+2,n/3,n/3-2)";
    if (n >= 14 && n % 3 == 2 && k % 3 == 1 &&
        is({(n - 2) / 3 + 4, (n - 2) / 3, (n - 2) / 3 - 2}))
        return "three rows, n = 2 mod 3, k = 1 mod 3";
    if (n >= 19 && n % 3 == 1 && k % 3 == 2 &&
        is({(n + 2) / 3 + 2, (n + 2) / 3, (n + 2) / 3 - 4}))
        return "three rows, n = 1 mod 3, k = 2 mod 3";
    if (h == 3 && l(1) == l(2) + 2 && l(2) >= l(3) + 4 && k == 5) return "three rows, k = 5";
    if (n >= 22 && n % 6 == 4 && k % 3 != 0 &&
        is({(n - 1) / 3 + 2, (n - 1) / 3, (n - 1) / 3 - 2, 1}))
        return "four rows ending in 1, n = 4 mod 6";
    if (h <= 4 && h >= 3 && l(2) == l(1) - 2 && l(3) == l(1) - 4 && k == 5)
        return "(a,a-2,a-4,b), k = 5";
    if (n >= 20 && n % 4 == 0 && is({n / 4 + 3, n / 4 + 1, n / 4 - 1, n / 4 - 3}))
        return "four rows spaced by 2";
    // cases closed with characteristic-zero branching and decomposition tables
    if ((is({8, 6, 2}) && k == 8) || (is({7, 5, 3, 1}) && k == 8) ||
        (is({9, 7, 5, 3, 1}) && (k == 11 || k == 12)))
        return "settled by decomposition numbers";
    return std::nullopt;
}

}  // namespace altres
