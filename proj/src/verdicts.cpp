#include "altres/verdicts.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace altres {

namespace {

Verdict make(Outcome o, std::string clause, Evidence ev = {}) {
    Verdict v;
    v.outcome = o;
    v.clause = std::move(clause);
    v.evidence = std::move(ev);
    return v;
}

Evidence node_evidence(const Partition& lambda, int p) {
    Evidence ev;
    ev.normal_nodes = all_normal_nodes(lambda, p);
    ev.js = ev.normal_nodes.size() == 1;
    return ev;
}

Verdict not_applicable(std::string note) {
    Verdict v;
    v.evidence.note = std::move(note);
    return v;
}

std::optional<Verdict> precheck(const Partition& lambda, int p) {
    require_prime(p);
    if (lambda.size() < 5) return not_applicable("degree below 5");
    if (!in_alternating_class(lambda, p)) return not_applicable("label does not split over the alternating group");
    return std::nullopt;
}

Composition sorted_desc(Composition nu) {
    std::sort(nu.begin(), nu.end(), std::greater<>());
    return nu;
}

void check_composition(int n, const Composition& nu) {
    if (nu.size() < 2) throw std::invalid_argument("composition must have at least two parts");
    int sum = 0;
    for (int x : nu) {
        if (x <= 0) throw std::invalid_argument("composition parts must be positive");
        sum += x;
    }
    if (sum != n) throw std::invalid_argument("composition does not sum to n");
}

void check_wreath(int n, int a, int b) {
    if (a < 2 || b < 2 || a * b != n) throw std::invalid_argument("wreath needs a, b >= 2 with ab = n");
}

// Sums of proper nonempty sub-multisets of nu.
std::vector<char> subset_sums(const Composition& nu, int n) {
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (int x : nu)
        for (int s = n; s >= x; --s)
            if (reach[s - x]) reach[s] = 1;
    return reach;
}

// Canonical key for matching small-case entries.
SubgroupDescriptor normalize(const SubgroupDescriptor& d, int n) {
    switch (d.kind) {
        case SubgroupKind::PointStabilizer: return SubgroupDescriptor::young({n - 1, 1});
        case SubgroupKind::MaxIntransitive:
        case SubgroupKind::YoungAlternating: return SubgroupDescriptor::young(sorted_desc(d.parts));
        default: return d;
    }
}

}  // namespace

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Irreducible: return "irreducible";
        case Outcome::Reducible: return "reducible";
        case Outcome::OutOfScopePrimitive: return "out-of-scope-primitive";
        case Outcome::NotApplicable: return "not-applicable";
    }
    return "?";
}

bool in_alternating_class(const Partition& lambda, int p) {
    return is_p_regular(lambda, p) && in_splitting_class(lambda, p);
}

bool is_basic_spin(const Partition& lambda, int p) { return p == 2 && lambda == beta(lambda.size()); }

Verdict classify_point_stabilizer(const Partition& lambda, int p) {
    if (auto na = precheck(lambda, p)) return *na;
    Evidence ev = node_evidence(lambda, p);
    if (*ev.js) return make(Outcome::Irreducible, "Theorem B(a)", ev);
    const auto& nn = ev.normal_nodes;
    if (nn.size() == 2 && residue(nn[0], p) != 0 && residue(nn[1], p) != 0)
        return make(Outcome::Irreducible, "Theorem B(b)", ev);
    return make(Outcome::Reducible, "Theorem B", ev);
}

bool point_stabilizer_parity_form(const Partition& lambda) {
    if (is_js(lambda, 2)) return true;
    return all_normal_nodes(lambda, 2).size() == 2 && lambda.row(1) == lambda.row(2) + 1 && lambda.row(1) % 2 == 0;
}

Partition two_point_label(const Partition& lambda) {
    const int i = residue(Node{1, lambda.row(1)}, 2);
    auto first = e_tilde(lambda, i, 2);
    if (!first) throw std::invalid_argument("no good node of the first-row residue");
    auto second = e_tilde(*first, 1 - i, 2);
    if (!second) throw std::invalid_argument("no good node of the complementary residue");
    return *second;
}

Verdict classify_two_point(const Partition& lambda, int p) {
    if (auto na = precheck(lambda, p)) return *na;
    Evidence ev = node_evidence(lambda, p);
    if (is_basic_spin(lambda, p)) {
        Verdict v = classify_basic_spin_intransitive(lambda.size(), {lambda.size() - 2, 2});
        v.evidence.normal_nodes = ev.normal_nodes;
        v.evidence.js = ev.js;
        if (v.outcome == Outcome::Irreducible) v.evidence.label = two_point_label(lambda);
        return v;
    }
    if (!*ev.js) return make(Outcome::Reducible, "Theorem C", ev);
    if (p == 2) ev.label = two_point_label(lambda);
    return make(Outcome::Irreducible, "Theorem C", ev);
}

Verdict classify_intransitive(const Partition& lambda, int p, const Composition& nu) {
    const int n = lambda.size();
    check_composition(n, nu);
    if (is_basic_spin(lambda, p) && n >= 5) return classify_basic_spin_intransitive(n, nu);
    if (auto na = precheck(lambda, p)) return *na;

    const Composition s = sorted_desc(nu);
    if (s.size() == 2) {
        const int k = s[1];
        if (k == 1) return classify_point_stabilizer(lambda, p);
        if (k == 2) return classify_two_point(lambda, p);
        Evidence ev = node_evidence(lambda, p);
        ev.note = "two orbits of size at least 3";
        return make(Outcome::Reducible, "Theorem A", ev);
    }

    const auto sums = subset_sums(s, n);
    for (int j = 3; j <= n - 3; ++j)
        if (sums[j]) {
            Evidence ev = node_evidence(lambda, p);
            ev.note = "contained in A_{" + std::to_string(n - j) + "," + std::to_string(j) + "}";
            return make(Outcome::Reducible, "Theorem A", ev);
        }
    if (std::all_of(s.begin(), s.end(), [&](int x) { return x == s[0]; }) && s[0] >= 2) {
        Verdict w = classify_wreath(lambda, p, s[0], static_cast<int>(s.size()));
        if (w.outcome == Outcome::Reducible) {
            w.evidence.note = "contained in G_{" + std::to_string(s[0]) + "," + std::to_string(s.size()) + "}";
            return w;
        }
    }
    if (s == Composition{n - 2, 1, 1}) {
        Verdict v = classify_two_point(lambda, p);
        v.evidence.label.reset();
        return v;
    }
    Evidence ev = node_evidence(lambda, p);
    if (!*ev.js) {
        if (sums[2]) {
            ev.note = "contained in A_{" + std::to_string(n - 2) + ",2}";
            return make(Outcome::Reducible, "Theorem C", ev);
        }
        if (sums[1] && classify_point_stabilizer(lambda, p).outcome == Outcome::Reducible) {
            ev.note = "contained in A_" + std::to_string(n - 1);
            return make(Outcome::Reducible, "Theorem B", ev);
        }
    }
    ev.note = "not decided by the classification";
    Verdict v = make(Outcome::NotApplicable, "", ev);
    return v;
}

Verdict classify_wreath(const Partition& lambda, int p, int a, int b) {
    const int n = lambda.size();
    check_wreath(n, a, b);
    if (is_basic_spin(lambda, p) && n >= 5) return classify_basic_spin_wreath(n, a, b);
    if (auto na = precheck(lambda, p)) return *na;
    Evidence ev = node_evidence(lambda, p);
    if (auto sc = small_case(p, lambda, SubgroupDescriptor::wreath(a, b))) {
        ev.note = sc->justification;
        return make(sc->outcome, "Theorem A", ev);
    }
    ev.note = "transitive imprimitive, label is not basic spin";
    return make(Outcome::Reducible, "Theorem A", ev);
}

long long basic_spin_dim(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 125) throw std::out_of_range("dimension overflows");
    return 1LL << ((n - 1) / 2);
}

int spin_multiplicity_intransitive(int n, const Composition& nu) {
    int e = (n - 1) / 2;
    for (int x : nu) e -= (x - 1) / 2;
    return e;
}

Verdict classify_basic_spin_intransitive(int n, const Composition& nu) {
    check_composition(n, nu);
    Evidence ev;
    ev.multiplicity_exponent = spin_multiplicity_intransitive(n, nu);
    const int h = static_cast<int>(nu.size());
    auto count_if = [&](auto pred) { return static_cast<int>(std::count_if(nu.begin(), nu.end(), pred)); };
    const int twos = count_if([](int x) { return x % 4 == 2; });
    const int odds = count_if([](int x) { return x % 2 == 1; });
    if (n % 4 == 0 && h == 3 && twos == 1 && odds == 2)
        return make(Outcome::Irreducible, "spin intransitive (1)", ev);
    if (n % 4 == 0 && h == 2 && odds == 2) return make(Outcome::Irreducible, "spin intransitive (2)", ev);
    if (n % 4 != 2 && h == 2 && twos >= 1) return make(Outcome::Irreducible, "spin intransitive (3)", ev);
    return make(Outcome::Reducible, "spin intransitive", ev);
}

int spin_multiplicity_wreath(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("wreath needs a, b >= 2");
    if (a % 2 == 1) return 0;
    return b % 2 == 0 ? b / 2 : (b - 1) / 2;
}

Verdict classify_basic_spin_wreath(int n, int a, int b) {
    check_wreath(n, a, b);
    Evidence ev;
    ev.multiplicity_exponent = spin_multiplicity_wreath(a, b);
    if (a % 2 == 1) return make(Outcome::Irreducible, "spin wreath (i)", ev);
    if (n % 4 != 2 && a % 4 == 2 && b == 2) return make(Outcome::Irreducible, "spin wreath (ii)", ev);
    return make(Outcome::Reducible, "spin wreath", ev);
}

Verdict classify(const RestrictionQuery& q) {
    require_prime(q.p);
    const int n = q.lambda.size();
    const auto& d = q.subgroup;
    validate(d, n);
    if (d.kind == SubgroupKind::Primitive) return make(Outcome::OutOfScopePrimitive, "Theorem A(i)");
    if (n < 5) return not_applicable("degree below 5");
    const bool spin = is_basic_spin(q.lambda, q.p);
    if (!spin && !in_alternating_class(q.lambda, q.p))
        return not_applicable("label does not split over the alternating group");

    switch (d.kind) {
        case SubgroupKind::FullAlternating: {
            Evidence ev = spin ? Evidence{} : node_evidence(q.lambda, q.p);
            return make(Outcome::Irreducible, "whole group", ev);
        }
        case SubgroupKind::PointStabilizer:
        case SubgroupKind::MaxIntransitive:
        case SubgroupKind::YoungAlternating: {
            const Composition nu = d.young_blocks(n);
            if (nu.size() < 2) return make(Outcome::Irreducible, "whole group");
            Verdict v = classify_intransitive(q.lambda, q.p, nu);
            if (spin && nu.size() == 2 && n % 4 != 2)
                v.clause = v.outcome == Outcome::Irreducible ? "Theorem D(ii)" : "Theorem D";
            if (!spin)
                if (auto sc = small_case(q.p, q.lambda, d)) v.evidence.note = sc->justification;
            return v;
        }
        case SubgroupKind::WreathAlternating: {
            Verdict v = classify_wreath(q.lambda, q.p, d.a, d.b);
            if (spin && n % 4 != 2)
                v.clause = v.outcome == Outcome::Irreducible ? "Theorem D(iii)" : "Theorem D";
            return v;
        }
        case SubgroupKind::Primitive: break;
    }
    throw std::logic_error("unhandled subgroup kind");
}

const std::vector<SmallCase>& small_case_table() {
    static const std::vector<SmallCase> table = [] {
        const std::string root = "sqrt(|G|) <= dim E";
        const std::string strict = "sqrt(|G|) < dim E = 20";
        using D = SubgroupDescriptor;
        auto p321 = Partition({3, 2, 1});
        auto p411 = Partition({4, 1, 1});
        auto p421 = Partition({4, 2, 1});
        auto p431 = Partition({4, 3, 1});
        return std::vector<SmallCase>{
            {6, 2, p321, D::wreath(2, 3), Outcome::Reducible, root},
            {6, 2, p321, D::wreath(3, 2), Outcome::Reducible, root},
            {6, 3, p411, D::wreath(2, 3), Outcome::Reducible, root},
            {6, 3, p411, D::wreath(3, 2), Outcome::Reducible, root},
            {7, 3, p421, D::young({4, 3}), Outcome::Reducible, root},
            {8, 2, p431, D::young({7, 1}), Outcome::Irreducible, "two normal nodes, both of nonzero residue"},
            {8, 2, p431, D::young({6, 2}), Outcome::Reducible, "not JS, so reducible on A_{n-2,2}"},
            {8, 2, p431, D::young({5, 3}), Outcome::Reducible, strict},
            {8, 2, p431, D::young({4, 4}), Outcome::Reducible, strict},
            {8, 2, p431, D::wreath(2, 4), Outcome::Reducible, strict},
            {8, 2, p431, D::wreath(4, 2), Outcome::Reducible,
             "irreducible on G_{n/2,2} only for the basic spin label"},
        };
    }();
    return table;
}

std::optional<SmallCase> small_case(int p, const Partition& lambda, const SubgroupDescriptor& d) {
    const int n = lambda.size();
    const SubgroupDescriptor key = normalize(d, n);
    for (const auto& c : small_case_table())
        if (c.p == p && c.lambda == lambda && normalize(c.subgroup, n) == key) return c;
    return std::nullopt;
}

}  // namespace altres
