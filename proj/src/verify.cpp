#include "altres/verify.hpp"

#include "altres/branching.hpp"
#include "altres/mullineux.hpp"
#include "altres/nodes.hpp"
#include "altres/partition.hpp"
#include "altres/permmod.hpp"
#include "altres/verdicts.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace altres {

namespace {

struct Partial {
    long long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> exempt;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok) failures.push_back(what);
    }
    void merge(Partial&& o) {
        checked += o.checked;
        for (auto& s : o.failures) failures.push_back(std::move(s));
        for (auto& s : o.exempt) exempt.push_back(std::move(s));
        for (auto& s : o.notes) notes.push_back(std::move(s));
    }
};

// Runs the tasks on up to `threads` workers and merges results in task order.
Partial run_tasks(const std::vector<std::function<Partial()>>& tasks, int threads) {
    std::vector<Partial> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    Partial all;
    for (auto& r : results) all.merge(std::move(r));
    return all;
}

std::string str(const Partition& l) {
    std::ostringstream os;
    os << l;
    return os.str();
}

std::string at(const Partition& l, int p) { return str(l) + " p=" + std::to_string(p); }

// One task per (p, n).
template <class F>
std::vector<std::function<Partial()>> per_prime_size(const std::vector<int>& primes, int lo, int hi, F f) {
    std::vector<std::function<Partial()>> tasks;
    for (int p : primes)
        for (int n = lo; n <= hi; ++n) tasks.push_back([=] { return f(p, n); });
    return tasks;
}

Partial crystal(int p, int n) {
    Partial r;
    for (const auto& l : enumerate_p_regular(n, p)) {
        for (int i = 0; i < p; ++i) {
            const std::string tag = at(l, p) + " i=" + std::to_string(i);
            const Signature red = reduced_signature(l, i, p);
            const int minus = static_cast<int>(std::count_if(red.begin(), red.end(),
                                                             [](const auto& e) { return e.sign == Sign::Minus; }));
            const int plus = static_cast<int>(red.size()) - minus;
            r.check(epsilon(l, i, p) == minus, tag + ": epsilon differs from reduced signature");
            r.check(phi(l, i, p) == plus, tag + ": phi differs from reduced signature");
            if (auto e = e_tilde(l, i, p)) {
                r.check(is_p_regular(*e, p), tag + ": e output not p-regular");
                auto back = f_tilde(*e, i, p);
                r.check(back && *back == l, tag + ": f(e(lambda)) != lambda");
            } else {
                r.check(minus == 0, tag + ": e undefined with normal nodes present");
            }
            if (auto f = f_tilde(l, i, p)) {
                r.check(is_p_regular(*f, p), tag + ": f output not p-regular");
                auto back = e_tilde(*f, i, p);
                r.check(back && *back == l, tag + ": e(f(lambda)) != lambda");
            }
        }
    }
    return r;
}

bool same_parity(const Partition& l) {
    for (int x : l.parts())
        if (x % 2 != l.row(1) % 2) return false;
    return true;
}

Partial js_parity(int, int n) {
    Partial r;
    for (const auto& l : enumerate_p_regular(n, 2))
        r.check(is_js(l, 2) == same_parity(l), str(l) + ": JS flag disagrees with part parity");
    return r;
}

Partial mullineux(int p, int n) {
    Partial r;
    for (const auto& l : enumerate_p_regular(n, p)) {
        const std::string tag = at(l, p);
        const Partition m = mullineux_map(l, p);
        r.check(m.size() == l.size(), tag + ": size changed");
        r.check(is_p_regular(m, p), tag + ": image not p-regular");
        r.check(mullineux_map(m, p) == l, tag + ": not an involution");
        r.check(mullineux_map_crystal(l, p) == m, tag + ": symbol and crystal images differ");
        if (p == 2) r.check(m == l, tag + ": not the identity at p=2");
    }
    return r;
}

Partial sporadic_fixed() {
    Partial r;
    for (const auto& l : js3_sporadic()) {
        r.check(is_mullineux_fixed(l, 3), str(l) + ": sporadic partition is not Mullineux-fixed");
        r.check(is_js(l, 3), str(l) + ": sporadic partition is not JS");
    }
    return r;
}

Partial splitting(int max_n) {
    Partial r;
    const std::vector<Partition> expected{Partition({5, 3}), Partition({4, 3, 1})};
    r.check(enumerate_splitting(8, 2) == expected, "splitting class of 8 at p=2 is not {(5,3),(4,3,1)}");
    for (int n = 1; n <= max_n; ++n)
        r.check(in_splitting_class(beta(n), 2) == (n % 4 != 2),
                "basic spin membership wrong at n=" + std::to_string(n));
    for (int p : {2, 3})
        for (int n = 5; n <= std::min(max_n, 30); ++n)
            for (const auto& l : enumerate_splitting(n, p)) {
                if (is_basic_spin(l, p)) continue;
                r.check(l.length() >= 3, at(l, p) + ": splitting partition with fewer than 3 rows");
            }
    return r;
}

Partial js_truncation_clauses(int, int n) {
    Partial r;
    for (const auto& l : enumerate_p_regular(n, 2)) {
        const Partition t = js_truncation(l);
        const int h = t.length();
        const std::string tag = str(l) + " -> " + str(t);
        r.check(is_p_regular(t, 2) && is_js(t, 2), tag + ": truncation not a 2-regular JS partition");
        r.check((t == l) == is_js(l, 2), tag + ": fixed point iff JS fails");
        r.check(reachable(l, 2, t.size()).contains(t), tag + ": truncation is not a composition factor");
        bool gaps = true, drops = true;
        for (int j = 1; j <= l.length(); ++j) {
            const int d = l.row(j) - l.row(j + 1);
            if (t.row(j) - t.row(j + 1) > 2 * ((d + 1) / 2)) gaps = false;
            const int e = l.row(j) - t.row(j);
            if (e < 0 || e > j - 1) drops = false;
        }
        r.check(gaps, tag + ": gap bound fails");
        r.check(drops && l.row(h + 1) <= h, tag + ": row drop bound fails");
        int k = 0;
        while (l.row(2 * k + 1) > 0) ++k;
        r.check(2 * t.size() >= n + k, tag + ": size lower bound fails");
        if (t.row(h) >= 3)
            r.check(l.row(h + 1) <= 1 && (l.row(h + 1) != 1 || l.row(1) % 2 == 0),
                    tag + ": tail condition for long last row fails");
        if (t.row(h) == 2 && t.row(h - 1) >= 6)
            r.check(l.row(h) <= 3, tag + ": tail condition for last row 2 fails");
        if (t.row(h) == 1 && t.row(h - 1) >= 5)
            r.check(l.row(h) <= 2, tag + ": tail condition for last row 1 fails");
    }
    return r;
}

Partial truncation_bound(int, int n) {
    Partial r;
    if (n % 2 != 0 || n < 12) return r;
    for (const auto& l : enumerate_splitting(n, 2)) {
        if (!is_p_regular(l, 2)) continue;
        const bool ok = truncation_bound_holds(l);
        if (!ok && is_truncation_bound_exception(l)) {
            ++r.checked;
            r.exempt.push_back(str(l) + ": listed exception");
            continue;
        }
        r.check(ok, str(l) + ": truncation size or gap bound fails");
        if (ok && is_truncation_bound_exception(l)) r.notes.push_back(str(l) + ": listed exception satisfies the bound");
    }
    return r;
}

Partial reachability(int, int n) {
    Partial r;
    for (const auto& l : enumerate_p_regular(n, 2)) {
        const Partition t = js_truncation(l);
        const ReachableSet rs = reachable(l, 2, t.size());
        for (const auto& [mu, seq] : rs.members)
            r.check(validate_sequence(seq, 2) && seq.origin == l && seq.result() == mu,
                    str(l) + " -> " + str(mu) + ": witness does not validate");
        r.check(rs.contains(t), str(l) + ": truncation not reachable");
    }
    return r;
}

Partial explicit_pair(int, int n) {
    Partial r;
    if (n % 4 != 0 || n < 12) return r;
    const Partition origin = explicit_pair_origin(n);
    for (int k = 2; k <= std::min(12, n - 9); ++k) {
        const auto [mu, nu] = explicit_factor_pair(n, k);
        const ReachableSet rs = reachable(origin, 2, n - k);
        const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        r.check(rs.contains(mu), tag + ": " + str(mu) + " not reachable");
        r.check(rs.contains(nu), tag + ": " + str(nu) + " not reachable");
        r.check(mu != nu, tag + ": pair is not distinct");
        for (const auto* x : {&mu, &nu})
            if (rs.contains(*x)) r.check(validate_sequence(rs.members.at(*x), 2), tag + ": witness does not validate");
    }
    return r;
}

bool certified(const Partition& l, int p, int m, int target, Partial& r, const std::string& tag) {
    if (distinct_factor_certificate(l, p, m, target)) return true;
    if (static_cast<int>(specht_certified_factors(l, p, m).size()) >= target) {
        r.notes.push_back(tag + ": certified through an irreducible Specht module");
        return true;
    }
    return false;
}

Partial distinct_factors(int p, int n) {
    Partial r;
    if (n % 2 != 0 || n < 6) return r;
    auto record = [&](const std::string& tag, bool ok, const std::optional<std::string>& exemption) {
        if (!ok && exemption) {
            ++r.checked;
            r.exempt.push_back(tag + ": " + *exemption);
        } else {
            r.check(ok, tag + ": too few distinct factors certified");
        }
    };
    if (p == 2) {
        for (const auto& l : enumerate_splitting(n, 2)) {
            if (!is_p_regular(l, 2)) continue;
            const std::string tag = str(l) + " to S_" + std::to_string(n / 2);
            record(tag, certified(l, 2, n / 2, 3, r, tag), half_restriction_exemption(l));
        }
        for (const auto& l : enumerate_p_regular(n, 2)) {
            if (!is_js(l, 2)) continue;
            for (int k = 5; k <= n / 2; ++k) {
                const std::string tag = str(l) + " to S_" + std::to_string(n - k);
                auto exemption = js_restriction_exemption(l, k);
                if (!exemption) exemption = decomposition_list_reason(l);
                record(tag, certified(l, 2, n - k, 3, r, tag), exemption);
            }
        }
    } else if (p == 3) {
        for (const auto& l : enumerate_splitting(n, 3)) {
            if (!is_p_regular(l, 3) || !is_js(l, 3) || l == Partition({4, 1, 1})) continue;
            const std::string tag = str(l) + " p=3 to S_" + std::to_string(n / 2);
            std::optional<std::string> exemption;
            if (l == Partition({7, 3, 2})) exemption = "settled with decomposition tables";
            record(tag, certified(l, 3, n / 2, 5, r, tag), exemption);
        }
    }
    return r;
}

Partial js3_families(int, int n) {
    Partial r;
    for (const auto& l : enumerate_p_regular(n, 3)) {
        if (!is_js(l, 3) || !in_splitting_class(l, 3)) continue;
        const auto fams = js3_matching_families(l);
        r.check(fams.size() == 1, str(l) + ": matches " + std::to_string(fams.size()) + " families");
    }
    return r;
}

Partial invariants_young(int p, int n) {
    Partial r;
    for (int k = 1; 2 * k <= n; ++k) {
        const auto d = SubgroupDescriptor::intransitive(n - k, k);
        const auto gens = generators(d, n);
        const std::string tag = "A_{" + std::to_string(n - k) + "," + std::to_string(k) + "} p=" + std::to_string(p);
        const int s1 = invariant_dim(ModuleSpec{ModuleKind::S1Star, n, p, 1}, gens);
        const int s2 = invariant_dim(ModuleSpec{ModuleKind::S2Star, n, p, 1}, gens);
        r.check(s1 == 1, tag + ": S1* invariants " + std::to_string(s1) + ", expected 1");
        const int want = k == 1 ? 0 : 1;
        r.check(s2 == want, tag + ": S2* invariants " + std::to_string(s2) + ", expected " + std::to_string(want));
        for (int m = 1; m <= 3 && 2 * m <= n; ++m)
            r.check(invariant_dim(ModuleSpec{ModuleKind::Permutation, n, p, m}, gens) == orbit_count(gens, n, m),
                    tag + ": M_" + std::to_string(m) + " invariants differ from orbit count");
    }
    return r;
}

Partial invariants_wreath(int p, int n) {
    Partial r;
    for (int a = 2; a <= n / 2; ++a) {
        if (n % a != 0) continue;
        const int b = n / a;
        const auto gens = generators(SubgroupDescriptor::wreath(a, b), n);
        const std::string tag = "G_{" + std::to_string(a) + "," + std::to_string(b) + "} p=" + std::to_string(p);
        const int s1 = invariant_dim(ModuleSpec{ModuleKind::S1Star, n, p, 1}, gens);
        if (p == 2 && b == 2)
            r.check(s1 != 0, tag + ": S1* invariants vanish");
        else
            r.check(s1 == 0, tag + ": S1* invariants " + std::to_string(s1) + ", expected 0");
        if (a >= 3 && b >= 3) {
            const int s2 = invariant_dim(ModuleSpec{ModuleKind::S2Star, n, p, 1}, gens);
            r.check(s2 == 1, tag + ": S2* invariants " + std::to_string(s2) + ", expected 1");
        }
        for (int m = 1; m <= 3 && 2 * m <= n; ++m)
            r.check(invariant_dim(ModuleSpec{ModuleKind::Permutation, n, p, m}, gens) == orbit_count(gens, n, m),
                    tag + ": M_" + std::to_string(m) + " invariants differ from orbit count");
    }
    return r;
}

Partial orbit_counts(int p, int n) {
    Partial r;
    for (int k = 2; 2 * k <= n; ++k) {
        const auto gens = generators(SubgroupDescriptor::intransitive(n - k, k), n);
        const std::string tag = "A_{" + std::to_string(n - k) + "," + std::to_string(k) + "}";
        const int i1 = orbit_count(gens, n, 1), i2 = orbit_count(gens, n, 2), i3 = orbit_count(gens, n, 3);
        r.check(i1 == 2, tag + ": i_1 = " + std::to_string(i1));
        r.check(i2 == 3, tag + ": i_2 = " + std::to_string(i2));
        r.check(i3 == (k == 2 ? 3 : 4), tag + ": i_3 = " + std::to_string(i3));
        for (int m = 1; m <= 3 && 2 * m <= n; ++m)
            r.check(invariant_dim(ModuleSpec{ModuleKind::Permutation, n, p, m}, gens) == orbit_count(gens, n, m),
                    tag + " p=" + std::to_string(p) + ": M_" + std::to_string(m) + " invariants differ from orbit count");
    }
    return r;
}

Partial theorem_b(int, int n) {
    Partial r;
    for (const auto& l : enumerate_splitting(n, 2)) {
        if (!is_p_regular(l, 2)) continue;
        const bool residue_form = classify_point_stabilizer(l, 2).outcome == Outcome::Irreducible;
        r.check(residue_form == point_stabilizer_parity_form(l), str(l) + ": residue and parity forms disagree");
    }
    return r;
}

Partial theorem_c(int p, int n) {
    Partial r;
    for (const auto& l : enumerate_splitting(n, p)) {
        if (!is_p_regular(l, p) || is_basic_spin(l, p)) continue;
        const std::string tag = at(l, p);
        const Verdict v = classify_two_point(l, p);
        const bool js = is_js(l, p);
        r.check((v.outcome == Outcome::Irreducible) == js, tag + ": verdict disagrees with JS flag");
        if (p != 2) continue;
        const ReachableSet rs = reachable(l, 2, n - 2);
        if (js) {
            std::vector<int> expect = l.parts();
            expect[0] -= 1;
            if (expect.size() > 1) expect[1] -= 1;
            r.check(v.evidence.label && *v.evidence.label == Partition::from_parts(expect),
                    tag + ": restriction label is not (lambda_1-1, lambda_2-1, ...)");
            r.check(rs.members.size() == 1 && v.evidence.label && rs.contains(*v.evidence.label),
                    tag + ": label is not the unique reachable partition");
        } else if (rs.members.size() == 1) {
            r.notes.push_back(tag + ": not JS but a single reachable partition of size n-2");
        }
    }
    return r;
}

bool theorem_d_table(int n, int k) {
    auto two = [](int x) { return x % 4 == 2; };
    return (n % 4 == 0 && k % 2 == 1) || two(k) || two(n - k);
}

Partial theorem_d(int, int n) {
    Partial r;
    if (n < 5 || n % 4 == 2) return r;
    for (int k = 1; k < n; ++k) {
        const Verdict v = classify(RestrictionQuery{2, beta(n), SubgroupDescriptor::intransitive(n - k, k)});
        const Verdict prop = classify_basic_spin_intransitive(n, {n - k, k});
        const bool irr = v.outcome == Outcome::Irreducible;
        const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        r.check(irr == theorem_d_table(n, k), tag + ": verdict disagrees with the clause table");
        r.check(irr == (prop.outcome == Outcome::Irreducible), tag + ": verdict disagrees with the spin proposition");
        const bool literal = (n % 4 == 0 && k % 2 == 1) || k % 4 == 2;
        if (literal != theorem_d_table(n, k))
            r.notes.push_back(tag + ": clause holds for the complementary orbit n-k only");
    }
    return r;
}

void for_each_partition(int n, int max_part, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
    if (n == 0) {
        f(cur);
        return;
    }
    for (int x = std::min(n, max_part); x >= 1; --x) {
        cur.push_back(x);
        for_each_partition(n - x, x, cur, f);
        cur.pop_back();
    }
}

Partial spin_dim(int, int n) {
    Partial r;
    std::vector<int> cur;
    // The identity is symmetric in the parts, so partitions cover all compositions.
    for_each_partition(n, n, cur, [&](const std::vector<int>& nu) {
        int log_rhs = spin_multiplicity_intransitive(n, nu);
        for (int x : nu) log_rhs += (x - 1) / 2;
        r.check(log_rhs == (n - 1) / 2 && spin_multiplicity_intransitive(n, nu) >= 0,
                "n=" + std::to_string(n) + " nu=" + to_string(nu) + ": dimension identity fails");
    });
    for (int a = 2; a <= n / 2; ++a) {
        if (n % a != 0) continue;
        const int b = n / a;
        const int log_rhs = spin_multiplicity_wreath(a, b) + (b - 1) / 2 + b * ((a - 1) / 2);
        r.check(log_rhs == (n - 1) / 2,
                "G_{" + std::to_string(a) + "," + std::to_string(b) + "}: wreath dimension identity fails");
    }
    return r;
}

// Dimensions of D^lambda for the p = 2 small-case labels: both are 2-cores,
// so the Specht module is irreducible and the hook length formula applies.
long long hook_dim(const Partition& l) {
    long long num = 1;
    for (int i = 2; i <= l.size(); ++i) num *= i;
    long long den = 1;
    for (int r = 1; r <= l.length(); ++r)
        for (int c = 1; c <= l.row(r); ++c) {
            int arm = l.row(r) - c, leg = 0;
            while (l.row(r + leg + 1) >= c) ++leg;
            den *= arm + leg + 1;
        }
    return num / den;
}

Partial small_n() {
    Partial r;
    for (int n = 5; n <= 8; ++n)
        for (int p : {2, 3}) {
            std::vector<Partition> got;
            for (const auto& l : enumerate_splitting(n, p))
                if (is_p_regular(l, p) && !is_basic_spin(l, p)) got.push_back(l);
            std::ostringstream os;
            os << "n=" << n << " p=" << p << " non-spin splitting labels:";
            for (const auto& l : got) os << ' ' << l;
            r.notes.push_back(os.str());
        }
    for (const auto& c : small_case_table()) {
        const std::string tag = at(c.lambda, c.p) + " " + to_string(c.subgroup);
        const Verdict v = classify(RestrictionQuery{c.p, c.lambda, c.subgroup});
        r.check(v.outcome == c.outcome, tag + ": verdict " + to_string(v.outcome));
        r.check(in_alternating_class(c.lambda, c.p), tag + ": label does not split");
        if (c.p == 2 && c.justification.rfind("sqrt", 0) == 0) {
            const long long dim_e = hook_dim(c.lambda) / 2;
            const long long order = subgroup_order(c.subgroup, c.n);
            r.check(static_cast<long long>(dim_e) * dim_e >= order,
                    tag + ": sqrt(|G|) bound fails, |G|=" + std::to_string(order) + " dim E=" + std::to_string(dim_e));
        }
    }
    return r;
}

using Runner = std::function<Partial(const SuiteInfo&, int max_n, const std::vector<int>& primes, int threads)>;

template <class F>
Runner sized(int lo, F f) {
    return [=](const SuiteInfo&, int max_n, const std::vector<int>& primes, int threads) {
        return run_tasks(per_prime_size(primes, lo, max_n, f), threads);
    };
}

struct Entry {
    SuiteInfo info;
    Runner run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        e.push_back({{"crystal", "e/f round trips, epsilon/phi match reduced signatures, outputs p-regular", 25, 30, {2, 3, 5}, true},
                     sized(0, crystal)});
        e.push_back({{"js-parity", "at p=2 a partition is JS iff all parts have the same parity", 30, 40, {2}},
                     sized(1, js_parity)});
        e.push_back({{"mullineux-involution",
                      "Mullineux map is a size-preserving involution, identity at p=2, symbol and crystal agree; "
                      "sporadic p=3 JS partitions are fixed",
                      20, 30, {2, 3, 5}, true},
                     [](const SuiteInfo&, int max_n, const std::vector<int>& primes, int threads) {
                         auto tasks = per_prime_size(primes, 0, max_n, mullineux);
                         tasks.push_back(sporadic_fixed);
                         return run_tasks(tasks, threads);
                     }});
        e.push_back({{"splitting",
                      "splitting class of 8 at p=2, basic spin splits iff n != 2 mod 4, non-spin splitting labels have "
                      "at least 3 rows",
                      40, 60, {2, 3}},
                     [](const SuiteInfo&, int max_n, const std::vector<int>&, int) { return splitting(max_n); }});
        e.push_back({{"js-truncation", "JS truncation: JS output, fixed iff JS, composition factor, gap, drop, size and "
                                       "tail bounds",
                      26, 30, {2}},
                     sized(1, js_truncation_clauses)});
        e.push_back({{"l1", "|lambda^JS| >= n/2+5 with top-pair gaps <= 2 for splitting labels of even n >= 12, "
                            "listed doubles exempt",
                      30, 36, {2}},
                     sized(12, truncation_bound)});
        e.push_back({{"reachability", "removal witnesses re-validate and the JS truncation is reachable", 24, 28, {2}},
                     sized(1, reachability)});
        e.push_back({{"explicit-pair",
                      "both explicit partitions are reachable from (q+2,q+1,q-1,q-2), q=n/4, for 2 <= k <= min(12,n-9)",
                      32, 40, {2}},
                     sized(12, explicit_pair)});
        e.push_back({{"distinct-factors",
                      "at least 3 (p=2) or 5 (p=3) distinct certified factors on restriction, exception lists reported",
                      20, 24, {2, 3}},
                     sized(6, distinct_factors)});
        e.push_back({{"js3-families", "every JS splitting label at p=3 lies in exactly one family", 45, 50, {3}},
                     sized(1, js3_families)});
        e.push_back({{"invariants-young",
                      "dim(S_1^*)^G = dim(S_2^*)^G = 1 for G = A_{n-k,k}, except (S_2^*)^{A_{n-1}} = 0; dim M_k^G = i_k(G)",
                      14, 16, {2, 3}},
                     sized(5, invariants_young)});
        e.push_back({{"invariants-wreath",
                      "(S_1^*)^G = 0 for G = G_{a,b} unless p=b=2, dim(S_2^*)^G = 1 for a,b >= 3; dim M_k^G = i_k(G)",
                      18, 20, {2, 3}},
                     sized(6, invariants_wreath)});
        e.push_back({{"orbit-counts", "i_1 = 2, i_2 = 3, i_3 = 4 (3 for k=2) on A_{n-k,k}; dim M_k^G = i_k(G)", 14, 18,
                      {2, 3}},
                     sized(5, orbit_counts)});
        e.push_back({{"theorem-b", "point-stabilizer verdict: residue form equals the p=2 parity form", 30, 36, {2}},
                     sized(5, theorem_b)});
        e.push_back({{"theorem-c", "two-point verdict iff JS, with label e_{1-i} e_i lambda = (lambda_1-1, lambda_2-1, ...)",
                      30, 36, {2, 3}},
                     sized(5, theorem_c)});
        e.push_back({{"theorem-d", "basic spin on A_{n-k,k} agrees with the clause table and the spin proposition", 40, 60,
                      {2}},
                     sized(5, theorem_d)});
        e.push_back({{"spin-dim", "by dimensions: basic spin dimension factors over intransitive and wreath subgroups", 40,
                      60, {2}},
                     sized(1, spin_dim)});
        e.push_back({{"small-n", "hardcoded small-degree verdicts reproduce with their justifications", 8, 8, {2, 3}},
                     [](const SuiteInfo&, int, const std::vector<int>&, int) { return small_n(); }});
        return e;
    }();
    return entries;
}

const Entry& entry(const std::string& name) {
    for (const auto& e : registry())
        if (e.info.name == name) return e;
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const SuiteInfo& suite_info(const std::string& name) { return entry(name).info; }

VerifyReport run_suite(const std::string& name, const VerifyBounds& bounds) {
    const Entry& e = entry(name);
    const int max_n = bounds.max_n > 0 ? bounds.max_n : e.info.default_max_n;
    if (max_n > e.info.limit_max_n)
        throw std::out_of_range("max-n for " + name + " is limited to " + std::to_string(e.info.limit_max_n));
    std::vector<int> primes = bounds.primes.empty() ? e.info.default_primes : bounds.primes;
    for (int p : primes) {
        require_prime(p);
        if (!e.info.any_prime && std::find(e.info.default_primes.begin(), e.info.default_primes.end(), p) ==
                                     e.info.default_primes.end())
            throw std::invalid_argument("suite " + name + " does not take p=" + std::to_string(p));
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    Partial all = e.run(e.info, max_n, primes, std::max(1, bounds.threads));
    VerifyReport rep;
    rep.suite = name;
    rep.property = e.info.property;
    rep.max_n = max_n;
    rep.primes = primes;
    rep.checked = all.checked;
    rep.failures = std::move(all.failures);
    rep.exempt = std::move(all.exempt);
    rep.notes = std::move(all.notes);
    return rep;
}

}  // namespace altres
