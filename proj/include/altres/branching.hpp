#pragma once

#include "altres/nodes.hpp"
#include "altres/partition.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace altres {

struct RemovalStep {
    Node node;
    Partition after;
    bool operator==(const RemovalStep&) const = default;
};

struct RemovalSequence {
    Partition origin;
    std::vector<RemovalStep> steps;

    const Partition& result() const { return steps.empty() ? origin : steps.back().after; }
};

// Every step removes a normal node and leaves a p-regular partition.
bool validate_sequence(const RemovalSequence& seq, int p);

struct ReachableSet {
    Partition origin;
    int p = 2;
    int target = 0;
    std::map<Partition, RemovalSequence> members;

    bool contains(const Partition& mu) const { return members.count(mu) != 0; }
};

// p-regular partitions of size m reachable from lambda by removing normal
// nodes through p-regular intermediates. Each labels a composition factor of
// the restriction of D^lambda to S_m.
ReachableSet reachable(const Partition& lambda, int p, int m);

// Partitions mu with lambda/mu reached by repeatedly removing a good node.
std::vector<Partition> good_descendants(const Partition& lambda, int p, int m);

// Staircase truncation of a 2-regular partition to a JS partition.
Partition js_truncation(const Partition& lambda);

class HypothesisViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// lambda has blocks of equal parts with sizes b_1, b_2, ...; nu covers the
// first j blocks. Throws HypothesisViolation when the ordering and bound
// conditions on nu fail; returns nullopt if the prescribed removal order
// breaks normality or regularity at some step.
std::optional<RemovalSequence> removal_sequence_check(const Partition& lambda, const Composition& nu,
                                                      int j, int p);

// At least target distinct reachable partitions of size m, else nullopt.
std::optional<std::vector<Partition>> distinct_factor_certificate(const Partition& lambda, int p,
                                                                  int m, int target);

// Carter's criterion for p-regular lambda: in every column all hook lengths have
// the same p-adic valuation. Then S^lambda = D^lambda.
bool specht_irreducible(const Partition& lambda, int p);

// reachable(lambda, p, m) extended by every p-regular mu of size m below a
// reachable label whose Specht module is irreducible: the Specht filtration of
// the restriction contains S^mu, whose head is D^mu. Sorted.
std::vector<Partition> specht_certified_factors(const Partition& lambda, int p, int m);

// Partitions whose doubles are exempt from the truncation size bound.
const std::vector<Partition>& truncation_bound_exceptions();
bool is_truncation_bound_exception(const Partition& lambda);
// |lambda^JS| >= n/2 + 5 and lambda^JS_{2j-1} - lambda^JS_{2j} <= 2 for all j.
bool truncation_bound_holds(const Partition& lambda);

enum class JsFamily { I, II, III, IV };

std::string to_string(JsFamily f);
const std::vector<Partition>& js3_sporadic();
// All family conditions satisfied by lambda; IV only for the sporadic list.
std::vector<JsFamily> js3_matching_families(const Partition& lambda);
JsFamily js3_family(const Partition& lambda);

// Pair of factors of D^lambda restricted to S_{n-k} for
// lambda = (n/4+2, n/4+1, n/4-1, n/4-2).
std::pair<Partition, Partition> explicit_factor_pair(int n, int k);
Partition explicit_pair_origin(int n);

// Exemptions for ">= 3 distinct factors on restriction to S_{n/2}" with p = 2.
std::optional<std::string> half_restriction_exemption(const Partition& lambda);
// Membership in the lists of partitions that are settled with decomposition
// numbers rather than by removing normal nodes.
std::optional<std::string> decomposition_list_reason(const Partition& lambda);
// Exemptions for ">= 3 distinct factors on restriction to S_{n-k}" for JS
// lambda with p = 2, 5 <= k <= n/2.
std::optional<std::string> js_restriction_exemption(const Partition& lambda, int k);

}  // namespace altres
