#pragma once

#include "altres/nodes.hpp"
#include "altres/partition.hpp"
#include "altres/permmod.hpp"

#include <optional>
#include <string>
#include <vector>

namespace altres {

enum class Outcome { Irreducible, Reducible, OutOfScopePrimitive, NotApplicable };

std::string to_string(Outcome o);

struct Evidence {
    std::vector<Node> normal_nodes;
    std::optional<bool> js;
    std::optional<int> multiplicity_exponent;
    std::optional<Partition> label;
    std::string note;
};

// The question concerns E^lambda_+ and E^lambda_- alike: one restricts
// irreducibly exactly when the other does.
struct Verdict {
    Outcome outcome = Outcome::NotApplicable;
    std::string clause;
    Evidence evidence;
};

struct RestrictionQuery {
    int p = 2;
    Partition lambda;
    SubgroupDescriptor subgroup;
};

// p-regular and splitting on restriction to A_n.
bool in_alternating_class(const Partition& lambda, int p);
bool is_basic_spin(const Partition& lambda, int p);

Verdict classify_point_stabilizer(const Partition& lambda, int p);
// The p = 2 form: JS, or two normal nodes with lambda_1 = lambda_2 + 1 even.
bool point_stabilizer_parity_form(const Partition& lambda);

Verdict classify_two_point(const Partition& lambda, int p);
// e_{1-i} e_i lambda with i the residue of the last node of the first row.
Partition two_point_label(const Partition& lambda);

Verdict classify_intransitive(const Partition& lambda, int p, const Composition& nu);
Verdict classify_wreath(const Partition& lambda, int p, int a, int b);

long long basic_spin_dim(int n);
Verdict classify_basic_spin_intransitive(int n, const Composition& nu);
int spin_multiplicity_intransitive(int n, const Composition& nu);
Verdict classify_basic_spin_wreath(int n, int a, int b);
int spin_multiplicity_wreath(int a, int b);

Verdict classify(const RestrictionQuery& q);

// Hardcoded verdicts for the smallest degrees, each with its justification.
struct SmallCase {
    int n = 0;
    int p = 2;
    Partition lambda;
    SubgroupDescriptor subgroup;
    Outcome outcome = Outcome::Reducible;
    std::string justification;
};

const std::vector<SmallCase>& small_case_table();
std::optional<SmallCase> small_case(int p, const Partition& lambda, const SubgroupDescriptor& d);

}  // namespace altres
