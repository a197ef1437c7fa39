#pragma once

#include "altres/gfp.hpp"
#include "altres/partition.hpp"
#include "altres/permutation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace altres {

enum class SubgroupKind { YoungAlternating, MaxIntransitive, WreathAlternating, PointStabilizer, FullAlternating, Primitive };

// A subgroup of A_n from one of the families used by the classification.
// Young blocks are consecutive intervals of points in the order of `parts`;
// wreath block r is {(r-1)a+1, ..., ra}.
struct SubgroupDescriptor {
    SubgroupKind kind = SubgroupKind::FullAlternating;
    Composition parts;  // Young: the composition; MaxIntransitive: {n-k, k}
    int a = 0;          // wreath block size
    int b = 0;          // wreath block count

    static SubgroupDescriptor young(Composition nu);
    static SubgroupDescriptor intransitive(int n_minus_k, int k);
    static SubgroupDescriptor wreath(int a, int b);
    static SubgroupDescriptor point_stabilizer();
    static SubgroupDescriptor full();
    static SubgroupDescriptor primitive();

    // Block sizes of the Young subgroup this names, for the intransitive kinds.
    Composition young_blocks(int n) const;
    bool operator==(const SubgroupDescriptor&) const = default;
};

// "point-stabilizer", "young:5,3,1", "intransitive:13,3", "wreath:4x3",
// "full", "primitive"
SubgroupDescriptor parse_subgroup(const std::string& text);
std::string to_string(const SubgroupDescriptor& d);

void validate(const SubgroupDescriptor& d, int n);
std::vector<Permutation> generators(const SubgroupDescriptor& d, int n);
// Order of the described subgroup, from its structure.
long long subgroup_order(const SubgroupDescriptor& d, int n);

using Subset = std::vector<int>;  // sorted, 1-based
std::vector<Subset> omega_k(int n, int k);

enum class ModuleKind { Permutation, S1Star, S2Star };

struct ModuleSpec {
    ModuleKind kind = ModuleKind::Permutation;
    int n = 0;
    int p = 2;
    int k = 1;  // only for the permutation module on k-subsets

    int dimension() const;
};

void validate(const ModuleSpec& spec);

// Coordinates of the image of the pair {i,j} in S_2^* with respect to its
// basis: pairs inside {1..n-2} first (lexicographic), then {i,n-1} for
// i = 1..n-3. Entries are integers, to be reduced mod p.
std::vector<long long> s2_coordinates(int n, int i, int j);
std::vector<Subset> s2_basis_labels(int n);

GFpMatrix action_matrix(const ModuleSpec& spec, const Permutation& g);
std::vector<GFpMatrix> module_matrices(const ModuleSpec& spec, const std::vector<Permutation>& gens);
std::vector<GFpMatrix> module_matrices(const ModuleSpec& spec, const SubgroupDescriptor& d);

int invariant_dim(const ModuleSpec& spec, const SubgroupDescriptor& d);
int invariant_dim(const ModuleSpec& spec, const std::vector<Permutation>& gens);

int orbit_count(const std::vector<Permutation>& gens, int n, int k);
int orbit_count(const SubgroupDescriptor& d, int n, int k);

}  // namespace altres
