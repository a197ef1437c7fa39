#pragma once

#include "altres/nodes.hpp"
#include "altres/partition.hpp"

#include <utility>
#include <vector>

namespace altres {

struct RimResult {
    std::vector<Node> nodes;  // in rim traversal order
    Partition remainder;
};

RimResult p_rim(const Partition& lambda, int p);

// Columns (rim size, number of rows), outermost rim first.
using MullineuxSymbol = std::vector<std::pair<int, int>>;

MullineuxSymbol mullineux_symbol(const Partition& lambda, int p);
Partition partition_from_symbol(const MullineuxSymbol& symbol, int p);

Partition mullineux_map(const Partition& lambda, int p);
// Same map computed through the crystal: good-node path to the empty
// partition, replayed with negated residues.
Partition mullineux_map_crystal(const Partition& lambda, int p);

// Residues i_1..i_n with lambda = f_{i_n} ... f_{i_1} of the empty partition.
std::vector<int> good_path(const Partition& lambda, int p);

bool is_mullineux_fixed(const Partition& lambda, int p);

}  // namespace altres
