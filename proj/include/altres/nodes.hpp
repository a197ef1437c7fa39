#pragma once

#include "altres/partition.hpp"

#include <optional>
#include <vector>

namespace altres {

// 1-based (row, column) position in a Young diagram.
struct Node {
    int row = 0;
    int col = 0;
    auto operator<=>(const Node&) const = default;
};

enum class Sign { Plus, Minus };

struct SignatureEntry {
    Sign sign;
    Node node;
    bool operator==(const SignatureEntry&) const = default;
};

using Signature = std::vector<SignatureEntry>;

int residue(const Node& a, int p);

std::vector<Node> removable_nodes(const Partition& lambda);
std::vector<Node> addable_nodes(const Partition& lambda);
bool is_removable(const Partition& lambda, const Node& a);

Partition remove_node(const Partition& lambda, const Node& a);
Partition add_node(const Partition& lambda, const Node& a);

// Addable (+) and removable (-) i-nodes, top row first.
Signature signature(const Partition& lambda, int i, int p);
// Cancels adjacent (+,-) pairs until the word reads -...-+...+.
Signature reduce(const Signature& sig);
Signature reduced_signature(const Partition& lambda, int i, int p);

std::vector<Node> normal_nodes(const Partition& lambda, int i, int p);
std::vector<Node> conormal_nodes(const Partition& lambda, int i, int p);
std::vector<Node> all_normal_nodes(const Partition& lambda, int p);
std::optional<Node> good_node(const Partition& lambda, int i, int p);
std::optional<Node> cogood_node(const Partition& lambda, int i, int p);

int epsilon(const Partition& lambda, int i, int p);
int phi(const Partition& lambda, int i, int p);

std::optional<Partition> e_tilde(const Partition& lambda, int i, int p);
std::optional<Partition> f_tilde(const Partition& lambda, int i, int p);

// Exactly one normal node overall.
bool is_js(const Partition& lambda, int p);

// Multiplicity of D^{lambda_A} in the socle of D^lambda restricted to S_{n-1};
// zero when A is removable but not normal.
int restriction_multiplicity(const Partition& lambda, const Node& a, int p);
int dim_end_restriction(const Partition& lambda, int p);

}  // namespace altres
