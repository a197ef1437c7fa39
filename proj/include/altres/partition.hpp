#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace altres {

// Weakly decreasing sequence of positive integers. Rows are 1-based in the
// accessors below; row(r) is 0 past the last part.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Drops trailing zeros before validating.
    static Partition from_parts(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int row(int r) const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

using Composition = std::vector<int>;

void require_prime(int p);
bool is_prime(int p);

Partition parse_partition(std::string_view text);
std::string to_string(const Partition& lambda);
std::string to_string(const Composition& c);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

bool is_p_regular(const Partition& lambda, int p);

Partition beta(int n);
Composition double_of(const Partition& mu);

// Partitions of n, largest first in lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_p_regular(int n, int p);

// Labels of the irreducible modules that split on restriction to A_n.
bool in_splitting_class(const Partition& lambda, int p);
std::vector<Partition> enumerate_splitting(int n, int p);

}  // namespace altres
