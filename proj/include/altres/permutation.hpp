#pragma once

#include <string>
#include <vector>

namespace altres {

// Permutation of {0, ..., n-1}; text forms use points 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // Cycles with 1-based points, e.g. {{1,2,3},{4,5}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    // "(1,2,3)(4,5)" or "()"
    static Permutation parse(int n, const std::string& text);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    // (a * b)(x) = a(b(x))
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_even() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

std::string to_string(const Permutation& g);

// Size of the group generated by gens, by closure; only for small groups.
long long closure_order(const std::vector<Permutation>& gens, long long limit = 5'000'000);

// Orbits of the generated group on points 0..n-1, each sorted, ordered by minimum.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int n);

}  // namespace altres
