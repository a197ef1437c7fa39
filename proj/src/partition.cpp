#include "altres/partition.hpp"

#include "altres/mullineux.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace altres {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_parts(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int r) const {
    if (r < 1 || r > length()) return 0;
    return parts_[r - 1];
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string to_string(const Composition& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

std::string to_string(const Partition& lambda) { return to_string(lambda.parts()); }

std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
    return os << '(' << to_string(lambda) << ')';
}

bool is_p_regular(const Partition& lambda, int p) {
    const auto& v = lambda.parts();
    std::size_t run = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        run = v[i] == v[i - 1] ? run + 1 : 1;
        if (run >= static_cast<std::size_t>(p)) return false;
    }
    return p > 1 || v.empty();
}

Partition beta(int n) {
    if (n < 1) throw std::invalid_argument("beta needs n >= 1");
    if (n % 2 == 0) return Partition::from_parts({n / 2 + 1, n / 2 - 1});
    return Partition::from_parts({(n + 1) / 2, (n - 1) / 2});
}

Composition double_of(const Partition& mu) {
    Composition out;
    for (int m : mu.parts()) {
        Partition b = beta(m);
        out.insert(out.end(), b.parts().begin(), b.parts().end());
    }
    return out;
}

namespace {

// Parts bounded by max_part, at most max_run copies of any value.
void gen(int remaining, int max_part, int max_run, std::vector<int>& cur,
         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        int copies_cap = std::min(max_run, remaining / part);
        // more copies first keeps the output reverse-lexicographic
        for (int c = 1; c <= copies_cap; ++c) cur.push_back(part);
        for (int c = copies_cap; c >= 1; --c) {
            gen(remaining - c * part, part - 1, max_run, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, n > 0 ? n : 1, cur, out);
    return out;
}

std::vector<Partition> enumerate_p_regular(int n, int p) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, p - 1, cur, out);
    return out;
}

namespace {

bool splits_at_two(const Partition& lambda) {
    const auto& v = lambda.parts();
    std::vector<int> mu;
    std::size_t i = 0;
    for (; i + 1 < v.size(); i += 2) {
        int diff = v[i] - v[i + 1];
        if (diff != 1 && diff != 2) return false;
        mu.push_back(v[i] + v[i + 1]);
    }
    if (i < v.size()) {
        if (v[i] != 1) return false;
        mu.push_back(1);
    }
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (mu[j] % 4 == 2) return false;
        if (j > 0 && mu[j] >= mu[j - 1]) return false;
    }
    return true;
}

}  // namespace

bool in_splitting_class(const Partition& lambda, int p) {
    require_prime(p);
    if (!is_p_regular(lambda, p)) throw std::invalid_argument("partition is not p-regular");
    if (p == 2) return splits_at_two(lambda);
    return mullineux_map(lambda, p) == lambda;
}

std::vector<Partition> enumerate_splitting(int n, int p) {
    std::vector<Partition> out;
    for (auto& lambda : enumerate_p_regular(n, p))
        if (in_splitting_class(lambda, p)) out.push_back(std::move(lambda));
    return out;
}

}  // namespace altres
