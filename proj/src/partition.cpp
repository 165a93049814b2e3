#include "thag/partition.hpp"

#include "thag/ints.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thag {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::row(int n) {
    if (n < 0) throw std::invalid_argument("Partition::row: negative size");
    return n == 0 ? Partition{} : Partition{{n}};
}

Partition Partition::column(int n) {
    if (n < 0) throw std::invalid_argument("Partition::column: negative size");
    return Partition{std::vector<int>((size_t)n, 1)};
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[(size_t)i] : 0;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (parts_[(size_t)i] < other.parts_[(size_t)i]) return false;
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> out((size_t)p.part(0), 0);
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p.part(r); ++c) out[(size_t)c] += 1;
    return Partition{std::move(out)};
}

long long hook_dimension(const Partition& p) {
    int n = p.size();
    if (n > 20)
        throw std::invalid_argument("hook_dimension: |p| must be <= 20");
    if (n == 0) return 1;
    Partition q = conjugate(p);
    // f^p = n! / prod of hook lengths; divide as we go to stay small.
    // Multiply hooks first into per-cell list, then do exact division by
    // cancelling n! over the hook multiset via repeated gcd-free division:
    // simplest exact route uses 128-bit intermediate.
    unsigned __int128 hooks = 1;
    for (int r = 0; r < p.length(); ++r) {
        for (int c = 0; c < p.part(r); ++c) {
            int hook = (p.part(r) - c) + (q.part(c) - r) - 1;
            hooks *= (unsigned)hook;
        }
    }
    unsigned __int128 num = 1;
    for (int i = 2; i <= n; ++i) num *= (unsigned)i;
    unsigned __int128 f = num / hooks;
    if (f * hooks != num)
        throw std::logic_error("hook_dimension: hook product does not divide n!");
    if (f > (unsigned __int128)0x7fffffffffffffffLL)
        throw std::overflow_error("hook_dimension: result exceeds 64 bits");
    return (long long)f;
}

long long bipartition_dimension(const Bipartition& b) {
    int n = b.size();
    if (n > 20)
        throw std::invalid_argument("bipartition_dimension: |b| must be <= 20");
    long long d = binomial(n, b.x.size());
    d = checked_mul(d, hook_dimension(b.x));
    d = checked_mul(d, hook_dimension(b.y));
    return d;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
    std::vector<Bipartition> out;
    for (int a = 0; a <= n; ++a) {
        auto xs = partitions_of(a);
        auto ys = partitions_of(n - a);
        for (const auto& x : xs)
            for (const auto& y : ys) out.push_back(Bipartition{x, y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p.part(i);
    }
    os << ']';
    return os.str();
}

std::string to_string(const Bipartition& b) {
    std::string sx = to_string(b.x);
    std::string sy = to_string(b.y);
    return sx.substr(0, sx.size() - 1) + "|" + sy.substr(1);
}

} // namespace thag
