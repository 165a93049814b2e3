#pragma once

#include <compare>
#include <string>
#include <vector>

namespace thag {

// Integer partition in canonical form: weakly decreasing positive parts,
// trailing zeros stripped on construction. Ordering is lexicographic on the
// part vector; this is the tie-break order used by all serializers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition row(int n);    // (n); () when n == 0
    static Partition column(int n); // (1^n); () when n == 0

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                                   // number of boxes
    int length() const { return (int)parts_.size(); }   // number of parts
    int part(int i) const;                              // 0-indexed; 0 past the end
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& other) const;        // containment of diagrams

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// Number of standard Young tableaux of shape p (hook length formula),
// exact in 64 bits; rejects |p| > 20.
long long hook_dimension(const Partition& p);

// Pair of partitions indexing an irreducible of the rank-n hyperoctahedral
// group, n = |x| + |y|. x is the X-alphabet shape, y the Y-alphabet shape.
struct Bipartition {
    Partition x;
    Partition y;

    int size() const { return x.size() + y.size(); }
    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

// binomial(n, |x|) * f^x * f^y with n = |x| + |y|; rejects n > 20.
long long bipartition_dimension(const Bipartition& b);

// All partitions of n, in the canonical lexicographic order.
std::vector<Partition> partitions_of(int n);

// All bipartitions of total size n, in canonical order.
std::vector<Bipartition> bipartitions_of(int n);

std::string to_string(const Partition& p);      // e.g. "[3,1]" ; "[]" for empty
std::string to_string(const Bipartition& b);    // e.g. "[3,1|2]"

} // namespace thag
