#include "thag/schur.hpp"

#include "thag/ints.hpp"

#include <stdexcept>
#include <utility>

namespace thag {

SchurPoly SchurPoly::term(Partition shape, long long coeff) {
    SchurPoly p;
    p.add_term(shape, coeff);
    return p;
}

void SchurPoly::add_term(const Partition& shape, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(shape);
    if (it == terms_.end()) {
        terms_.emplace(shape, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

std::optional<int> SchurPoly::homogeneous_degree() const {
    int deg = 0;
    bool first = true;
    for (const auto& [shape, c] : terms_) {
        if (first) { deg = shape.size(); first = false; }
        else if (shape.size() != deg) return std::nullopt;
    }
    return deg;
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& o) {
    for (const auto& [shape, c] : o.terms_) add_term(shape, c);
    return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& o) {
    for (const auto& [shape, c] : o.terms_) add_term(shape, -c);
    return *this;
}

SchurPoly SchurPoly::operator*(long long c) const {
    SchurPoly out;
    if (c == 0) return out;
    for (const auto& [shape, k] : terms_) out.terms_.emplace(shape, checked_mul(k, c));
    return out;
}

SchurPoly operator*(const SchurPoly& a, const SchurPoly& b) {
    return schur_multiply(a, b);
}

namespace {

// Enumerates the chains lambda = nu^0 c nu^1 c ... c nu^len(mu) where step i
// adds a horizontal strip of mu_i boxes, subject to the ballot condition
//   #(label i+1 in rows 1..r) <= #(label i in rows 1..r-1)   for all r,
// which characterizes Littlewood-Richardson skew tableaux of content mu.
struct Grower {
    std::vector<int> mu;               // strip sizes, one per label
    std::vector<int> shape;            // current shape, padded with one 0 row
    std::vector<int> prev_label_rows;  // per-row box count of previous label
    std::vector<int> cur_label_rows;
    SchurPoly::Terms out;

    void run(const Partition& base) {
        shape.assign(base.parts().begin(), base.parts().end());
        prev_label_rows.assign(shape.size() + mu.size() + 1, 0);
        cur_label_rows.assign(prev_label_rows.size(), 0);
        grow_label(0);
    }

    void record() {
        Partition result{shape};
        auto it = out.find(result);
        if (it == out.end()) out.emplace(std::move(result), 1);
        else it->second = checked_add(it->second, 1);
    }

    void grow_label(size_t label) {
        if (label == mu.size()) { record(); return; }
        int old_len = (int)shape.size();
        // Old row lengths are needed for the strip condition after shape is
        // mutated row by row; snapshot them.
        std::vector<int> old_shape = shape;
        shape.push_back(0); // allow one new row
        place(label, 1, mu[label], 0, 0, old_shape, old_len);
        if (!shape.empty() && shape.back() == 0) shape.pop_back();
    }

    // Distribute `remaining` boxes of `label` over rows r, r+1, ... (1-based).
    // prefix_new = boxes of this label already placed in rows < r,
    // prefix_prev = boxes of previous label in rows < r.
    void place(size_t label, int r, int remaining, int prefix_new, int prefix_prev,
               const std::vector<int>& old_shape, int old_len) {
        if (r > old_len + 1) {
            if (remaining == 0) finish_label(label);
            return;
        }
        int old_r = (r <= old_len) ? old_shape[(size_t)r - 1] : 0;
        int cap = remaining;
        if (r >= 2) { // horizontal strip: new row r must fit under old row r-1
            cap = std::min(cap, old_shape[(size_t)r - 2] - old_r);
        }
        // Weak decrease against the (already updated) row above.
        if (r >= 2) cap = std::min(cap, shape[(size_t)r - 2] - old_r);
        if (label >= 1) { // ballot condition against the previous label
            cap = std::min(cap, prefix_prev - prefix_new);
        }
        int prev_here = prev_label_rows[(size_t)r - 1];
        for (int add = 0; add <= cap; ++add) {
            shape[(size_t)r - 1] = old_r + add;
            cur_label_rows[(size_t)r - 1] = add;
            place(label, r + 1, remaining - add, prefix_new + add,
                  prefix_prev + prev_here, old_shape, old_len);
        }
        shape[(size_t)r - 1] = old_r;
        cur_label_rows[(size_t)r - 1] = 0;
    }

    void finish_label(size_t label) {
        std::swap(prev_label_rows, cur_label_rows);
        std::vector<int> saved_cur = cur_label_rows; // old prev, restore later
        cur_label_rows.assign(cur_label_rows.size(), 0);
        if (!shape.empty() && shape.back() == 0) {
            shape.pop_back();
            grow_label(label + 1);
            shape.push_back(0);
        } else {
            grow_label(label + 1);
        }
        cur_label_rows = saved_cur;
        std::swap(prev_label_rows, cur_label_rows);
    }
};

} // namespace

const SchurPoly::Terms& lr_expand_pair(const Partition& a, const Partition& b) {
    thread_local std::map<std::pair<Partition, Partition>, SchurPoly::Terms> memo;
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Grower g;
    g.mu = b.parts();
    g.run(a);
    return memo.emplace(std::move(key), std::move(g.out)).first->second;
}

SchurPoly schur_multiply(const SchurPoly& a, const SchurPoly& b) {
    SchurPoly out;
    for (const auto& [sa, ca] : a.terms()) {
        for (const auto& [sb, cb] : b.terms()) {
            long long c = checked_mul(ca, cb);
            for (const auto& [shape, mult] : lr_expand_pair(sa, sb))
                out.add_term(shape, checked_mul(c, mult));
        }
    }
    return out;
}

long long lr_coefficient(const Partition& a, const Partition& b, const Partition& c) {
    if (c.size() != a.size() + b.size()) return 0;
    const auto& exp = lr_expand_pair(a, b);
    auto it = exp.find(c);
    return it == exp.end() ? 0 : it->second;
}

SchurPoly h_gen(int n) {
    if (n < 0) throw std::invalid_argument("h_gen: negative degree");
    return SchurPoly::term(Partition::row(n));
}

SchurPoly e_gen(int n) {
    if (n < 0) throw std::invalid_argument("e_gen: negative degree");
    return SchurPoly::term(Partition::column(n));
}

} // namespace thag
