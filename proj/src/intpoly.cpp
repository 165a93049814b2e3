#include "thag/intpoly.hpp"

#include "thag/ints.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace thag {

IntPoly::IntPoly(std::initializer_list<long long> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
    trim();
}

IntPoly::IntPoly(std::vector<long long> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

IntPoly IntPoly::monomial(int k, long long c) {
    if (k < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
    IntPoly p;
    if (c == 0) return p;
    p.coeffs_.assign((size_t)k + 1, 0);
    p.coeffs_.back() = c;
    return p;
}

long long IntPoly::coeff(int k) const {
    return (k >= 0 && k <= degree()) ? coeffs_[(size_t)k] : 0;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], -o.coeffs_[i]);
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] =
                checked_add(out.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    out.trim();
    return out;
}

IntPoly IntPoly::operator*(long long c) const {
    IntPoly out;
    if (c == 0) return out;
    out.coeffs_ = coeffs_;
    for (auto& x : out.coeffs_) x = checked_mul(x, c);
    return out;
}

IntPoly IntPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("IntPoly::shifted: negative shift");
    if (is_zero()) return {};
    IntPoly out;
    out.coeffs_.assign((size_t)k, 0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

long long IntPoly::eval(long long t) const {
    long long acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = checked_add(checked_mul(acc, t), coeffs_[i]);
    return acc;
}

bool is_palindromic(const IntPoly& p, int r) {
    if (r < 0) return p.is_zero();
    if (p.degree() > r) return false;
    for (int k = 0; k <= r; ++k)
        if (p.coeff(k) != p.coeff(r - k)) return false;
    return true;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        long long c = p.coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = std::llabs(c);
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace thag
