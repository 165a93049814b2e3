#include "thag/ints.hpp"

namespace thag {

long long factorial(int n) {
    if (n < 0 || n > 20)
        throw std::invalid_argument("factorial: n must be in [0, 20]");
    long long r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

long long binomial(int n, int k) {
    if (n < 0)
        throw std::invalid_argument("binomial: n must be nonnegative");
    if (n > 20)
        throw std::invalid_argument("binomial: n must be <= 20");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i; // exact: r is binomial(n-k+i, i) after this step
    }
    return r;
}

} // namespace thag
