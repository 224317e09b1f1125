#include "ppm/numeric.hpp"

namespace ppm {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // always exact: r is C(n, i+1) * (i+1)! / ... running product of binomials
    }
    return r;
}

BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt catalan_number(long n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

BigInt central_delannoy(long n) {
    // sum_k C(n,k) C(n+k,k)
    BigInt r = 0;
    for (long k = 0; k <= n; ++k) r += binomial(n, k) * binomial(n + k, k);
    return r;
}

BigInt pow_int(long base, long exp) {
    BigInt r = 1, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

std::string to_string(const BigRational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace ppm
