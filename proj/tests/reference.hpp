#pragma once

// Test-side reference computations.  None of these touch the library's
// continued fraction, ladder or numeration code.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace reference {

// Digits a_1, a_2, ... of (P + sqrt(D)) / Q in (0, 1), D not a square,
// by the integer surd recurrence.
inline std::vector<mpz_class> surd_cf(mpz_class P, mpz_class Q, const mpz_class& D, std::size_t n) {
    // Make Q | D - P^2 by scaling numerator and denominator.
    mpz_class d = D;
    if ((d - P * P) % Q != 0) {
        mpz_class aq = abs(Q);
        d = D * aq * aq;
        P *= aq;
        Q *= aq;
    }
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    auto floor_of = [&](const mpz_class& p, const mpz_class& q) {
        // floor((p + sqrt(d)) / q) with sqrt(d) irrational
        mpz_class num = q > 0 ? mpz_class(p + r) : mpz_class(p + r + 1);
        mpz_class out;
        mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
        return out;
    };
    std::vector<mpz_class> out;
    mpz_class a = floor_of(P, Q);
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) out.push_back(a);
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = floor_of(P, Q);
    }
    return out;
}

// q_{-1} = 0, q_0 = 1, q_k = a_k q_{k-1} + q_{k-2}; element i holds q_{i-1}.
inline std::vector<mpz_class> denominators(const std::vector<mpz_class>& a) {
    std::vector<mpz_class> q{0, 1};
    for (std::size_t k = 1; k <= a.size(); ++k) q.push_back(a[k - 1] * q[k] + q[k - 1]);
    return q;
}

inline std::vector<mpz_class> numerators(const std::vector<mpz_class>& a) {
    std::vector<mpz_class> p{1, 0};
    for (std::size_t k = 1; k <= a.size(); ++k) p.push_back(a[k - 1] * p[k] + p[k - 1]);
    return p;
}

// Greedy Zeckendorf over 1, 2, 3, 5, 8, ...; bit i of the result weighs F(i+2).
inline std::vector<int> zeckendorf(std::uint64_t s) {
    std::vector<std::uint64_t> f{1, 2};
    while (f.back() <= s) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    std::vector<int> bits(f.size(), 0);
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] <= s) {
            bits[i] = 1;
            s -= f[i];
        }
    while (!bits.empty() && bits.back() == 0) bits.pop_back();
    return bits;
}

} // namespace reference
