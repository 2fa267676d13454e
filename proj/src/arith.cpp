#include "wholo/arith.hpp"

#include <mutex>
#include <vector>

namespace wholo {

Rational rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidParams("rational: zero denominator");
    Rational x(num, den);
    x.canonicalize();
    return x;
}

std::string to_string(const Rational& x) {
    return x.get_str();
}

bool is_prime(const Integer& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Integer d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Residue::Residue(const Integer& value, const Integer& modulus) : modulus_(modulus) {
    if (!is_prime(modulus)) {
        throw InvalidParams("Residue: modulus " + modulus.get_str() + " is not prime");
    }
    mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
}

Rational bernoulli(long n) {
    if (n < 0) throw InvalidParams("bernoulli: negative index");

    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};  // B_0 = 1

    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<long>(cache.size()) <= n) {
        // sum_{j<=m} C(m+1, j) B_j = 0  =>  B_m = -(1/(m+1)) sum_{j<m} C(m+1, j) B_j
        long m = static_cast<long>(cache.size());
        Rational acc(0);
        Integer binom(1);  // C(m+1, j), updated incrementally
        for (long j = 0; j < m; ++j) {
            acc += Rational(binom) * cache[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

Integer sigma(long k, const Integer& n) {
    if (n <= 0) throw InvalidParams("sigma: n must be positive");
    if (k < 0) throw InvalidParams("sigma: negative power");

    Integer total(0), dk, qk;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k));
        total += dk;
        Integer q = n / d;
        if (q != d) {
            mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
            total += qk;
        }
    }
    return total;
}

Residue reduce_mod(const Rational& x, const Integer& p) {
    if (!is_prime(p)) {
        throw InvalidParams("reduce_mod: modulus " + p.get_str() + " is not prime");
    }
    Integer den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()) == 0) {
        throw DenominatorNotInvertible("denominator " + x.get_den().get_str() +
                                       " is divisible by " + p.get_str() +
                                       "; value is not " + p.get_str() + "-integral");
    }
    return Residue(x.get_num() * den_inv, p);
}

}  // namespace wholo
