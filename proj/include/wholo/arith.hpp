#pragma once

#include <gmpxx.h>

#include <string>

#include "wholo/errors.hpp"

namespace wholo {

/// Signed arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, kept in lowest terms with positive denominator.
/// GMP maintains the canonical form through arithmetic as long as values are
/// constructed canonically; use rational() for raw num/den pairs.
using Rational = mpq_class;

/// num/den in lowest terms. Throws InvalidParams on den == 0.
Rational rational(const Integer& num, const Integer& den);

inline Integer numerator(const Rational& x) { return x.get_num(); }
inline Integer denominator(const Rational& x) { return x.get_den(); }
inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// "num" or "num/den", decimal.
std::string to_string(const Rational& x);

/// Trial division; every modulus in scope is tiny.
bool is_prime(const Integer& p);

/// A congruence class modulo a prime p, normalized into [0, p).
class Residue {
public:
    /// Reduces value into [0, p); throws InvalidParams unless p is prime.
    Residue(const Integer& value, const Integer& modulus);

    const Integer& value() const { return value_; }
    const Integer& modulus() const { return modulus_; }

    bool is_zero() const { return value_ == 0; }
    bool operator==(const Residue&) const = default;

private:
    Integer value_;
    Integer modulus_;
};

/// n-th Bernoulli number, B_1 = -1/2 convention, by the defining recurrence
/// sum_{j<=m} C(m+1,j) B_j = 0. Memoized.
Rational bernoulli(long n);

/// sum of d^k over divisors d of n. Rejects n <= 0.
Integer sigma(long k, const Integer& n);

/// num * den^{-1} mod p. Throws DenominatorNotInvertible when p | den,
/// InvalidParams when p is not prime.
Residue reduce_mod(const Rational& x, const Integer& p);

}  // namespace wholo
