#pragma once

#include <json.hpp>

#include <vector>

#include "wholo/forms.hpp"

namespace wholo {

/// Polynomial in the j-invariant with exact rational coefficients,
/// coefficient i belonging to j^i. Trailing zeros are trimmed.
class JPolynomial {
public:
    JPolynomial() = default;
    explicit JPolynomial(std::vector<Rational> coeffs);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i (0 beyond the degree).
    Rational coeff(long i) const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const JPolynomial&) const = default;

    /// "-x^3 + x", descending powers.
    std::string to_text() const;
    nlohmann::json to_json() const;

private:
    std::vector<Rational> coeffs_;
};

/// Writes a weight-2 weakly holomorphic f as P(j) * E14/Delta by greedy pole
/// elimination. Throws WeightMismatch unless the weight is 2, NotInSpan when
/// the remainder fails to vanish to precision (the input was not genuinely
/// modular of weight 2).
JPolynomial decompose_weight2(const ModularExpansion& f);

/// Q with Q' = -P and zero constant term.
JPolynomial antiderivative_in_j(const JPolynomial& p);

/// P(j) as a weight-0 expansion, Horner evaluation over series arithmetic.
ModularExpansion eval_j_polynomial(const JPolynomial& p, long prec);

struct Weight2Certificate {
    /// Q with f = theta(Q(j)), verified by reconstruction.
    JPolynomial antiderivative;
    /// Exact constant coefficient of f; always 0 for genuine input.
    Rational constant_term;
};

/// Full certificate for a weight-2 form: decomposes, antidifferentiates,
/// checks theta(Q(j)) reproduces f on the known window, and returns the exact
/// constant term. ConstantTermNonzero is an assertion-level failure.
Weight2Certificate certify_constant_term(const ModularExpansion& f);

}  // namespace wholo
