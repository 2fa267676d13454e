#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "wholo/arith.hpp"

namespace wholo {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Coefficients are known exactly for every exponent n with ord() <= n < prec();
/// nothing is claimed outside that window. A nonzero series is normalized so its
/// leading coefficient is nonzero; the zero-to-precision series has ord == prec
/// and an empty coefficient list. ord() of a nonzero series is its order of
/// vanishing at the cusp (negative for a pole).
class QExpansion {
public:
    /// Zero series: nothing known below q^prec, zero everywhere under it.
    QExpansion() = default;

    static QExpansion zero(long prec);

    /// c * q^exp + O(q^prec). Collapses to zero(prec) when c == 0 or exp >= prec.
    static QExpansion monomial(const Rational& c, long exp, long prec);

    /// Dense coefficients starting at q^ord; precision = ord + coeffs.size().
    /// Leading zeros are trimmed.
    static QExpansion from_coeffs(long ord, std::vector<Rational> coeffs);

    long ord() const { return ord_; }
    long prec() const { return prec_; }
    bool is_zero() const { return ord_ == prec_; }

    /// Exact coefficient of q^n. Returns 0 below ord; throws OutOfPrecision for
    /// n >= prec -- an unknown coefficient is never reported as zero.
    Rational coeff(long n) const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const QExpansion&) const = default;

    /// `q^-1 + 264 + 8244*q + ... + O(q^6)`, zero coefficients suppressed.
    std::string to_text() const;

    /// {"ord": -1, "prec": 6, "coeffs": ["1", "264", ...]}, coefficients as
    /// decimal strings "num" or "num/den".
    nlohmann::json to_json() const;

private:
    QExpansion(long ord, long prec, std::vector<Rational> coeffs)
        : ord_(ord), prec_(prec), coeffs_(std::move(coeffs)) {}

    long ord_ = 0;
    long prec_ = 0;
    std::vector<Rational> coeffs_;
};

/// A q-expansion together with its weight; nullopt marks a series that is not
/// modular (E_2, or a weight-mixing combination).
struct ModularExpansion {
    QExpansion series;
    std::optional<long> weight;

    bool is_modular() const { return weight.has_value(); }
};

/// Coefficient-wise sum; precision is the smaller of the two.
QExpansion add(const QExpansion& f, const QExpansion& g);
QExpansion sub(const QExpansion& f, const QExpansion& g);
QExpansion neg(const QExpansion& f);
QExpansion scale(const QExpansion& f, const Rational& c);

/// Cauchy product. Result precision min(prec_f + ord_g, prec_g + ord_f): every
/// retained coefficient is provably unaffected by the unknown tails.
QExpansion mul(const QExpansion& f, const QExpansion& g);

/// Multiplicative inverse, ord -> -ord, prec -> prec - 2*ord, by iterative
/// coefficient solving. Throws ZeroLeadingCoefficient on a series that is zero
/// to precision.
QExpansion inv(const QExpansion& f);

/// f^n for n >= 0 by binary exponentiation; n == 0 gives 1 + O(q^{prec-ord}).
QExpansion pow(const QExpansion& f, long n);

/// Ramanujan theta operator q d/dq: coefficient of q^n picks up a factor n.
QExpansion theta(const QExpansion& f);

/// Coefficient-wise reduction mod a prime; coefficients become the residue
/// values in [0, p). Throws DenominatorNotInvertible (with the offending
/// exponent) when a retained coefficient is not p-integral.
QExpansion reduce_mod_p(const QExpansion& f, const Integer& p);

/// Forgets coefficients at exponents >= new_prec. Raising precision is not
/// possible: new_prec > prec throws OutOfPrecision.
QExpansion truncate(const QExpansion& f, long new_prec);

inline QExpansion operator+(const QExpansion& f, const QExpansion& g) { return add(f, g); }
inline QExpansion operator-(const QExpansion& f, const QExpansion& g) { return sub(f, g); }
inline QExpansion operator-(const QExpansion& f) { return neg(f); }
inline QExpansion operator*(const QExpansion& f, const QExpansion& g) { return mul(f, g); }
inline QExpansion operator*(const Rational& c, const QExpansion& f) { return scale(f, c); }

}  // namespace wholo
