#include "wholo/theta2.hpp"

#include <algorithm>

namespace wholo {

JPolynomial::JPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational JPolynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

std::string JPolynomial::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (i == 0) {
            term = to_string(mag);
        } else {
            std::string x = (i == 1) ? "x" : "x^" + std::to_string(i);
            term = (mag == 1) ? x : to_string(mag) + "*" + x;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

nlohmann::json JPolynomial::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : coeffs_) coeffs.push_back(to_string(c));
    return nlohmann::json{{"coeffs", std::move(coeffs)}};
}

JPolynomial decompose_weight2(const ModularExpansion& f) {
    if (!f.weight || *f.weight != 2) {
        throw WeightMismatch("decompose_weight2: input must have weight 2");
    }
    const QExpansion& s = f.series;
    if (s.prec() < 1) {
        throw OutOfPrecision("decompose_weight2: constant term must be within precision", 0);
    }
    if (s.is_zero()) return JPolynomial{};
    if (s.ord() >= 0) {
        throw NotInSpan("decompose_weight2: a nonzero weight-2 form must have a pole "
                        "(input has ord " + std::to_string(s.ord()) + ")");
    }

    long d = -s.ord();
    long target = s.prec();
    long work = target + d + 2;

    QExpansion base = mul(eisenstein(14, work).series, inv(delta(work).series));
    QExpansion jser = j_invariant(target + d).series;

    // j^m * base has leading term q^{-(m+1)} with coefficient 1; eliminate the
    // deepest remaining pole term greedily.
    std::vector<QExpansion> terms;
    terms.reserve(static_cast<std::size_t>(d));
    QExpansion jpow = QExpansion::monomial(Rational(1), 0, target + d + 1);
    for (long m = 0; m < d; ++m) {
        if (m > 0) jpow = mul(jpow, jser);
        terms.push_back(mul(jpow, base));
    }

    std::vector<Rational> p(static_cast<std::size_t>(d), Rational(0));
    QExpansion r = s;
    for (long m = d - 1; m >= 0; --m) {
        Rational c = r.coeff(-(m + 1));
        if (c != 0) {
            p[static_cast<std::size_t>(m)] = c;
            r = sub(r, scale(terms[static_cast<std::size_t>(m)], c));
        }
    }
    if (!r.is_zero()) {
        throw NotInSpan("decompose_weight2: remainder has nonzero coefficient at q^" +
                        std::to_string(r.ord()) + "; input is not in P(j)*E14/Delta");
    }
    return JPolynomial(std::move(p));
}

JPolynomial antiderivative_in_j(const JPolynomial& p) {
    if (p.is_zero()) return JPolynomial{};
    std::vector<Rational> q(static_cast<std::size_t>(p.degree()) + 2, Rational(0));
    for (long i = 0; i <= p.degree(); ++i) {
        q[static_cast<std::size_t>(i + 1)] = -p.coeff(i) / Rational(i + 1);
    }
    return JPolynomial(std::move(q));
}

ModularExpansion eval_j_polynomial(const JPolynomial& p, long prec) {
    if (p.is_zero()) return {QExpansion::zero(prec), 0};
    long d = p.degree();
    long pad = d + 2;
    for (int attempt = 0; attempt < 64; ++attempt) {
        QExpansion jser = j_invariant(prec + pad).series;
        QExpansion acc = QExpansion::monomial(p.coeff(d), 0, prec + pad + d + 1);
        for (long i = d - 1; i >= 0; --i) {
            acc = mul(acc, jser);
            acc = add(acc, QExpansion::monomial(p.coeff(i), 0, acc.prec()));
        }
        if (acc.prec() >= prec) return {truncate(acc, prec), 0};
        pad += (prec - acc.prec()) + 2;
    }
    throw Error("eval_j_polynomial: precision retry failed to converge");
}

Weight2Certificate certify_constant_term(const ModularExpansion& f) {
    JPolynomial p = decompose_weight2(f);
    JPolynomial q = antiderivative_in_j(p);

    // theta(Q(j)) must reproduce f on the whole known window.
    QExpansion recon = theta(eval_j_polynomial(q, f.series.prec()).series);
    if (truncate(recon, f.series.prec()) != f.series) {
        throw Error("certify_constant_term: reconstruction does not match input");
    }

    Rational constant = f.series.coeff(0);
    if (constant != 0) {
        throw ConstantTermNonzero("certify_constant_term: weight-2 form has constant term " +
                                  to_string(constant), to_string(constant));
    }
    return {std::move(q), std::move(constant)};
}

}  // namespace wholo
