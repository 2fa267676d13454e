#include "wholo/qseries.hpp"

#include <algorithm>
#include <cstddef>

namespace wholo {

QExpansion QExpansion::zero(long prec) {
    return QExpansion(prec, prec, {});
}

QExpansion QExpansion::monomial(const Rational& c, long exp, long prec) {
    if (c == 0 || exp >= prec) return zero(prec);
    std::vector<Rational> coeffs(static_cast<std::size_t>(prec - exp), Rational(0));
    coeffs[0] = c;
    return QExpansion(exp, prec, std::move(coeffs));
}

QExpansion QExpansion::from_coeffs(long ord, std::vector<Rational> coeffs) {
    long prec = ord + static_cast<long>(coeffs.size());
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    if (lead == coeffs.size()) return zero(prec);
    if (lead > 0) {
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        ord += static_cast<long>(lead);
    }
    return QExpansion(ord, prec, std::move(coeffs));
}

Rational QExpansion::coeff(long n) const {
    if (n >= prec_) {
        throw OutOfPrecision("coefficient of q^" + std::to_string(n) +
                             " is beyond the known precision O(q^" +
                             std::to_string(prec_) + ")", n);
    }
    if (n < ord_) return Rational(0);
    return coeffs_[static_cast<std::size_t>(n - ord_)];
}

QExpansion add(const QExpansion& f, const QExpansion& g) {
    long prec = std::min(f.prec(), g.prec());
    long lo = std::min(f.ord(), g.ord());
    lo = std::min(lo, prec);
    std::vector<Rational> out(static_cast<std::size_t>(prec - lo), Rational(0));
    auto accumulate = [&](const QExpansion& s, int sign) {
        const auto& c = s.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            long e = s.ord() + static_cast<long>(i);
            if (e >= prec) break;
            if (sign > 0)
                out[static_cast<std::size_t>(e - lo)] += c[i];
            else
                out[static_cast<std::size_t>(e - lo)] -= c[i];
        }
    };
    accumulate(f, +1);
    accumulate(g, +1);
    return QExpansion::from_coeffs(lo, std::move(out));
}

QExpansion neg(const QExpansion& f) {
    std::vector<Rational> out(f.coeffs());
    for (auto& c : out) c = -c;
    return QExpansion::from_coeffs(f.ord(), std::move(out));
}

QExpansion sub(const QExpansion& f, const QExpansion& g) {
    return add(f, neg(g));
}

QExpansion scale(const QExpansion& f, const Rational& c) {
    if (c == 0) return QExpansion::zero(f.prec());
    std::vector<Rational> out(f.coeffs());
    for (auto& x : out) x *= c;
    return QExpansion::from_coeffs(f.ord(), std::move(out));
}

QExpansion mul(const QExpansion& f, const QExpansion& g) {
    long prec = std::min(f.prec() + g.ord(), g.prec() + f.ord());
    long ord = f.ord() + g.ord();
    long len = prec - ord;  // == min of the two coefficient lengths
    if (len <= 0) return QExpansion::zero(prec);

    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Rational> out(static_cast<std::size_t>(len), Rational(0));
    std::size_t imax = std::min(a.size(), static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < imax; ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size(), static_cast<std::size_t>(len) - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return QExpansion::from_coeffs(ord, std::move(out));
}

QExpansion inv(const QExpansion& f) {
    if (f.is_zero()) {
        throw ZeroLeadingCoefficient("cannot invert a series that is zero to precision O(q^" +
                                     std::to_string(f.prec()) + ")");
    }
    const auto& a = f.coeffs();
    std::size_t len = a.size();
    std::vector<Rational> b(len, Rational(0));
    Rational lead_inv = Rational(1) / a[0];
    b[0] = lead_inv;
    for (std::size_t m = 1; m < len; ++m) {
        Rational acc(0);
        for (std::size_t i = 1; i <= m; ++i) acc += a[i] * b[m - i];
        b[m] = -acc * lead_inv;
    }
    return QExpansion::from_coeffs(-f.ord(), std::move(b));
}

QExpansion pow(const QExpansion& f, long n) {
    if (n < 0) throw InvalidParams("pow: negative exponent (invert first)");
    if (n == 0) {
        return QExpansion::monomial(Rational(1), 0, f.prec() - f.ord());
    }
    QExpansion base = f;
    QExpansion result;
    bool have_result = false;
    while (n > 0) {
        if (n & 1) {
            result = have_result ? mul(result, base) : base;
            have_result = true;
        }
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

QExpansion theta(const QExpansion& f) {
    std::vector<Rational> out(f.coeffs());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= Rational(f.ord() + static_cast<long>(i));
    }
    return QExpansion::from_coeffs(f.ord(), std::move(out));
}

QExpansion reduce_mod_p(const QExpansion& f, const Integer& p) {
    if (!is_prime(p)) {
        throw InvalidParams("reduce_mod_p: modulus " + p.get_str() + " is not prime");
    }
    std::vector<Rational> out;
    out.reserve(f.coeffs().size());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        long e = f.ord() + static_cast<long>(i);
        try {
            out.emplace_back(reduce_mod(f.coeffs()[i], p).value());
        } catch (const DenominatorNotInvertible& err) {
            throw DenominatorNotInvertible(std::string(err.what()) + " (coefficient of q^" +
                                           std::to_string(e) + ")", e);
        }
    }
    return QExpansion::from_coeffs(f.ord(), std::move(out));
}

QExpansion truncate(const QExpansion& f, long new_prec) {
    if (new_prec > f.prec()) {
        throw OutOfPrecision("cannot extend precision O(q^" + std::to_string(f.prec()) +
                             ") to O(q^" + std::to_string(new_prec) + ")", new_prec);
    }
    if (new_prec <= f.ord()) return QExpansion::zero(new_prec);
    std::vector<Rational> out(f.coeffs().begin(),
                              f.coeffs().begin() + static_cast<std::ptrdiff_t>(new_prec - f.ord()));
    return QExpansion::from_coeffs(f.ord(), std::move(out));
}

namespace {

std::string exponent_text(long e) {
    if (e == 1) return "q";
    return "q^" + std::to_string(e);
}

}  // namespace

std::string QExpansion::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        long e = ord_ + static_cast<long>(i);
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (e == 0) {
            term = to_string(mag);
        } else if (mag == 1) {
            term = exponent_text(e);
        } else {
            term = to_string(mag) + "*" + exponent_text(e);
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    if (!out.empty()) out += " + ";
    out += "O(q^" + std::to_string(prec_) + ")";
    return out;
}

nlohmann::json QExpansion::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : coeffs_) coeffs.push_back(to_string(c));
    return nlohmann::json{{"ord", ord_}, {"prec", prec_}, {"coeffs", std::move(coeffs)}};
}

}  // namespace wholo
