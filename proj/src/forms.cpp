#include "wholo/forms.hpp"

#include <algorithm>

namespace wholo {

namespace {

long ceil_div(long a, long b) {
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

long holomorphic_dimension(long w) {
    if (w < 0 || w % 2 != 0) return 0;
    if (w % 12 == 2) return w / 12;
    return w / 12 + 1;
}

ModularExpansion eisenstein(long k, long prec) {
    if (k < 2 || k % 2 != 0) {
        throw InvalidParams("eisenstein: weight must be even and >= 2, got " + std::to_string(k));
    }
    std::optional<long> weight;
    if (k != 2) weight = k;  // E2 is only quasi-modular
    if (prec <= 0) return {QExpansion::zero(prec), weight};

    Rational factor = Rational(-2 * k) / bernoulli(k);
    std::vector<Rational> coeffs(static_cast<std::size_t>(prec));
    coeffs[0] = 1;
    for (long n = 1; n < prec; ++n) {
        coeffs[static_cast<std::size_t>(n)] = factor * Rational(sigma(k - 1, n));
    }
    return {QExpansion::from_coeffs(0, std::move(coeffs)), weight};
}

ModularExpansion delta(long prec) {
    if (prec < 2) throw InvalidParams("delta: need prec >= 2");
    QExpansion e4 = eisenstein(4, prec).series;
    QExpansion e6 = eisenstein(6, prec).series;
    QExpansion d = scale(sub(pow(e4, 3), pow(e6, 2)), Rational(1, 1728));
    return {d, 12};
}

ModularExpansion delta_eta(long prec) {
    if (prec < 2) throw InvalidParams("delta_eta: need prec >= 2");
    long len = prec - 1;  // relative length of the eta^24 part
    std::vector<Rational> euler(static_cast<std::size_t>(len), Rational(0));
    euler[0] = 1;
    for (long n = 1; n < len; ++n) {
        // multiply by (1 - q^n) in place
        for (long i = len - 1; i >= n; --i) {
            euler[static_cast<std::size_t>(i)] -= euler[static_cast<std::size_t>(i - n)];
        }
    }
    QExpansion e24 = pow(QExpansion::from_coeffs(0, std::move(euler)), 24);
    QExpansion d = mul(QExpansion::monomial(Rational(1), 1, len + 1), e24);
    return {d, 12};
}

ModularExpansion j_invariant(long prec) {
    if (prec < 0) throw InvalidParams("j_invariant: need prec >= 0");
    long work = prec + 2;
    QExpansion e4cubed = pow(eisenstein(4, work).series, 3);
    QExpansion j = mul(e4cubed, inv(delta(work).series));
    return {truncate(j, prec), 0};
}

BasisFamily miller_basis(long w, long prec) {
    if (w < 0 || w % 2 != 0) {
        throw InvalidParams("miller_basis: weight must be even and >= 0, got " + std::to_string(w));
    }
    long d = holomorphic_dimension(w);
    BasisFamily family{w, 0, {}};
    if (d == 0) return family;

    long work = std::max(prec, d + 1);
    QExpansion e4 = eisenstein(4, work).series;
    QExpansion e6 = eisenstein(6, work).series;
    QExpansion dser = delta(work).series;

    // One spanning form per vanishing order m: Delta^m E4^a E6^b with
    // 4a + 6b = w - 12m, b in {0,1} fixed by (w - 12m) mod 4.
    std::vector<QExpansion> members;
    members.reserve(static_cast<std::size_t>(d));
    for (long m = 0; m < d; ++m) {
        long rem = w - 12 * m;
        long b = (rem % 4 == 0) ? 0 : 1;
        long a = (rem - 6 * b) / 4;
        QExpansion s = pow(e4, a);
        if (b) s = mul(s, e6);
        if (m > 0) s = mul(s, pow(dser, m));
        members.push_back(truncate(s, work));
    }

    // Exact Gaussian elimination to reduced echelon form; every pivot
    // coefficient is already 1.
    for (long i = d - 2; i >= 0; --i) {
        for (long j = i + 1; j < d; ++j) {
            Rational c = members[static_cast<std::size_t>(i)].coeff(j);
            if (c != 0) {
                members[static_cast<std::size_t>(i)] =
                    sub(members[static_cast<std::size_t>(i)],
                        scale(members[static_cast<std::size_t>(j)], c));
            }
        }
    }

    for (auto& s : members) {
        family.members.push_back({truncate(s, prec), w});
    }
    return family;
}

BasisFamily wh_basis(long k, long max_pole, long prec) {
    if (k % 2 != 0) {
        throw InvalidParams("wh_basis: weight must be even, got " + std::to_string(k));
    }
    if (max_pole < 0) throw InvalidParams("wh_basis: max_pole must be >= 0");

    long M = std::max({max_pole, ceil_div(-k, 12), 0L});
    if (k + 12 * M == 2) ++M;
    long w = k + 12 * M;
    long d = holomorphic_dimension(w);

    long target = std::max({prec, d - M, 1L});
    BasisFamily holo = miller_basis(w, target + M);

    std::vector<QExpansion> members;
    if (M == 0) {
        for (auto& f : holo.members) members.push_back(truncate(f.series, target));
    } else {
        QExpansion dinv = inv(pow(delta(target + M + 1).series, M));  // ord -M, prec target
        for (auto& f : holo.members) {
            QExpansion g = mul(f.series, dinv);
            if (g.ord() < -max_pole) continue;  // deeper pole than the hypothesis allows
            members.push_back(g);
        }
    }

    // Second reduction pass: clear every member's coefficients at the later
    // pivot exponents so the family is reduced echelon again.
    long n = static_cast<long>(members.size());
    for (long i = n - 2; i >= 0; --i) {
        for (long j = i + 1; j < n; ++j) {
            long pivot = members[static_cast<std::size_t>(j)].ord();
            if (pivot >= members[static_cast<std::size_t>(i)].prec()) continue;
            Rational c = members[static_cast<std::size_t>(i)].coeff(pivot);
            if (c != 0) {
                members[static_cast<std::size_t>(i)] =
                    sub(members[static_cast<std::size_t>(i)],
                        scale(members[static_cast<std::size_t>(j)], c));
            }
        }
    }

    // Increasing pole order; holomorphic members by increasing leading exponent.
    std::sort(members.begin(), members.end(), [](const QExpansion& a, const QExpansion& b) {
        long pa = std::max(0L, -a.ord()), pb = std::max(0L, -b.ord());
        if (pa != pb) return pa < pb;
        return a.ord() < b.ord();
    });

    BasisFamily family{k, max_pole, {}};
    for (auto& s : members) family.members.push_back({truncate(s, prec), k});
    return family;
}

}  // namespace wholo
