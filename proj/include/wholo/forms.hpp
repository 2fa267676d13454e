#pragma once

#include <optional>
#include <vector>

#include "wholo/qseries.hpp"

namespace wholo {

/// Echelonized family spanning the forms of one weight with bounded pole order.
/// Each member is monic at its leading exponent, and no member's leading
/// exponent occurs in another member (reduced echelon form). Weakly holomorphic
/// families are ordered by increasing pole order, holomorphic ones by
/// increasing leading exponent.
struct BasisFamily {
    long weight = 0;
    long max_pole = 0;
    std::vector<ModularExpansion> members;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
};

/// dim M_w for even w >= 0 (0 for w == 2 and odd/negative w).
long holomorphic_dimension(long w);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n. Weight metadata is k, except
/// k == 2 which is marked non-modular. Rejects odd k and k < 2.
ModularExpansion eisenstein(long k, long prec);

/// Discriminant cusp form (E4^3 - E6^2)/1728, weight 12, ord 1. prec >= 2.
ModularExpansion delta(long prec);

/// Same series as delta() through the eta product q prod (1-q^n)^24;
/// kept as an independent cross-check route. prec >= 2.
ModularExpansion delta_eta(long prec);

/// j = E4^3 / Delta, weight 0, leading term q^-1. prec >= 0.
ModularExpansion j_invariant(long prec);

/// Reduced echelon basis {q^i + O(q^d)} of the holomorphic space M_w, built
/// from Delta^m E4^a E6^b spanning forms with one member per vanishing order
/// and exact Gaussian elimination. Empty for w == 2.
BasisFamily miller_basis(long w, long prec);

/// Echelonized basis of the weakly holomorphic forms of weight k with pole
/// order at most max_pole: miller_basis(k + 12M) divided by Delta^M, members
/// with deeper poles discarded, re-reduced. An empty family is a valid result.
BasisFamily wh_basis(long k, long max_pole, long prec);

}  // namespace wholo
