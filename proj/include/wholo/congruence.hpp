#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "wholo/theta2.hpp"

namespace wholo {

/// Parameters of one main-theorem verification run. Two branches:
///   p >= 5:      k = 2 - r(p-1) - 2 p^t,  r >= 0       (Eisenstein factor E_{p-1}^r)
///   p in {2,3}:  k = 2 - 2 p^t - m,       m >= 4 even  (factor E4^c1 E6^c2, 4c1+6c2 = m)
struct TheoremParams {
    long p = 0;
    long t = 0;
    std::optional<long> r;
    std::optional<long> m;
    long k = 0;           // derived weight
    long prime_power = 0; // p^t

    static TheoremParams p5(long p, long t, long r);
    static TheoremParams p23(long p, long t, long m);

    bool is_p5() const { return r.has_value(); }
};

/// Parameters for the companion congruence with s != 2:
/// k = 2 - r(p-1) - s p^t, pole bound p^u - 1, checks a_f(p^v) for u <= v <= t
/// and a_f(0). s == 2 is rejected (that case is the main theorem's).
struct JmoParams {
    long p = 0;
    long r = 0;
    long s = 0;
    long t = 0;
    long u = 0;
    long k = 0;

    static JmoParams make(long p, long r, long s, long t, long u);
};

struct JmoCheck {
    long v = 0;
    Rational coeff;
    long residue = 0;
};

/// Per-basis-form record of one verification.
struct FormVerification {
    long ord = 0;
    bool skipped = false;
    std::string skip_reason;

    Rational coeff_pt;  // a_f(p^t)
    long residue = 0;
    Rational coeff_0;   // a_f(0), informational for the main theorem
    long residue_0 = 0;
    Rational h_const;   // exact constant term of the companion h
    bool g_congruence = false;

    std::vector<JmoCheck> jmo_checks;  // populated in jmo mode only
};

struct CongruenceReport {
    std::string theorem;  // "1.1(1)", "1.1(2)" or "jmo"
    long p = 0;
    long t = 0;
    long k = 0;
    std::optional<long> r, m, s, u;
    std::vector<FormVerification> forms;
    bool pass = false;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// The companion weight-2 form h = g^{p^t} E_{p-1}^r f (resp. g^{p^t} E4^c1 E6^c2 f)
/// with g = theta(j). Requires f of weight params.k with ord > -p^t; the result
/// is asserted to have weight exactly 2. Result precision is capped by both
/// `prec` and what f's own precision supports.
ModularExpansion build_h(const TheoremParams& params, const ModularExpansion& f, long prec);

/// Same with an explicit Eisenstein factor pair (p = 2,3 branch); any valid
/// choice with 4*c1 + 6*c2 = m yields congruent results.
ModularExpansion build_h(const TheoremParams& params, const ModularExpansion& f, long prec,
                         long c1, long c2);

struct GPowerCheck {
    bool ok = false;
    std::optional<long> first_failure;  // exponent of the first bad coefficient
};

/// Checks g^{p^t} == (-1)^{p^t} q^{-p^t} + O(q^{p^t}) (mod p) on the window
/// [-p^t+1, p^t), plus the exact leading term.
GPowerCheck check_g_power_congruence(long p, long t, long prec);

/// Runs the full main-theorem verification over wh_basis(k, p^t - 1):
/// a_f(p^t) == 0 mod p, companion h has exact zero constant term, g-power
/// congruence holds. Precision is auto-planned from the series arithmetic
/// rules; `prec` only ever raises it.
CongruenceReport verify_main_theorem(const TheoremParams& params,
                                     std::optional<long> prec = std::nullopt);

CongruenceReport verify_jmo(const JmoParams& params, std::optional<long> prec = std::nullopt);

/// E_{p-1} == 1 (mod p) up to prec, p >= 5.
bool check_eisenstein_mod_p(long p, long prec);

/// E_k == 1 (mod 24) up to prec: every non-constant coefficient is 24-integral
/// with residue 0 (coefficients of E_k are not integers for k = 12 and k >= 16,
/// but their denominators are coprime to 24).
bool check_eisenstein_mod_24(long k, long prec);

/// Residue of tau(p) = coeff(Delta, p) mod p; zero means p is non-ordinary for Delta.
Residue check_delta_nonordinary(long p, long prec);

}  // namespace wholo
