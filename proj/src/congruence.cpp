#include "wholo/congruence.hpp"

#include <algorithm>

namespace wholo {

namespace {

long checked_prime_power(long p, long t) {
    long pt = 1;
    for (long i = 0; i < t; ++i) {
        pt *= p;
        if (pt > 1'000'000) throw InvalidParams("p^t too large for a verification run");
    }
    return pt;
}

long residue_value(const Rational& x, long p) {
    return static_cast<long>(reduce_mod(x, Integer(p)).value().get_si());
}

bool p_integral(const QExpansion& s, long p) {
    for (const auto& c : s.coeffs()) {
        if (c.get_den() % p == 0) return false;
    }
    return true;
}

// (c1, c2) with 4*c1 + 6*c2 = m, smallest c2 in {0, 1}.
std::pair<long, long> choose_eisenstein_split(long m) {
    long c2 = (m % 4 == 0) ? 0 : 1;
    long c1 = (m - 6 * c2) / 4;
    return {c1, c2};
}

QExpansion theta_j(long prec) {
    return theta(j_invariant(prec).series);
}

}  // namespace

TheoremParams TheoremParams::p5(long p, long t, long r) {
    if (p < 5 || !is_prime(Integer(p))) {
        throw InvalidParams("main theorem (p >= 5 branch): p = " + std::to_string(p) +
                            " must be a prime >= 5");
    }
    if (t < 1) throw InvalidParams("main theorem: t must be positive");
    if (r < 0) throw InvalidParams("main theorem: r must be >= 0");
    TheoremParams params;
    params.p = p;
    params.t = t;
    params.r = r;
    params.prime_power = checked_prime_power(p, t);
    params.k = 2 - r * (p - 1) - 2 * params.prime_power;
    return params;
}

TheoremParams TheoremParams::p23(long p, long t, long m) {
    if (p != 2 && p != 3) {
        throw InvalidParams("main theorem (p = 2,3 branch): p must be 2 or 3");
    }
    if (t < 1) throw InvalidParams("main theorem: t must be positive");
    if (m < 4 || m % 2 != 0) {
        throw InvalidParams("main theorem: m must be even and >= 4, got " + std::to_string(m));
    }
    TheoremParams params;
    params.p = p;
    params.t = t;
    params.m = m;
    params.prime_power = checked_prime_power(p, t);
    params.k = 2 - 2 * params.prime_power - m;
    return params;
}

JmoParams JmoParams::make(long p, long r, long s, long t, long u) {
    if (p < 5 || !is_prime(Integer(p))) {
        throw InvalidParams("jmo: p = " + std::to_string(p) + " must be a prime >= 5");
    }
    if (r < 0) throw InvalidParams("jmo: r must be >= 0");
    if (s == 2) {
        throw InvalidParams("jmo: s = 2 is excluded; use the main-theorem mode for that case");
    }
    if (s < 1) throw InvalidParams("jmo: s must be >= 1");
    if (t < 1) throw InvalidParams("jmo: t must be positive");
    if (u < 1 || u > t) throw InvalidParams("jmo: need 1 <= u <= t");
    JmoParams params;
    params.p = p;
    params.r = r;
    params.s = s;
    params.t = t;
    params.u = u;
    long pt = checked_prime_power(p, t);
    params.k = 2 - r * (p - 1) - s * pt;
    if (params.k % 2 != 0) {
        throw InvalidParams("jmo: derived weight k = " + std::to_string(params.k) +
                            " is odd; no even-weight family exists for these parameters");
    }
    return params;
}

ModularExpansion build_h(const TheoremParams& params, const ModularExpansion& f, long prec) {
    if (params.is_p5()) return build_h(params, f, prec, -1, -1);
    auto [c1, c2] = choose_eisenstein_split(*params.m);
    return build_h(params, f, prec, c1, c2);
}

ModularExpansion build_h(const TheoremParams& params, const ModularExpansion& f, long prec,
                         long c1, long c2) {
    if (!f.weight) {
        throw WeightMismatch("build_h: input form is not modular");
    }
    if (*f.weight != params.k) {
        throw WeightMismatch("build_h: form has weight " + std::to_string(*f.weight) +
                             ", parameters require " + std::to_string(params.k));
    }
    long pt = params.prime_power;
    const QExpansion& s = f.series;
    if (s.is_zero()) return {QExpansion::zero(s.prec() - pt), 2};
    if (s.ord() <= -pt) {
        throw PoleTooDeep("build_h: ord = " + std::to_string(s.ord()) +
                          " violates ord > " + std::to_string(-pt));
    }

    long eisenstein_weight;
    if (params.is_p5()) {
        eisenstein_weight = *params.r * (params.p - 1);
    } else {
        if (c1 < 0 || c2 < 0 || 4 * c1 + 6 * c2 != *params.m) {
            throw InvalidParams("build_h: need c1, c2 >= 0 with 4*c1 + 6*c2 = m");
        }
        eisenstein_weight = *params.m;
    }
    // Weight bookkeeping must land exactly on 2.
    if (2 * pt + eisenstein_weight + params.k != 2) {
        throw Error("build_h: weight arithmetic did not produce 2");
    }

    long pole = -s.ord();
    long target = std::min(prec, s.prec() - pt);
    long work = std::max(target, 1L) + pole + pt + 1;

    QExpansion gp = pow(theta_j(work), pt);
    QExpansion factor;
    if (params.is_p5()) {
        factor = pow(eisenstein(params.p - 1, work).series, *params.r);
    } else {
        factor = mul(pow(eisenstein(4, work).series, c1), pow(eisenstein(6, work).series, c2));
    }
    QExpansion h = mul(mul(gp, factor), s);
    if (h.prec() > target) h = truncate(h, target);
    return {h, 2};
}

GPowerCheck check_g_power_congruence(long p, long t, long prec) {
    if (!is_prime(Integer(p))) {
        throw InvalidParams("check_g_power_congruence: p must be prime");
    }
    if (t < 1) throw InvalidParams("check_g_power_congruence: t must be positive");
    long pt = checked_prime_power(p, t);
    long work = std::max(prec, 2 * pt + 1);

    QExpansion gp = pow(theta_j(work), pt);
    long sign = (pt % 2 == 0) ? 1 : -1;
    QExpansion diff = sub(gp, QExpansion::monomial(Rational(sign), -pt, gp.prec()));

    GPowerCheck result{true, std::nullopt};
    for (long e = -pt; e < pt; ++e) {
        if (residue_value(diff.coeff(e), p) != 0) {
            result.ok = false;
            result.first_failure = e;
            break;
        }
    }
    return result;
}

namespace {

CongruenceReport run_main_theorem(const TheoremParams& params, std::optional<long> prec) {
    long pt = params.prime_power;
    long fprec = std::max(prec.value_or(0), pt + 1);

    CongruenceReport report;
    report.theorem = params.is_p5() ? "1.1(1)" : "1.1(2)";
    report.p = params.p;
    report.t = params.t;
    report.k = params.k;
    report.r = params.r;
    report.m = params.m;

    GPowerCheck gcheck = check_g_power_congruence(params.p, params.t, 2 * pt + 1);

    BasisFamily basis = wh_basis(params.k, pt - 1, fprec);
    bool all_ok = gcheck.ok;
    long sign = (pt % 2 == 0) ? 1 : -1;

    for (const auto& f : basis.members) {
        FormVerification check;
        check.ord = f.series.ord();
        if (!p_integral(f.series, params.p)) {
            check.skipped = true;
            check.skip_reason = "coefficients are not " + std::to_string(params.p) + "-integral";
            report.forms.push_back(std::move(check));
            continue;
        }

        check.coeff_pt = f.series.coeff(pt);
        check.residue = residue_value(check.coeff_pt, params.p);
        check.coeff_0 = f.series.coeff(0);
        check.residue_0 = residue_value(check.coeff_0, params.p);
        check.g_congruence = gcheck.ok;

        try {
            ModularExpansion h = build_h(params, f, fprec);
            check.h_const = certify_constant_term(h).constant_term;
        } catch (const ConstantTermNonzero& err) {
            Rational bad(err.constant_term());
            bad.canonicalize();
            check.h_const = bad;
        }

        // a_h(0) == sign * a_f(p^t) mod p; with a_h(0) = 0 this is the theorem.
        long lhs = residue_value(check.h_const, params.p);
        long rhs = ((sign * check.residue) % params.p + params.p) % params.p;
        if (lhs != rhs || check.residue != 0 || check.h_const != 0) all_ok = false;

        report.forms.push_back(std::move(check));
    }

    report.pass = all_ok;
    return report;
}

}  // namespace

CongruenceReport verify_main_theorem(const TheoremParams& params, std::optional<long> prec) {
    return run_main_theorem(params, prec);
}

CongruenceReport verify_jmo(const JmoParams& params, std::optional<long> prec) {
    long pt = checked_prime_power(params.p, params.t);
    long pu = checked_prime_power(params.p, params.u);
    long fprec = std::max(prec.value_or(0), pt + 1);

    CongruenceReport report;
    report.theorem = "jmo";
    report.p = params.p;
    report.t = params.t;
    report.k = params.k;
    report.r = params.r;
    report.s = params.s;
    report.u = params.u;

    BasisFamily basis = wh_basis(params.k, pu - 1, fprec);
    bool all_ok = true;

    for (const auto& f : basis.members) {
        FormVerification check;
        check.ord = f.series.ord();
        if (!p_integral(f.series, params.p)) {
            check.skipped = true;
            check.skip_reason = "coefficients are not " + std::to_string(params.p) + "-integral";
            report.forms.push_back(std::move(check));
            continue;
        }

        check.coeff_0 = f.series.coeff(0);
        check.residue_0 = residue_value(check.coeff_0, params.p);
        if (check.residue_0 != 0) all_ok = false;

        long pv = pu;
        for (long v = params.u; v <= params.t; ++v) {
            JmoCheck jc;
            jc.v = v;
            jc.coeff = f.series.coeff(pv);
            jc.residue = residue_value(jc.coeff, params.p);
            if (jc.residue != 0) all_ok = false;
            check.jmo_checks.push_back(std::move(jc));
            pv *= params.p;
        }
        report.forms.push_back(std::move(check));
    }

    report.pass = all_ok;
    return report;
}

bool check_eisenstein_mod_p(long p, long prec) {
    if (p < 5 || !is_prime(Integer(p))) {
        throw InvalidParams("check_eisenstein_mod_p: p must be a prime >= 5");
    }
    QExpansion e = eisenstein(p - 1, prec).series;
    for (long n = 1; n < prec; ++n) {
        if (residue_value(e.coeff(n), p) != 0) return false;
    }
    return true;
}

bool check_eisenstein_mod_24(long k, long prec) {
    if (k < 2 || k % 2 != 0) {
        throw InvalidParams("check_eisenstein_mod_24: k must be even and >= 2");
    }
    QExpansion e = eisenstein(k, prec).series;
    const Integer modulus(24);
    for (long n = 1; n < prec; ++n) {
        Rational c = e.coeff(n);
        Integer den_inv;
        if (mpz_invert(den_inv.get_mpz_t(), c.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0) {
            return false;  // denominator shares a factor with 24
        }
        Integer residue;
        Integer num = c.get_num() * den_inv;
        mpz_mod(residue.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
        if (residue != 0) return false;
    }
    return true;
}

Residue check_delta_nonordinary(long p, long prec) {
    if (!is_prime(Integer(p))) {
        throw InvalidParams("check_delta_nonordinary: p must be prime");
    }
    if (prec <= p) throw InvalidParams("check_delta_nonordinary: need prec > p");
    QExpansion d = delta(prec).series;
    return reduce_mod(d.coeff(p), Integer(p));
}

namespace {

nlohmann::json form_to_json(const FormVerification& f, bool jmo) {
    nlohmann::json obj;
    obj["ord"] = f.ord;
    if (f.skipped) {
        obj["skipped"] = true;
        obj["reason"] = f.skip_reason;
        return obj;
    }
    obj["coeff_0"] = to_string(f.coeff_0);
    obj["residue_0"] = f.residue_0;
    if (jmo) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& jc : f.jmo_checks) {
            checks.push_back({{"v", jc.v}, {"coeff", to_string(jc.coeff)}, {"residue", jc.residue}});
        }
        obj["checks"] = std::move(checks);
    } else {
        obj["coeff_pt"] = to_string(f.coeff_pt);
        obj["residue"] = f.residue;
        obj["h_const"] = to_string(f.h_const);
        obj["g_congruence"] = f.g_congruence;
    }
    return obj;
}

}  // namespace

nlohmann::json CongruenceReport::to_json() const {
    nlohmann::json obj;
    obj["theorem"] = theorem;
    obj["p"] = p;
    obj["t"] = t;
    if (r) obj["r"] = *r;
    if (m) obj["m"] = *m;
    if (s) obj["s"] = *s;
    if (u) obj["u"] = *u;
    obj["k"] = k;
    nlohmann::json form_list = nlohmann::json::array();
    for (const auto& f : forms) form_list.push_back(form_to_json(f, theorem == "jmo"));
    obj["forms"] = std::move(form_list);
    obj["verdict"] = pass ? "pass" : "fail";
    return obj;
}

std::string CongruenceReport::to_text() const {
    std::string out = "theorem " + theorem + ": p=" + std::to_string(p) +
                      " t=" + std::to_string(t);
    if (r) out += " r=" + std::to_string(*r);
    if (m) out += " m=" + std::to_string(*m);
    if (s) out += " s=" + std::to_string(*s);
    if (u) out += " u=" + std::to_string(*u);
    out += " k=" + std::to_string(k) + "\n";
    for (const auto& f : forms) {
        out += "  form ord=" + std::to_string(f.ord) + ": ";
        if (f.skipped) {
            out += "skipped (" + f.skip_reason + ")\n";
            continue;
        }
        if (theorem == "jmo") {
            out += "a_f(0)=" + to_string(f.coeff_0) + " residue=" + std::to_string(f.residue_0);
            for (const auto& jc : f.jmo_checks) {
                out += ", a_f(p^" + std::to_string(jc.v) + ")=" + to_string(jc.coeff) +
                       " residue=" + std::to_string(jc.residue);
            }
        } else {
            out += "a_f(p^t)=" + to_string(f.coeff_pt) + " residue=" + std::to_string(f.residue) +
                   ", a_f(0)=" + to_string(f.coeff_0) + " residue=" + std::to_string(f.residue_0) +
                   ", h_const=" + to_string(f.h_const) +
                   ", g_congruence=" + (f.g_congruence ? "true" : "false");
        }
        out += "\n";
    }
    out += "verdict: ";
    out += pass ? "pass" : "fail";
    out += "\n";
    return out;
}

}  // namespace wholo
