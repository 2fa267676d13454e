#include <doctest.h>

#include "test_support.hpp"
#include "wholo/congruence.hpp"
#include "wholo/expr.hpp"

using namespace wholo;
using wholo_test::rand_long;

TEST_CASE("theorem parameter validation") {
    TheoremParams a = TheoremParams::p5(5, 1, 0);
    CHECK(a.k == -8);
    CHECK(a.prime_power == 5);

    TheoremParams b = TheoremParams::p5(5, 1, 1);
    CHECK(b.k == -12);

    TheoremParams c = TheoremParams::p23(2, 1, 4);
    CHECK(c.k == -6);

    TheoremParams d = TheoremParams::p23(3, 2, 6);
    CHECK(d.k == -22);
    CHECK(d.prime_power == 9);

    CHECK_THROWS_AS(TheoremParams::p5(4, 1, 0), InvalidParams);   // composite
    CHECK_THROWS_AS(TheoremParams::p5(3, 1, 0), InvalidParams);   // wrong branch
    CHECK_THROWS_AS(TheoremParams::p5(5, 0, 0), InvalidParams);
    CHECK_THROWS_AS(TheoremParams::p5(5, 1, -1), InvalidParams);
    CHECK_THROWS_AS(TheoremParams::p23(5, 1, 4), InvalidParams);  // wrong branch
    CHECK_THROWS_AS(TheoremParams::p23(2, 1, 2), InvalidParams);  // m < 4
    CHECK_THROWS_AS(TheoremParams::p23(2, 1, 5), InvalidParams);  // odd m
}

TEST_CASE("build_h weight arithmetic") {
    // p=5, t=1, r=0: h = g^5 f, weight 10 + (-8) = 2
    ModularExpansion f1 = evaluate("E4/Delta", 7);
    ModularExpansion h1 = build_h(TheoremParams::p5(5, 1, 0), f1, 7);
    CHECK(h1.weight == 2);
    CHECK(!h1.series.is_zero());
    CHECK(certify_constant_term(h1).constant_term == 0);

    // p=5, t=1, r=1: h = g^5 E4 f, weight 10 + 4 - 12 = 2
    ModularExpansion f2 = evaluate("1/Delta", 7);
    REQUIRE(f2.weight == -12);
    ModularExpansion h2 = build_h(TheoremParams::p5(5, 1, 1), f2, 7);
    CHECK(h2.weight == 2);

    // p=2, t=1, m=4: c1=1, c2=0, h = g^2 E4 f, weight 4 + 4 - 6 = 2
    ModularExpansion f3 = evaluate("E6/Delta", 7);
    REQUIRE(f3.weight == -6);
    ModularExpansion h3 = build_h(TheoremParams::p23(2, 1, 4), f3, 7);
    CHECK(h3.weight == 2);
}

TEST_CASE("build_h rejects bad inputs") {
    ModularExpansion e4 = evaluate("E4", 7);
    CHECK_THROWS_AS(build_h(TheoremParams::p5(5, 1, 0), e4, 7), WeightMismatch);

    // pole order 5 violates ord > -5
    ModularExpansion deep = evaluate("1/Delta^5", 8);
    REQUIRE(deep.weight == -60);
    TheoremParams params = TheoremParams::p5(5, 1, 13);  // k = 2 - 52 - 10 = -60
    REQUIRE(params.k == -60);
    CHECK_THROWS_AS(build_h(params, deep, 8), PoleTooDeep);

    ModularExpansion e2 = eisenstein(2, 7);  // non-modular
    CHECK_THROWS_AS(build_h(TheoremParams::p5(5, 1, 0), e2, 7), WeightMismatch);
}

TEST_CASE("g-power congruence") {
    GPowerCheck a = check_g_power_congruence(5, 1, 9);
    CHECK(a.ok);
    CHECK(!a.first_failure.has_value());

    CHECK(check_g_power_congruence(2, 1, 5).ok);
    CHECK(check_g_power_congruence(3, 2, 18).ok);   // window [-8, 9)
    CHECK(check_g_power_congruence(7, 1, 15).ok);
    CHECK(check_g_power_congruence(2, 4, 33).ok);

    CHECK_THROWS_AS(check_g_power_congruence(6, 1, 9), InvalidParams);
    CHECK_THROWS_AS(check_g_power_congruence(5, 0, 9), InvalidParams);
}

TEST_CASE("g-power leading sign is (-1)^(p^t)") {
    // odd prime: -1; p = 2: +1
    QExpansion g5 = pow(theta(j_invariant(11).series), 5);
    CHECK(g5.coeff(-5) == -1);
    QExpansion g4 = pow(theta(j_invariant(9).series), 4);
    CHECK(g4.coeff(-4) == 1);
}

TEST_CASE("main theorem at the worked example (p=5, t=1, r=0)") {
    CongruenceReport report = verify_main_theorem(TheoremParams::p5(5, 1, 0));
    CHECK(report.pass);
    CHECK(report.theorem == "1.1(1)");
    CHECK(report.k == -8);
    REQUIRE(report.forms.size() == 4);

    const FormVerification& first = report.forms[0];
    CHECK(first.ord == -1);
    CHECK(first.coeff_pt == 126745880);
    CHECK(first.residue == 0);
    CHECK(first.coeff_0 == 264);
    CHECK(first.residue_0 == 4);  // the constant term does NOT vanish mod 5
    CHECK(first.h_const == 0);
    CHECK(first.g_congruence);

    for (const auto& f : report.forms) {
        CHECK(f.residue == 0);
        CHECK(f.h_const == 0);
    }
}

TEST_CASE("main theorem (p=5, t=1, r=1) with an eta-product spot check") {
    CongruenceReport report = verify_main_theorem(TheoremParams::p5(5, 1, 1));
    CHECK(report.pass);
    CHECK(report.k == -12);
    REQUIRE(!report.forms.empty());

    // First basis member is 1/Delta; its q^5 coefficient via the independent
    // eta route must agree and must vanish mod 5.
    BasisFamily basis = wh_basis(-12, 4, 7);
    QExpansion inv_delta_eta = inv(delta_eta(9).series);
    CHECK(basis.members[0].series == truncate(inv_delta_eta, 7));
    CHECK(basis.members[0].series.coeff(5) == 1073720);
    CHECK(report.forms[0].coeff_pt == 1073720);
    CHECK(reduce_mod(Rational(1073720), Integer(5)).value() == 0);
}

TEST_CASE("main theorem (p=2, t=1, m=4) with a parity spot check") {
    CongruenceReport report = verify_main_theorem(TheoremParams::p23(2, 1, 4));
    CHECK(report.pass);
    CHECK(report.theorem == "1.1(2)");
    CHECK(report.k == -6);
    REQUIRE(report.forms.size() == 1);

    // Single basis form is E6/Delta; frozen value of its q^2 coefficient.
    CHECK(report.forms[0].coeff_pt == -682240);
    CHECK(report.forms[0].coeff_pt.get_num() % 2 == 0);
}

TEST_CASE("verdict requires every intermediate identity") {
    // The verdict condition over all swept tuples: every residue 0, every
    // h constant exactly 0, g congruence intact.
    for (long p : {5L, 7L}) {
        CongruenceReport report = verify_main_theorem(TheoremParams::p5(p, 1, 2));
        CHECK(report.pass);
        long sign_residue = (p - 1) % p;  // (-1)^(p^t) mod p for odd p
        for (const auto& f : report.forms) {
            CHECK(!f.skipped);
            CHECK(f.residue == 0);
            CHECK(f.h_const == 0);
            CHECK(f.g_congruence);
            // a_h(0) == +-a_f(p^t) mod p collapses to 0 == 0
            CHECK((sign_residue * f.residue) % p == 0);
        }
    }
}

TEST_CASE("theorem is linear in f") {
    BasisFamily basis = wh_basis(-12, 4, 7);
    REQUIRE(basis.size() >= 2);
    for (int i = 0; i < 20; ++i) {
        Rational a(rand_long(-9, 9)), b(rand_long(-9, 9));
        std::size_t i1 = static_cast<std::size_t>(rand_long(0, basis.size() - 1));
        std::size_t i2 = static_cast<std::size_t>(rand_long(0, basis.size() - 1));
        QExpansion combo = add(scale(basis.members[i1].series, a),
                               scale(basis.members[i2].series, b));
        if (combo.prec() <= 5) continue;
        CHECK(reduce_mod(combo.coeff(5), Integer(5)).value() == 0);
    }
}

TEST_CASE("jmo parameter validation mirrors the statement") {
    CHECK_THROWS_AS(JmoParams::make(5, 0, 1, 1, 1), InvalidParams);  // k = -3 odd
    CHECK_THROWS_AS(JmoParams::make(5, 1, 1, 1, 1), InvalidParams);  // k = -7 odd
    CHECK_THROWS_AS(JmoParams::make(7, 0, 1, 1, 1), InvalidParams);  // k = -5 odd
    CHECK_THROWS_AS(JmoParams::make(7, 1, 1, 1, 1), InvalidParams);  // k = -11 odd
    CHECK_THROWS_AS(JmoParams::make(5, 0, 2, 1, 1), InvalidParams);  // s = 2 excluded
    CHECK_THROWS_AS(JmoParams::make(5, 0, 0, 1, 1), InvalidParams);
    CHECK_THROWS_AS(JmoParams::make(5, 0, 4, 1, 2), InvalidParams);  // u > t
    CHECK_THROWS_AS(JmoParams::make(4, 0, 4, 1, 1), InvalidParams);
    CHECK_THROWS_AS(JmoParams::make(3, 0, 4, 1, 1), InvalidParams);  // p >= 5 only

    JmoParams ok = JmoParams::make(5, 0, 4, 1, 1);
    CHECK(ok.k == -18);
}

TEST_CASE("jmo congruence runs") {
    CongruenceReport a = verify_jmo(JmoParams::make(5, 0, 4, 1, 1));
    CHECK(a.pass);
    CHECK(a.theorem == "jmo");
    CHECK(a.k == -18);
    REQUIRE(a.forms.size() == 3);
    for (const auto& f : a.forms) {
        CHECK(f.residue_0 == 0);  // a_f(0) == 0 mod p, unlike the s = 2 case
        for (const auto& check : f.jmo_checks) CHECK(check.residue == 0);
    }
    // The shallowest-pole space {ord >= -2} of weight -18 is one-dimensional,
    // so the first basis member is E6/Delta^2 exactly: an independent route
    // to the coefficient being checked.
    BasisFamily b18 = wh_basis(-18, 4, 7);
    CHECK(b18.members[0].series == evaluate("E6/Delta^2", 7).series);
    CHECK(reduce_mod(b18.members[0].series.coeff(5), Integer(5)).value() == 0);

    CHECK(verify_jmo(JmoParams::make(7, 0, 4, 1, 1)).pass);   // k = -26
    CHECK(verify_jmo(JmoParams::make(5, 2, 4, 1, 1)).pass);   // k = -26
    BasisFamily b26 = wh_basis(-26, 6, 8);
    CHECK(b26.members[0].series == evaluate("E4*E6/Delta^3", 8).series);
}

TEST_CASE("jmo pole windows: u < t is vacuous at s >= 4, u = t is not") {
    // With s >= 4 the weight is too negative for any form with pole < p^u
    // when u < t; the hypothesis set is empty and the run passes vacuously.
    CongruenceReport shallow = verify_jmo(JmoParams::make(5, 0, 4, 2, 1));
    CHECK(shallow.pass);
    CHECK(shallow.forms.empty());

    // u = t = 2 quantifies over poles up to 24: sixteen forms, a_f(25) and
    // a_f(0) all vanish mod 5.
    CongruenceReport deep = verify_jmo(JmoParams::make(5, 0, 4, 2, 2));
    CHECK(deep.pass);
    CHECK(deep.forms.size() == 16);
    for (const auto& f : deep.forms) {
        CHECK(f.residue_0 == 0);
        REQUIRE(f.jmo_checks.size() == 1);
        CHECK(f.jmo_checks[0].v == 2);
        CHECK(f.jmo_checks[0].residue == 0);
    }
}

TEST_CASE("eisenstein congruence checks") {
    CHECK(check_eisenstein_mod_p(5, 100));
    CHECK(check_eisenstein_mod_p(7, 100));
    CHECK(check_eisenstein_mod_p(13, 50));  // E_12 has denominator 691
    CHECK_THROWS_AS(check_eisenstein_mod_p(3, 50), InvalidParams);
    CHECK_THROWS_AS(check_eisenstein_mod_p(9, 50), InvalidParams);

    CHECK(check_eisenstein_mod_24(2, 50));
    CHECK(check_eisenstein_mod_24(4, 50));
    CHECK(check_eisenstein_mod_24(14, 50));
    CHECK(check_eisenstein_mod_24(16, 50));  // non-integral coefficients
    CHECK_THROWS_AS(check_eisenstein_mod_24(3, 50), InvalidParams);
}

TEST_CASE("delta non-ordinarity residues") {
    CHECK(check_delta_nonordinary(2, 10).value() == 0);
    CHECK(check_delta_nonordinary(3, 10).value() == 0);
    CHECK(check_delta_nonordinary(5, 10).value() == 0);
    CHECK(check_delta_nonordinary(7, 10).value() == 0);
    CHECK(check_delta_nonordinary(11, 14).value() == 1);  // tau(11) = 534612
    CHECK_THROWS_AS(check_delta_nonordinary(5, 5), InvalidParams);
    CHECK_THROWS_AS(check_delta_nonordinary(4, 10), InvalidParams);
}

TEST_CASE("Eisenstein factor choice for p = 2,3 does not affect the outcome") {
    // m = 12 admits (c1, c2) = (3, 0) and (0, 2); m = 10 has a unique pair.
    TheoremParams params = TheoremParams::p23(2, 2, 12);
    REQUIRE(params.k == -18);
    BasisFamily basis = wh_basis(params.k, 3, 7);
    REQUIRE(!basis.empty());
    for (const auto& f : basis.members) {
        ModularExpansion h1 = build_h(params, f, 7, 3, 0);
        ModularExpansion h2 = build_h(params, f, 7, 0, 2);
        CHECK(certify_constant_term(h1).constant_term == 0);
        CHECK(certify_constant_term(h2).constant_term == 0);
        long common = std::min(h1.series.prec(), h2.series.prec());
        CHECK(reduce_mod_p(truncate(h1.series, common), Integer(2)) ==
              reduce_mod_p(truncate(h2.series, common), Integer(2)));
    }
    CHECK_THROWS_AS(build_h(params, basis.members[0], 7, 1, 1), InvalidParams);
}

TEST_CASE("report JSON matches the declared schema") {
    nlohmann::json main_report = verify_main_theorem(TheoremParams::p5(5, 1, 0)).to_json();
    CHECK(main_report["theorem"] == "1.1(1)");
    CHECK(main_report["p"] == 5);
    CHECK(main_report["t"] == 1);
    CHECK(main_report["r"] == 0);
    CHECK(!main_report.contains("m"));
    CHECK(main_report["k"] == -8);
    CHECK(main_report["verdict"] == "pass");
    const auto& form = main_report["forms"][0];
    CHECK(form["ord"] == -1);
    CHECK(form["coeff_pt"] == "126745880");
    CHECK(form["residue"] == 0);
    CHECK(form["h_const"] == "0");
    CHECK(form["g_congruence"] == true);
    CHECK(form["residue_0"] == 4);

    nlohmann::json p23_report = verify_main_theorem(TheoremParams::p23(2, 1, 4)).to_json();
    CHECK(p23_report["theorem"] == "1.1(2)");
    CHECK(p23_report["m"] == 4);
    CHECK(!p23_report.contains("r"));

    nlohmann::json jmo_report = verify_jmo(JmoParams::make(5, 0, 4, 1, 1)).to_json();
    CHECK(jmo_report["theorem"] == "jmo");
    CHECK(jmo_report["s"] == 4);
    CHECK(jmo_report["u"] == 1);
    CHECK(jmo_report["forms"][0].contains("checks"));
}
