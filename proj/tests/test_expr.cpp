#include <doctest.h>

#include "test_support.hpp"
#include "wholo/expr.hpp"

using namespace wholo;
using wholo_test::rand_long;

TEST_CASE("parse builds the expected trees") {
    FormExprPtr e = parse("E4/Delta");
    REQUIRE(e->kind == FormExpr::Kind::Div);
    CHECK(e->lhs->kind == FormExpr::Kind::Eisenstein);
    CHECK(e->lhs->eisenstein_k == 4);
    CHECK(e->rhs->kind == FormExpr::Kind::Delta);

    FormExprPtr f = parse("Theta(j)^5 * E4^1");
    REQUIRE(f->kind == FormExpr::Kind::Mul);
    REQUIRE(f->lhs->kind == FormExpr::Kind::Pow);
    CHECK(f->lhs->exponent == 5);
    CHECK(f->lhs->lhs->kind == FormExpr::Kind::Theta);
    CHECK(f->lhs->lhs->lhs->kind == FormExpr::Kind::J);
    REQUIRE(f->rhs->kind == FormExpr::Kind::Pow);
    CHECK(f->rhs->exponent == 1);

    FormExprPtr g = parse(" ( E4 + E6 ) * 1728 ");
    REQUIRE(g->kind == FormExpr::Kind::Mul);
    CHECK(g->lhs->kind == FormExpr::Kind::Add);
    CHECK(g->rhs->kind == FormExpr::Kind::IntLiteral);
    CHECK(g->rhs->literal == 1728);

    FormExprPtr h = parse("-Delta^2");
    REQUIRE(h->kind == FormExpr::Kind::Neg);
    CHECK(h->lhs->kind == FormExpr::Kind::Pow);

    FormExprPtr neg_pow = parse("Delta^-1");
    REQUIRE(neg_pow->kind == FormExpr::Kind::Pow);
    CHECK(neg_pow->exponent == -1);
}

TEST_CASE("precedence: products bind tighter than sums, powers tighter than products") {
    FormExprPtr e = parse("E4 + E6 * Delta^2");
    REQUIRE(e->kind == FormExpr::Kind::Add);
    REQUIRE(e->rhs->kind == FormExpr::Kind::Mul);
    CHECK(e->rhs->rhs->kind == FormExpr::Kind::Pow);

    // unary minus binds looser than ^
    FormExprPtr f = parse("-E4^2");
    REQUIRE(f->kind == FormExpr::Kind::Neg);
}

TEST_CASE("unknown generators") {
    CHECK_THROWS_AS(parse("E3"), UnknownGenerator);
    CHECK_THROWS_AS(parse("E0"), UnknownGenerator);
    CHECK_THROWS_AS(parse("E"), UnknownGenerator);
    CHECK_THROWS_AS(parse("Eisenstein"), UnknownGenerator);
    CHECK_THROWS_AS(parse("delta"), UnknownGenerator);
    CHECK_THROWS_AS(parse("x"), UnknownGenerator);
    try {
        parse("E4 + E5");
    } catch (const UnknownGenerator& e) {
        CHECK(e.offset() == 6);
    }
}

TEST_CASE("syntax errors carry 1-based offsets and expectations") {
    CHECK_THROWS_AS(parse("E4 +"), SyntaxError);
    try {
        parse("E4 +");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 5);
        CHECK(!e.expected().empty());
    }
    CHECK_THROWS_AS(parse("(E4"), SyntaxError);
    CHECK_THROWS_AS(parse("E4 5"), SyntaxError);
    CHECK_THROWS_AS(parse("Theta j"), SyntaxError);
    CHECK_THROWS_AS(parse("E4^Delta"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("E4 @ E6"), SyntaxError);
}

TEST_CASE("no implicit multiplication") {
    CHECK_THROWS_AS(parse("2 Delta"), SyntaxError);
    CHECK_THROWS_AS(parse("E4 Delta"), SyntaxError);
}

TEST_CASE("render/parse roundtrip on a generated corpus") {
    // Random expression trees, depth-bounded.
    std::function<FormExprPtr(int)> gen = [&](int depth) -> FormExprPtr {
        auto node = std::make_unique<FormExpr>();
        long pick = rand_long(0, depth <= 0 ? 4 : 10);
        switch (pick) {
            case 0: node->kind = FormExpr::Kind::Eisenstein; node->eisenstein_k = 2 * rand_long(1, 7); break;
            case 1: node->kind = FormExpr::Kind::Delta; break;
            case 2: node->kind = FormExpr::Kind::J; break;
            case 3: node->kind = FormExpr::Kind::IntLiteral; node->literal = rand_long(0, 2000); break;
            case 4: node->kind = FormExpr::Kind::Theta; node->lhs = gen(depth - 1); break;
            case 5: node->kind = FormExpr::Kind::Neg; node->lhs = gen(depth - 1); break;
            case 6: node->kind = FormExpr::Kind::Pow; node->lhs = gen(depth - 1);
                    node->exponent = rand_long(-4, 4); break;
            default: {
                constexpr FormExpr::Kind kinds[] = {FormExpr::Kind::Add, FormExpr::Kind::Sub,
                                                    FormExpr::Kind::Mul, FormExpr::Kind::Div};
                node->kind = kinds[pick - 7];
                node->lhs = gen(depth - 1);
                node->rhs = gen(depth - 1);
                break;
            }
        }
        return node;
    };

    for (int i = 0; i < 50; ++i) {
        FormExprPtr e = gen(4);
        std::string text = render(*e);
        CAPTURE(text);
        FormExprPtr reparsed = parse(text);
        CHECK(render(*reparsed) == text);
    }

    CHECK(render(*parse("E4/Delta")) == "E4/Delta");
    CHECK(render(*parse("Theta(j)^5*E4^1")) == "Theta(j)^5*E4^1");
    CHECK(render(*parse("(E4+E6)*(E4-E6)")) == "(E4 + E6)*(E4 - E6)");
}

TEST_CASE("weight inference") {
    CHECK(infer_weight(*parse("E4/Delta")).weight == -8);
    CHECK(infer_weight(*parse("Theta(j)")).weight == 2);
    CHECK(infer_weight(*parse("E4^3/Delta - j")).weight == 0);
    CHECK(infer_weight(*parse("Delta^-1")).weight == -12);
    CHECK(infer_weight(*parse("1728")).weight == 0);
    CHECK(infer_weight(*parse("Theta(Theta(j))")).weight == std::nullopt);

    WeightInfo mismatch = infer_weight(*parse("E4 + E6"));
    CHECK(mismatch.weight == std::nullopt);
    CHECK(!mismatch.diagnostics.empty());

    // E2 is rejected by weight-checked products
    CHECK(infer_weight(*parse("E2")).weight == std::nullopt);
    CHECK(infer_weight(*parse("E2*E4")).weight == std::nullopt);
}

TEST_CASE("evaluate reproduces the worked expansion") {
    ModularExpansion f = evaluate("E4/Delta", 6);
    CHECK(f.weight == -8);
    CHECK(f.series.ord() == -1);
    CHECK(f.series.prec() == 6);
    CHECK(f.series.coeff(0) == 264);
    CHECK(f.series.coeff(1) == 8244);
    CHECK(f.series.coeff(5) == 126745880);
}

TEST_CASE("evaluate basics") {
    ModularExpansion one = evaluate("1", 5);
    CHECK(one.series == QExpansion::monomial(Rational(1), 0, 5));
    CHECK(one.weight == 0);

    ModularExpansion zero = evaluate("E4^3/Delta - j", 5);
    CHECK(zero.series.is_zero());
    CHECK(zero.series.prec() == 5);

    ModularExpansion dinv = evaluate("Delta^-1", 5);
    CHECK(dinv.series == truncate(inv(delta(7).series), 5));

    ModularExpansion d = evaluate("(E4^3 - E6^2)/1728", 6);
    CHECK(d.series == delta(6).series);

    ModularExpansion e2 = evaluate("E2", 4);
    CHECK(e2.weight == std::nullopt);
    CHECK(e2.series.coeff(1) == -24);

    CHECK_THROWS_AS(evaluate("1/(E4 - E4)", 5), ZeroLeadingCoefficient);
}

TEST_CASE("evaluate precision soundness and weight agreement") {
    const char* exprs[] = {"E4/Delta",       "Theta(j)^3",        "j^2 - 1488*j",
                           "E14/Delta",      "(E4 + E6)*Delta",   "Theta(j^2)/E4",
                           "Delta^-2*E4^5",  "E6^2/Delta - E4^3/Delta"};
    for (const char* text : exprs) {
        ModularExpansion hi = evaluate(text, 25);
        ModularExpansion lo = evaluate(text, 11);
        CAPTURE(text);
        CHECK(lo.series == truncate(hi.series, 11));
        CHECK(lo.weight == infer_weight(*parse(text)).weight);
    }
}
