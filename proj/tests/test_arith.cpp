#include <doctest.h>

#include <vector>

#include "test_support.hpp"
#include "wholo/arith.hpp"

using namespace wholo;

namespace {

// Independent Bernoulli oracle: Akiyama-Tanigawa transform. Yields the
// B_1 = +1/2 convention; even indices are what the library consumes.
Rational bernoulli_akiyama_tanigawa(long n) {
    std::vector<Rational> row;
    for (long j = 0; j <= n; ++j) row.push_back(rational(Integer(1), Integer(j + 1)));
    for (long i = 1; i <= n; ++i) {
        for (long j = 0; j <= n - i; ++j) {
            std::size_t idx = static_cast<std::size_t>(j);
            row[idx] = Rational(j + 1) * (row[idx] - row[idx + 1]);
        }
    }
    return row[0];
}

// Brute-force modular inverse over the whole residue ring.
Integer brute_force_inverse(const Integer& a, const Integer& p) {
    for (Integer y = 0; y < p; ++y) {
        if ((a * y) % p == 1) return y;
    }
    FAIL("no inverse found");
    return Integer(0);
}

}  // namespace

TEST_CASE("bernoulli base values") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == rational(Integer(-1), Integer(2)));
    CHECK(bernoulli(2) == rational(Integer(1), Integer(6)));
    CHECK(bernoulli(12) == rational(Integer(-691), Integer(2730)));
}

TEST_CASE("bernoulli agrees with Akiyama-Tanigawa for even indices") {
    for (long n = 0; n <= 40; n += 2) {
        CAPTURE(n);
        CHECK(bernoulli(n) == bernoulli_akiyama_tanigawa(n));
    }
}

TEST_CASE("bernoulli vanishes at odd indices >= 3") {
    for (long n = 3; n <= 40; n += 2) {
        CAPTURE(n);
        CHECK(bernoulli(n) == 0);
    }
}

TEST_CASE("sigma examples") {
    CHECK(sigma(3, 1) == 1);
    CHECK(sigma(3, 2) == 9);   // 1 + 8
    CHECK(sigma(1, 6) == 12);  // 1 + 2 + 3 + 6
    CHECK_THROWS_AS(sigma(3, 0), InvalidParams);
    CHECK_THROWS_AS(sigma(3, -4), InvalidParams);
}

TEST_CASE("sigma at primes is 1 + p^k") {
    for (long p = 2; p <= 100; ++p) {
        if (!is_prime(Integer(p))) continue;
        for (long k = 0; k <= 13; ++k) {
            Integer pk;
            mpz_pow_ui(pk.get_mpz_t(), Integer(p).get_mpz_t(), static_cast<unsigned long>(k));
            CAPTURE(p);
            CAPTURE(k);
            CHECK(sigma(k, p) == 1 + pk);
        }
    }
}

TEST_CASE("reduce_mod examples") {
    CHECK(reduce_mod(Rational(264), Integer(5)).value() == 4);
    CHECK(reduce_mod(Rational(0), Integer(7)).value() == 0);

    // 6^{-1} mod 5 by exhaustive search.
    Integer inv6 = brute_force_inverse(Integer(6) % 5, Integer(5));
    CHECK(reduce_mod(rational(Integer(1), Integer(6)), Integer(5)).value() == inv6);
    CHECK(reduce_mod(rational(Integer(1), Integer(6)), Integer(5)).value() == 1);
}

TEST_CASE("reduce_mod rejects non-invertible denominators and composite moduli") {
    CHECK_THROWS_AS(reduce_mod(rational(Integer(1), Integer(5)), Integer(5)),
                    DenominatorNotInvertible);
    CHECK_THROWS_AS(reduce_mod(rational(Integer(3), Integer(10)), Integer(5)),
                    DenominatorNotInvertible);
    CHECK_THROWS_AS(reduce_mod(Rational(1), Integer(6)), InvalidParams);
    CHECK_THROWS_AS(Residue(Integer(1), Integer(12)), InvalidParams);
    CHECK_THROWS_AS(Residue(Integer(0), Integer(1)), InvalidParams);
}

TEST_CASE("residue normalizes into [0, p)") {
    CHECK(Residue(Integer(-1), Integer(7)).value() == 6);
    CHECK(Residue(Integer(21), Integer(7)).value() == 0);
    CHECK(reduce_mod(Rational(-24), Integer(5)).value() == 1);
}

TEST_CASE("rational ring axioms on random values") {
    using wholo_test::rand_rational;
    for (int i = 0; i < 300; ++i) {
        Rational a = rand_rational(50, 12);
        Rational b = rand_rational(50, 12);
        Rational c = rand_rational(50, 12);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (Rational(1) / a) == 1);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational stays canonical through arithmetic") {
    Rational x = rational(Integer(4), Integer(-6));
    CHECK(x.get_num() == -2);
    CHECK(x.get_den() == 3);
    Rational y = x + rational(Integer(2), Integer(3));
    CHECK(y.get_num() == 0);
    CHECK(y.get_den() == 1);
    CHECK(to_string(rational(Integer(-10), Integer(4))) == "-5/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS_AS(rational(Integer(1), Integer(0)), InvalidParams);
}

TEST_CASE("reduce_mod is a ring homomorphism on p-integral rationals") {
    using wholo_test::rand_long;
    const Integer p(7);
    int done = 0;
    while (done < 1000) {
        Integer num1 = rand_long(-500, 500), den1 = rand_long(1, 60);
        Integer num2 = rand_long(-500, 500), den2 = rand_long(1, 60);
        if (den1 % 7 == 0 || den2 % 7 == 0) continue;
        Rational x = rational(num1, den1), y = rational(num2, den2);
        Integer sum = (reduce_mod(x, p).value() + reduce_mod(y, p).value()) % 7;
        Integer prod = (reduce_mod(x, p).value() * reduce_mod(y, p).value()) % 7;
        CHECK(reduce_mod(x + y, p).value() == sum);
        CHECK(reduce_mod(x * y, p).value() == prod);
        ++done;
    }
}
