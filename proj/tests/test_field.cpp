#include <random>

#include "doctest.h"
#include "pentagon/errors.hpp"
#include "pentagon/field.hpp"

using namespace pentagon;

TEST_CASE("field descriptors") {
    CHECK(Field::rationals() == Field{});
    CHECK(Field::prime(7) == Field::prime(7));
    CHECK_FALSE(Field::prime(7) == Field::prime(5));
    CHECK_FALSE(Field::prime(2) == Field::rationals());
    CHECK_THROWS_AS(Field::prime(4), BadField);
    CHECK_THROWS_AS(Field::prime(1), BadField);
    CHECK_THROWS_AS(Field::prime(0), BadField);
    CHECK_THROWS_AS(Field::prime(Field::kMaxModulus + 1), BadField);
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::parse("Fp:5") == Field::prime(5));
    CHECK_THROWS_AS(Field::parse("Fp:9"), BadField);
    CHECK_THROWS_AS(Field::parse("R"), BadField);
    CHECK(Field::prime(101).to_string() == "Fp:101");
}

TEST_CASE("primality") {
    const std::uint64_t primes[] = {2, 3, 5, 7, 101, 2305843009213693951ull};  // 2^61 - 1
    for (auto p : primes) CHECK(is_prime(p));
    const std::uint64_t composites[] = {0, 1, 4, 9, 561, 1105, 2305843009213693953ull};
    for (auto c : composites) CHECK_FALSE(is_prime(c));
}

TEST_CASE("canonical forms") {
    const Field q;
    CHECK(Scalar::parse(q, "2/4") == Scalar::parse(q, "1/2"));
    CHECK(Scalar::parse(q, "-3/6").to_string() == "-1/2");
    CHECK_THROWS_AS(Scalar::parse(q, "3/-6"), ParseError);
    CHECK(Scalar::parse(q, "-0").to_string() == "0");
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, ""), ParseError);

    const Field f5 = Field::prime(5);
    CHECK(Scalar(f5, -1).residue() == 4);
    CHECK(Scalar::parse(f5, "1/2") == Scalar(f5, 3));
    CHECK_THROWS_AS(Scalar::parse(f5, "1/5"), NotInvertible);
    CHECK(Scalar(f5, 12).to_string() == "2");
}

TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(Scalar(Field{}, 1) + Scalar(Field::prime(3), 1), FieldMismatch);
    CHECK_THROWS_AS(Scalar(Field::prime(5), 1) * Scalar(Field::prime(3), 1), FieldMismatch);
}

TEST_CASE("inverse of zero") {
    CHECK_THROWS_AS(Scalar(Field{}).inverse(), NotInvertible);
    CHECK_THROWS_AS(Scalar(Field::prime(7), 14).inverse(), NotInvertible);
}

namespace {

Scalar random_scalar(Field f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 20);
    if (f.is_rational()) return Scalar(f, mpq_class(static_cast<long>(num(rng)), static_cast<long>(den(rng))));
    return Scalar(f, num(rng));
}

}  // namespace

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240611);
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(7), Field::prime(2305843009213693951ull)}) {
        for (int trial = 0; trial < 300; ++trial) {
            const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            CHECK(a + (-a) == Scalar::zero(f));
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(b / a * a == b);
            }
            Scalar acc = c;
            acc.add_mul(a, b);
            CHECK(acc == c + a * b);
        }
    }
}

TEST_CASE("large prime residues do not overflow") {
    const Field f = Field::prime(2305843009213693951ull);
    const Scalar big(f, static_cast<long long>(2305843009213693950ull));  // -1
    CHECK((big * big).is_one());
    CHECK((big + Scalar::one(f)).is_zero());
}
