#include <random>

#include "doctest.h"
#include "pentagon/errors.hpp"
#include "pentagon/gallery.hpp"
#include "pentagon/solution.hpp"
#include "pentagon/tensor.hpp"

using namespace pentagon;

namespace {

const Field Q;

Tensor2 random_tensor(Field f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> d(-2, 2);
    Mat k(f, n * n, n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        for (std::size_t j = 0; j < n * n; ++j) k(i, j) = Scalar(f, d(rng));
    return Tensor2(n, k);
}

}  // namespace

TEST_CASE("kron") {
    CHECK(kron(Mat::identity(Q, 2), Mat::identity(Q, 2)) == Mat::identity(Q, 4));
    const Mat e12i = kron(Mat::unit(Q, 2, 0, 1), Mat::identity(Q, 2));
    Mat expect(Q, 4, 4);
    expect(0, 2) = Scalar::one(Q);
    expect(1, 3) = Scalar::one(Q);
    CHECK(e12i == expect);
    CHECK(kron(Mat::from_ints(Q, 2, 2, {1, 2, 3, 4}), Mat::from_ints(Q, 2, 2, {0, 1, 1, 0})) ==
          Mat::from_ints(Q, 4, 4, {0, 1, 0, 2, 1, 0, 2, 0, 0, 3, 0, 4, 3, 0, 4, 0}));
    CHECK_THROWS_AS(kron(Mat::identity(Q, 2), Mat::identity(Field::prime(3), 2)), FieldMismatch);
}

TEST_CASE("leg embeddings") {
    const std::size_t n = 2;
    CHECK(leg_embed(Tensor2::identity(Q, n), Leg::L12).entries() == Mat::identity(Q, 8));
    std::mt19937_64 rng(5);
    const Tensor2 t = random_tensor(Q, n, rng);
    CHECK(leg_embed(t, Leg::L23).entries() == kron(Mat::identity(Q, n), t.kron()));
    CHECK(leg_embed(t, Leg::L12).entries() == kron(t.kron(), Mat::identity(Q, n)));

    // e12 (x) e21 on legs 1,3: ones exactly at ((1,a,2),(2,a,1))
    const Mat l13 = leg_embed(Tensor2::simple(Mat::unit(Q, 2, 0, 1), Mat::unit(Q, 2, 1, 0)), Leg::L13).entries();
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            if (!l13(r, c).is_zero()) ++nonzero;
    CHECK(nonzero == 2);
    for (std::size_t a = 0; a < 2; ++a) CHECK(l13((0 * 2 + a) * 2 + 1, (1 * 2 + a) * 2 + 0).is_one());

    for (int trial = 0; trial < 5; ++trial) {
        const Tensor2 x = random_tensor(Q, n, rng), y = random_tensor(Q, n, rng);
        for (Leg leg : {Leg::L12, Leg::L13, Leg::L23})
            CHECK(leg_embed(x, leg) * leg_embed(y, leg) == leg_embed(x * y, leg));
    }
}

TEST_CASE("coefficient matrix and blocks") {
    const Mat c1 = coefficient_matrix(Tensor2::identity(Q, 3));
    CHECK(rank(c1) == 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(c1.row(i * 3 + j) == (i == j ? Mat::identity(Q, 3).entries() : zero_vec(Q, 9)));

    const Tensor2 cyc = gallery::cyclic(Q, 2);
    CHECK(rank(coefficient_matrix(cyc)) == 2);
    const BlockArray b = blocks(cyc);
    CHECK(b[0][0] == Mat::identity(Q, 2));
    CHECK(b[1][1] == Mat::from_ints(Q, 2, 2, {0, 1, 1, 0}));
    CHECK(b[0][1].is_zero());
    CHECK(b[1][0].is_zero());
    CHECK(from_blocks(b).kron() == Mat::from_ints(Q, 4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));

    const BlockArray bi = blocks(Tensor2::identity(Q, 2));
    CHECK(bi[0][0] == Mat::identity(Q, 2));
    CHECK(bi[0][1].is_zero());

    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        const Tensor2 x = random_tensor(Q, 2 + t % 2, rng);
        CHECK(from_blocks(blocks(x)) == x);
        CHECK(from_coefficient_matrix(x.n(), coefficient_matrix(x)) == x);
    }

    BlockArray bad = b;
    bad[1].pop_back();
    CHECK_THROWS_AS(from_blocks(bad), ShapeMismatch);
    BlockArray mixed = b;
    mixed[0][0] = Mat::identity(Field::prime(5), 2);
    CHECK_THROWS_AS(from_blocks(mixed), FieldMismatch);
}

TEST_CASE("conjugation action") {
    const Tensor2 cyc = gallery::cyclic(Q, 2);
    CHECK(conjugate_action(cyc, Mat::identity(Q, 2)) == cyc);
    CHECK(conjugate_action(cyc, Scalar(Q, 5) * Mat::identity(Q, 2)) == cyc);
    const Tensor2 swapped = conjugate_action(cyc, Mat::from_ints(Q, 2, 2, {0, 1, 1, 0}));
    CHECK(verify_pentagon(swapped).holds);
    CHECK(tensor_length(swapped) == 2);
    CHECK_THROWS_AS(conjugate_action(cyc, Mat::from_ints(Q, 2, 2, {1, 1, 1, 1})), NotInvertible);

    std::mt19937_64 rng(3);
    const Tensor2 t = random_tensor(Q, 2, rng);
    const Mat u = gallery::random_conjugator(2, Q, 1);
    const Mat v = gallery::random_conjugator(2, Q, 2);
    CHECK(conjugate_action(t, u * v) == conjugate_action(conjugate_action(t, v), u));
    CHECK(tensor_length(conjugate_action(t, u)) == tensor_length(t));
}

TEST_CASE("tensor coordinates") {
    const Field f = Field::prime(7);
    const std::vector<Mat> left = {Mat::identity(f, 2), Mat::unit(f, 2, 0, 1)};
    const std::vector<Mat> right = {Mat::unit(f, 2, 1, 0), Mat::unit(f, 2, 1, 1)};
    const Mat g = Mat::from_ints(f, 2, 2, {1, 2, 3, 4});
    const Tensor2 t = tensor_from_coordinates(2, g, left, right);
    std::vector<Vec> lv, rv;
    for (auto& m : left) lv.push_back(m.entries());
    for (auto& m : right) rv.push_back(m.entries());
    CHECK(tensor_coordinates(t, SpanCoordinates(f, 4, lv), SpanCoordinates(f, 4, rv)) == g);
    CHECK_THROWS_AS(tensor_coordinates(Tensor2::identity(f, 2), SpanCoordinates(f, 4, lv), SpanCoordinates(f, 4, rv)),
                    NotInSpan);
}
