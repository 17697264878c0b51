#include <catch_amalgamated.hpp>

#include <trias/iso.hpp>
#include <trias/linalg.hpp>

using namespace trias;

namespace {

Mat<GaussRat> qmat(std::vector<std::vector<long>> rows) {
    Mat<GaussRat> m;
    for (auto& r : rows) {
        Vec<GaussRat> v;
        for (long x : r) v.push_back(GaussRat(x));
        m.push_back(std::move(v));
    }
    return m;
}

Mat<FpElem> fmat(std::vector<std::vector<long>> rows, uint32_t p) {
    Mat<FpElem> m;
    for (auto& r : rows) {
        Vec<FpElem> v;
        for (long x : r) v.push_back(FpElem::of(x, p));
        m.push_back(std::move(v));
    }
    return m;
}

}  // namespace

TEST_CASE("determinant and inverse over the rationals") {
    auto m = qmat({{1, 2}, {3, 4}});
    CHECK(det(m) == GaussRat(-2));
    auto inv = invert(m);
    CHECK(mat_mul(m, inv) == identity_mat(2, GaussRat(1)));
    CHECK(mat_mul(inv, m) == identity_mat(2, GaussRat(1)));
    CHECK_THROWS_AS(invert(qmat({{1, 2}, {2, 4}})), SingularMatrixError);
    CHECK(det(qmat({{1, 2}, {2, 4}})).is_zero());
    CHECK(det(qmat({{2, 0, 1}, {0, 1, 0}, {1, 0, 1}})) == GaussRat(1));
}

TEST_CASE("determinant and inverse over a prime field") {
    auto m = fmat({{1, 2}, {3, 4}}, 5);
    CHECK(det(m).v == 3);  // -2 mod 5
    CHECK(mat_mul(m, invert(m)) == identity_mat(2, FpElem(1, 5)));
    CHECK_THROWS_AS(invert(fmat({{1, 2}, {2, 4}}, 5)), SingularMatrixError);
}

TEST_CASE("rank") {
    CHECK(rank(qmat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(qmat({{1, 2}, {3, 4}})) == 2);
    CHECK(rank(qmat({{0, 0}, {0, 0}})) == 0);
    CHECK(rank(fmat({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}, 7)) == 2);
}

TEST_CASE("vector helpers") {
    Vec<GaussRat> a{GaussRat(1), GaussRat(2)}, b{GaussRat(3), GaussRat(-1)};
    CHECK(add(a, b) == Vec<GaussRat>{GaussRat(4), GaussRat(1)});
    CHECK(scale(GaussRat(2), a) == Vec<GaussRat>{GaussRat(2), GaussRat(4)});
    CHECK(mat_vec(qmat({{1, 0}, {0, 2}}), a) == Vec<GaussRat>{GaussRat(1), GaussRat(4)});
}

TEST_CASE("general linear group sizes") {
    CHECK(gl_matrices(1, 2).size() == 1);
    CHECK(gl_matrices(1, 5).size() == 4);
    CHECK(gl_matrices(2, 2).size() == 6);
    CHECK(gl_matrices(2, 3).size() == 48);
    CHECK(gl_matrices(2, 5).size() == 480);
    for (const auto& g : gl_matrices(2, 3)) CHECK_FALSE(det(g).is_zero());
}
