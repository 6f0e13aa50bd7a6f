#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gring/normal_form.hpp"
#include "reference_linalg.hpp"

#include <random>

using namespace gring;

namespace {

std::mt19937_64 rng(0x5eed0001);

IntMatrix random_matrix(std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

bool hnf_shape_ok(const IntMatrix& H) {
    long long last_pivot = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t c = 0;
        while (c < H.cols() && H(i, c) == 0) ++c;
        if (c == H.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false; // zero rows must come last
        if (static_cast<long long>(c) <= last_pivot) return false;
        last_pivot = static_cast<long long>(c);
        if (H(i, c) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (H(k, c) < 0 || H(k, c) >= H(i, c)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("hnf identity and zero") {
    IntMatrix I3 = IntMatrix::identity(3);
    HnfResult h = hnf(I3);
    CHECK(h.H == I3);
    CHECK(h.U == I3);

    IntMatrix z(1, 2);
    HnfResult hz = hnf(z);
    CHECK(hz.H == z);
    CHECK(hz.U == IntMatrix::identity(1));
}

TEST_CASE("hnf preserves the row lattice") {
    IntMatrix A{{2, 0}, {0, 3}, {1, 1}};
    HnfResult h = hnf(A);
    CHECK(is_unimodular(h.U));
    CHECK(h.U * A == h.H);
    // row spans agree, membership both ways against the gcd-elimination oracle
    IntMatrix ref = gring_ref::hnf_basis(A);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        CHECK(gring_ref::row_lattice_member(ref, h.H.row(i)));
        CHECK(lattice_contains(h.H, A.row(i)));
    }
}

TEST_CASE("hnf of equal lattices is identical") {
    for (int t = 0; t < 50; ++t) {
        IntMatrix A = random_matrix(4, 4);
        // same lattice, different generators: permute and add row multiples
        IntMatrix B = A;
        B.swap_rows(0, 3);
        for (std::size_t j = 0; j < 4; ++j) B(1, j) += 2 * B(2, j) - 3 * B(0, j);
        CHECK(hnf_basis(A) == hnf_basis(B));
    }
}

TEST_CASE("hnf random properties vs oracle") {
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<std::size_t> ds(1, 6);
        IntMatrix A = random_matrix(ds(rng), ds(rng));
        HnfResult h = hnf(A);
        CHECK(is_unimodular(h.U));
        CHECK(h.U * A == h.H);
        CHECK(hnf_shape_ok(h.H));
        CHECK(hnf_basis(A) == gring_ref::hnf_basis(A));
    }
}

TEST_CASE("snf examples") {
    IntMatrix A{{6, 0}, {0, 4}};
    SnfResult s = snf(A);
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 12);
    CHECK(s.U * A * s.V == s.D);

    IntMatrix I4 = IntMatrix::identity(4);
    CHECK(snf(I4).D == I4);
    IntMatrix z(3, 2);
    CHECK(snf(z).D == z);
}

TEST_CASE("snf random: transforms, chain, divisor products") {
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<std::size_t> ds(1, 5);
        IntMatrix A = random_matrix(ds(rng), ds(rng));
        SnfResult s = snf(A);
        CHECK(is_unimodular(s.U));
        CHECK(is_unimodular(s.V));
        CHECK(s.U * A * s.V == s.D);
        Int prev = 0;
        for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i) {
            const Int& d = s.D(i, i);
            CHECK(d >= 0);
            if (prev != 0) CHECK((d == 0 || d % prev == 0));
            if (prev == 0 && i > 0) CHECK(d == 0);
            prev = d;
        }
        // elementary divisors are basis independent: compare with minor gcds
        if (A.rows() <= 4 && A.cols() <= 4) {
            CHECK(elementary_divisors(A) == gring_ref::elementary_divisors(A));
        }
    }
}

TEST_CASE("snf divisor product equals |det| on nonsingular squares") {
    int done = 0;
    while (done < 60) {
        IntMatrix A = random_matrix(4, 4);
        Int d = determinant(A);
        if (d == 0) continue;
        ++done;
        Int prod = 1;
        for (const Int& e : elementary_divisors(A)) prod *= e;
        CHECK(prod == abs(d));
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(IntMatrix::identity(5)).rows() == 0);
    IntMatrix A{{1}, {-1}};
    IntMatrix K = kernel_basis(A);
    REQUIRE(K.rows() == 1);
    CHECK(abs(K(0, 0)) == 1);
    CHECK(K(0, 0) + K(0, 1) == 0);
}

TEST_CASE("kernel is saturated and has complementary rank") {
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<std::size_t> ds(1, 6);
        IntMatrix A = random_matrix(ds(rng), ds(rng));
        IntMatrix K = kernel_basis(A);
        CHECK((K.rows() == 0 || (K * A).is_zero()));
        CHECK(K.rows() + gring_ref::rank(A) == A.rows());
        if (K.rows() > 0) {
            // saturation: elementary divisors of the kernel basis are all 1
            for (const Int& d : elementary_divisors(K)) CHECK(d == 1);
        }
    }
}

TEST_CASE("solve_right examples") {
    IntMatrix I3 = IntMatrix::identity(3);
    IntMatrix B = random_matrix(3, 2);
    SolveResult s = solve_right(I3, B);
    REQUIRE(s.solvable());
    CHECK(*s.X == B);

    SolveResult none = solve_right(IntMatrix{{2}}, IntMatrix{{3}});
    CHECK(!none.solvable());
    REQUIRE(none.cert.has_value());
    CHECK(none.cert->divisor == 2);

    SolveResult two = solve_right(IntMatrix{{2}}, IntMatrix{{4}});
    REQUIRE(two.solvable());
    CHECK((*two.X)(0, 0) == 2);
}

TEST_CASE("solve_right random vs column-lattice oracle") {
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<std::size_t> ds(1, 5);
        IntMatrix A = random_matrix(ds(rng), ds(rng), -5, 5);
        IntMatrix B = random_matrix(A.rows(), 2, -6, 6);
        SolveResult s = solve_right(A, B);
        CHECK(s.solvable() == gring_ref::solvable(A, B));
        if (s.solvable()) CHECK(A * *s.X == B);
        else CHECK(s.cert.has_value());
    }
    // solvable instances by construction
    for (int t = 0; t < 100; ++t) {
        IntMatrix A = random_matrix(4, 3, -5, 5);
        IntMatrix X = random_matrix(3, 2, -4, 4);
        SolveResult s = solve_right(A, A * X);
        REQUIRE(s.solvable());
        CHECK(A * *s.X == A * X);
    }
}

TEST_CASE("solve_affine_system") {
    IntMatrix I2 = IntMatrix::identity(2);
    IntMatrix Z2(2, 2);
    SolveResult s = solve_affine_system({{I2, I2, Z2}}, 2, 2);
    REQUIRE(s.solvable());
    CHECK((I2 * *s.X - *s.X * I2) == Z2);

    IntMatrix C{{1, 0}, {0, 0}};
    SolveResult none = solve_affine_system({{Z2, Z2, C}}, 2, 2);
    CHECK(!none.solvable());

    // random Sylvester systems with known solutions
    for (int t = 0; t < 50; ++t) {
        IntMatrix L = random_matrix(3, 3, -3, 3);
        IntMatrix R = random_matrix(3, 3, -3, 3);
        IntMatrix X = random_matrix(3, 3, -3, 3);
        IntMatrix C2 = L * X - X * R;
        SolveResult sr = solve_affine_system({{L, R, C2}}, 3, 3);
        REQUIRE(sr.solvable());
        CHECK(L * *sr.X - *sr.X * R == C2);
    }
}

TEST_CASE("lattice_intersect") {
    IntMatrix I2 = IntMatrix::identity(2);
    CHECK(lattice_intersect(I2, I2) == I2);
    IntMatrix A{{2, 0}};
    IntMatrix B{{3, 0}};
    IntMatrix got = lattice_intersect(A, B);
    REQUIRE(got.rows() == 1);
    CHECK(got(0, 0) == 6);
    CHECK(got(0, 1) == 0);
}

TEST_CASE("lattice_intersect fuzz: containment both ways") {
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 60; ++t) {
        IntMatrix A = random_matrix(3, 4, -4, 4);
        IntMatrix B = random_matrix(3, 4, -4, 4);
        IntMatrix I = lattice_intersect(A, B);
        for (std::size_t i = 0; i < I.rows(); ++i) {
            CHECK(lattice_contains(A, I.row(i)));
            CHECK(lattice_contains(B, I.row(i)));
        }
        // random small combinations lying in both must lie in the intersection
        for (int s = 0; s < 10; ++s) {
            std::vector<Int> v(4, 0);
            for (std::size_t i = 0; i < 3; ++i) {
                int c = d(rng);
                for (std::size_t j = 0; j < 4; ++j) v[j] += c * A(i, j);
            }
            if (lattice_contains(B, v)) CHECK(lattice_contains(I, v));
        }
    }
}

TEST_CASE("lattice_equal") {
    IntMatrix I2 = IntMatrix::identity(2);
    CHECK(lattice_equal(I2, I2));
    IntMatrix A{{1, 0}};
    IntMatrix B{{2, 0}};
    CHECK(!lattice_equal(A, B));
}

TEST_CASE("matrix text format round-trip") {
    for (int t = 0; t < 20; ++t) {
        IntMatrix A = random_matrix(3, 5, -1000000, 1000000);
        std::ostringstream os;
        write_matrix(os, A);
        std::istringstream is(os.str());
        IntMatrix B = read_matrix(is);
        CHECK(A == B);
        std::ostringstream os2;
        write_matrix(os2, B);
        CHECK(os.str() == os2.str());
    }
}

TEST_CASE("parallel product agrees with the serial reference") {
    for (int t = 0; t < 10; ++t) {
        IntMatrix A = random_matrix(40, 37, -50, 50);
        IntMatrix B = random_matrix(37, 29, -50, 50);
        CHECK(A * B == gring_ref::mul(A, B));
    }
    IntMatrix big = random_matrix(80, 80, -100, 100);
    IntMatrix big2 = random_matrix(80, 80, -100, 100);
    CHECK(big * big2 == gring_ref::mul(big, big2));
}
