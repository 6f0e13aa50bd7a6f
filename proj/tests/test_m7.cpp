#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gring/m7.hpp"

#include <filesystem>
#include <fstream>

using namespace gring;

namespace {
M7Options base_options() {
    M7Options opt;
    opt.fixtures_dir = GRING_FIXTURES_DIR;
    return opt;
}
} // namespace

TEST_CASE("pi module verification") {
    M7Pipeline pipe(base_options());
    Report r = pipe.verify_pi_module();
    CHECK(r.ok());
    CHECK(pipe.kernel_K().rank() == 36);
}

TEST_CASE("intersection basis and block action") {
    M7Pipeline pipe(base_options());
    Report r = pipe.verify_e_basis();
    INFO(r.to_json());
    CHECK(r.ok());
}

TEST_CASE("h conjugation and eta elements") {
    M7Pipeline pipe(base_options());
    CHECK(pipe.verify_h_conjugation().ok());
    CHECK(pipe.verify_eta_elements().ok());
}

TEST_CASE("pibar matrix matches the reference") {
    M7Pipeline pipe(base_options());
    Report r = pipe.compare_pibar();
    CHECK(r.ok());
    CHECK(r.count(CheckStatus::warn) == 0);
    IntMatrix m = pipe.build_pibar_matrix();
    // first column is the image of 1; seventh is the reduced x^6 column
    for (int rr = 0; rr < 6; ++rr) {
        CHECK(m(static_cast<std::size_t>(rr), 0) == (rr == 0 ? 1 : 0));
        CHECK(m(static_cast<std::size_t>(rr), 6) == -1);
    }
    // the y^3 column
    CHECK(m(0, 21) == -1);
    for (int rr = 1; rr < 6; ++rr) CHECK(m(static_cast<std::size_t>(rr), 21) == 0);
}

TEST_CASE("quotient representation and extension blocks") {
    M7Pipeline pipe(base_options());
    Report r = pipe.build_quotient_and_rho();
    INFO(r.to_json());
    CHECK(r.ok());
    CHECK(r.count(CheckStatus::warn) == 0);
    CHECK(pipe.rho().X.is_identity());

    ExtensionBlocks b4 = pipe.extract_blocks(4);
    std::vector<Int> want_row{1, -2, -1, -1, 2, 1};
    CHECK(b4.C.row(2) == want_row);
    ExtensionBlocks b6 = pipe.extract_blocks(6);
    std::vector<Int> want_d{-1, 0, -1, 1, 0, 1};
    CHECK(b6.D.row(0) == want_d);
    // all blocks match the shipped matrices
    for (int i : {1, 3, 4, 5, 6}) {
        ExtensionBlocks b = pipe.extract_blocks(i);
        CHECK(b.C == pipe.fixtures().C.at(i));
        CHECK(b.D == pipe.fixtures().D.at(i));
    }
    CHECK_THROWS(pipe.extract_blocks(2));
}

TEST_CASE("k-invariant verdicts are all unsolvable") {
    M7Pipeline pipe(base_options());
    for (int i : {1, 3, 4, 5, 6}) {
        KInvariantVerdict v = pipe.k_invariant_verdict(i);
        CHECK(!v.solvable_eq7);
        CHECK(!v.solvable_joint);
        CHECK(v.cert_eq7.has_value());
        CHECK(v.cert_joint.has_value());
    }
}

TEST_CASE("trivial extension blocks are solvable with X = 0") {
    M7Pipeline pipe(base_options());
    const Representation& th = pipe.fixtures().theta.at(4);
    IntMatrix Z(6, 6);
    SylvesterBlock eq7{th.X - IntMatrix::identity(6), Z, Z};
    SylvesterBlock eq8{th.Y, pipe.fixtures().sigma_y, Z};
    SolveResult s = solve_affine_system({eq7, eq8}, 6, 6);
    REQUIRE(s.solvable());
    CHECK(s.X->is_zero());
}

TEST_CASE("full verification passes") {
    M7Options opt = base_options();
    opt.rebase_trials = 3;
    Report r = run_verify_m7(opt);
    INFO(r.to_json());
    CHECK(r.ok());
}

TEST_CASE("eq7-only mode") {
    M7Options opt = base_options();
    opt.eq7_only = true;
    Report r = run_verify_m7(opt);
    CHECK(r.ok());
    CHECK(r.count(CheckStatus::skip) == 5); // joint verdicts reported but not judged
}

TEST_CASE("mutation: zeroing C(4) flips the verdict and fails the run") {
    M7Options opt = base_options();
    opt.zero_C_blocks.insert(4);
    M7Pipeline pipe(opt);
    KInvariantVerdict v = pipe.k_invariant_verdict(4);
    CHECK(v.solvable_eq7); // X = 0 solves the zeroed block equation
    Report r = pipe.verify_M7();
    CHECK(!r.ok());
}

TEST_CASE("mutation: corrupted h fails the conjugation step") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "gring_corrupt_fixtures";
    fs::remove_all(tmp);
    fs::create_directories(tmp / "p7");
    for (const auto& entry : fs::directory_iterator(fs::path(GRING_FIXTURES_DIR) / "p7"))
        fs::copy_file(entry.path(), tmp / "p7" / entry.path().filename());
    // break the determinant
    IntMatrix h = read_matrix_file((tmp / "p7" / "h.mat").string());
    h(0, 0) = h(0, 0) + 1;
    write_matrix_file((tmp / "p7" / "h.mat").string(), h);

    M7Options opt;
    opt.fixtures_dir = tmp.string();
    M7Pipeline pipe(opt);
    Report hr = pipe.verify_h_conjugation();
    CHECK(!hr.ok());
    Report full = pipe.verify_M7();
    CHECK(!full.ok());
    fs::remove_all(tmp);
}

TEST_CASE("basis permutation override changes the comparison only") {
    M7Options opt = base_options();
    std::vector<int> perm(24);
    for (int i = 0; i < 24; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::swap(perm[1], perm[2]);
    opt.basis_perm = perm;
    M7Pipeline pipe(opt);
    Report r = pipe.compare_pibar();
    CHECK(!r.ok());                          // declared order no longer matches
    CHECK(r.count(CheckStatus::warn) == 2);  // two mismatching columns reported
}
