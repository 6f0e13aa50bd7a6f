// Acceptance suite: every criterion prints one pass/fail line; the binary
// exits nonzero if any criterion fails.  All checks are exact; the stated
// time limits are asserted on the measured wall clock.
#include "gring/fixtures.hpp"
#include "gring/m7.hpp"
#include "reference_linalg.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace gring;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

const char* kFixtures = GRING_FIXTURES_DIR;

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

} // namespace

int main() {
    // 1. fixture validation
    criterion(1, "fixture relations (lambda and all six theta pairs)", 1.0, [](std::string& d) {
        P7Fixtures fx = load_p7_fixtures(kFixtures);
        if (!validate_lambda_fixture(fx.lambda).empty()) {
            d = "lambda invariants";
            return false;
        }
        if (!matpow(fx.lambda.lx, 7).is_identity() || !matpow(fx.lambda.ly, 6).is_identity())
            return false;
        for (int k = 1; k <= 6; ++k) {
            const Representation& t = fx.theta.at(k);
            if (!representation_issues(t).empty() || !check_sigma_condition(t)) {
                d = "theta_" + std::to_string(k);
                return false;
            }
        }
        return true;
    });

    // 2. characteristic certificates
    criterion(2, "printed characteristic vectors satisfy and generate", 1.0, [](std::string& d) {
        P7Fixtures fx = load_p7_fixtures(kFixtures);
        const std::vector<std::vector<long long>> printed = {
            {20, -10, 4, -1, 0, 0},    {7, -1, 0, 0, 0, 0},   {21, -7, 1, 1, -1, 0},
            {0, 0, 0, 1, -2, 2},       {77, -49, 28, -14, 6, -2}, {7, -7, 7, -7, 7, -6}};
        for (int k = 1; k <= 6; ++k) {
            Lattice lat{GroupParams(7, 3), row_basis(7, k), fx.lambda.lx, fx.lambda.ly};
            auto [sign, power] = char_equation_for_row(k);
            CharCertificate cert;
            cert.k = k;
            cert.sign = sign;
            cert.power = power;
            for (long long v : printed[static_cast<std::size_t>(k - 1)]) cert.v.emplace_back(v);
            if (!check_char_certificate(lat, cert)) {
                d = "row " + std::to_string(k);
                return false;
            }
        }
        return true;
    });

    // 3. hom tables
    criterion(3, "hom lattices rank 1 (I or 7I) and derived orders 7/1", 30.0, [](std::string& d) {
        LambdaFixture fix = load_lambda_fixture(7, kFixtures);
        for (int i = 1; i <= 6; ++i) {
            IntMatrix homs = homs_to_regular(7, i, fix);
            for (int j = 1; j <= 6; ++j) {
                IntMatrix H = hom_lattice(7, i, j, fix);
                IntMatrix want = (i >= j) ? IntMatrix::identity(6) : Int(7) * IntMatrix::identity(6);
                if (H.rows() != 1 || unflatten(H.row(0), 6) != want) {
                    d = "generator at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    return false;
                }
                Int order = hom_der_order(7, i, j, fix, homs);
                if (order != (i == j ? Int(7) : Int(1))) {
                    d = "derived order at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    return false;
                }
            }
        }
        return true;
    });

    // 4. pi module
    criterion(4, "pi module identities, [pi)=R(1), kernel rank 36", 5.0, [](std::string& d) {
        M7Options opt;
        opt.fixtures_dir = kFixtures;
        M7Pipeline pipe(opt);
        Report r = pipe.verify_pi_module();
        if (!r.ok()) {
            d = "pi identities";
            return false;
        }
        if (pipe.kernel_K().rank() != 36) {
            d = "kernel rank";
            return false;
        }
        return true;
    });

    // 5. intersection basis
    criterion(5, "the 18 printed elements span the ideal intersection; block action", 60.0,
              [](std::string& d) {
                  M7Options opt;
                  opt.fixtures_dir = kFixtures;
                  M7Pipeline pipe(opt);
                  Report r = pipe.verify_e_basis();
                  if (!r.ok()) d = "see verify_e_basis report";
                  return r.ok();
              });

    // 6. conjugations
    criterion(6, "det(h)=1 with the 18-dim conjugation; f conjugates the quotient", 60.0,
              [](std::string& d) {
                  M7Options opt;
                  opt.fixtures_dir = kFixtures;
                  M7Pipeline pipe(opt);
                  Report rh = pipe.verify_h_conjugation();
                  if (!rh.ok()) {
                      d = "h conjugation";
                      return false;
                  }
                  Report rq = pipe.build_quotient_and_rho();
                  if (!rq.ok() || rq.count(CheckStatus::warn) != 0) {
                      d = "quotient conjugation";
                      return false;
                  }
                  return true;
              });

    // 7. eta certificates
    criterion(7, "eta identities and row isomorphism for every block", 60.0, [](std::string& d) {
        M7Options opt;
        opt.fixtures_dir = kFixtures;
        M7Pipeline pipe(opt);
        Report r = pipe.verify_eta_elements();
        if (!r.ok()) d = "see verify_eta_elements report";
        return r.ok();
    });

    // 8. pibar matrix
    criterion(8, "computed 6x24 projection matrix matches the reference", 30.0, [](std::string& d) {
        M7Options opt;
        opt.fixtures_dir = kFixtures;
        M7Pipeline pipe(opt);
        Report r = pipe.compare_pibar();
        if (!r.ok()) {
            d = "reduction identities";
            return false;
        }
        if (r.count(CheckStatus::warn) != 0) {
            d = "column mismatches (warnings)";
            return false;
        }
        return true;
    });

    // 9. k-invariant verdicts
    criterion(9, "all five blocks unsolvable (joint and x-only), invariant under 20 re-basings",
              10.0, [](std::string& d) {
                  M7Options opt;
                  opt.fixtures_dir = kFixtures;
                  M7Pipeline pipe(opt);
                  for (int i : {1, 3, 4, 5, 6}) {
                      KInvariantVerdict v = pipe.k_invariant_verdict(i);
                      if (v.solvable_eq7 || v.solvable_joint) {
                          d = "block " + std::to_string(i);
                          return false;
                      }
                  }
                  M7Options opt2;
                  opt2.fixtures_dir = kFixtures;
                  opt2.rebase_trials = 20;
                  M7Pipeline pipe2(opt2);
                  Report r = pipe2.verify_M7();
                  if (!r.ok()) {
                      d = "full run with re-basings";
                      return false;
                  }
                  return true;
              });

    // 10. mutation tests
    criterion(10, "zeroing any C(i) flips its verdict; corrupting h fails the chain", 120.0,
              [](std::string& d) {
                  for (int i : {1, 3, 4, 5, 6}) {
                      M7Options opt;
                      opt.fixtures_dir = kFixtures;
                      opt.zero_C_blocks.insert(i);
                      M7Pipeline pipe(opt);
                      KInvariantVerdict v = pipe.k_invariant_verdict(i);
                      if (!v.solvable_eq7) {
                          d = "block " + std::to_string(i) + " did not flip";
                          return false;
                      }
                      Report r = pipe.verify_M7();
                      if (r.ok()) {
                          d = "mutated run still passed";
                          return false;
                      }
                  }
                  // corrupted h
                  namespace fs = std::filesystem;
                  fs::path tmp = fs::temp_directory_path() / "gring_acceptance_corrupt";
                  fs::remove_all(tmp);
                  fs::create_directories(tmp / "p7");
                  for (const auto& entry : fs::directory_iterator(fs::path(kFixtures) / "p7"))
                      fs::copy_file(entry.path(), tmp / "p7" / entry.path().filename());
                  IntMatrix h = read_matrix_file((tmp / "p7" / "h.mat").string());
                  h(0, 0) = h(0, 0) + 1;
                  write_matrix_file((tmp / "p7" / "h.mat").string(), h);
                  M7Options opt;
                  opt.fixtures_dir = tmp.string();
                  M7Pipeline pipe(opt);
                  bool bad_ok = pipe.verify_h_conjugation().ok();
                  fs::remove_all(tmp);
                  if (bad_ok) {
                      d = "corrupted h accepted";
                      return false;
                  }
                  return true;
              });

    // 11. unit constructions
    criterion(11, "Bezout sweeps, exhaustive p=5 / sampled p=7 targets, residue sweep", 300.0,
              [](std::string& d) {
                  std::mt19937_64 rng(0xacce9ce);
                  for (int p : {5, 7, 11}) {
                      std::uniform_int_distribution<int> dres(1, p - 1), dslot(1, p - 1);
                      for (int t = 0; t < 200; ++t) {
                          int slot = dslot(rng);
                          std::vector<int> res;
                          for (int pos = 1; pos <= p - 1; ++pos)
                              if (pos != slot) res.push_back(dres(rng));
                          TriMatrix u = bezout_unit(p, slot, res);
                          if (!is_tri_unit(u)) {
                              d = "bezout unit not unimodular (p=" + std::to_string(p) + ")";
                              return false;
                          }
                          std::size_t idx = 0;
                          for (int pos = 1; pos <= p - 1; ++pos) {
                              if (pos == slot) continue;
                              Int r = u.m(static_cast<std::size_t>(pos - 1),
                                          static_cast<std::size_t>(pos - 1)) %
                                      p;
                              if (r < 0) r += p;
                              if (r != res[idx]) {
                                  d = "bezout residue mismatch";
                                  return false;
                              }
                              ++idx;
                          }
                      }
                  }
                  // exhaustive p=5: (a12,a22) over the 24 nonzero pairs, a33,a44 in (Z/5)^*
                  for (int a12 = 0; a12 < 5; ++a12)
                      for (int a22 = 0; a22 < 5; ++a22) {
                          if (a12 == 0 && a22 == 0) continue;
                          for (int a33 = 1; a33 < 5; ++a33)
                              for (int a44 = 1; a44 < 5; ++a44) {
                                  IntMatrix u = unit_for_target_313(5, {a12, a22, a33, a44});
                                  std::vector<int> k = k_map_313(5, u);
                                  if (k != std::vector<int>{a12, a22, a33, a44}) {
                                      d = "p=5 exhaustive target failed";
                                      return false;
                                  }
                              }
                      }
                  // sampled p=7 (>= 500)
                  std::uniform_int_distribution<int> d7(0, 6), dnz(1, 6);
                  for (int t = 0; t < 520; ++t) {
                      std::vector<int> target{d7(rng), d7(rng), dnz(rng), dnz(rng), dnz(rng), dnz(rng)};
                      if (target[0] == 0 && target[1] == 0) target[1] = dnz(rng);
                      IntMatrix u = unit_for_target_313(7, target);
                      std::vector<int> k = k_map_313(7, u);
                      for (int i = 0; i < 6; ++i)
                          if (k[static_cast<std::size_t>(i)] != ((target[static_cast<std::size_t>(i)] % 7) + 7) % 7) {
                              d = "p=7 sampled target failed";
                              return false;
                          }
                  }
                  // residue sweep: exactly n = +-1 mod 7 admitted
                  for (int n = 1; n <= 6; ++n) {
                      std::vector<int> diag{1, n, 1, 1, 1, 1};
                      if (diag_residue_obstruction(7, diag) != (n == 1 || n == 6)) {
                          d = "sweep misclassified n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    // 12. fullness ingredients
    criterion(12, "augmentation-ideal automorphisms for all valid r, p in {5,7,11,13}", 5.0,
              [](std::string& d) {
                  for (int p : {5, 7, 11, 13}) {
                      for (int r = 1; r <= p - 2; ++r) {
                          if (std::gcd(r, p - 1) != 1) continue;
                          if (!fullness_automorphism_check(p, r)) {
                              d = "p=" + std::to_string(p) + " r=" + std::to_string(r);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    // 13. exactlin property suite
    criterion(13, "1000 random normal-form/kernel/solve instances against the gcd oracle", 300.0,
              [](std::string& d) {
                  std::mt19937_64 rng(0xacce9cf);
                  std::uniform_int_distribution<std::size_t> ds(1, 6);
                  std::uniform_int_distribution<int> kind(0, 3);
                  int nonsingular_checked = 0;
                  for (int t = 0; t < 1000; ++t) {
                      IntMatrix A = random_matrix(rng, ds(rng), ds(rng), 9);
                      switch (kind(rng)) {
                          case 0: { // hnf vs oracle + transform
                              HnfResult h = hnf(A);
                              if (!is_unimodular(h.U) || h.U * A != h.H) {
                                  d = "hnf transform";
                                  return false;
                              }
                              if (hnf_basis(A) != gring_ref::hnf_basis(A)) {
                                  d = "hnf canonical form";
                                  return false;
                              }
                              break;
                          }
                          case 1: { // snf vs minor-gcd oracle
                              SnfResult s = snf(A);
                              if (!is_unimodular(s.U) || !is_unimodular(s.V) ||
                                  s.U * A * s.V != s.D) {
                                  d = "snf transform";
                                  return false;
                              }
                              if (elementary_divisors(A) != gring_ref::elementary_divisors(A)) {
                                  d = "elementary divisors";
                                  return false;
                              }
                              if (A.rows() == A.cols()) {
                                  Int det = determinant(A);
                                  if (det != 0) {
                                      Int prod = 1;
                                      for (const Int& e : elementary_divisors(A)) prod *= e;
                                      if (prod != abs(det)) {
                                          d = "divisor product vs determinant";
                                          return false;
                                      }
                                      ++nonsingular_checked;
                                  }
                              }
                              break;
                          }
                          case 2: { // kernel
                              IntMatrix K = kernel_basis(A);
                              if (K.rows() > 0 && !(K * A).is_zero()) {
                                  d = "kernel rows";
                                  return false;
                              }
                              if (K.rows() + gring_ref::rank(A) != A.rows()) {
                                  d = "kernel rank";
                                  return false;
                              }
                              for (const Int& e : elementary_divisors(K))
                                  if (e != 1) {
                                      d = "kernel not saturated";
                                      return false;
                                  }
                              break;
                          }
                          default: { // solve
                              IntMatrix B = random_matrix(rng, A.rows(), 2, 10);
                              SolveResult s = solve_right(A, B);
                              if (s.solvable() != gring_ref::solvable(A, B)) {
                                  d = "solvability decision";
                                  return false;
                              }
                              if (s.solvable() && A * *s.X != B) {
                                  d = "solution check";
                                  return false;
                              }
                              if (!s.solvable() && !s.cert.has_value()) {
                                  d = "missing certificate";
                                  return false;
                              }
                              break;
                          }
                      }
                  }
                  if (nonsingular_checked == 0) {
                      d = "no nonsingular squares seen";
                      return false;
                  }
                  return true;
              });

    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
    return g_failures == 0 ? 0 : 1;
}
