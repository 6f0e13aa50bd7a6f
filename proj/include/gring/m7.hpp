#pragma once
#include "gring/fixtures.hpp"
#include "gring/report.hpp"

#include <cstdint>
#include <optional>
#include <set>

namespace gring {

/* Right-column blocks of the 36-dimensional kernel representation:
 * phi(x) has C(i) against the quotient lifts in block row i, phi(y) has D(i). */
struct ExtensionBlocks {
    int i = 0;
    IntMatrix C, D;
};

/* Exact solvability verdict for the extension equations of block i.
 * joint: C(i) = (theta_i(x)-I)X and theta_i(y)X - X sigma(y) = D(i) together;
 * eq7:   the first equation alone.  Both unsolvable certifies a non-zero
 * k-invariant (the headline claim needs every i in {1,3,4,5,6} unsolvable). */
struct KInvariantVerdict {
    int i = 0;
    bool solvable_joint = false;
    bool solvable_eq7 = false;
    std::optional<IntMatrix> X_joint, X_eq7;
    std::optional<NoSolutionCert> cert_joint, cert_eq7;
};

struct M7Options {
    std::string fixtures_dir = "fixtures";
    bool eq7_only = false;              // report the eq-(7)-only verdicts as the headline
    std::set<int> zero_C_blocks;        // mutation hook: replace C(i) by 0
    std::optional<std::vector<int>> basis_perm; // fixture col j <- computed col perm[j]
    unsigned rebase_trials = 0;         // random re-basings of the quotient lifts
    std::uint64_t seed = 20240801;
};

/* End-to-end verification that every k-invariant of the kernel extension is
 * non-zero, i.e. the syzygy condition M(7) holds.  Intermediate artifacts
 * (kernel lattice, bases, blocks) are computed once and cached. */
class M7Pipeline {
public:
    explicit M7Pipeline(M7Options opt = {});

    Report verify_pi_module();
    const Lattice& kernel_K();
    Report verify_e_basis();
    Report verify_h_conjugation();
    Report verify_eta_elements();

    /* The 6x24 matrix of the projection on the quotient word basis
     * {1, X, ..., X^6, Y, YX, ..., Y^2X^6, Y^3, Y^4, Y^5}. */
    IntMatrix build_pibar_matrix();
    Report compare_pibar();

    Report build_quotient_and_rho();
    const Representation& rho();

    ExtensionBlocks extract_blocks(int i);
    KInvariantVerdict k_invariant_verdict(int i);

    /* Runs the whole chain and emits one report with every sub-result. */
    Report verify_M7();

    const P7Fixtures& fixtures() const { return fx_; }
    const RingElem& pi_element() const { return pi_; }
    const RingElem& eta(int i) const;

private:
    void ensure_kernel();
    void ensure_e_basis();
    void ensure_eta();
    void ensure_quotient();
    void ensure_phi();

    M7Options opt_;
    GroupParams P_;
    P7Fixtures fx_;
    RingElem pi_;
    Lattice lambda_;

    std::optional<Lattice> K_;
    std::optional<IntMatrix> e_basis_;      // 18 rows
    std::optional<IntMatrix> intersection_; // [y^3+1) ∩ [x-1)
    std::map<int, RingElem> eta_;
    std::optional<IntMatrix> sub30_;        // eta-blocks, 30 rows
    std::optional<IntMatrix> resid_;        // 6 quotient lifts (before f)
    std::optional<IntMatrix> resid_f_;      // after the change of basis by f
    std::optional<IntMatrix> pibar_;
    std::optional<BasisAction> phi_;        // on sub30 + resid_f
    std::optional<Representation> rho_;
};

/* Convenience wrappers used by the CLI. */
Report run_verify_m7(const M7Options& opt);

} // namespace gring
