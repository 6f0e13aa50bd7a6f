#pragma once
#include "gring/int_matrix.hpp"

#include <optional>
#include <vector>

namespace gring {

/* Row-style Hermite normal form: U*A = H with U unimodular, pivot entries
 * positive, entries above each pivot reduced into [0, pivot), zero rows last.
 * H is the canonical representative of the row lattice of A. */
struct HnfResult {
    IntMatrix H;
    IntMatrix U;
};
HnfResult hnf(const IntMatrix& A);

/* Nonzero rows of the HNF: a canonical basis of the row lattice. */
IntMatrix hnf_basis(const IntMatrix& A);

std::size_t lattice_rank(const IntMatrix& A);

/* Smith normal form: U*A*V = D diagonal, d1 | d2 | ... , nonnegative. */
struct SnfResult {
    IntMatrix D, U, V;
};
SnfResult snf(const IntMatrix& A);

std::vector<Int> elementary_divisors(const IntMatrix& A);

/* Basis of the left kernel {v : v*A = 0}, as rows. Computed from the HNF
 * transform, so the basis is saturated: the quotient of the ambient row
 * space by the kernel is torsion-free. */
IntMatrix kernel_basis(const IntMatrix& A);

/* Witness for non-solvability of A*X = B: position in the SNF-transformed
 * system where exact division fails (divisor 0 means a rank obstruction). */
struct NoSolutionCert {
    std::size_t row = 0, col = 0;
    Int divisor;
    Int value;
};

struct SolveResult {
    std::optional<IntMatrix> X;
    std::optional<NoSolutionCert> cert;
    bool solvable() const { return X.has_value(); }
};

/* Decide A*X = B over the integers (exactly, via SNF of A). */
SolveResult solve_right(const IntMatrix& A, const IntMatrix& B);

/* One Sylvester-style constraint L*X - X*R = C on a shared unknown X. */
struct SylvesterBlock {
    IntMatrix L, R, C;
};

/* Flatten all constraints into a single integer linear system over the
 * n*m unknowns of X and decide exact solvability. */
SolveResult solve_affine_system(const std::vector<SylvesterBlock>& blocks,
                                std::size_t n, std::size_t m);

/* Basis of rowlattice(A) ∩ rowlattice(B); both in the same ambient space. */
IntMatrix lattice_intersect(const IntMatrix& A, const IntMatrix& B);

bool lattice_equal(const IntMatrix& A, const IntMatrix& B);

/* Membership of a row vector in the row lattice of A. */
bool lattice_contains(const IntMatrix& A, const std::vector<Int>& v);

/* rowlattice(inner) ⊆ rowlattice(outer)? */
bool lattice_subset(const IntMatrix& inner, const IntMatrix& outer);

} // namespace gring
