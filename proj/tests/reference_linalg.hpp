#pragma once
#include "gring/int_matrix.hpp"

#include <vector>

/* Independent serial reference implementations used as oracles by the test
 * suites and as the baseline in the kernel benchmark.  Deliberately written
 * as plain repeated-gcd elimination, sharing no code with the library's
 * normal-form paths. */
namespace gring_ref {

using gring::Int;
using gring::IntMatrix;

/* Serial schoolbook product. */
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);

/* Canonical row-lattice basis by repeated integer gcd elimination (no
 * transform accumulation). */
IntMatrix hnf_basis(const IntMatrix& a);

bool row_lattice_member(const IntMatrix& basis_rows, const std::vector<Int>& v);

/* Rank via fraction-free elimination over Q. */
std::size_t rank(const IntMatrix& a);

/* Elementary divisors via the gcd-of-k-minors characterisation; practical
 * only for small matrices, which is all the oracle needs. */
std::vector<Int> elementary_divisors(const IntMatrix& a);

/* A*X = B has an integer solution iff every column of B lies in the column
 * lattice of A. */
bool solvable(const IntMatrix& A, const IntMatrix& B);

} // namespace gring_ref
