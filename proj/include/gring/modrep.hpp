#pragma once
#include "gring/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gring {

/* Integer representation data for a Lambda-lattice in a chosen Z-basis,
 * column convention: basis_j * g = sum_r M(g)[r][j] * basis_r, with
 * X = M(x), Y = M(y).  Relations: X^p = I, Y^{p-1} = I, X*Y = Y*X^m. */
struct Representation {
    GroupParams params;
    IntMatrix X, Y;

    std::size_t dim() const { return X.rows(); }
};

/* Empty if the relations hold; otherwise one message per violation. */
std::vector<std::string> representation_issues(const Representation& rep);

/* Throwing constructor-style check. */
Representation make_representation(GroupParams P, IntMatrix X, IntMatrix Y);

/* Column-convention action matrices of act_x/act_y on the given basis rows.
 * Throws if the rows are not closed under the action (no integer solution). */
struct BasisAction {
    IntMatrix X, Y;
};
BasisAction action_on_basis(const IntMatrix& basis, const IntMatrix& act_x, const IntMatrix& act_y);

/* Express the ambient action in the lattice's own basis; relations re-verified. */
Representation action_matrices(const Lattice& lat);

/* True iff Sigma = 1 + x + ... + x^{p-1} acts as zero: sum_i X^i = 0. */
bool check_sigma_condition(const Representation& rep);

/* Generator certificate for the row-module characteristic equations:
 * v*y = sign * v*(1+x)^power, with v generating the lattice over Lambda. */
struct CharCertificate {
    int k = 0;
    std::vector<Int> v;
    int sign = 1;
    int power = 0;
};

/* The (sign, power) table for rows k = 1..6 of T_6(Z,7). */
std::pair<int, int> char_equation_for_row(int k);

/* Search the lattice for a generator v with v*y = sign*v*(1+x)^power.
 * Candidates come from the solution sublattice of the linear condition:
 * its HNF basis rows plus small integer combinations (coefficients in
 * [-3,3]).  Returns nullopt if no generating solution is found. */
std::optional<CharCertificate> find_char_generator(const Lattice& lat, int k);

/* Re-evaluate a certificate from scratch on the lattice's ambient action. */
bool check_char_certificate(const Lattice& lat, const CharCertificate& cert);

/* M is isomorphic to R(k) iff M(Sigma) holds and a char generator exists. */
bool is_isomorphic_to_row(const Lattice& lat, int k);

/* h*A*h^{-1} == B for both generator matrices (tested as h*A == B*h);
 * throws if h is not unimodular. */
bool conjugacy_check(const IntMatrix& h, const Representation& A, const Representation& B);

/* Action on a complement of sub inside lat.  The complement basis is chosen
 * from the Smith normal form of the coordinate matrix of sub in lat (so the
 * Z-splitting is exact); quotient must be torsion-free. */
Representation quotient_rep(const Lattice& lat, const Lattice& sub);

/* Same, with a caller-prescribed complement (rows in the ambient space).
 * sub.basis stacked on lifts must be a Z-basis of lat. */
Representation quotient_rep_with_lifts(const Lattice& lat, const Lattice& sub, const IntMatrix& lifts);

/* Over Z[C_{p-1}]: multiplication by 1+y+...+y^{r-1} maps the augmentation
 * ideal [y-1)' onto itself, and -r + (1+y+...+y^{r-1}) lies in [y-1)'.
 * Requires gcd(r, p-1) = 1. */
bool fullness_automorphism_check(int p, int r);

} // namespace gring
