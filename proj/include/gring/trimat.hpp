#pragma once
#include "gring/int_matrix.hpp"
#include "gring/normal_form.hpp"

#include <string>
#include <vector>

namespace gring {

/* Element of T_{p-1}(Z,p): (p-1)x(p-1) integer matrix whose below-diagonal
 * entries are divisible by p. */
struct TriMatrix {
    int p;
    IntMatrix m;
};

bool tri_shape_ok(int p, const IntMatrix& m);
TriMatrix make_tri(int p, IntMatrix m); // throws on shape violation
bool is_tri_unit(const TriMatrix& t);   // det = +-1

/* The two generator-action matrices for the right Lambda-module structure of
 * T_{p-1}: row vectors act by t*x = t*lx, t*y = t*ly.  As row-action
 * matrices they satisfy ly*lx = lx^m*ly, lx^p = I, ly^{p-1} = I. */
struct LambdaFixture {
    int p;
    IntMatrix lx, ly;
};

/* Load lambda matrices from <dir>/p<p>/lambda_x.mat, lambda_y.mat.
 * Throws std::runtime_error for unsupported primes (missing files). */
LambdaFixture load_lambda_fixture(int p, const std::string& fixtures_dir);
bool lambda_fixture_available(int p, const std::string& fixtures_dir);

/* Invariant validation; failures are reported, never repaired. */
std::vector<std::string> validate_lambda_fixture(const LambdaFixture& fix);

/* Z-basis of the row module R(i): e_j scaled by p when j < i (1-based). */
IntMatrix row_basis(int p, int i);

/* Basis of the lattice of integer matrices M with R(i)*M inside R(j) that
 * commute with both action matrices; rows are the matrices flattened
 * row-major.  Expected: rank 1, generated by I (i >= j) or p*I (i < j). */
IntMatrix hom_lattice(int p, int i, int j, const LambdaFixture& fix);

IntMatrix unflatten(const std::vector<Int>& v, std::size_t n);

/* Basis of the homs R(i) -> Lambda (as 6x|G| matrices, flattened), computed
 * as the integer intertwiner lattice; reusable across hom_der_order cells. */
IntMatrix homs_to_regular(int p, int i, const LambdaFixture& fix);

/* Order of Hom(R(i),R(j)) modulo the subgroup of homs factoring through a
 * free module (generated by all composites R(i) -> Lambda -> R(j)).
 * Expected p when i = j and 1 otherwise.  Returns 0 if the factoring
 * subgroup has deficient rank (finite order does not exist). */
Int hom_der_order(int p, int i, int j, const LambdaFixture& fix);
Int hom_der_order(int p, int i, int j, const LambdaFixture& fix, const IntMatrix& homs_to_free);

/* Unit of T_{p-1}(Z,p) whose diagonal is congruent mod p to the prescribed
 * residues at every position except free_slot (1-based), built from 2x2
 * Bezout blocks coupling each constrained position with the free slot.
 * residues[k] belongs to the k-th constrained position in increasing order.
 * Zero residues are rejected. */
TriMatrix bezout_unit(int p, int free_slot, const std::vector<int>& residues);

/* Necessary condition for a unit of T_{p-1}(Z,p) with the given diagonal
 * residues: for units, det == prod(diag) mod p, so prod must be +-1. */
bool diag_residue_obstruction(int p, const std::vector<int>& residues);

/* Endomorphism shape for R(2) + R(1-hat) in the component order
 * (R(2), R(2), R(3), ..., R(p-1)): entry (i,j) needs p-divisibility exactly
 * when the j-th component maps into a strictly later row module. */
bool end_shape_ok(int p, const IntMatrix& m);

/* (a_{1,2}, a_{2,2}, a_{3,3}, ..., a_{p-1,p-1}) mod p; throws on shape violation. */
std::vector<int> k_map_313(int p, const IntMatrix& m);

enum class Aut313Kind {
    upper_n,      // [[1,n],[0,1]] block, identity elsewhere
    swap_block,   // [[0,1],[1,0]] block
    scale_22,     // k-value (0,2,1,...,1)
    couple_13,    // k-value (0,1,2,1,...,1)
    couple_34,    // k-value (0,1,(p+1)/2,2,1,...,1)
};

/* The five explicit automorphism generators; det +-1, correct shape and
 * k-value checked before returning. */
IntMatrix aut_generator_313(int p, Aut313Kind kind, long long n = 0);

/* Automorphism with prescribed k-value (a12, a22, a33, ..., a_{p-1,p-1}):
 * a 2x2 unimodular block realising (a12, a22), composed with one Bezout
 * block per diagonal slot.  Preconditions: (a12,a22) not both 0 mod p,
 * a_ii nonzero mod p for the diagonal slots. */
IntMatrix unit_for_target_313(int p, const std::vector<int>& target);

} // namespace gring
