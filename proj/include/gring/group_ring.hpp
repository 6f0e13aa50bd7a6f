#pragma once
#include "gring/int_matrix.hpp"

#include <iosfwd>
#include <vector>

namespace gring {

/* The metacyclic group G(p, p-1) = <x, y | x^p, y^{p-1}, yx = x^m y>,
 * p an odd prime, m a primitive root mod p. */
struct GroupParams {
    int p;
    int m;

    GroupParams(int p_, int m_);
    /* Smallest primitive root mod p (3 for p=7, 2 for p=5,11,13). */
    static GroupParams standard(int p_);

    int order() const { return p * (p - 1); }
    bool operator==(const GroupParams&) const = default;
};

bool is_prime(int n);
int smallest_primitive_root(int p);

/* Normal form x^a y^b, 0 <= a < p, 0 <= b < p-1. */
struct GroupElem {
    int a = 0, b = 0;
    bool operator==(const GroupElem&) const = default;
};

GroupElem group_mul(const GroupParams& P, GroupElem g, GroupElem h);
GroupElem group_inv(const GroupParams& P, GroupElem g);

/* Canonical index of x^a y^b: b major, a minor. */
inline std::size_t elem_index(const GroupParams& P, GroupElem g) {
    return static_cast<std::size_t>(g.b) * P.p + g.a;
}
GroupElem elem_at(const GroupParams& P, std::size_t idx);

/* Element of Lambda = Z[G(p,p-1)] as an integer coefficient vector over the
 * canonical basis {x^a y^b}. */
class RingElem {
public:
    explicit RingElem(GroupParams P) : params_(P), c_(P.order()) {}

    const GroupParams& params() const { return params_; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int& operator[](std::size_t i) { return c_[i]; }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    Int coeff(GroupElem g) const { return c_[elem_index(params_, g)]; }

    bool operator==(const RingElem&) const = default;
    bool is_zero() const;

    static RingElem zero(GroupParams P) { return RingElem(P); }
    static RingElem one(GroupParams P) { return monomial(P, 0, 0); }
    static RingElem monomial(GroupParams P, int a, int b, Int coeff = 1);
    /* sum coeffs[k] * x^k */
    static RingElem x_poly(GroupParams P, const std::vector<long long>& coeffs);
    static RingElem x_pow(GroupParams P, int k) { return monomial(P, k, 0); }
    static RingElem y_pow(GroupParams P, int k) { return monomial(P, 0, k); }
    /* Sigma = 1 + x + ... + x^{p-1} */
    static RingElem sigma(GroupParams P);

private:
    GroupParams params_;
    std::vector<Int> c_;
};

RingElem ring_add(const RingElem& u, const RingElem& v);
RingElem ring_sub(const RingElem& u, const RingElem& v);
RingElem ring_neg(const RingElem& u);
RingElem ring_scale(const Int& c, const RingElem& u);
RingElem ring_mul(const RingElem& u, const RingElem& v);

/* Sum of coefficients: the ring homomorphism Lambda -> Z. */
Int augmentation(const RingElem& u);

/* Matrix of alpha |-> u*alpha in the canonical basis, column convention:
 * entry (i,j) is the coefficient of basis_i in u*basis_j.  Satisfies
 * left_mul_matrix(u*v) = left_mul_matrix(u)*left_mul_matrix(v). */
IntMatrix left_mul_matrix(const RingElem& u);

/* Matrix of alpha |-> alpha*u acting on coefficient ROW vectors from the
 * right: row g is the coefficient vector of basis_g * u.  Satisfies
 * right_mul_matrix(u*v) = right_mul_matrix(u)*right_mul_matrix(v). */
IntMatrix right_mul_matrix(const RingElem& u);

/* The element pi = (x-1)((2+x^2+x^5)y + (-1+x^2+2x^3+2x^4+x^5)y^2 + y^3)(1-y^3),
 * fully expanded.  Defined for params (7,3) only. */
RingElem build_pi(const GroupParams& P);

/* Text format: header "p m", then one line "a b coeff" per nonzero
 * coefficient, in canonical index order. */
void write_ring_elem(std::ostream& os, const RingElem& u);
RingElem read_ring_elem(std::istream& is);

} // namespace gring
