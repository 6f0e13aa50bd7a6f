#include "gring/group_ring.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gring {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {
int pow_mod(int base, int exp, int mod) {
    long long r = 1, b = base % mod;
    if (b < 0) b += mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

int order_mod(int a, int p) {
    int o = 1, v = a % p;
    while (v != 1) {
        v = static_cast<int>(static_cast<long long>(v) * a % p);
        ++o;
        if (o > p) throw std::logic_error("order_mod: not a unit");
    }
    return o;
}
} // namespace

int smallest_primitive_root(int p) {
    for (int g = 2; g < p; ++g)
        if (order_mod(g, p) == p - 1) return g;
    throw std::invalid_argument("no primitive root (p not prime?)");
}

GroupParams::GroupParams(int p_, int m_) : p(p_), m(m_) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("GroupParams: p must be an odd prime");
    if (m < 2 || m >= p) throw std::invalid_argument("GroupParams: need 2 <= m < p");
    if (order_mod(m, p) != p - 1)
        throw std::invalid_argument("GroupParams: m must be a primitive root mod p");
}

GroupParams GroupParams::standard(int p_) {
    if (!is_prime(p_) || p_ < 3) throw std::invalid_argument("GroupParams: p must be an odd prime");
    return GroupParams(p_, smallest_primitive_root(p_));
}

GroupElem group_mul(const GroupParams& P, GroupElem g, GroupElem h) {
    // y^b x^c = x^{c*m^b} y^b
    int shift = pow_mod(P.m, g.b, P.p);
    int a = static_cast<int>((g.a + static_cast<long long>(h.a) * shift) % P.p);
    int b = (g.b + h.b) % (P.p - 1);
    return {a, b};
}

GroupElem group_inv(const GroupParams& P, GroupElem g) {
    int bi = (P.p - 1 - g.b) % (P.p - 1);
    int shift = pow_mod(P.m, bi, P.p);
    int ai = static_cast<int>(((P.p - static_cast<long long>(g.a) % P.p) * shift) % P.p);
    return {ai, bi};
}

GroupElem elem_at(const GroupParams& P, std::size_t idx) {
    return {static_cast<int>(idx % P.p), static_cast<int>(idx / P.p)};
}

bool RingElem::is_zero() const {
    for (const Int& v : c_)
        if (v != 0) return false;
    return true;
}

RingElem RingElem::monomial(GroupParams P, int a, int b, Int coeff) {
    RingElem u(P);
    a %= P.p;
    if (a < 0) a += P.p;
    b %= P.p - 1;
    if (b < 0) b += P.p - 1;
    u.c_[elem_index(P, {a, b})] = std::move(coeff);
    return u;
}

RingElem RingElem::x_poly(GroupParams P, const std::vector<long long>& coeffs) {
    RingElem u(P);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        u.c_[elem_index(P, {static_cast<int>(k % P.p), 0})] += coeffs[k];
    return u;
}

RingElem RingElem::sigma(GroupParams P) {
    RingElem u(P);
    for (int a = 0; a < P.p; ++a) u.c_[elem_index(P, {a, 0})] = 1;
    return u;
}

namespace {
void require_same(const RingElem& u, const RingElem& v) {
    if (!(u.params() == v.params())) throw std::invalid_argument("RingElem: params mismatch");
}
} // namespace

RingElem ring_add(const RingElem& u, const RingElem& v) {
    require_same(u, v);
    RingElem w(u.params());
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) w[i] = u[i] + v[i];
    return w;
}

RingElem ring_sub(const RingElem& u, const RingElem& v) {
    require_same(u, v);
    RingElem w(u.params());
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) w[i] = u[i] - v[i];
    return w;
}

RingElem ring_neg(const RingElem& u) {
    RingElem w(u.params());
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) w[i] = -u[i];
    return w;
}

RingElem ring_scale(const Int& c, const RingElem& u) {
    RingElem w(u.params());
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) w[i] = c * u[i];
    return w;
}

RingElem ring_mul(const RingElem& u, const RingElem& v) {
    require_same(u, v);
    const GroupParams& P = u.params();
    RingElem w(P);
    const std::size_t n = static_cast<std::size_t>(P.order());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        GroupElem g = elem_at(P, i);
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            GroupElem h = elem_at(P, j);
            w[elem_index(P, group_mul(P, g, h))] += u[i] * v[j];
        }
    }
    return w;
}

Int augmentation(const RingElem& u) {
    Int s = 0;
    for (const Int& v : u.coeffs()) s += v;
    return s;
}

IntMatrix left_mul_matrix(const RingElem& u) {
    const GroupParams& P = u.params();
    const std::size_t n = static_cast<std::size_t>(P.order());
    IntMatrix L(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        GroupElem h = elem_at(P, j);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            GroupElem g = elem_at(P, i);
            L(elem_index(P, group_mul(P, g, h)), j) += u[i];
        }
    }
    return L;
}

IntMatrix right_mul_matrix(const RingElem& u) {
    const GroupParams& P = u.params();
    const std::size_t n = static_cast<std::size_t>(P.order());
    IntMatrix R(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        GroupElem g = elem_at(P, i);
        for (std::size_t j = 0; j < n; ++j) {
            if (u[j] == 0) continue;
            GroupElem h = elem_at(P, j);
            R(i, elem_index(P, group_mul(P, g, h))) += u[j];
        }
    }
    return R;
}

RingElem build_pi(const GroupParams& P) {
    if (P.p != 7 || P.m != 3)
        throw std::invalid_argument("build_pi: defined for params (7,3) only");
    RingElem xm1 = ring_sub(RingElem::x_pow(P, 1), RingElem::one(P));
    RingElem mid = ring_add(
        ring_add(ring_mul(RingElem::x_poly(P, {2, 0, 1, 0, 0, 1}), RingElem::y_pow(P, 1)),
                 ring_mul(RingElem::x_poly(P, {-1, 0, 1, 2, 2, 1}), RingElem::y_pow(P, 2))),
        RingElem::y_pow(P, 3));
    RingElem tail = ring_sub(RingElem::one(P), RingElem::y_pow(P, 3));
    return ring_mul(ring_mul(xm1, mid), tail);
}

void write_ring_elem(std::ostream& os, const RingElem& u) {
    const GroupParams& P = u.params();
    os << P.p << ' ' << P.m << '\n';
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (u[i] == 0) continue;
        GroupElem g = elem_at(P, i);
        os << g.a << ' ' << g.b << ' ' << u[i] << '\n';
    }
}

RingElem read_ring_elem(std::istream& is) {
    int p = 0, m = 0;
    if (!(is >> p >> m)) throw std::runtime_error("ring elem header: expected \"p m\"");
    GroupParams P(p, m);
    RingElem u(P);
    int a, b;
    std::string coeff;
    while (is >> a >> b >> coeff) {
        if (a < 0 || a >= p || b < 0 || b >= p - 1)
            throw std::runtime_error("ring elem entry: exponents out of range");
        u[elem_index(P, {a, b})] += Int(coeff);
    }
    return u;
}

} // namespace gring
