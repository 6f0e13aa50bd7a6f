#include "gring/trimat.hpp"

#include "gring/group_ring.hpp"

#include <filesystem>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gring {

bool tri_shape_ok(int p, const IntMatrix& m) {
    if (m.rows() != static_cast<std::size_t>(p - 1) || m.cols() != static_cast<std::size_t>(p - 1))
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m(i, j) % p != 0) return false;
    return true;
}

TriMatrix make_tri(int p, IntMatrix m) {
    if (!tri_shape_ok(p, m)) throw std::invalid_argument("TriMatrix: below-diagonal entries must be divisible by p");
    return {p, std::move(m)};
}

bool is_tri_unit(const TriMatrix& t) {
    Int d = determinant(t.m);
    return d == 1 || d == -1;
}

static std::string lambda_path(int p, const std::string& dir, const char* which) {
    return dir + "/p" + std::to_string(p) + "/lambda_" + which + ".mat";
}

bool lambda_fixture_available(int p, const std::string& fixtures_dir) {
    return std::filesystem::exists(lambda_path(p, fixtures_dir, "x")) &&
           std::filesystem::exists(lambda_path(p, fixtures_dir, "y"));
}

LambdaFixture load_lambda_fixture(int p, const std::string& fixtures_dir) {
    if (!lambda_fixture_available(p, fixtures_dir))
        throw std::runtime_error("no lambda fixture for p=" + std::to_string(p) + " under " + fixtures_dir);
    return {p, read_matrix_file(lambda_path(p, fixtures_dir, "x")),
            read_matrix_file(lambda_path(p, fixtures_dir, "y"))};
}

std::vector<std::string> validate_lambda_fixture(const LambdaFixture& fix) {
    std::vector<std::string> issues;
    const int p = fix.p;
    const std::size_t n = static_cast<std::size_t>(p - 1);
    if (fix.lx.rows() != n || fix.lx.cols() != n || fix.ly.rows() != n || fix.ly.cols() != n) {
        issues.push_back("lambda matrices have wrong dimensions");
        return issues;
    }
    const int m = smallest_primitive_root(p);
    if (!matpow(fix.lx, static_cast<unsigned long>(p)).is_identity()) issues.push_back("lx^p != I");
    if (!matpow(fix.ly, static_cast<unsigned long>(p - 1)).is_identity()) issues.push_back("ly^(p-1) != I");
    if (fix.ly * fix.lx != matpow(fix.lx, static_cast<unsigned long>(m)) * fix.ly)
        issues.push_back("ly*lx != lx^m*ly (metacyclic relation)");
    if (!tri_shape_ok(p, fix.lx)) issues.push_back("lx not in T shape");
    if (!tri_shape_ok(p, fix.ly)) issues.push_back("ly not in T shape");
    if (!is_unimodular(fix.lx)) issues.push_back("lx not unimodular");
    if (!is_unimodular(fix.ly)) issues.push_back("ly not unimodular");
    return issues;
}

IntMatrix row_basis(int p, int i) {
    if (i < 1 || i > p - 1) throw std::out_of_range("row_basis: need 1 <= i <= p-1");
    const std::size_t n = static_cast<std::size_t>(p - 1);
    IntMatrix b(n, n);
    for (std::size_t j = 0; j < n; ++j) b(j, j) = (static_cast<int>(j) + 1 < i) ? p : 1;
    return b;
}

IntMatrix unflatten(const std::vector<Int>& v, std::size_t n) {
    IntMatrix m(n, v.size() / n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = v[i * m.cols() + j];
    return m;
}

namespace {

/* Sublattice of span(base rows) cut out by congruences: rows c of the output
 * are coordinate vectors (w.r.t. base) with conds * (c-combination) = 0 mod p.
 * conds maps flattened vectors to residues. */
IntMatrix congruence_sublattice(const IntMatrix& base, const IntMatrix& conds, int p) {
    const std::size_t nb = base.rows(), nc = conds.rows();
    if (nc == 0) return hnf_basis(base);
    // T[t][cond] = conds(cond) . base(t)
    IntMatrix T(nb + nc, nc);
    for (std::size_t t = 0; t < nb; ++t)
        for (std::size_t c = 0; c < nc; ++c) {
            Int s = 0;
            for (std::size_t k = 0; k < base.cols(); ++k) s += conds(c, k) * base(t, k);
            T(t, c) = s;
        }
    for (std::size_t c = 0; c < nc; ++c) T(nb + c, c) = -p;
    IntMatrix K = kernel_basis(T); // rows (c, d) with c*T_top = p*d
    IntMatrix out(K.rows(), base.cols());
    for (std::size_t r = 0; r < K.rows(); ++r)
        for (std::size_t k = 0; k < base.cols(); ++k) {
            Int s = 0;
            for (std::size_t t = 0; t < nb; ++t) s += K(r, t) * base(t, k);
            out(r, k) = s;
        }
    return hnf_basis(out);
}

/* Integer solutions T (a x b, flattened) of  L*T = T*R  for each pair. */
IntMatrix intertwiner_lattice(const std::vector<std::pair<IntMatrix, IntMatrix>>& pairs,
                              std::size_t a, std::size_t b) {
    const std::size_t unknowns = a * b;
    std::size_t neq = 0;
    for (const auto& pr : pairs) neq += pr.first.rows() * b;
    IntMatrix E(neq, unknowns);
    std::size_t e = 0;
    for (const auto& [L, R] : pairs) {
        for (std::size_t r = 0; r < a; ++r)
            for (std::size_t s = 0; s < b; ++s) {
                for (std::size_t k = 0; k < a; ++k) E(e, k * b + s) += L(r, k);
                for (std::size_t k = 0; k < b; ++k) E(e, r * b + k) -= R(k, s);
                ++e;
            }
    }
    return kernel_basis(E.transposed());
}

IntMatrix row_action(const IntMatrix& basis, const IntMatrix& act) {
    // row convention M: M * basis = basis * act
    SolveResult s = solve_right(basis.transposed(), (basis * act).transposed());
    if (!s.X) throw std::logic_error("row module not closed under action");
    return s.X->transposed();
}

} // namespace

IntMatrix hom_lattice(int p, int i, int j, const LambdaFixture& fix) {
    const std::size_t n = static_cast<std::size_t>(p - 1);
    IntMatrix comm = intertwiner_lattice({{fix.lx, fix.lx}, {fix.ly, fix.ly}}, n, n);
    // divisibility: rows of R(i)*M must lie in R(j):  p | (b*M)_k for k < j-1
    IntMatrix Bi = row_basis(p, i);
    std::vector<std::vector<Int>> conds;
    for (std::size_t r = 0; r < n; ++r)
        for (int k = 0; k + 1 < j; ++k) {
            std::vector<Int> cond(n * n, 0);
            for (std::size_t t = 0; t < n; ++t) cond[t * n + k] = Bi(r, t);
            conds.push_back(std::move(cond));
        }
    IntMatrix C(conds.size(), n * n);
    for (std::size_t r = 0; r < conds.size(); ++r) C.set_row(r, conds[r]);
    return congruence_sublattice(comm, C, p);
}

IntMatrix homs_to_regular(int p, int i, const LambdaFixture& fix) {
    GroupParams P = GroupParams::standard(p);
    const std::size_t n = static_cast<std::size_t>(p - 1);
    const std::size_t g = static_cast<std::size_t>(P.order());
    IntMatrix Bi = row_basis(p, i);
    IntMatrix Mx = row_action(Bi, fix.lx);
    IntMatrix My = row_action(Bi, fix.ly);
    IntMatrix Rx = right_mul_matrix(RingElem::x_pow(P, 1));
    IntMatrix Ry = right_mul_matrix(RingElem::y_pow(P, 1));
    return intertwiner_lattice({{Mx, Rx}, {My, Ry}}, n, g);
}

Int hom_der_order(int p, int i, int j, const LambdaFixture& fix) {
    return hom_der_order(p, i, j, fix, homs_to_regular(p, i, fix));
}

Int hom_der_order(int p, int i, int j, const LambdaFixture& fix, const IntMatrix& homs_to_free) {
    GroupParams P = GroupParams::standard(p);
    const std::size_t n = static_cast<std::size_t>(p - 1);
    const std::size_t g = static_cast<std::size_t>(P.order());
    IntMatrix H = hom_lattice(p, i, j, fix);
    IntMatrix Bi = row_basis(p, i);
    IntMatrix Bj = row_basis(p, j);

    // W_w: |G| x (p-1), row g = w * act(g); composite hom = T*W in R(i)-basis
    // coordinates, then converted to an ambient right-multiplication matrix.
    std::vector<IntMatrix> Ws;
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Int> w = Bj.row(r);
        IntMatrix W(g, n);
        std::vector<Int> vy = w;
        for (int b = 0; b < p - 1; ++b) {
            std::vector<Int> vv = vy;
            for (int a = 0; a < p; ++a) {
                W.set_row(elem_index(P, {a, b}), vv);
                vv = vv * fix.lx;
            }
            vy = vy * fix.ly;
        }
        Ws.push_back(std::move(W));
    }

    IntMatrix coords(homs_to_free.rows() * n, H.rows());
    std::size_t rr = 0;
    for (std::size_t t = 0; t < homs_to_free.rows(); ++t) {
        IntMatrix T = unflatten(homs_to_free.row(t), n);
        for (const IntMatrix& W : Ws) {
            IntMatrix Pmat = T * W; // R(i)-basis -> ambient
            SolveResult conv = solve_right(Bi, Pmat);
            if (!conv.X) throw std::logic_error("composite hom is not an ambient integer matrix");
            std::vector<Int> flat(n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = (*conv.X)(a, b);
            SolveResult co = solve_right(H.transposed(), unflatten(flat, flat.size()).transposed());
            if (!co.X) throw std::logic_error("composite hom outside the hom lattice");
            for (std::size_t c = 0; c < H.rows(); ++c) coords(rr, c) = (*co.X)(c, 0);
            ++rr;
        }
    }
    std::vector<Int> divs = elementary_divisors(coords);
    if (divs.size() < H.rows()) return 0; // factoring subgroup has deficient rank
    Int order = 1;
    for (const Int& d : divs) order *= d;
    return order;
}

namespace {
int mod_inverse(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    for (int t = 1; t < p; ++t)
        if (t * a % p == 1) return t;
    throw std::invalid_argument("residue not invertible mod p");
}

/* 2x2 Bezout block on slots (lo, hi), 0-based, with prescribed residue at
 * `target` slot (the other slot absorbs the inverse); the p-divisible entry
 * sits below the diagonal at (hi, lo). */
void apply_bezout_block(IntMatrix& U, int p, std::size_t lo, std::size_t hi,
                        std::size_t target, int residue) {
    int a = residue % p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("bezout block: residue must be nonzero mod p");
    int d = mod_inverse(a, p);
    Int k = (Int(a) * d - 1) / p;
    IntMatrix B = IntMatrix::identity(U.rows());
    if (target == lo) {
        B(lo, lo) = a;
        B(lo, hi) = k;
        B(hi, lo) = p;
        B(hi, hi) = d; // det = a*d - k*p = 1
    } else {
        B(hi, hi) = a;
        B(hi, lo) = p;
        B(lo, hi) = k;
        B(lo, lo) = d; // det = d*a - k*p = 1
    }
    U = U * B;
}
} // namespace

TriMatrix bezout_unit(int p, int free_slot, const std::vector<int>& residues) {
    const std::size_t n = static_cast<std::size_t>(p - 1);
    if (free_slot < 1 || free_slot > p - 1) throw std::out_of_range("bezout_unit: free slot");
    if (residues.size() != n - 1) throw std::invalid_argument("bezout_unit: need p-2 residues");
    IntMatrix U = IntMatrix::identity(n);
    std::size_t idx = 0;
    for (int pos = 1; pos <= p - 1; ++pos) {
        if (pos == free_slot) continue;
        int c = residues[idx++];
        if (c % p == 0) throw std::invalid_argument("bezout_unit: zero residue rejected");
        std::size_t i = static_cast<std::size_t>(pos - 1);
        std::size_t f = static_cast<std::size_t>(free_slot - 1);
        apply_bezout_block(U, p, std::min(i, f), std::max(i, f), i, c);
    }
    TriMatrix t = make_tri(p, std::move(U));
    if (!is_tri_unit(t)) throw std::logic_error("bezout_unit: constructed matrix is not a unit");
    return t;
}

bool diag_residue_obstruction(int p, const std::vector<int>& residues) {
    if (residues.size() != static_cast<std::size_t>(p - 1))
        throw std::invalid_argument("diag_residue_obstruction: need p-1 residues");
    long long prod = 1;
    for (int r : residues) {
        prod = prod * (((r % p) + p) % p) % p;
    }
    return prod == 1 || prod == p - 1;
}

bool end_shape_ok(int p, const IntMatrix& m) {
    const std::size_t n = static_cast<std::size_t>(p - 1);
    if (m.rows() != n || m.cols() != n) return false;
    // component r-values (2, 2, 3, 4, ..., p-1); entry (i,j) maps component j
    // into component i and needs p-divisibility when r[j] < r[i]
    auto rv = [](std::size_t t) { return t < 2 ? 2 : static_cast<int>(t) + 1; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rv(j) < rv(i) && m(i, j) % p != 0) return false;
    return true;
}

std::vector<int> k_map_313(int p, const IntMatrix& m) {
    if (!end_shape_ok(p, m)) throw std::invalid_argument("k_map_313: endomorphism shape violated");
    auto red = [p](const Int& v) {
        Int r = v % p;
        if (r < 0) r += p;
        return static_cast<int>(r);
    };
    std::vector<int> k;
    k.push_back(red(m(0, 1)));
    k.push_back(red(m(1, 1)));
    for (std::size_t t = 2; t < m.rows(); ++t) k.push_back(red(m(t, t)));
    return k;
}

IntMatrix aut_generator_313(int p, Aut313Kind kind, long long n) {
    const std::size_t sz = static_cast<std::size_t>(p - 1);
    IntMatrix A = IntMatrix::identity(sz);
    switch (kind) {
        case Aut313Kind::upper_n:
            A(0, 1) = n;
            break;
        case Aut313Kind::swap_block:
            A(0, 0) = 0;
            A(1, 1) = 0;
            A(0, 1) = 1;
            A(1, 0) = 1;
            break;
        case Aut313Kind::scale_22:
            A(0, 0) = (p + 1) / 2;
            A(1, 0) = -1;
            A(1, 1) = 2;
            A(0, 2) = 1;
            A(2, 1) = p;
            break;
        case Aut313Kind::couple_13:
            A(0, 0) = (p + 1) / 2;
            A(0, 2) = 1;
            A(2, 0) = p;
            A(2, 2) = 2;
            break;
        case Aut313Kind::couple_34:
            A(2, 2) = (p + 1) / 2;
            A(2, 3) = 1;
            A(3, 2) = p;
            A(3, 3) = 2;
            break;
        default:
            throw std::invalid_argument("aut_generator_313: unknown kind");
    }
    if (!is_unimodular(A)) throw std::logic_error("aut_generator_313: generator not unimodular");
    if (!end_shape_ok(p, A)) throw std::logic_error("aut_generator_313: generator shape violated");
    return A;
}

IntMatrix unit_for_target_313(int p, const std::vector<int>& target) {
    const std::size_t n = static_cast<std::size_t>(p - 1);
    if (target.size() != n) throw std::invalid_argument("unit_for_target_313: need p-1 residues");
    int a12 = ((target[0] % p) + p) % p;
    int a22 = ((target[1] % p) + p) % p;
    if (a12 == 0 && a22 == 0)
        throw std::invalid_argument("unit_for_target_313: (a12, a22) must not both vanish mod p");
    for (std::size_t t = 2; t < n; ++t)
        if (target[t] % p == 0)
            throw std::invalid_argument("unit_for_target_313: diagonal residues must be nonzero mod p");

    // 2x2 unimodular block with second column = (a12, a22) mod p
    long long b = a12, d = a22;
    if (b == 0) b = p;
    while (std::gcd(b, d) != 1) d += p;
    // complete: a*d - c*b = 1
    long long g0 = 0, x0 = 0, y0 = 0;
    {
        // extended gcd of d and b
        long long r0 = d, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
            std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
            std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
        }
        g0 = r0;
        x0 = s0;
        y0 = t0; // x0*d + y0*b = g0 = 1
    }
    if (g0 != 1) throw std::logic_error("unit_for_target_313: gcd completion failed");
    IntMatrix U = IntMatrix::identity(n);
    U(0, 0) = x0;
    U(0, 1) = b;
    U(1, 0) = -y0;
    U(1, 1) = d; // det = x0*d + y0*b = 1
    if (!end_shape_ok(p, U)) throw std::logic_error("unit_for_target_313: stage block shape violated");
    for (std::size_t t = 2; t < n; ++t) {
        // Bezout block coupling slot t with slot 0 (a second R(2) component,
        // whose k-value entries a_{1,2}, a_{2,2} it does not touch)
        apply_bezout_block(U, p, 0, t, t, target[t]);
        if (!end_shape_ok(p, U)) throw std::logic_error("unit_for_target_313: intermediate shape violated");
    }
    if (!is_unimodular(U)) throw std::logic_error("unit_for_target_313: result not unimodular");
    std::vector<int> k = k_map_313(p, U);
    for (std::size_t t = 0; t < n; ++t) {
        int want = ((target[t] % p) + p) % p;
        if (k[t] != want) throw std::logic_error("unit_for_target_313: k-value mismatch");
    }
    return U;
}

} // namespace gring
