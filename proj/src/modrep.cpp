#include "gring/modrep.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gring {

std::vector<std::string> representation_issues(const Representation& rep) {
    std::vector<std::string> issues;
    const int p = rep.params.p, m = rep.params.m;
    if (rep.X.rows() != rep.X.cols() || rep.Y.rows() != rep.Y.cols() || rep.X.rows() != rep.Y.rows()) {
        issues.push_back("generator matrices are not square of equal size");
        return issues;
    }
    if (!matpow(rep.X, static_cast<unsigned long>(p)).is_identity())
        issues.push_back("X^p != I");
    if (!matpow(rep.Y, static_cast<unsigned long>(p - 1)).is_identity())
        issues.push_back("Y^(p-1) != I");
    if (rep.X * rep.Y != rep.Y * matpow(rep.X, static_cast<unsigned long>(m)))
        issues.push_back("X*Y != Y*X^m");
    return issues;
}

Representation make_representation(GroupParams P, IntMatrix X, IntMatrix Y) {
    Representation rep{P, std::move(X), std::move(Y)};
    auto issues = representation_issues(rep);
    if (!issues.empty()) {
        std::ostringstream os;
        os << "representation relations violated:";
        for (const auto& s : issues) os << ' ' << s << ';';
        throw std::invalid_argument(os.str());
    }
    return rep;
}

BasisAction action_on_basis(const IntMatrix& basis, const IntMatrix& act_x, const IntMatrix& act_y) {
    // column convention: basis^T * N = (basis * act)^T
    SolveResult sx = solve_right(basis.transposed(), (basis * act_x).transposed());
    SolveResult sy = solve_right(basis.transposed(), (basis * act_y).transposed());
    if (!sx.X || !sy.X)
        throw std::invalid_argument("action_on_basis: basis is not closed under the action");
    return {std::move(*sx.X), std::move(*sy.X)};
}

Representation action_matrices(const Lattice& lat) {
    BasisAction ba = action_on_basis(lat.basis, lat.act_x, lat.act_y);
    return make_representation(lat.params, std::move(ba.X), std::move(ba.Y));
}

bool check_sigma_condition(const Representation& rep) {
    IntMatrix s(rep.dim(), rep.dim());
    IntMatrix xp = IntMatrix::identity(rep.dim());
    for (int i = 0; i < rep.params.p; ++i) {
        s = s + xp;
        if (i + 1 < rep.params.p) xp = xp * rep.X;
    }
    return s.is_zero();
}

std::pair<int, int> char_equation_for_row(int k) {
    switch (k) {
        case 1: return {-1, 1};
        case 2: return {+1, 2};
        case 3: return {-1, 0};
        case 4: return {+1, 1};
        case 5: return {-1, 2};
        case 6: return {+1, 0};
    }
    throw std::invalid_argument("char_equation_for_row: k out of range");
}

namespace {
IntMatrix char_condition_matrix(const Lattice& lat, int sign, int power) {
    IntMatrix ipx = IntMatrix::identity(lat.ambient_dim()) + lat.act_x;
    IntMatrix rhs = matpow(ipx, static_cast<unsigned long>(power));
    if (sign < 0) rhs = -rhs;
    return lat.act_y - rhs;
}
} // namespace

bool check_char_certificate(const Lattice& lat, const CharCertificate& cert) {
    IntMatrix M = char_condition_matrix(lat, cert.sign, cert.power);
    std::vector<Int> r = cert.v * M;
    for (const Int& t : r)
        if (t != 0) return false;
    return lattice_contains(lat.basis, cert.v) && generates_lattice(lat, cert.v);
}

std::optional<CharCertificate> find_char_generator(const Lattice& lat, int k) {
    auto [sign, power] = char_equation_for_row(k);
    IntMatrix M = char_condition_matrix(lat, sign, power);
    IntMatrix sols = lattice_intersect(kernel_basis(M), lat.basis);
    const std::size_t d = sols.rows();
    if (d == 0) return std::nullopt;

    auto try_vec = [&](const std::vector<Int>& v) -> bool {
        for (const Int& t : v)
            if (t != 0) return generates_lattice(lat, v);
        return false;
    };

    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Int> v = sols.row(i);
        if (try_vec(v)) return CharCertificate{k, v, sign, power};
    }
    // small integer combinations; first nonzero coefficient positive to skip
    // sign duplicates
    if (d >= 2 && d <= 4) {
        std::vector<int> c(d, -3);
        for (;;) {
            bool lead_ok = false;
            for (std::size_t i = 0; i < d; ++i) {
                if (c[i] > 0) { lead_ok = true; break; }
                if (c[i] < 0) break;
            }
            if (lead_ok) {
                std::vector<Int> v(sols.cols(), 0);
                for (std::size_t i = 0; i < d; ++i)
                    if (c[i] != 0)
                        for (std::size_t j = 0; j < sols.cols(); ++j) v[j] += c[i] * sols(i, j);
                if (try_vec(v)) return CharCertificate{k, v, sign, power};
            }
            std::size_t i = 0;
            while (i < d && c[i] == 3) c[i++] = -3;
            if (i == d) break;
            ++c[i];
        }
    }
    return std::nullopt;
}

bool is_isomorphic_to_row(const Lattice& lat, int k) {
    Representation rep = action_matrices(lat);
    if (!check_sigma_condition(rep)) return false;
    return find_char_generator(lat, k).has_value();
}

bool conjugacy_check(const IntMatrix& h, const Representation& A, const Representation& B) {
    if (!is_unimodular(h)) throw std::invalid_argument("conjugacy_check: h is not unimodular");
    return h * A.X == B.X * h && h * A.Y == B.Y * h;
}

namespace {
IntMatrix coords_in(const IntMatrix& basis, const IntMatrix& vectors, const char* what) {
    SolveResult s = solve_right(basis.transposed(), vectors.transposed());
    if (!s.X) throw std::invalid_argument(std::string(what) + ": not contained in the lattice");
    return s.X->transposed();
}
} // namespace

Representation quotient_rep_with_lifts(const Lattice& lat, const Lattice& sub, const IntMatrix& lifts) {
    coords_in(lat.basis, sub.basis, "quotient_rep: sub");
    IntMatrix stacked = sub.basis.vstack(lifts);
    if (!lattice_equal(stacked, lat.basis))
        throw std::invalid_argument("quotient_rep: sub + lifts is not a basis of the lattice");
    BasisAction ba = action_on_basis(stacked, lat.act_x, lat.act_y);
    const std::size_t k = sub.basis.rows(), q = lifts.rows();
    // columns of sub must stay in sub
    for (std::size_t r = k; r < k + q; ++r)
        for (std::size_t c = 0; c < k; ++c)
            if (ba.X(r, c) != 0 || ba.Y(r, c) != 0)
                throw std::logic_error("quotient_rep: sublattice not closed under the action");
    return make_representation(lat.params, ba.X.submatrix(k, k, q, q), ba.Y.submatrix(k, k, q, q));
}

Representation quotient_rep(const Lattice& lat, const Lattice& sub) {
    IntMatrix S = coords_in(lat.basis, sub.basis, "quotient_rep: sub");
    SnfResult s = snf(S);
    const std::size_t k = sub.basis.rows(), n = lat.basis.rows();
    for (std::size_t t = 0; t < k; ++t) {
        if (s.D(t, t) == 0) throw std::invalid_argument("quotient_rep: sub basis not independent");
        if (s.D(t, t) != 1) throw std::invalid_argument("quotient_rep: quotient has torsion");
    }
    // rowlattice(S) = rowlattice([I_k | 0] V^{-1}); the remaining rows of
    // V^{-1} project to a complement basis.
    SolveResult vinv = solve_right(s.V, IntMatrix::identity(n));
    IntMatrix comp_coords = vinv.X->submatrix(k, 0, n - k, n);
    IntMatrix lifts = comp_coords * lat.basis;
    return quotient_rep_with_lifts(lat, sub, lifts);
}

bool fullness_automorphism_check(int p, int r) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("fullness: p must be an odd prime");
    const int n = p - 1;
    if (r < 1 || r > p - 2) throw std::invalid_argument("fullness: need 1 <= r <= p-2");
    if (std::gcd(r, n) != 1) throw std::invalid_argument("fullness: gcd(r, p-1) must be 1");

    // Z[C_n] convolution on coefficient vectors of length n
    auto cmul = [n](const std::vector<Int>& u, const std::vector<Int>& v) {
        std::vector<Int> w(n);
        for (int i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (v[j] != 0) w[(i + j) % n] += u[i] * v[j];
        }
        return w;
    };
    std::vector<Int> ym1(n);
    ym1[0] = -1;
    ym1[1 % n] = 1;
    IntMatrix ideal(n, n);
    for (int k = 0; k < n; ++k) {
        std::vector<Int> yk(n);
        yk[k] = 1;
        ideal.set_row(static_cast<std::size_t>(k), cmul(ym1, yk));
    }
    IntMatrix ib = hnf_basis(ideal);
    std::vector<Int> sr(n);
    for (int k = 0; k < r; ++k) sr[k] += 1;
    IntMatrix image(ib.rows(), static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < ib.rows(); ++t) image.set_row(t, cmul(sr, ib.row(t)));
    if (!lattice_equal(image, ib)) return false;
    std::vector<Int> resid = sr;
    resid[0] -= r;
    return lattice_contains(ib, resid);
}

} // namespace gring
