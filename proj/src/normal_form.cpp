#include "gring/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gring {

namespace {

constexpr std::size_t kParallelCols = 96;

// r_i -= q * r_j over the tails of two rows of A (and the transform U).
void row_axpy(IntMatrix& A, std::size_t i, std::size_t j, const Int& q, std::size_t from) {
    if (q == 0) return;
    const std::size_t m = A.cols();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (m - from >= kParallelCols)
#endif
    for (long long cc = static_cast<long long>(from); cc < static_cast<long long>(m); ++cc) {
        const auto c = static_cast<std::size_t>(cc);
        A(i, c) -= q * A(j, c);
    }
}

void row_negate(IntMatrix& A, std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
}

} // namespace

HnfResult hnf(const IntMatrix& Ain) {
    IntMatrix A = Ain;
    const std::size_t n = A.rows(), m = A.cols();
    IntMatrix U = IntMatrix::identity(n);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && A(piv, c) == 0) ++piv;
        if (piv == n) continue;
        A.swap_rows(r, piv);
        U.swap_rows(r, piv);
        // Euclid on column c against all rows below r.
        for (;;) {
            bool clear = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (A(i, c) == 0) continue;
                clear = false;
                if (A(r, c) == 0 || abs(A(i, c)) < abs(A(r, c))) {
                    A.swap_rows(r, i);
                    U.swap_rows(r, i);
                }
                Int q = A(i, c) / A(r, c);
                row_axpy(A, i, r, q, c);
                row_axpy(U, i, r, q, 0);
            }
            if (clear) break;
        }
        if (A(r, c) < 0) {
            row_negate(A, r);
            row_negate(U, r);
        }
        // reduce the column above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q = A(i, c) / A(r, c);
            if (A(i, c) - q * A(r, c) < 0) q -= 1; // floor division
            row_axpy(A, i, r, q, c);
            row_axpy(U, i, r, q, 0);
        }
        ++r;
    }
    return {std::move(A), std::move(U)};
}

IntMatrix hnf_basis(const IntMatrix& A) {
    HnfResult h = hnf(A);
    std::size_t nz = 0;
    for (std::size_t i = 0; i < h.H.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.H.cols(); ++j)
            if (h.H(i, j) != 0) { zero = false; break; }
        if (!zero) nz = i + 1;
    }
    return h.H.submatrix(0, 0, nz, h.H.cols());
}

std::size_t lattice_rank(const IntMatrix& A) { return hnf_basis(A).rows(); }

SnfResult snf(const IntMatrix& Ain) {
    IntMatrix A = Ain;
    const std::size_t n = A.rows(), m = A.cols();
    IntMatrix U = IntMatrix::identity(n);
    IntMatrix V = IntMatrix::identity(m);

    auto col_axpy = [&](std::size_t j, std::size_t k, const Int& q) {
        // col j -= q * col k
        if (q == 0) return;
        for (std::size_t i = 0; i < n; ++i) A(i, j) -= q * A(i, k);
        for (std::size_t i = 0; i < m; ++i) V(i, j) -= q * V(i, k);
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < n; ++i) std::swap(A(i, j), A(i, k));
        for (std::size_t i = 0; i < m; ++i) std::swap(V(i, j), V(i, k));
    };

    const std::size_t kmax = std::min(n, m);
    for (std::size_t t = 0; t < kmax; ++t) {
        // locate a pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < n && !found; ++i)
            for (std::size_t j = t; j < m && !found; ++j)
                if (A(i, j) != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        A.swap_rows(t, pi);
        U.swap_rows(t, pi);
        col_swap(t, pj);
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (A(i, t) == 0) continue;
                if (A(t, t) == 0 || abs(A(i, t)) < abs(A(t, t))) {
                    A.swap_rows(t, i);
                    U.swap_rows(t, i);
                }
                Int q = A(i, t) / A(t, t);
                row_axpy(A, i, t, q, 0);
                row_axpy(U, i, t, q, 0);
                if (A(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (A(t, j) == 0) continue;
                if (A(t, t) == 0 || abs(A(t, j)) < abs(A(t, t))) col_swap(t, j);
                Int q = A(t, j) / A(t, t);
                col_axpy(j, t, q);
                if (A(t, j) != 0) dirty = true;
            }
            if (!dirty) {
                bool rowz = true, colz = true;
                for (std::size_t i = t + 1; i < n; ++i)
                    if (A(i, t) != 0) rowz = false;
                for (std::size_t j = t + 1; j < m; ++j)
                    if (A(t, j) != 0) colz = false;
                if (rowz && colz) break;
            }
        }
    }
    for (std::size_t t = 0; t < kmax; ++t) {
        if (A(t, t) < 0) {
            row_negate(A, t);
            row_negate(U, t);
        }
    }
    // enforce the divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t + 1 < kmax; ++t) {
            const Int &a = A(t, t), &b = A(t + 1, t + 1);
            if (a != 0 && b != 0 && b % a != 0) {
                // fold d_{t+1} into column t, re-run Euclid on the 2x2 block
                for (std::size_t i = 0; i < n; ++i) A(i, t) += A(i, t + 1);
                for (std::size_t i = 0; i < m; ++i) V(i, t) += V(i, t + 1);
                while (A(t + 1, t) != 0) {
                    if (A(t, t) == 0 || abs(A(t + 1, t)) < abs(A(t, t))) {
                        A.swap_rows(t, t + 1);
                        U.swap_rows(t, t + 1);
                    }
                    Int q = A(t + 1, t) / A(t, t);
                    row_axpy(A, t + 1, t, q, 0);
                    row_axpy(U, t + 1, t, q, 0);
                }
                while (A(t, t + 1) != 0) {
                    if (A(t, t) == 0 || abs(A(t, t + 1)) < abs(A(t, t))) col_swap(t, t + 1);
                    Int q = A(t, t + 1) / A(t, t);
                    col_axpy(t + 1, t, q);
                }
                if (A(t, t) < 0) {
                    row_negate(A, t);
                    row_negate(U, t);
                }
                if (A(t + 1, t + 1) < 0) {
                    row_negate(A, t + 1);
                    row_negate(U, t + 1);
                }
                changed = true;
            }
        }
    }
    return {std::move(A), std::move(U), std::move(V)};
}

std::vector<Int> elementary_divisors(const IntMatrix& A) {
    SnfResult s = snf(A);
    std::vector<Int> d;
    for (std::size_t t = 0; t < std::min(A.rows(), A.cols()); ++t)
        if (s.D(t, t) != 0) d.push_back(s.D(t, t));
    return d;
}

IntMatrix kernel_basis(const IntMatrix& A) {
    HnfResult h = hnf(A);
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = 0; i < h.H.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.H.cols(); ++j)
            if (h.H(i, j) != 0) { zero = false; break; }
        if (zero) zero_rows.push_back(i);
    }
    IntMatrix K(zero_rows.size(), A.rows());
    for (std::size_t t = 0; t < zero_rows.size(); ++t)
        for (std::size_t j = 0; j < A.rows(); ++j) K(t, j) = h.U(zero_rows[t], j);
    return K;
}

SolveResult solve_right(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve_right: row mismatch");
    SnfResult s = snf(A);
    const std::size_t n = A.rows(), m = A.cols(), q = B.cols();
    IntMatrix UB = s.U * B;
    IntMatrix Y(m, q);
    const std::size_t kmax = std::min(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        Int d = i < kmax ? s.D(i, i) : Int(0);
        for (std::size_t j = 0; j < q; ++j) {
            if (d == 0) {
                if (UB(i, j) != 0)
                    return {std::nullopt, NoSolutionCert{i, j, 0, UB(i, j)}};
            } else {
                if (UB(i, j) % d != 0)
                    return {std::nullopt, NoSolutionCert{i, j, d, UB(i, j)}};
                Y(i, j) = UB(i, j) / d;
            }
        }
    }
    return {s.V * Y, std::nullopt};
}

SolveResult solve_affine_system(const std::vector<SylvesterBlock>& blocks,
                                std::size_t n, std::size_t m) {
    std::size_t neq = 0;
    for (const auto& b : blocks) {
        if (b.L.cols() != n || b.L.rows() != b.C.rows() || b.R.rows() != m ||
            b.C.cols() != m || b.R.cols() != m)
            throw std::invalid_argument("solve_affine_system: block shape");
        neq += b.C.rows() * m;
    }
    IntMatrix M(neq, n * m);
    IntMatrix rhs(neq, 1);
    std::size_t e = 0;
    for (const auto& b : blocks) {
        const std::size_t rr = b.C.rows();
        for (std::size_t r = 0; r < rr; ++r) {
            for (std::size_t s = 0; s < m; ++s) {
                for (std::size_t k = 0; k < n; ++k) M(e, k * m + s) += b.L(r, k);
                for (std::size_t k = 0; k < m; ++k) M(e, r * m + k) -= b.R(k, s);
                rhs(e, 0) = b.C(r, s);
                ++e;
            }
        }
    }
    SolveResult sol = solve_right(M, rhs);
    if (!sol.X) return sol;
    IntMatrix X(n, m);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < m; ++s) X(r, s) = (*sol.X)(r * m + s, 0);
    return {std::move(X), std::nullopt};
}

IntMatrix lattice_intersect(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.cols()) throw std::invalid_argument("lattice_intersect: ambient mismatch");
    IntMatrix S = A.vstack(B);
    IntMatrix K = kernel_basis(S);
    if (K.rows() == 0) return IntMatrix(0, A.cols());
    IntMatrix UA = K.submatrix(0, 0, K.rows(), A.rows());
    return hnf_basis(UA * A);
}

bool lattice_equal(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.cols()) return false;
    return hnf_basis(A) == hnf_basis(B);
}

bool lattice_contains(const IntMatrix& A, const std::vector<Int>& v) {
    IntMatrix H = hnf_basis(A);
    std::vector<Int> w = v;
    for (std::size_t r = 0; r < H.rows(); ++r) {
        std::size_t c = 0;
        while (c < H.cols() && H(r, c) == 0) ++c;
        if (c == H.cols()) continue;
        if (w[c] % H(r, c) != 0) return false;
        Int q = w[c] / H(r, c);
        if (q != 0)
            for (std::size_t j = c; j < H.cols(); ++j) w[j] -= q * H(r, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

bool lattice_subset(const IntMatrix& inner, const IntMatrix& outer) {
    IntMatrix H = hnf_basis(outer);
    for (std::size_t i = 0; i < inner.rows(); ++i)
        if (!lattice_contains(H, inner.row(i))) return false;
    return true;
}

} // namespace gring
