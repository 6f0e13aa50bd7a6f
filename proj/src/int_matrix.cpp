#include "gring/int_matrix.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gring {

namespace {
// Entry counts below this stay serial; parallel setup costs more than the
// arithmetic for the 6x6..42x42 matrices the verification pipeline uses.
constexpr std::size_t kParallelWork = 64 * 64;
} // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a_)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    return std::vector<Int>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void IntMatrix::set_row(std::size_t r, const std::vector<Int>& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const {
    if (rows_ == 0 && cols_ == 0) return other;
    if (other.rows_ == 0) return *this;
    if (other.cols_ != cols_) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix m(rows_ + other.rows_, cols_);
    m.a_.assign(a_.begin(), a_.end());
    m.a_.insert(m.a_.end(), other.a_.begin(), other.a_.end());
    return m;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("submatrix");
    IntMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix add: shape");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sub: shape");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape");
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    IntMatrix c(n, m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n * k * m >= kParallelWork)
#endif
    for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t t = 0; t < k; ++t) {
            const Int& av = a(i, t);
            if (av == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b(t, j) != 0) c(i, j) += av * b(t, j);
            }
        }
    }
    return c;
}

IntMatrix operator*(const Int& c, const IntMatrix& a) {
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

std::vector<Int> operator*(const std::vector<Int>& v, const IntMatrix& a) {
    if (v.size() != a.rows()) throw std::invalid_argument("vec*mat: shape");
    std::vector<Int> r(a.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) r[j] += v[i] * a(i, j);
    }
    return r;
}

IntMatrix matpow(const IntMatrix& a, unsigned long e) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matpow: not square");
    IntMatrix r = IntMatrix::identity(a.rows());
    IntMatrix base = a;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            w.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    Int d = determinant(a);
    return d == 1 || d == -1;
}

void write_matrix(std::ostream& os, const IntMatrix& a) {
    os << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ' ';
            os << a(i, j);
        }
        os << '\n';
    }
}

IntMatrix read_matrix(std::istream& is) {
    long long r = -1, c = -1;
    if (!(is >> r >> c) || r < 0 || c < 0) throw std::runtime_error("matrix header: expected \"rows cols\"");
    IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < c; ++j) {
            std::string tok;
            if (!(is >> tok)) throw std::runtime_error("matrix body: not enough entries");
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Int(tok);
        }
    return m;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open matrix file: " + path);
    try {
        return read_matrix(f);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_matrix_file(const std::string& path, const IntMatrix& a) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write matrix file: " + path);
    write_matrix(f, a);
}

} // namespace gring
