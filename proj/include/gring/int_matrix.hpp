#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gring {

using Int = boost::multiprecision::cpp_int;

/* Dense matrix of arbitrary-precision integers, row-major.
 * All arithmetic is exact; this is the carrier for every lattice,
 * representation and solvability computation in the library. */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix transposed() const;

    std::vector<Int> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Int>& v);

    /* Rows of `other` appended below. */
    IntMatrix vstack(const IntMatrix& other) const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& c, const IntMatrix& a);

/* row vector * matrix */
std::vector<Int> operator*(const std::vector<Int>& v, const IntMatrix& a);

IntMatrix matpow(const IntMatrix& a, unsigned long e);

/* Signed determinant (fraction-free Bareiss elimination). */
Int determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/* Text format: first line "rows cols", then one line of space-separated
 * decimal entries per row. Round-trips bit-exactly. */
void write_matrix(std::ostream& os, const IntMatrix& a);
IntMatrix read_matrix(std::istream& is);
IntMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const IntMatrix& a);

} // namespace gring
