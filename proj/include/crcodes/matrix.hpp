#pragma once

#include <vector>

#include "crcodes/field.hpp"

namespace crc {

using Word = std::vector<Elem>;

// Dense row-major matrix over a field.
struct Matrix {
    Field f;
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(Field field, int r, int c) : f(std::move(field)), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Elem at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    Word row(int i) const { return Word(a.begin() + static_cast<std::ptrdiff_t>(i) * cols, a.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols); }
    Word column(int j) const;
};

Matrix matrix_from_rows(Field f, const std::vector<std::vector<int>>& rows);
Matrix matrix_from_words(Field f, int cols, const std::vector<Word>& rows);

// In-place reduced row echelon form; zero rows are removed. Returns pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
// Basis (as rows) of {x : m x^T = 0}.
Matrix nullspace(const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& x, const Matrix& y);
// Kronecker product over a common field (both operands already in it).
Matrix kronecker(const Matrix& x, const Matrix& y);
Matrix delete_columns(const Matrix& m, const std::vector<int>& cols);
Matrix stack(const Matrix& top, const Matrix& bottom);
// Map every entry through an embedding into a larger field.
Matrix embed(const Matrix& m, const SubfieldMap& map);

// x * m^T for a word x (syndrome when m is a parity-check matrix).
Word apply_transpose(const Matrix& m, const Word& x);

bool operator==(const Matrix& x, const Matrix& y);

}  // namespace crc
