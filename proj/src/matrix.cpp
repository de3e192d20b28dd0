#include "crcodes/matrix.hpp"

#include <algorithm>

#include "crcodes/errors.hpp"

namespace crc {

Word Matrix::column(int j) const {
    Word c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

Matrix matrix_from_rows(Field f, const std::vector<std::vector<int>>& rows) {
    int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw FormatError("inconsistent row lengths");
        for (int j = 0; j < cols; ++j) {
            int v = rows[i][j];
            if (v < 0 || v >= f->q()) throw DomainError("matrix entry " + std::to_string(v) + " is not a field element index");
            m.at(i, j) = static_cast<Elem>(v);
        }
    }
    return m;
}

Matrix matrix_from_words(Field f, int cols, const std::vector<Word>& rows) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw FormatError("inconsistent row lengths");
        std::copy(rows[i].begin(), rows[i].end(), m.a.begin() + static_cast<std::ptrdiff_t>(i) * cols);
    }
    return m;
}

std::vector<int> rref(Matrix& m) {
    const auto& f = *m.f;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Elem inv = f.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Elem factor = m.at(i, c);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows = r;
    m.a.resize(static_cast<std::size_t>(r) * m.cols);
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    auto piv = rref(r);
    const auto& f = *m.f;
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<int> free;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix out(m.f, static_cast<int>(free.size()), m.cols);
    for (std::size_t k = 0; k < free.size(); ++k) {
        int fc = free[k];
        out.at(static_cast<int>(k), fc) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            out.at(static_cast<int>(k), piv[i]) = f.neg(r.at(static_cast<int>(i), fc));
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.f, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw DomainError("matrix shape mismatch");
    const auto& f = *x.f;
    Matrix z(x.f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Elem a = x.at(i, k);
            if (!a) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) = f.add(z.at(i, j), f.mul(a, y.at(k, j)));
        }
    return z;
}

Matrix kronecker(const Matrix& x, const Matrix& y) {
    if (x.f->q() != y.f->q()) throw DomainError("kronecker operands over different fields");
    const auto& f = *x.f;
    Matrix z(x.f, x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            for (int k = 0; k < y.rows; ++k)
                for (int l = 0; l < y.cols; ++l) z.at(i * y.rows + k, j * y.cols + l) = f.mul(x.at(i, j), y.at(k, l));
    return z;
}

Matrix delete_columns(const Matrix& m, const std::vector<int>& cols) {
    std::vector<char> drop(m.cols, 0);
    for (int c : cols) {
        if (c < 0 || c >= m.cols) throw DomainError("column index out of range");
        drop[c] = 1;
    }
    int kept = m.cols - static_cast<int>(std::count(drop.begin(), drop.end(), 1));
    Matrix out(m.f, m.rows, kept);
    for (int i = 0; i < m.rows; ++i) {
        int jj = 0;
        for (int j = 0; j < m.cols; ++j)
            if (!drop[j]) out.at(i, jj++) = m.at(i, j);
    }
    return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.rows == 0) return bottom;
    if (bottom.rows == 0) return top;
    if (top.cols != bottom.cols) throw DomainError("stack: column mismatch");
    Matrix out(top.f, top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), out.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), out.a.begin() + static_cast<std::ptrdiff_t>(top.a.size()));
    return out;
}

Matrix embed(const Matrix& m, const SubfieldMap& map) {
    if (m.f->q() != map.small()->q()) throw DomainError("embed: matrix field mismatch");
    Matrix out(map.big(), m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = map(m.a[i]);
    return out;
}

Word apply_transpose(const Matrix& m, const Word& x) {
    const auto& f = *m.f;
    Word s(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        Elem acc = 0;
        for (int j = 0; j < m.cols; ++j)
            if (x[j]) acc = f.add(acc, f.mul(m.at(i, j), x[j]));
        s[i] = acc;
    }
    return s;
}

bool operator==(const Matrix& x, const Matrix& y) {
    return x.f->q() == y.f->q() && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

}  // namespace crc
