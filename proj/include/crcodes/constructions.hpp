#pragma once

#include <vector>

#include "crcodes/code.hpp"

namespace crc {

// Columns are the points of PG(m-1, q), first nonzero (from the top) equal to 1,
// in increasing integer order.
Matrix hamming_parity(int q, int m);
Code hamming_code(int q, int m);
// Binary Hamming code of redundancy m with one extra check row: column j gets 1
// when the weight of column j of H is congruent to i1 or i2 mod 4.
Code half_hamming_code(int m, int i1, int i2);

// Coordinates of the elements of GF(Q) over its subfield GF(q) in the basis
// 1, a, ..., a^(k-1) with a the primitive element of GF(Q). Entry x is the
// column vector of x (length k, entries in GF(q)).
std::vector<Word> subfield_coordinates(const Field& big, const Field& small);

// k x n matrix over GF(q) whose column j is beta^j, beta = alpha^(q-1) in GF(q^k),
// n = (q^k-1)/(q-1). Parity check matrix of a cyclic Hamming code; needs gcd(n, q-1) = 1.
Matrix cyclic_hamming_parity(int q, int k);

// Columns shifted i places to the right (column j moves to j+i mod n).
Matrix shift_columns(const Matrix& H, int i);

// Horizontal concatenation of blocks with equal row counts.
Matrix hconcat(const std::vector<Matrix>& blocks);
// Block matrix from a grid of blocks; every row of the grid must have equal heights.
Matrix block_matrix(const std::vector<std::vector<Matrix>>& grid);
Matrix zero_matrix(const Field& f, int rows, int cols);

// Cyclic code of length n over GF(q) with generator polynomial g (low to high).
Code cyclic_code(const Poly& g, int n);
// Product of the minimal polynomials over GF(q) of alpha^e for e in zeros,
// alpha primitive in GF(q^m), length q^m - 1. Repeated cyclotomic cosets are used once.
Poly zeros_generator(int q, int m, const std::vector<int>& zeros);

Code binary_golay();
Code ternary_golay();

// Subcode with coordinate sum zero (adds an all-ones parity row).
Code zero_sum_subcode(const Code& c);

// 3 x (q+1) conic columns (1, t, t^2) and (0, 0, 1); with the nucleus (0, 1, 0)
// appended when q is even (a hyperoval, q+2 columns).
Matrix oval_parity(int q, bool nucleus);

// Columns: the lines of PG(2, q) missing the hyperoval, q = 2^r >= 4.
Matrix exterior_lines_parity(int q);

// m x C(m, l) binary matrix of all weight-l columns in colex order.
Matrix binomial_parity(int m, int l);

// (m+1) x q^m matrix: an all-ones row above every vector of GF(q)^m.
Matrix difference_parity(int q, int m);

// (11, 24, 5) binary code from the Paley Hadamard matrix of order 12:
// normalized rows and their complements with the constant coordinate removed.
Code hadamard_11();

// Nordstrom-Robinson (16, 256, 6) code cut from the extended Golay code along an octad.
Code nordstrom_robinson();

}  // namespace crc
