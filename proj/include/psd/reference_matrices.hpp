#pragma once

#include "psd/binary_matrix.hpp"

namespace psd::reference {

/// Published optimal 6x6 (diagonally symmetric) and 7x7 matrices.
inline BinaryMatrix optimal_6x6() {
  return BinaryMatrix::from_rows({"110111", "101001", "011010", "100011", "101101", "110111"});
}

inline BinaryMatrix optimal_7x7() {
  return BinaryMatrix::from_rows({"1111011", "1001101", "0110101", "1101011", "1010010", "1001101", "1110111"});
}

/// Bordered and punctured QNR(5) circulant, I = {(1,4),(7,4),(4,1),(4,7)}.
inline BinaryMatrix bordered_qnr5() {
  return BinaryMatrix::from_rows({"1110111", "1001101", "1000111", "0100010", "1110001", "1011001", "1110111"});
}

/// Bordered and punctured QR(7)+{0} circulant, I = {(1,4),(9,5),(5,1),(6,9)}.
inline BinaryMatrix bordered_qr7() {
  return BinaryMatrix::from_rows({"111011111", "111101001", "101110101", "100111011", "010011101", "101001110",
                                  "110100111", "111010011", "111101111"});
}

}  // namespace psd::reference
