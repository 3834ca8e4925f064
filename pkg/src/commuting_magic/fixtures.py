"""Golden squares and decompositions, embedded as source constants.

Squares are zero-based naturals.  Decomposition constants are complex or real
float arrays built from the closed-form radicals R2, R3, R5, R6.
"""
from __future__ import annotations

import numpy as np

from .compounding import compound, euler_compose
from .errors import FormatError
from .exact import IntSquare, ones_matrix
from .spectral import EigenSystem, SvdSystem

R2, R3, R5, R6 = np.sqrt(2.0), np.sqrt(3.0), np.sqrt(5.0), np.sqrt(6.0)


def _square(rows) -> IntSquare:
    return IntSquare(np.array(rows, dtype=np.int64))


def _complex(rows) -> np.ndarray:
    return np.array(rows, dtype=np.complex128)


def _real(rows) -> np.ndarray:
    return np.array(rows, dtype=np.float64)


# ---------------------------------------------------------------------------
# integer squares

M3_LO_SHU = _square([
    [3, 8, 1],
    [2, 4, 6],
    [7, 0, 5],
])

M4_REGULAR = _square([
    [ 4,  3, 15,  8],
    [10, 13,  1,  6],
    [ 9, 14,  2,  5],
    [ 7,  0, 12, 11],
])

M4_PANDIAGONAL = _square([
    [13,  6, 11,  0],
    [10,  1, 12,  7],
    [ 4, 15,  2,  9],
    [ 3,  8,  5, 14],
])

A9 = _square([
    [3, 8, 1, 3, 8, 1, 3, 8, 1],
    [2, 4, 6, 2, 4, 6, 2, 4, 6],
    [7, 0, 5, 7, 0, 5, 7, 0, 5],
    [3, 8, 1, 3, 8, 1, 3, 8, 1],
    [2, 4, 6, 2, 4, 6, 2, 4, 6],
    [7, 0, 5, 7, 0, 5, 7, 0, 5],
    [3, 8, 1, 3, 8, 1, 3, 8, 1],
    [2, 4, 6, 2, 4, 6, 2, 4, 6],
    [7, 0, 5, 7, 0, 5, 7, 0, 5],
])

B9 = _square([
    [3, 3, 3, 8, 8, 8, 1, 1, 1],
    [3, 3, 3, 8, 8, 8, 1, 1, 1],
    [3, 3, 3, 8, 8, 8, 1, 1, 1],
    [2, 2, 2, 4, 4, 4, 6, 6, 6],
    [2, 2, 2, 4, 4, 4, 6, 6, 6],
    [2, 2, 2, 4, 4, 4, 6, 6, 6],
    [7, 7, 7, 0, 0, 0, 5, 5, 5],
    [7, 7, 7, 0, 0, 0, 5, 5, 5],
    [7, 7, 7, 0, 0, 0, 5, 5, 5],
])

M9_A = _square([
    [30, 35, 28, 75, 80, 73, 12, 17, 10],
    [29, 31, 33, 74, 76, 78, 11, 13, 15],
    [34, 27, 32, 79, 72, 77, 16,  9, 14],
    [21, 26, 19, 39, 44, 37, 57, 62, 55],
    [20, 22, 24, 38, 40, 42, 56, 58, 60],
    [25, 18, 23, 43, 36, 41, 61, 54, 59],
    [66, 71, 64,  3,  8,  1, 48, 53, 46],
    [65, 67, 69,  2,  4,  6, 47, 49, 51],
    [70, 63, 68,  7,  0,  5, 52, 45, 50],
])

M9_B = _square([
    [30, 75, 12, 35, 80, 17, 28, 73, 10],
    [21, 39, 57, 26, 44, 62, 19, 37, 55],
    [66,  3, 48, 71,  8, 53, 64,  1, 46],
    [29, 74, 11, 31, 76, 13, 33, 78, 15],
    [20, 38, 56, 22, 40, 58, 24, 42, 60],
    [65,  2, 47, 67,  4, 49, 69,  6, 51],
    [34, 79, 16, 27, 72,  9, 32, 77, 14],
    [25, 43, 61, 18, 36, 54, 23, 41, 59],
    [70,  7, 52, 63,  0, 45, 68,  5, 50],
])

A9_TILDE = _square([
    [5, 6, 1, 3, 2, 7, 3, 8, 1],
    [0, 4, 8, 8, 4, 0, 2, 4, 6],
    [7, 2, 3, 1, 6, 5, 7, 0, 5],
    [1, 6, 5, 7, 2, 3, 1, 6, 5],
    [8, 4, 0, 0, 4, 8, 8, 4, 0],
    [3, 2, 7, 5, 6, 1, 3, 2, 7],
    [3, 8, 1, 3, 2, 7, 5, 6, 1],
    [2, 4, 6, 8, 4, 0, 0, 4, 8],
    [7, 0, 5, 1, 6, 5, 7, 2, 3],
])

P9 = _square([
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
])

A12 = _square([
    [3, 8, 1, 3, 8, 1, 3, 8, 1, 3, 8, 1],
    [2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6],
    [7, 0, 5, 7, 0, 5, 7, 0, 5, 7, 0, 5],
    [3, 8, 1, 3, 8, 1, 3, 8, 1, 3, 8, 1],
    [2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6],
    [7, 0, 5, 7, 0, 5, 7, 0, 5, 7, 0, 5],
    [3, 8, 1, 3, 8, 1, 3, 8, 1, 3, 8, 1],
    [2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6],
    [7, 0, 5, 7, 0, 5, 7, 0, 5, 7, 0, 5],
    [3, 8, 1, 3, 8, 1, 3, 8, 1, 3, 8, 1],
    [2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6],
    [7, 0, 5, 7, 0, 5, 7, 0, 5, 7, 0, 5],
])

B12 = _square([
    [ 4,  4,  4,  3,  3,  3, 15, 15, 15,  8,  8,  8],
    [ 4,  4,  4,  3,  3,  3, 15, 15, 15,  8,  8,  8],
    [ 4,  4,  4,  3,  3,  3, 15, 15, 15,  8,  8,  8],
    [10, 10, 10, 13, 13, 13,  1,  1,  1,  6,  6,  6],
    [10, 10, 10, 13, 13, 13,  1,  1,  1,  6,  6,  6],
    [10, 10, 10, 13, 13, 13,  1,  1,  1,  6,  6,  6],
    [ 9,  9,  9, 14, 14, 14,  2,  2,  2,  5,  5,  5],
    [ 9,  9,  9, 14, 14, 14,  2,  2,  2,  5,  5,  5],
    [ 9,  9,  9, 14, 14, 14,  2,  2,  2,  5,  5,  5],
    [ 7,  7,  7,  0,  0,  0, 12, 12, 12, 11, 11, 11],
    [ 7,  7,  7,  0,  0,  0, 12, 12, 12, 11, 11, 11],
    [ 7,  7,  7,  0,  0,  0, 12, 12, 12, 11, 11, 11],
])

M12_A = _square([
    [ 39,  44,  37,  30,  35,  28, 138, 143, 136,  75,  80,  73],
    [ 38,  40,  42,  29,  31,  33, 137, 139, 141,  74,  76,  78],
    [ 43,  36,  41,  34,  27,  32, 142, 135, 140,  79,  72,  77],
    [ 93,  98,  91, 120, 125, 118,  12,  17,  10,  57,  62,  55],
    [ 92,  94,  96, 119, 121, 123,  11,  13,  15,  56,  58,  60],
    [ 97,  90,  95, 124, 117, 122,  16,   9,  14,  61,  54,  59],
    [ 84,  89,  82, 129, 134, 127,  21,  26,  19,  48,  53,  46],
    [ 83,  85,  87, 128, 130, 132,  20,  22,  24,  47,  49,  51],
    [ 88,  81,  86, 133, 126, 131,  25,  18,  23,  52,  45,  50],
    [ 66,  71,  64,   3,   8,   1, 111, 116, 109, 102, 107, 100],
    [ 65,  67,  69,   2,   4,   6, 110, 112, 114, 101, 103, 105],
    [ 70,  63,  68,   7,   0,   5, 115, 108, 113, 106,  99, 104],
])

M12_B = _square([
    [ 52, 132,  20,  51, 131,  19,  63, 143,  31,  56, 136,  24],
    [ 36,  68, 100,  35,  67,  99,  47,  79, 111,  40,  72, 104],
    [116,   4,  84, 115,   3,  83, 127,  15,  95, 120,   8,  88],
    [ 58, 138,  26,  61, 141,  29,  49, 129,  17,  54, 134,  22],
    [ 42,  74, 106,  45,  77, 109,  33,  65,  97,  38,  70, 102],
    [122,  10,  90, 125,  13,  93, 113,   1,  81, 118,   6,  86],
    [ 57, 137,  25,  62, 142,  30,  50, 130,  18,  53, 133,  21],
    [ 41,  73, 105,  46,  78, 110,  34,  66,  98,  37,  69, 101],
    [121,   9,  89, 126,  14,  94, 114,   2,  82, 117,   5,  85],
    [ 55, 135,  23,  48, 128,  16,  60, 140,  28,  59, 139,  27],
    [ 39,  71, 103,  32,  64,  96,  44,  76, 108,  43,  75, 107],
    [119,   7,  87, 112,   0,  80, 124,  12,  92, 123,  11,  91],
])

M12_A_HAT = _square([
    [ 52,  51,  63,  56, 132, 131, 143, 136,  20,  19,  31,  24],
    [ 58,  61,  49,  54, 138, 141, 129, 134,  26,  29,  17,  22],
    [ 57,  62,  50,  53, 137, 142, 130, 133,  25,  30,  18,  21],
    [ 55,  48,  60,  59, 135, 128, 140, 139,  23,  16,  28,  27],
    [ 36,  35,  47,  40,  68,  67,  79,  72, 100,  99, 111, 104],
    [ 42,  45,  33,  38,  74,  77,  65,  70, 106, 109,  97, 102],
    [ 41,  46,  34,  37,  73,  78,  66,  69, 105, 110,  98, 101],
    [ 39,  32,  44,  43,  71,  64,  76,  75, 103,  96, 108, 107],
    [116, 115, 127, 120,   4,   3,  15,   8,  84,  83,  95,  88],
    [122, 125, 113, 118,  10,  13,   1,   6,  90,  93,  81,  86],
    [121, 126, 114, 117,   9,  14,   2,   5,  89,  94,  82,  85],
    [119, 112, 124, 123,   7,   0,  12,  11,  87,  80,  92,  91],
])

M12_B_HAT = _square([
    [ 39,  30, 138,  75,  44,  35, 143,  80,  37,  28, 136,  73],
    [ 93, 120,  12,  57,  98, 125,  17,  62,  91, 118,  10,  55],
    [ 84, 129,  21,  48,  89, 134,  26,  53,  82, 127,  19,  46],
    [ 66,   3, 111, 102,  71,   8, 116, 107,  64,   1, 109, 100],
    [ 38,  29, 137,  74,  40,  31, 139,  76,  42,  33, 141,  78],
    [ 92, 119,  11,  56,  94, 121,  13,  58,  96, 123,  15,  60],
    [ 83, 128,  20,  47,  85, 130,  22,  49,  87, 132,  24,  51],
    [ 65,   2, 110, 101,  67,   4, 112, 103,  69,   6, 114, 105],
    [ 43,  34, 142,  79,  36,  27, 135,  72,  41,  32, 140,  77],
    [ 97, 124,  16,  61,  90, 117,   9,  54,  95, 122,  14,  59],
    [ 88, 133,  25,  52,  81, 126,  18,  45,  86, 131,  23,  50],
    [ 70,   7, 115, 106,  63,   0, 108,  99,  68,   5, 113, 104],
])

A16 = _square([
    [13,  6, 11,  0, 13,  6, 11,  0, 13,  6, 11,  0, 13,  6, 11,  0],
    [10,  1, 12,  7, 10,  1, 12,  7, 10,  1, 12,  7, 10,  1, 12,  7],
    [ 4, 15,  2,  9,  4, 15,  2,  9,  4, 15,  2,  9,  4, 15,  2,  9],
    [ 3,  8,  5, 14,  3,  8,  5, 14,  3,  8,  5, 14,  3,  8,  5, 14],
    [13,  6, 11,  0, 13,  6, 11,  0, 13,  6, 11,  0, 13,  6, 11,  0],
    [10,  1, 12,  7, 10,  1, 12,  7, 10,  1, 12,  7, 10,  1, 12,  7],
    [ 4, 15,  2,  9,  4, 15,  2,  9,  4, 15,  2,  9,  4, 15,  2,  9],
    [ 3,  8,  5, 14,  3,  8,  5, 14,  3,  8,  5, 14,  3,  8,  5, 14],
    [13,  6, 11,  0, 13,  6, 11,  0, 13,  6, 11,  0, 13,  6, 11,  0],
    [10,  1, 12,  7, 10,  1, 12,  7, 10,  1, 12,  7, 10,  1, 12,  7],
    [ 4, 15,  2,  9,  4, 15,  2,  9,  4, 15,  2,  9,  4, 15,  2,  9],
    [ 3,  8,  5, 14,  3,  8,  5, 14,  3,  8,  5, 14,  3,  8,  5, 14],
    [13,  6, 11,  0, 13,  6, 11,  0, 13,  6, 11,  0, 13,  6, 11,  0],
    [10,  1, 12,  7, 10,  1, 12,  7, 10,  1, 12,  7, 10,  1, 12,  7],
    [ 4, 15,  2,  9,  4, 15,  2,  9,  4, 15,  2,  9,  4, 15,  2,  9],
    [ 3,  8,  5, 14,  3,  8,  5, 14,  3,  8,  5, 14,  3,  8,  5, 14],
])

B16 = _square([
    [13, 13, 13, 13,  6,  6,  6,  6, 11, 11, 11, 11,  0,  0,  0,  0],
    [13, 13, 13, 13,  6,  6,  6,  6, 11, 11, 11, 11,  0,  0,  0,  0],
    [13, 13, 13, 13,  6,  6,  6,  6, 11, 11, 11, 11,  0,  0,  0,  0],
    [13, 13, 13, 13,  6,  6,  6,  6, 11, 11, 11, 11,  0,  0,  0,  0],
    [10, 10, 10, 10,  1,  1,  1,  1, 12, 12, 12, 12,  7,  7,  7,  7],
    [10, 10, 10, 10,  1,  1,  1,  1, 12, 12, 12, 12,  7,  7,  7,  7],
    [10, 10, 10, 10,  1,  1,  1,  1, 12, 12, 12, 12,  7,  7,  7,  7],
    [10, 10, 10, 10,  1,  1,  1,  1, 12, 12, 12, 12,  7,  7,  7,  7],
    [ 4,  4,  4,  4, 15, 15, 15, 15,  2,  2,  2,  2,  9,  9,  9,  9],
    [ 4,  4,  4,  4, 15, 15, 15, 15,  2,  2,  2,  2,  9,  9,  9,  9],
    [ 4,  4,  4,  4, 15, 15, 15, 15,  2,  2,  2,  2,  9,  9,  9,  9],
    [ 4,  4,  4,  4, 15, 15, 15, 15,  2,  2,  2,  2,  9,  9,  9,  9],
    [ 3,  3,  3,  3,  8,  8,  8,  8,  5,  5,  5,  5, 14, 14, 14, 14],
    [ 3,  3,  3,  3,  8,  8,  8,  8,  5,  5,  5,  5, 14, 14, 14, 14],
    [ 3,  3,  3,  3,  8,  8,  8,  8,  5,  5,  5,  5, 14, 14, 14, 14],
    [ 3,  3,  3,  3,  8,  8,  8,  8,  5,  5,  5,  5, 14, 14, 14, 14],
])

M16_A = _square([
    [221, 214, 219, 208, 109, 102, 107,  96, 189, 182, 187, 176,  13,   6,  11,   0],
    [218, 209, 220, 215, 106,  97, 108, 103, 186, 177, 188, 183,  10,   1,  12,   7],
    [212, 223, 210, 217, 100, 111,  98, 105, 180, 191, 178, 185,   4,  15,   2,   9],
    [211, 216, 213, 222,  99, 104, 101, 110, 179, 184, 181, 190,   3,   8,   5,  14],
    [173, 166, 171, 160,  29,  22,  27,  16, 205, 198, 203, 192, 125, 118, 123, 112],
    [170, 161, 172, 167,  26,  17,  28,  23, 202, 193, 204, 199, 122, 113, 124, 119],
    [164, 175, 162, 169,  20,  31,  18,  25, 196, 207, 194, 201, 116, 127, 114, 121],
    [163, 168, 165, 174,  19,  24,  21,  30, 195, 200, 197, 206, 115, 120, 117, 126],
    [ 77,  70,  75,  64, 253, 246, 251, 240,  45,  38,  43,  32, 157, 150, 155, 144],
    [ 74,  65,  76,  71, 250, 241, 252, 247,  42,  33,  44,  39, 154, 145, 156, 151],
    [ 68,  79,  66,  73, 244, 255, 242, 249,  36,  47,  34,  41, 148, 159, 146, 153],
    [ 67,  72,  69,  78, 243, 248, 245, 254,  35,  40,  37,  46, 147, 152, 149, 158],
    [ 61,  54,  59,  48, 141, 134, 139, 128,  93,  86,  91,  80, 237, 230, 235, 224],
    [ 58,  49,  60,  55, 138, 129, 140, 135,  90,  81,  92,  87, 234, 225, 236, 231],
    [ 52,  63,  50,  57, 132, 143, 130, 137,  84,  95,  82,  89, 228, 239, 226, 233],
    [ 51,  56,  53,  62, 131, 136, 133, 142,  83,  88,  85,  94, 227, 232, 229, 238],
])

M16_B = _square([
    [221, 109, 189,  13, 214, 102, 182,   6, 219, 107, 187,  11, 208,  96, 176,   0],
    [173,  29, 205, 125, 166,  22, 198, 118, 171,  27, 203, 123, 160,  16, 192, 112],
    [ 77, 253,  45, 157,  70, 246,  38, 150,  75, 251,  43, 155,  64, 240,  32, 144],
    [ 61, 141,  93, 237,  54, 134,  86, 230,  59, 139,  91, 235,  48, 128,  80, 224],
    [218, 106, 186,  10, 209,  97, 177,   1, 220, 108, 188,  12, 215, 103, 183,   7],
    [170,  26, 202, 122, 161,  17, 193, 113, 172,  28, 204, 124, 167,  23, 199, 119],
    [ 74, 250,  42, 154,  65, 241,  33, 145,  76, 252,  44, 156,  71, 247,  39, 151],
    [ 58, 138,  90, 234,  49, 129,  81, 225,  60, 140,  92, 236,  55, 135,  87, 231],
    [212, 100, 180,   4, 223, 111, 191,  15, 210,  98, 178,   2, 217, 105, 185,   9],
    [164,  20, 196, 116, 175,  31, 207, 127, 162,  18, 194, 114, 169,  25, 201, 121],
    [ 68, 244,  36, 148,  79, 255,  47, 159,  66, 242,  34, 146,  73, 249,  41, 153],
    [ 52, 132,  84, 228,  63, 143,  95, 239,  50, 130,  82, 226,  57, 137,  89, 233],
    [211,  99, 179,   3, 216, 104, 184,   8, 213, 101, 181,   5, 222, 110, 190,  14],
    [163,  19, 195, 115, 168,  24, 200, 120, 165,  21, 197, 117, 174,  30, 206, 126],
    [ 67, 243,  35, 147,  72, 248,  40, 152,  69, 245,  37, 149,  78, 254,  46, 158],
    [ 51, 131,  83, 227,  56, 136,  88, 232,  53, 133,  85, 229,  62, 142,  94, 238],
])

# ---------------------------------------------------------------------------
# seed decompositions

# order 3: M3 S3 = S3 D_M3, all eigenvectors simple
S3 = _complex([
    [         1,    8+1j*R6,    8-1j*R6],
    [         1, -4+2*1j*R6, -4-2*1j*R6],
    [         1, -4-3*1j*R6, -4+3*1j*R6],
])

D_M3 = np.diag(np.array([12, 2j * R6, -2j * R6]))

# order 4 (regular seed): S4 carries a generalized eigenvector
S4 = _complex([
    [  1,  48, -14,   3],
    [  1, -16,  10,  -1],
    [  1,  16,   6,  -1],
    [  1, -48,  -2,  -1],
])

J4 = _complex([
    [30,  0,  0,  0],
    [ 0,  0,  1,  0],
    [ 0,  0,  0,  1],
    [ 0,  0,  0,  0],
])

U3 = _real([
    [ (1/3)*R3,  (1/2)*R2,  (1/6)*R6],
    [ (1/3)*R3,         0, -(1/3)*R6],
    [ (1/3)*R3, -(1/2)*R2,  (1/6)*R6],
])


V3 = _real([
    [ (1/3)*R3, -(1/6)*R6,  (1/2)*R2],
    [ (1/3)*R3,  (1/3)*R6,         0],
    [ (1/3)*R3, -(1/6)*R6, -(1/2)*R2],
])


U4 = _real([
    [    5,    -5,  3*R5,    R5],
    [    5,     5,   -R5,  3*R5],
    [    5,     5,    R5, -3*R5],
    [    5,    -5, -3*R5,   -R5],
]) / 10


V4 = _real([
    [    5,    R5,    -5, -3*R5],
    [    5,  3*R5,     5,    R5],
    [    5, -3*R5,     5,   -R5],
    [    5,   -R5,    -5,  3*R5],
]) / 10

SIGMA_M3 = np.array([12, 4 * R3, 2 * R3])
SIGMA_4 = np.array([30, 8 * R5, 2 * R5, 0.0])

EIG_M3 = EigenSystem(S3, D_M3)
EIG_M4 = EigenSystem(S4, J4)
SVD_M3 = SvdSystem(U3, SIGMA_M3, V3)
SVD_M4 = SvdSystem(U4, SIGMA_4, V4)

# ---------------------------------------------------------------------------
# compounded decompositions, as printed

S9 = _complex([
    [           1,      8+1j*R6,      8-1j*R6,      8+1j*R6,  58+16*1j*R6,           70,      8-1j*R6,           70,  58-16*1j*R6],
    [           1,   -4+2*1j*R6,   -4-2*1j*R6,      8+1j*R6, -44+12*1j*R6, -20-20*1j*R6,      8-1j*R6, -20+20*1j*R6, -44-12*1j*R6],
    [           1,   -4-3*1j*R6,   -4+3*1j*R6,      8+1j*R6, -14-28*1j*R6, -50+20*1j*R6,      8-1j*R6, -50-20*1j*R6, -14+28*1j*R6],
    [           1,      8+1j*R6,      8-1j*R6,   -4+2*1j*R6, -44+12*1j*R6, -20+20*1j*R6,   -4-2*1j*R6, -20-20*1j*R6, -44-12*1j*R6],
    [           1,   -4+2*1j*R6,   -4-2*1j*R6,   -4+2*1j*R6,  -8-16*1j*R6,           40,   -4-2*1j*R6,           40,  -8+16*1j*R6],
    [           1,   -4-3*1j*R6,   -4+3*1j*R6,   -4+2*1j*R6,   52+4*1j*R6, -20-20*1j*R6,   -4-2*1j*R6, -20+20*1j*R6,   52-4*1j*R6],
    [           1,      8+1j*R6,      8-1j*R6,   -4-3*1j*R6, -14-28*1j*R6, -50-20*1j*R6,   -4+3*1j*R6, -50+20*1j*R6, -14+28*1j*R6],
    [           1,   -4+2*1j*R6,   -4-2*1j*R6,   -4-3*1j*R6,   52+4*1j*R6, -20+20*1j*R6,   -4+3*1j*R6, -20-20*1j*R6,   52-4*1j*R6],
    [           1,   -4-3*1j*R6,   -4+3*1j*R6,   -4-3*1j*R6, -38+24*1j*R6,           70,   -4+3*1j*R6,           70, -38-24*1j*R6],
])


U9 = _real([
    [    2,    R6,    R2,    R6,     3,    R3,    R2,    R3,     1],
    [    2,     0, -2*R2,    R6,     0, -2*R3,    R2,     0,    -2],
    [    2,   -R6,    R2,    R6,    -3,    R3,    R2,   -R3,     1],
    [    2,    R6,    R2,     0,     0,     0, -2*R2, -2*R3,    -2],
    [    2,     0, -2*R2,     0,     0,     0, -2*R2,     0,     4],
    [    2,   -R6,    R2,     0,     0,     0, -2*R2,  2*R3,    -2],
    [    2,    R6,    R2,   -R6,    -3,   -R3,    R2,    R3,     1],
    [    2,     0, -2*R2,   -R6,     0,  2*R3,    R2,     0,    -2],
    [    2,   -R6,    R2,   -R6,     3,   -R3,    R2,   -R3,     1],
]) / 6


V9 = _real([
    [    2,   -R2,    R6,   -R2,     1,   -R3,    R6,   -R3,     3],
    [    2,  2*R2,     0,   -R2,    -2,     0,    R6,  2*R3,     0],
    [    2,   -R2,   -R6,   -R2,     1,    R3,    R6,   -R3,    -3],
    [    2,   -R2,    R6,  2*R2,    -2,  2*R3,     0,     0,     0],
    [    2,  2*R2,     0,  2*R2,     4,     0,     0,     0,     0],
    [    2,   -R2,   -R6,  2*R2,    -2, -2*R3,     0,     0,     0],
    [    2,   -R2,    R6,   -R2,     1,   -R3,   -R6,    R3,    -3],
    [    2,  2*R2,     0,   -R2,    -2,     0,   -R6, -2*R3,     0],
    [    2,   -R2,   -R6,   -R2,     1,    R3,   -R6,    R3,     3],
]) / 6


S12 = _complex([
    [             1,        8+1j*R6,        8-1j*R6,             48,   384+48*1j*R6,   384-48*1j*R6,            -14,  -112-14*1j*R6,  -112+14*1j*R6,              3,     24+3*1j*R6,     24-3*1j*R6],
    [             1,     -4+2*1j*R6,     -4-2*1j*R6,             48,  -192+96*1j*R6,  -192-96*1j*R6,            -14,    56-28*1j*R6,    56+28*1j*R6,              3,    -12+6*1j*R6,    -12-6*1j*R6],
    [             1,     -4-3*1j*R6,     -4+3*1j*R6,             48, -192-144*1j*R6, -192+144*1j*R6,            -14,    56+42*1j*R6,    56-42*1j*R6,              3,    -12-9*1j*R6,    -12+9*1j*R6],
    [             1,        8+1j*R6,        8-1j*R6,            -16,  -128-16*1j*R6,  -128+16*1j*R6,             10,    80+10*1j*R6,    80-10*1j*R6,             -1,       -8-1j*R6,       -8+1j*R6],
    [             1,     -4+2*1j*R6,     -4-2*1j*R6,            -16,    64-32*1j*R6,    64+32*1j*R6,             10,   -40+20*1j*R6,   -40-20*1j*R6,             -1,      4-2*1j*R6,      4+2*1j*R6],
    [             1,     -4-3*1j*R6,     -4+3*1j*R6,            -16,    64+48*1j*R6,    64-48*1j*R6,             10,   -40-30*1j*R6,   -40+30*1j*R6,             -1,      4+3*1j*R6,      4-3*1j*R6],
    [             1,        8+1j*R6,        8-1j*R6,             16,   128+16*1j*R6,   128-16*1j*R6,              6,     48+6*1j*R6,     48-6*1j*R6,             -1,       -8-1j*R6,       -8+1j*R6],
    [             1,     -4+2*1j*R6,     -4-2*1j*R6,             16,   -64+32*1j*R6,   -64-32*1j*R6,              6,   -24+12*1j*R6,   -24-12*1j*R6,             -1,      4-2*1j*R6,      4+2*1j*R6],
    [             1,     -4-3*1j*R6,     -4+3*1j*R6,             16,   -64-48*1j*R6,   -64+48*1j*R6,              6,   -24-18*1j*R6,   -24+18*1j*R6,             -1,      4+3*1j*R6,      4-3*1j*R6],
    [             1,        8+1j*R6,        8-1j*R6,            -48,  -384-48*1j*R6,  -384+48*1j*R6,             -2,    -16-2*1j*R6,    -16+2*1j*R6,             -1,       -8-1j*R6,       -8+1j*R6],
    [             1,     -4+2*1j*R6,     -4-2*1j*R6,            -48,   192-96*1j*R6,   192+96*1j*R6,             -2,      8-4*1j*R6,      8+4*1j*R6,             -1,      4-2*1j*R6,      4+2*1j*R6],
    [             1,     -4-3*1j*R6,     -4+3*1j*R6,            -48,  192+144*1j*R6,  192-144*1j*R6,             -2,      8+6*1j*R6,      8-6*1j*R6,             -1,      4+3*1j*R6,      4-3*1j*R6],
])

D9_A = np.diag(np.array([36, 6j * R6, -6j * R6] + [0] * 6))
D9_B = np.diag(np.array([36, 0, 0, 6j * R6, 0, 0, -6j * R6, 0, 0]))

J_B12 = _complex([
    [90,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  3,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  3,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
])

SIGMA9_A = np.array([36, 12 * R3, 6 * R3] + [0.0] * 6)
SIGMA9_B = np.array([36, 0, 0, 12 * R3, 0, 0, 6 * R3, 0, 0])
SIGMA_M9_A = np.array([360, 12 * R3, 6 * R3, 108 * R3, 0, 0, 54 * R3, 0, 0])
SIGMA_M9_B = np.array([360, 108 * R3, 54 * R3, 12 * R3, 0, 0, 6 * R3, 0, 0])
SIGMA12_A = np.array([48, 16 * R3, 8 * R3] + [0.0] * 9)
SIGMA12_B = np.array([90, 0, 0, 24 * R5, 0, 0, 6 * R5] + [0.0] * 5)
SIGMA_M12_A = np.array([858, 16 * R3, 8 * R3, 216 * R5, 0, 0, 54 * R5] + [0.0] * 5)
SIGMA_M12_B = np.array([858, 256 * R3, 128 * R3, 24 * R5, 0, 0, 6 * R5] + [0.0] * 5)

# ---------------------------------------------------------------------------
# registry

_SQUARES = {
    name: value
    for name, value in dict(globals()).items()
    if isinstance(value, IntSquare) and name.isupper()
}
_ALIASES = {"M3": "M3_LO_SHU", "M4": "M4_REGULAR"}
_ARRAYS = {
    name: value
    for name, value in dict(globals()).items()
    if isinstance(value, np.ndarray) and name.isupper() and not name.startswith("R")
}


def available() -> list[str]:
    """Every name ``fixture`` accepts, besides the ``E<n>`` all-ones builtins."""
    return sorted(set(_SQUARES) | set(_ARRAYS) | set(_ALIASES))


def fixture(name: str):
    """Look up a golden constant by (case-insensitive) name.

    Squares come back as IntSquare, decompositions as fresh numpy arrays.
    ``E<n>`` yields the order-n all-ones matrix.
    """
    key = name.strip().upper()
    key = _ALIASES.get(key, key)
    if key in _SQUARES:
        return IntSquare(_SQUARES[key].entries)
    if key in _ARRAYS:
        return _ARRAYS[key].copy()
    if key.startswith("E") and key[1:].isdigit() and int(key[1:]) >= 1:
        return ones_matrix(int(key[1:]))
    raise FormatError(f"unknown fixture {name!r}; available: {', '.join(available())}, E<n>")


def is_square_name(name: str) -> bool:
    key = name.strip().upper()
    key = _ALIASES.get(key, key)
    return key in _SQUARES or (key.startswith("E") and key[1:].isdigit() and int(key[1:]) >= 1)


# the order-16 displays are long; catch a transcription slip at import time
if euler_compose(compound(M4_PANDIAGONAL, M4_PANDIAGONAL)) != (M16_A, M16_B):
    raise AssertionError("order-16 fixtures disagree with their construction")
