"""Finite field arithmetic over GF(2^8), GF(2^4) and the tower F((2^4)^2).

Elements are plain integers whose binary digits are polynomial
coefficients over GF(2), least significant bit = constant term.
Tower elements are pairs ``(p0, p1)`` standing for ``p0 + p1*x`` with
``p0, p1`` in GF(2^4) and the extension relation ``x^2 = x + LAMBDA``.

Everything here is classical reference arithmetic: it is the ground
truth every reversible circuit in this package is checked against.
"""

from __future__ import annotations

import numpy as np

# Reduction moduli: x^8+x^4+x^3+x+1 and x^4+x+1.
MOD256 = 0x11B
MOD16 = 0x13

# Extension constant lambda = x^3+x^2+x of the degree-2 tower step.
LAMBDA = 0xE

SBOX_CONST = 0x63


def _polymul(a: int, b: int, mod: int, degree: int) -> int:
    """Carry-less multiply of a and b reduced by mod (degree = field degree)."""
    r = 0
    top = 1 << degree
    for _ in range(degree):
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= mod
    return r


def gf256_mul(a: int, b: int) -> int:
    return _polymul(a, b, MOD256, 8)


def gf256_pow(a: int, e: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = gf256_mul(r, a)
        a = gf256_mul(a, a)
        e >>= 1
    return r


def gf256_inv(a: int) -> int:
    """Multiplicative inverse in GF(2^8); 0 maps to 0 by convention."""
    if a == 0:
        return 0
    return gf256_pow(a, 254)


def xtime(a: int) -> int:
    """Multiply by x in GF(2^8)."""
    a <<= 1
    if a & 0x100:
        a ^= MOD256
    return a


def gf16_mul(a: int, b: int) -> int:
    return _polymul(a, b, MOD16, 4)


# Inverse lookup for GF(2^4), index = element.  inv(0) = 0 by convention.
GF16_INV = (0x0, 0x1, 0x9, 0xE, 0xD, 0xB, 0x7, 0x6,
            0xF, 0x2, 0xC, 0x5, 0xA, 0x4, 0x3, 0x8)


def gf16_inv(b: int) -> int:
    return GF16_INV[b]


def gf16_sq_lambda(q: int) -> int:
    """Return q^2 * lambda; a GF(2)-linear map of the four input bits."""
    q3, q2, q1, q0 = (q >> 3) & 1, (q >> 2) & 1, (q >> 1) & 1, q & 1
    return (((q1 ^ q0) << 3) | ((q3 ^ q1 ^ q0) << 2) | (q0 << 1) | (q2 ^ q1))


def gf16_sq(q: int) -> int:
    """Squaring in GF(2^4), also GF(2)-linear."""
    q3, q2, q1, q0 = (q >> 3) & 1, (q >> 2) & 1, (q >> 1) & 1, q & 1
    return ((q3 << 3) | ((q3 ^ q1) << 2) | (q2 << 1) | (q2 ^ q0))


def comp_add(p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
    return (p[0] ^ q[0], p[1] ^ q[1])


def comp_mul(p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
    """Product in F((2^4)^2), reducing x^2 = x + lambda."""
    p0, p1 = p
    q0, q1 = q
    hi = gf16_mul(p1, q1)
    lo = gf16_mul(p0, q0) ^ gf16_mul(hi, LAMBDA)
    mid = gf16_mul(p0, q1) ^ gf16_mul(p1, q0) ^ hi
    return (lo, mid)


def comp_pow(p: tuple[int, int], e: int) -> tuple[int, int]:
    r = (1, 0)
    while e:
        if e & 1:
            r = comp_mul(r, p)
        p = comp_mul(p, p)
        e >>= 1
    return r


def comp_norm17(p: tuple[int, int]) -> int:
    """p^17 as a base-field element: p1^2 * lambda + (p0 + p1) * p0."""
    p0, p1 = p
    return gf16_sq_lambda(p1) ^ gf16_mul(p0 ^ p1, p0)


def comp_inv(p: tuple[int, int]) -> tuple[int, int]:
    """Inverse in the tower field via the norm: (0,0) maps to (0,0)."""
    p0, p1 = p
    t = gf16_inv(comp_norm17(p))
    return (gf16_mul(t, p0 ^ p1), gf16_mul(t, p1))


# ---------------------------------------------------------------------------
# GF(2) matrices for the S-box affine layer and the tower-field change of
# basis.  Row i produces output bit i, column j consumes input bit j,
# bit 0 = least significant.
# ---------------------------------------------------------------------------

def _mat(rows: list[str]) -> np.ndarray:
    return np.array([[int(ch) for ch in row] for row in rows], dtype=np.uint8)


# Affine matrix of the S-box output transform.
MAT_A = _mat([
    "10001111",
    "11000111",
    "11100011",
    "11110001",
    "11111000",
    "01111100",
    "00111110",
    "00011111",
])

# Change of basis GF(2^8) -> F((2^4)^2); output bits 0..3 = p0, 4..7 = p1.
MAT_M = _mat([
    "10001110",
    "01100000",
    "01000001",
    "00101000",
    "00001110",
    "01001011",
    "00110101",
    "00000101",
])

MAT_M_INV = _mat([
    "10001000",
    "00001101",
    "01001101",
    "01001110",
    "01011101",
    "00101100",
    "01111001",
    "00101101",
])

MAT_AM_INV = _mat([
    "10101101",
    "11111101",
    "10011100",
    "10101011",
    "11011011",
    "01111111",
    "00001011",
    "01101011",
])


def mat_apply(m: np.ndarray, value: int) -> int:
    """Multiply matrix by a bit vector packed LSB-first into an int."""
    out = 0
    for i in range(m.shape[0]):
        acc = 0
        row = m[i]
        for j in range(m.shape[1]):
            acc ^= int(row[j]) & (value >> j)
        out |= (acc & 1) << i
    return out


def map_phi(a: int) -> tuple[int, int]:
    """Field isomorphism GF(2^8) -> F((2^4)^2) given by MAT_M."""
    v = mat_apply(MAT_M, a)
    return (v & 0xF, v >> 4)


def map_phi_inv(p: tuple[int, int]) -> int:
    return mat_apply(MAT_M_INV, p[0] | (p[1] << 4))


def map_affine_out(n: tuple[int, int]) -> int:
    """Apply the combined output transform and add the S-box constant."""
    return mat_apply(MAT_AM_INV, n[0] | (n[1] << 4)) ^ SBOX_CONST


def sbox_ref(a: int) -> int:
    """S-box via direct GF(2^8) inversion and the affine transform."""
    return mat_apply(MAT_A, gf256_inv(a)) ^ SBOX_CONST


def sbox_composite(a: int) -> int:
    """S-box routed through the tower field: invert Phi(a), map back out."""
    return map_affine_out(comp_inv(map_phi(a)))


SBOX = tuple(sbox_ref(a) for a in range(256))


def mixcolumn_ref(col: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Classical MixColumns on one 4-byte column ({02,03,01,01} circulant)."""
    b0, b1, b2, b3 = col
    return (
        xtime(b0) ^ xtime(b1) ^ b1 ^ b2 ^ b3,
        b0 ^ xtime(b1) ^ xtime(b2) ^ b2 ^ b3,
        b0 ^ b1 ^ xtime(b2) ^ xtime(b3) ^ b3,
        xtime(b0) ^ b0 ^ b1 ^ b2 ^ xtime(b3),
    )


def mixcolumns_matrix() -> np.ndarray:
    """32x32 GF(2) matrix of MixColumns on one column, derived from the
    byte-level reference (bit 8*k+i = bit i of byte k)."""
    m = np.zeros((32, 32), dtype=np.uint8)
    for j in range(32):
        col = [0, 0, 0, 0]
        col[j // 8] = 1 << (j % 8)
        out = mixcolumn_ref(tuple(col))
        for k in range(4):
            for i in range(8):
                m[8 * k + i, j] = (out[k] >> i) & 1
    return m
