"""Classical AES-128/192/256 encryption used as the verification oracle.

The state is a 16-byte list in column-major order (byte 4*c + r sits at
row r, column c).  The key schedule follows the word recurrence of the
standard: for 128/192-bit keys every N_K-th word passes through
RotWord/SubWord/Rcon; 256-bit keys additionally apply SubWord (without
RotWord) halfway through each 8-word window.
"""

from __future__ import annotations

from .gf import SBOX, gf256_pow, mixcolumn_ref

ROUNDS = {16: 10, 24: 12, 32: 14}
KEY_WORDS = {16: 4, 24: 6, 32: 8}

# Round-constant bytes RC[j] = x^(j-1) reduced in GF(2^8).
RC = tuple(gf256_pow(2, j - 1) for j in range(1, 15))


def rcon(j: int) -> int:
    return RC[j - 1]


def sub_word(w: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    return tuple(SBOX[b] for b in w)


def rot_word(w: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    return (w[1], w[2], w[3], w[0])


def key_expansion_words(key: bytes) -> list[tuple[int, int, int, int]]:
    """All 4*(N_R+1) schedule words, each a 4-byte tuple."""
    nk = KEY_WORDS[len(key)]
    nr = ROUNDS[len(key)]
    words = [tuple(key[4 * i: 4 * i + 4]) for i in range(nk)]
    for t in range(nk, 4 * (nr + 1)):
        prev = words[t - 1]
        if t % nk == 0:
            prev = sub_word(rot_word(prev))
            prev = (prev[0] ^ rcon(t // nk),) + prev[1:]
        elif nk == 8 and t % 8 == 4:
            prev = sub_word(prev)
        words.append(tuple(a ^ b for a, b in zip(words[t - nk], prev)))
    return words


def round_keys(key: bytes) -> list[list[int]]:
    words = key_expansion_words(key)
    return [[b for w in words[4 * i: 4 * i + 4] for b in w]
            for i in range(len(words) // 4)]


def sub_bytes(state: list[int]) -> list[int]:
    return [SBOX[b] for b in state]


def shift_rows(state: list[int]) -> list[int]:
    return [state[4 * ((c + r) % 4) + r] for c in range(4) for r in range(4)]


def shift_rows_byte_perm() -> list[int]:
    """Byte permutation of ShiftRows: output position i takes input perm[i]."""
    return [4 * ((i // 4 + i % 4) % 4) + i % 4 for i in range(16)]


def mix_columns(state: list[int]) -> list[int]:
    out = []
    for c in range(4):
        out.extend(mixcolumn_ref(tuple(state[4 * c: 4 * c + 4])))
    return out


def add_round_key(state: list[int], rk: list[int]) -> list[int]:
    return [s ^ k for s, k in zip(state, rk)]


def aes_encrypt(key: bytes, plaintext: bytes) -> bytes:
    """Encrypt one 16-byte block; key length selects the variant."""
    if len(key) not in ROUNDS:
        raise ValueError(f"key must be 16, 24 or 32 bytes, got {len(key)}")
    if len(plaintext) != 16:
        raise ValueError("plaintext must be exactly 16 bytes")
    rks = round_keys(key)
    nr = ROUNDS[len(key)]
    state = add_round_key(list(plaintext), rks[0])
    for r in range(1, nr + 1):
        state = sub_bytes(state)
        state = shift_rows(state)
        if r != nr:
            state = mix_columns(state)
        state = add_round_key(state, rks[r])
    return bytes(state)
