"""In-place CNOT network synthesis for invertible GF(2) matrices.

Two synthesizers: a plain Gaussian-elimination baseline and a
weight-greedy optimizer with seeded restarts.  The optimizer may leave a
residual wire permutation (absorbed by callers as relabeling), which is
recorded in ``SynthResult.out_wires``; ``verify_linear`` checks the
circuit against the matrix through that permutation.

Internally matrices are held as column bitmasks (bit i = row i), which
makes a column operation one XOR and the weight a popcount.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .circuit import Builder, Circuit
from .sim import DEFAULT_SEED, run


class SingularMatrixError(ValueError):
    pass


def _to_cols(m: np.ndarray) -> list[int]:
    rows, cols = m.shape
    return [int(sum((int(m[i, j]) & 1) << i for i in range(rows)))
            for j in range(cols)]


def gf2_is_invertible(m: np.ndarray) -> bool:
    if m.shape[0] != m.shape[1]:
        return False
    cols = _to_cols(m)
    n = m.shape[0]
    basis: list[int] = []
    for c in cols:
        for b in basis:
            c = min(c, c ^ b)
        if c == 0:
            return False
        basis.append(c)
    return len(basis) == n


def gf2_inverse(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    a = m.astype(np.uint8) % 2
    aug = np.concatenate([a, np.eye(n, dtype=np.uint8)], axis=1)
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if aug[i, c]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular over GF(2)")
        if piv != r:
            aug[[r, piv]] = aug[[piv, r]]
        for i in range(n):
            if i != r and aug[i, c]:
                aug[i] ^= aug[r]
        r += 1
    return aug[:, n:]


@dataclass
class SynthResult:
    circuit: Circuit
    cnot_count: int
    method: str
    out_wires: tuple[int, ...]  # wire holding output bit i

    @property
    def in_place(self) -> bool:
        return self.out_wires == tuple(range(len(self.out_wires)))


def _build(gate_list: list[tuple[int, int]], n: int, name: str,
           method: str, out_wires: tuple[int, ...]) -> SynthResult:
    b = Builder(name)
    b.alloc(n, role="input")
    for c, t in gate_list:
        b.cx(c, t)
    return SynthResult(b.build(regs={"out": out_wires}), len(gate_list),
                       method, out_wires)


def synth_plu(m: np.ndarray, name: str = "linear") -> SynthResult:
    """Gaussian-elimination transcript; strictly in place (swaps cost 3)."""
    n = m.shape[0]
    if not gf2_is_invertible(m):
        raise SingularMatrixError("matrix is singular over GF(2)")
    work = m.astype(np.uint8).copy()
    ops: list[tuple[int, int]] = []  # row t ^= row s

    def row_add(s: int, t: int) -> None:
        work[t] ^= work[s]
        ops.append((s, t))

    for c in range(n):
        piv = next(i for i in range(c, n) if work[i, c])
        if piv != c:
            row_add(piv, c)
            row_add(c, piv)
            row_add(piv, c)
        for i in range(n):
            if i != c and work[i, c]:
                row_add(c, i)
    # ops reduce M to I; as a circuit for x -> Mx apply them reversed,
    # each row op (s -> t) being CNOT control s target t.
    gates = [(s, t) for s, t in reversed(ops)]
    return _build(gates, n, name, "plu", tuple(range(n)))


_BIG = 1 << 30


def _move_scores(v: np.ndarray, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pop = np.bitwise_count
    new_w = pop(v[None, :] ^ v[:, None]).astype(np.int64)  # [a, b]
    gain = w[None, :] - new_w
    np.fill_diagonal(gain, -_BIG)
    gain[new_w == 0] = -_BIG
    return gain, new_w


def _greedy_two_sided(m: np.ndarray, rng: random.Random, max_ops: int,
                      relax: int = 0):
    """Reduce M to a permutation by mixed row and column operations.

    Returns (row_ops, col_ops, final_matrix) or None.  Row op (s, t)
    means row t ^= row s; column op (a, b) means col b ^= col a.  Moves
    are scored by total weight reduction with a GRASP-style ``relax``
    widening; requires n <= 64 (masks packed into uint64).
    """
    n = m.shape[0]
    if n > 64:
        raise ValueError("greedy synthesis capped at 64 wires")
    cols = np.array(_to_cols(m), dtype=np.uint64)
    rows = np.array(_to_cols(m.T), dtype=np.uint64)
    pop = np.bitwise_count
    row_ops: list[tuple[int, int]] = []
    col_ops: list[tuple[int, int]] = []
    stall = 0
    while len(row_ops) + len(col_ops) < max_ops:
        wc = pop(cols).astype(np.int64)
        if int(wc.sum()) == n:
            return row_ops, col_ops, cols
        gc, nwc = _move_scores(cols, wc)
        wr = pop(rows).astype(np.int64)
        gr, nwr = _move_scores(rows, wr)
        sc = 2 * gc + (nwc == 1)
        sr = 2 * gr + (nwr == 1)
        best = max(int(sc.max()), int(sr.max()))
        if best <= -_BIG:
            return None
        floor = best - relax if best > 2 else best
        cand = [(0, a, b) for a, b in np.argwhere(sc >= floor)]
        cand += [(1, a, b) for a, b in np.argwhere(sr >= floor)]
        side, a, b = cand[rng.randrange(len(cand))]
        a, b = int(a), int(b)
        gain = (gc if side == 0 else gr)[a, b]
        if gain <= 0:
            stall += 1
            if stall > 2 * n:
                return None
        else:
            stall = 0
        if side == 0:
            cols[b] ^= cols[a]
            rows ^= ((rows >> np.uint64(a)) & np.uint64(1)) << np.uint64(b)
            col_ops.append((a, b))
        else:
            rows[b] ^= rows[a]
            cols ^= ((cols >> np.uint64(a)) & np.uint64(1)) << np.uint64(b)
            row_ops.append((a, b))
    return None


def synth_optimized(m: np.ndarray, effort: int = 40, seed: int = DEFAULT_SEED,
                    allow_perm: bool = True, name: str = "linear") -> SynthResult:
    """Weight-greedy column reduction with seeded restarts.

    Never worse than the PLU baseline: falls back to it if the search
    does not beat it within the restart budget.
    """
    n = m.shape[0]
    baseline = synth_plu(m, name)
    best: tuple[int, list, list, tuple[int, ...]] | None = None
    for attempt in range(effort):
        rng = random.Random((seed << 16) ^ attempt)
        work = m.astype(np.uint8).copy()
        prefix: list[tuple[int, int]] = []
        if attempt % 2 == 1:
            # iterated local search: random column perturbation first
            for _ in range(1 + attempt % 5):
                a, b = rng.randrange(n), rng.randrange(n)
                if a != b:
                    work[:, b] ^= work[:, a]
                    prefix.append((a, b))
        got = _greedy_two_sided(work, rng, max_ops=4 * n * n, relax=attempt % 3)
        if got is None:
            continue
        row_ops, col_ops, final_cols = got
        col_ops = _cancel_adjacent(prefix + col_ops)
        final = [int(c) for c in final_cols]
        if not allow_perm:
            col_ops = col_ops + _permutation_to_identity(final)
            perm = tuple(range(n))
        else:
            perm = tuple(next(j for j in range(n) if final[j] == (1 << i))
                         for i in range(n))
        cost = len(row_ops) + len(col_ops)
        if best is None or cost < best[0]:
            best = (cost, row_ops, col_ops, perm)
    if best is None or best[0] >= baseline.cnot_count:
        return baseline
    _, row_ops, col_ops, perm = best
    # Column op (a into b) acts on the state as CNOT(control b, target a)
    # and precedes every row op; row op (s into t) is CNOT(control s,
    # target t) emitted in reverse, with wires routed through the
    # residual permutation.
    gates = [(b, a) for a, b in col_ops]
    gates += [(perm[s], perm[t]) for s, t in reversed(row_ops)]
    gates = _peephole_cnots(gates)
    return _build(gates, n, name, "optimized", perm)


def _cancel_adjacent(ops: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Peephole: drop immediately repeated identical column ops."""
    out: list[tuple[int, int]] = []
    for op in ops:
        if out and out[-1] == op:
            out.pop()
        else:
            out.append(op)
    return out


def _peephole_cnots(gates: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Cancel duplicate CNOT pairs separated only by commuting CNOTs.

    CNOT(a,b) and CNOT(c,d) commute unless b == c or a == d.
    """
    gates = list(gates)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(gates):
            a, b = gates[i]
            j = i + 1
            while j < len(gates):
                c, d = gates[j]
                if (c, d) == (a, b):
                    del gates[j]
                    del gates[i]
                    changed = True
                    i -= 1
                    break
                if b == c or a == d:
                    break
                j += 1
            i += 1
    return gates


def _permutation_to_identity(cols: list[int]) -> list[tuple[int, int]]:
    """Column swaps (3 ops each) turning a permutation matrix into I."""
    n = len(cols)
    ops = []
    for i in range(n):
        j = next(k for k in range(i, n) if cols[k] == (1 << i))
        if j != i:
            for a, b in ((j, i), (i, j), (j, i)):
                cols[b] ^= cols[a]
                ops.append((a, b))
    return ops


def verify_linear(c: Circuit, m: np.ndarray,
                  out_wires: tuple[int, ...] | None = None,
                  n_random: int = 100, seed: int = DEFAULT_SEED):
    """Check a CNOT-only circuit implements x -> Mx on the basis (which
    proves equivalence by linearity), plus random vectors for belt and
    braces.  Returns (ok, first_counterexample_or_None)."""
    n = m.shape[0]
    if any(g.kind != "CNOT" for g in c.gates):
        raise ValueError("verify_linear expects a CNOT-only circuit")
    if out_wires is None:
        out_wires = c.regs.get("out", tuple(range(n)))
    rng = random.Random(seed)
    vectors = [1 << j for j in range(n)]
    vectors += [rng.getrandbits(n) for _ in range(n_random)]
    for x in vectors:
        got_state = run(c, x)
        got = sum(((got_state >> w) & 1) << i for i, w in enumerate(out_wires))
        want = 0
        for i in range(n):
            acc = 0
            for j in range(n):
                acc ^= int(m[i, j]) & (x >> j)
            want |= (acc & 1) << i
        if got != want:
            return False, x
    return True, None


# ---------------------------------------------------------------------------
# Cached networks for the package's built-in matrices.  Effort and seed
# are pinned so every build is byte-identical and meets the gate budget.
# ---------------------------------------------------------------------------

import functools

from . import gf as _gf


@functools.lru_cache(maxsize=None)
def synth_u_m() -> SynthResult:
    return synth_optimized(_gf.MAT_M, effort=100, name="u_m")


@functools.lru_cache(maxsize=None)
def synth_u_am_inv() -> SynthResult:
    return synth_optimized(_gf.MAT_AM_INV, effort=100, name="u_am_inv")


@functools.lru_cache(maxsize=None)
def synth_u_am_inv_dg() -> SynthResult:
    return synth_optimized(gf2_inverse(_gf.MAT_AM_INV), effort=100,
                           name="u_am_inv_dg")


@functools.lru_cache(maxsize=None)
def synth_mixcolumns() -> SynthResult:
    return synth_optimized(_gf.mixcolumns_matrix(), effort=150, seed=2,
                           name="mixcolumn")


def matrix_to_text(m: np.ndarray) -> str:
    rows, cols = m.shape
    lines = [f"{rows} {cols}"]
    lines += ["".join(str(int(m[i, j])) for j in range(cols)) for i in range(rows)]
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> np.ndarray:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    rows, cols = (int(x) for x in lines[0].split())
    if len(lines) != rows + 1:
        raise ValueError(f"expected {rows} matrix rows, got {len(lines) - 1}")
    m = np.zeros((rows, cols), dtype=np.uint8)
    for i, ln in enumerate(lines[1:]):
        if len(ln) != cols or set(ln) - {"0", "1"}:
            raise ValueError(f"row {i} must be {cols} characters of 0/1")
        for j, ch in enumerate(ln):
            m[i, j] = int(ch)
    return m
