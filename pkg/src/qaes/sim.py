"""Deterministic circuit simulators.

Two levels: a basis-state simulator for the classical reversible gate
set (X, CNOT, Toffoli and the AND-gadget pair), which scales to the full
AES circuits, and a dense-unitary builder capped at 7 wires used to
validate Clifford+T decomposition templates.

The AND gadget (QAND) demands a |0> target; the simulator enforces this
at runtime so a modelling mistake surfaces as a hard failure instead of
a silently wrong count.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .circuit import CLASSICAL_KINDS, Circuit

DEFAULT_SEED = 0xAE5
UNITARY_WIRE_CAP = 7


class SimulationError(ValueError):
    pass


_OPCODES = {"X": 0, "CNOT": 1, "TOFFOLI": 2, "QAND": 3, "QAND_DG": 4}


def _compiled(c: Circuit) -> list[tuple[int, ...]]:
    ops = []
    for g in c.gates:
        if g.kind not in CLASSICAL_KINDS:
            raise SimulationError(
                f"gate {g.kind} has no basis-state semantics")
        ops.append((_OPCODES[g.kind],) + g.qubits)
    return ops


def run(c: Circuit, state: int, check: bool = True) -> int:
    """Evolve a basis state (bit i of ``state`` = wire i) through c."""
    if state >> c.n_qubits:
        raise SimulationError("input state wider than the circuit")
    for op in _compiled(c):
        code = op[0]
        if code == 0:
            state ^= 1 << op[1]
        elif code == 1:
            if (state >> op[1]) & 1:
                state ^= 1 << op[2]
        else:
            c1, c2, t = op[1], op[2], op[3]
            if check and code == 3 and (state >> t) & 1:
                raise SimulationError(
                    f"QAND target q{t} not |0> at application time")
            if (state >> c1) & (state >> c2) & 1:
                state ^= 1 << t
    return state


def run_batch(c: Circuit, states: np.ndarray, check: bool = True) -> np.ndarray:
    """Evolve many basis states at once; states is (cases, n_qubits) uint8."""
    s = np.array(states, dtype=np.uint8)
    if s.ndim != 2 or s.shape[1] != c.n_qubits:
        raise SimulationError("state array must be (cases, n_qubits)")
    for op in _compiled(c):
        code = op[0]
        if code == 0:
            s[:, op[1]] ^= 1
        elif code == 1:
            s[:, op[2]] ^= s[:, op[1]]
        else:
            c1, c2, t = op[1], op[2], op[3]
            if check and code == 3 and s[:, t].any():
                raise SimulationError(
                    f"QAND target q{t} not |0> at application time")
            s[:, t] ^= s[:, c1] & s[:, c2]
    return s


def bits_to_value(row: np.ndarray, wires: Sequence[int]) -> int:
    return sum(int(row[w]) << i for i, w in enumerate(wires))


@dataclass
class SweepReport:
    ok: bool
    n_cases: int
    failures: list[tuple]  # (inputs dict, reg or "clean", got, expected)
    seed: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _case_values(widths: list[int], cap: int, seed: int) -> tuple[list[tuple[int, ...]], int | None]:
    total = 1
    for w in widths:
        total <<= w
    if total <= cap:
        return list(itertools.product(*[range(1 << w) for w in widths])), None
    rng = np.random.default_rng(seed)
    cases = [tuple(int(rng.integers(0, 1 << w)) for w in widths)
             for _ in range(cap)]
    return cases, seed


def sweep(c: Circuit,
          inputs: dict[str, Sequence[int]],
          outputs: dict[str, Sequence[int]],
          oracle: Callable[..., dict[str, int]],
          cap: int = 1 << 16,
          seed: int = DEFAULT_SEED,
          check_clean: bool = True,
          cases: Iterable[dict[str, int]] | None = None,
          max_failures: int = 5) -> SweepReport:
    """Check circuit outputs against a classical oracle.

    Enumerates every assignment of the input registers (randomized with
    a fixed seed past ``cap`` cases), simulates the batch, and compares
    each output register with ``oracle(**inputs)``.  Wires outside all
    output registers must return to 0.
    """
    names = list(inputs)
    widths = [len(inputs[n]) for n in names]
    used_seed = None
    if cases is None:
        values, used_seed = _case_values(widths, cap, seed)
        case_dicts = [dict(zip(names, v)) for v in values]
    else:
        case_dicts = [dict(d) for d in cases]

    states = np.zeros((len(case_dicts), c.n_qubits), dtype=np.uint8)
    for r, d in enumerate(case_dicts):
        for n in names:
            for i, w in enumerate(inputs[n]):
                states[r, w] = (d[n] >> i) & 1
    out = run_batch(c, states)

    out_wires = {w for ws in outputs.values() for w in ws}
    failures: list[tuple] = []
    for r, d in enumerate(case_dicts):
        expect = oracle(**d)
        for name, ws in outputs.items():
            got = bits_to_value(out[r], ws)
            if got != expect[name]:
                failures.append((d, name, got, expect[name]))
                break
        else:
            if check_clean:
                for w in range(c.n_qubits):
                    if w not in out_wires and out[r, w]:
                        failures.append((d, "clean", f"q{w}=1", 0))
                        break
        if len(failures) >= max_failures:
            break
    return SweepReport(not failures, len(case_dicts), failures, used_seed)


def workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("QAES_THREADS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# Dense unitaries for small-template verification.
# ---------------------------------------------------------------------------

_SQ2 = 1.0 / math.sqrt(2.0)


def unitary_of(c: Circuit) -> np.ndarray:
    """Exact 2^n x 2^n unitary of a small circuit (n <= 7).

    QAND / QAND_DG are given Toffoli semantics here; they are exact on
    the clean-target subspace the gadgets are contracted for.
    """
    n = c.n_qubits
    if n > UNITARY_WIRE_CAP:
        raise SimulationError(f"dense unitary capped at {UNITARY_WIRE_CAP} wires")
    dim = 1 << n
    u = np.eye(dim, dtype=np.complex128)
    idx = np.arange(dim)
    for g in c.gates:
        k = g.kind
        if k in ("X", "CNOT", "TOFFOLI", "QAND", "QAND_DG"):
            t = g.qubits[-1]
            mask = np.ones(dim, dtype=bool)
            for ctl in g.qubits[:-1]:
                mask &= (idx >> ctl) & 1 == 1
            perm = np.where(mask, idx ^ (1 << t), idx)
            u = u[perm]
        elif k == "H":
            (w,) = g.qubits
            lo = (idx >> w) & 1 == 0
            a, b = u[lo], u[~lo]
            u[lo], u[~lo] = _SQ2 * (a + b), _SQ2 * (a - b)
        elif k in ("S", "S_DG", "T", "T_DG"):
            (w,) = g.qubits
            phase = {"S": 1j, "S_DG": -1j,
                     "T": np.exp(1j * math.pi / 4),
                     "T_DG": np.exp(-1j * math.pi / 4)}[k]
            sel = (idx >> w) & 1 == 1
            u[sel] *= phase
        elif k == "CZ":
            a, b = g.qubits
            sel = ((idx >> a) & 1 == 1) & ((idx >> b) & 1 == 1)
            u[sel] *= -1.0
        else:
            raise SimulationError(f"gate {k} unsupported in dense simulation")
    return u


def unitary_equal(u1: np.ndarray, u2: np.ndarray, tol: float = 1e-9) -> bool:
    """Equality up to global phase in the max norm."""
    if u1.shape != u2.shape:
        return False
    flat = np.argmax(np.abs(u1))
    ref = u1.flat[flat]
    if abs(ref) < tol:
        return bool(np.max(np.abs(u1 - u2)) <= tol)
    phase = u2.flat[flat] / ref
    if abs(abs(phase) - 1.0) > tol:
        return False
    return bool(np.max(np.abs(u1 * phase - u2)) <= tol)


def acts_as_on_clean(u_big: np.ndarray, n: int, data_wires: Sequence[int],
                     clean_wires: Sequence[int], u_small: np.ndarray,
                     tol: float = 1e-9) -> bool:
    """Check a unitary equals ``u_small`` on the data wires whenever the
    clean wires start |0>, up to global phase.

    ``clean_wires`` may overlap ``data_wires`` (a promised-clean target):
    overlapping wires restrict the compared input columns but evolve per
    ``u_small``; non-data clean wires must return to |0>.
    """
    dim_small = u_small.shape[0]
    promised = [i for i, w in enumerate(data_wires) if w in set(clean_wires)]
    cols_big = []
    cols_want = []
    for s in range(dim_small):
        if any((s >> i) & 1 for i in promised):
            continue
        idx = 0
        for i, w in enumerate(data_wires):
            idx |= ((s >> i) & 1) << w
        col = u_big[:, idx]
        want = np.zeros(u_big.shape[0], dtype=np.complex128)
        for out_s in range(dim_small):
            amp = u_small[out_s, s]
            if abs(amp) > 0:
                out_idx = 0
                for i, w in enumerate(data_wires):
                    out_idx |= ((out_s >> i) & 1) << w
                want[out_idx] = amp
        cols_big.append(col)
        cols_want.append(want)
    return unitary_equal(np.array(cols_big).T, np.array(cols_want).T, tol)


def toffoli_unitary() -> np.ndarray:
    dim = 8
    u = np.zeros((dim, dim), dtype=np.complex128)
    for b in range(dim):
        out = b ^ (1 << 2) if (b & 1) and (b & 2) else b
        u[out, b] = 1.0
    return u
