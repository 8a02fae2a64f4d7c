"""Clifford+T decomposition, depth metrics, and resource reporting.

Depth here is Clifford-transparent: a metric counts layers of its gate
family along wire-dependency paths, so Clifford routing between counted
gates never inflates it.  ``schedule`` still exposes plain all-gate ASAP
layers for inspection.

Decomposition strategies differ in how a bare Toffoli expands:

- ``seven_t``   seven T gates in three stages, no extra wires;
- ``tdepth1``   seven T gates in one stage on four borrowed clean wires;
- ``qand``      AND-gadget onto a fresh helper, CNOT out, uncompute
                (four T gates, one stage, two borrowed wires).

The AND gadget itself always expands to its 4-T, single-stage circuit;
its uncompute partner stays in the gate list as a Clifford-only marker
(measurement-based, priced at a fixed Clifford count, T-free).
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Builder, Circuit, Gate

TOFFOLI_LIKE = frozenset({"TOFFOLI", "QAND", "QAND_DG"})
T_LIKE = frozenset({"T", "T_DG"})
CLIFFORD_KINDS = frozenset({"CNOT", "X", "H", "S", "S_DG", "CZ"})

STRATEGIES = ("qand", "seven_t", "tdepth1")
DEFAULT_STRATEGY = "qand"

# Clifford cost of the measurement-based AND uncompute.
QAND_DG_CLIFFORDS = 2

HELPERS_PER_GATE = {
    "qand": {"QAND": 1, "TOFFOLI": 2},
    "seven_t": {"QAND": 1, "TOFFOLI": 0},
    "tdepth1": {"QAND": 1, "TOFFOLI": 4},
}


def depth(c: Circuit, counted: frozenset[str] | None = None) -> int:
    """Layers of ``counted`` gates along wire-dependency paths; with
    counted=None every gate advances the clock (plain circuit depth)."""
    if c.n_qubits == 0:
        return 0
    d = [0] * c.n_qubits
    for g in c.gates:
        lvl = max(d[q] for q in g.qubits)
        if counted is None or g.kind in counted:
            lvl += 1
        for q in g.qubits:
            d[q] = lvl
    return max(d, default=0)


def toffoli_depth(c: Circuit) -> int:
    return depth(c, TOFFOLI_LIKE)


def t_depth(c: Circuit) -> int:
    return depth(c, T_LIKE)


def schedule(c: Circuit) -> list[list[int]]:
    """All-gate ASAP layering under qubit-disjointness: each gate enters
    the earliest layer after every earlier gate sharing a wire."""
    ready = [0] * c.n_qubits
    layers: list[list[int]] = []
    for i, g in enumerate(c.gates):
        lvl = max(ready[q] for q in g.qubits)
        if lvl == len(layers):
            layers.append([])
        layers[lvl].append(i)
        for q in g.qubits:
            ready[q] = lvl + 1
    return layers


# ---------------------------------------------------------------------------
# Expansion templates
# ---------------------------------------------------------------------------

def toffoli_template_seven_t(a: int, b: int, t: int) -> list[Gate]:
    """Toffoli from seven T gates in three stages, no extra wires."""
    g = []
    add = lambda kind, *q: g.append(Gate(kind, q))
    add("H", t)
    add("T", a); add("T", b); add("T", t)
    add("CNOT", b, a); add("CNOT", t, b); add("CNOT", a, t)
    add("T_DG", a); add("T_DG", b); add("T", t)
    add("CNOT", b, a)
    add("T_DG", a)
    add("CNOT", b, t); add("CNOT", t, a); add("CNOT", a, b)
    add("CNOT", a, t); add("CNOT", t, a); add("CNOT", a, t)
    add("H", t)
    return g


def toffoli_template_tdepth1(a: int, b: int, t: int, z) -> list[Gate]:
    """Toffoli with all seven T gates in a single stage, using four
    borrowed clean wires for the linear combinations."""
    z1, z2, z3, z4 = z
    g = []
    add = lambda kind, *q: g.append(Gate(kind, q))
    add("H", t)
    fan = [("CNOT", a, z1), ("CNOT", b, z1), ("CNOT", z1, z4), ("CNOT", t, z4),
           ("CNOT", a, z2), ("CNOT", t, z2), ("CNOT", b, z3), ("CNOT", t, z3)]
    for kind, x, y in fan:
        add(kind, x, y)
    add("T", a); add("T", b); add("T", t)
    add("T_DG", z1); add("T_DG", z2); add("T_DG", z3); add("T", z4)
    for kind, x, y in reversed(fan):
        add(kind, x, y)
    add("H", t)
    return g


def qand_template(a: int, b: int, t: int, h: int) -> list[Gate]:
    """AND gadget: four T gates in one stage, one borrowed clean wire.
    Exact on the contracted subspace (t and h start |0>)."""
    g = []
    add = lambda kind, *q: g.append(Gate(kind, q))
    add("H", t)
    pre = [("CNOT", t, a), ("CNOT", t, b), ("CNOT", a, h), ("CNOT", b, h),
           ("CNOT", t, h)]
    for kind, x, y in pre:
        add(kind, x, y)
    add("T", t); add("T_DG", a); add("T_DG", b); add("T", h)
    for kind, x, y in reversed(pre):
        add(kind, x, y)
    add("H", t)
    add("S", t)
    return g


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------

def decompose(c: Circuit, strategy: str = DEFAULT_STRATEGY) -> Circuit:
    """Expand Toffoli-level gates into Clifford+T.

    Helper wires are pooled per zone (a lane tag per wire, zone 0 by
    default) and per parallel layer within it: same-layer gadgets get
    distinct helpers, sequential ones reuse them.  Keeping helpers
    lane-local means reuse never couples independent lanes, so the
    expansion preserves each stage's T-parallelism.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    need = HELPERS_PER_GATE[strategy]
    for g in c.gates:
        if g.kind not in TOFFOLI_LIKE and g.kind not in CLIFFORD_KINDS \
                and g.kind not in T_LIKE:
            raise ValueError(f"cannot decompose gate kind {g.kind}")

    # Pass 1: layer each counted gate (Clifford-transparent) and hand
    # out helper ranks within its (zone, layer) cell.
    d = [0] * c.n_qubits
    rank: dict[int, int] = {}
    zone_of_gate: dict[int, int] = {}
    fill: dict[tuple[int, int], int] = {}
    zone_peak: dict[int, int] = {}
    for i, g in enumerate(c.gates):
        lvl = max(d[q] for q in g.qubits)
        if g.kind in TOFFOLI_LIKE:
            lvl += 1
            h = need.get(g.kind, 0)
            if h:
                z = c.zone_of(i)
                zone_of_gate[i] = z
                rank[i] = fill.get((z, lvl), 0)
                fill[(z, lvl)] = rank[i] + h
                zone_peak[z] = max(zone_peak.get(z, 0), fill[(z, lvl)])
        for q in g.qubits:
            d[q] = lvl
    base = c.n_qubits
    zone_base: dict[int, int] = {}
    off = base
    for z in sorted(zone_peak):
        zone_base[z] = off
        off += zone_peak[z]
    n_total = off

    out: list[Gate] = []
    for i, g in enumerate(c.gates):
        if g.kind == "TOFFOLI":
            a, b, t = g.qubits
            r = zone_base[zone_of_gate[i]] + rank[i]
            if strategy == "seven_t":
                out += toffoli_template_seven_t(a, b, t)
            elif strategy == "tdepth1":
                out += toffoli_template_tdepth1(a, b, t, (r, r + 1, r + 2, r + 3))
            else:
                out += qand_template(a, b, r, r + 1)
                out.append(Gate("CNOT", (r, t)))
                out.append(Gate("QAND_DG", (a, b, r)))
        elif g.kind == "QAND":
            a, b, t = g.qubits
            out += qand_template(a, b, t, zone_base[zone_of_gate[i]] + rank[i])
        else:
            out.append(g)
    roles = dict(c.roles)
    for q in range(base, n_total):
        roles[q] = "ancilla"
    return Circuit(n_total, tuple(out), name=c.name,
                   roles=roles, labels=dict(c.labels), regs=dict(c.regs))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResourceReport:
    """Toffoli-level columns come from the circuit as built; the T-level
    columns (qubits, n_t, n_clifford, t_depth, dw_t) from its Clifford+T
    expansion under the chosen strategy."""
    name: str
    strategy: str
    qubits: int
    n_toffoli: int
    n_cnot: int
    n_not: int
    toffoli_depth: int
    n_t: int
    n_clifford: int
    t_depth: int
    dw_t: int
    qubits_pre: int

    def as_dict(self) -> dict[str, int | str]:
        return {
            "name": self.name, "strategy": self.strategy,
            "qubits": self.qubits, "toffoli": self.n_toffoli,
            "cnot": self.n_cnot, "not": self.n_not,
            "toffoli_depth": self.toffoli_depth, "t": self.n_t,
            "clifford": self.n_clifford, "t_depth": self.t_depth,
            "dw_t": self.dw_t, "qubits_pre": self.qubits_pre,
        }


def report(c: Circuit, strategy: str = DEFAULT_STRATEGY) -> ResourceReport:
    counts = c.counts()
    dec = decompose(c, strategy)
    dcounts = dec.counts()
    n_t = dcounts.get("T", 0) + dcounts.get("T_DG", 0)
    n_clifford = sum(dcounts.get(k, 0) for k in CLIFFORD_KINDS)
    n_clifford += QAND_DG_CLIFFORDS * dcounts.get("QAND_DG", 0)
    td = t_depth(dec)
    return ResourceReport(
        name=c.name, strategy=strategy,
        qubits=dec.n_qubits,
        n_toffoli=sum(counts.get(k, 0) for k in TOFFOLI_LIKE),
        n_cnot=counts.get("CNOT", 0),
        n_not=counts.get("X", 0),
        toffoli_depth=toffoli_depth(c),
        n_t=n_t, n_clifford=n_clifford, t_depth=td,
        dw_t=dec.n_qubits * td,
        qubits_pre=c.n_qubits,
    )


# ---------------------------------------------------------------------------
# Reference cost figures used by the comparison reports.  Keys mirror
# ResourceReport fields ("qubits_pre"/"toffoli"/... are Toffoli-level,
# "qubits"/"t"/... are Clifford+T-level).
# ---------------------------------------------------------------------------

REFERENCE_COSTS: dict[str, dict[str, int]] = {
    "u_m": {"qubits_pre": 8, "cnot": 10},
    "u_am_inv": {"qubits_pre": 8, "cnot": 15},
    "q2lambda": {"qubits_pre": 4, "cnot": 3},
    "addroundkey": {"cnot": 128},
    "mixcolumn": {"cnot": 92},
    "inv0": {"qubits_pre": 5, "toffoli": 7, "cnot": 7, "not": 0,
             "toffoli_depth": 7, "qubits": 7, "t": 24, "clifford": 129,
             "t_depth": 6},
    "inv1": {"qubits_pre": 25, "toffoli": 20, "cnot": 42, "not": 0,
             "toffoli_depth": 4, "qubits": 29, "t": 40, "clifford": 222,
             "t_depth": 2},
    "mul0": {"qubits_pre": 28, "toffoli": 15, "cnot": 55, "not": 0,
             "toffoli_depth": 2, "qubits": 36, "t": 36, "clifford": 196,
             "t_depth": 1},
    "mul1": {"qubits_pre": 28, "toffoli": 15, "cnot": 59, "not": 0,
             "toffoli_depth": 2, "qubits": 37, "t": 36, "clifford": 200,
             "t_depth": 1},
    "mul2_v1": {"qubits_pre": 28, "toffoli": 44, "cnot": 124, "not": 0,
                "toffoli_depth": 18, "qubits": 36, "t": 108,
                "clifford": 638, "t_depth": 14},
    "mul2_v2": {"qubits_pre": 33, "toffoli": 70, "cnot": 194, "not": 0,
                "toffoli_depth": 12, "qubits": 40, "t": 140,
                "clifford": 824, "t_depth": 6},
    "c1_1": {"qubits_pre": 36, "toffoli": 67, "cnot": 300, "not": 4,
             "toffoli_depth": 15, "qubits": 44, "t": 168, "clifford": 990,
             "t_depth": 10},
    "c1_2": {"qubits_pre": 41, "toffoli": 100, "cnot": 377, "not": 4,
             "toffoli_depth": 16, "qubits": 48, "t": 224, "clifford": 1305,
             "t_depth": 8},
    "c2_1": {"qubits_pre": 36, "toffoli": 74, "cnot": 330, "not": 4,
             "toffoli_depth": 22, "qubits": 45, "t": 192, "clifford": 1142,
             "t_depth": 16},
    "c2_2": {"qubits_pre": 41, "toffoli": 100, "cnot": 400, "not": 4,
             "toffoli_depth": 16, "qubits": 49, "t": 224, "clifford": 1328,
             "t_depth": 8},
    "c2_3": {"qubits_pre": 60, "toffoli": 100, "cnot": 408, "not": 4,
             "toffoli_depth": 14, "qubits": 78, "t": 224, "clifford": 1336,
             "t_depth": 7},
    "c3_1": {"qubits_pre": 32, "toffoli": 125, "cnot": 424, "not": 4,
             "toffoli_depth": 47, "qubits": 40, "t": 312, "clifford": 1860,
             "t_depth": 36},
    "c3_2": {"qubits_pre": 36, "toffoli": 111, "cnot": 410, "not": 4,
             "toffoli_depth": 33, "qubits": 44, "t": 264, "clifford": 1602,
             "t_depth": 24},
    "c3_3": {"qubits_pre": 40, "toffoli": 130, "cnot": 473, "not": 4,
             "toffoli_depth": 20, "qubits": 48, "t": 272, "clifford": 1659,
             "t_depth": 10},
    "c3_4": {"qubits_pre": 60, "toffoli": 130, "cnot": 489, "not": 4,
             "toffoli_depth": 16, "qubits": 76, "t": 272, "clifford": 1675,
             "t_depth": 8},
}

# Key-expansion totals over a full cipher run, by key size and the
# XOR-form S-box variant used in it.
REFERENCE_KE: dict[tuple[int, str], dict[str, int]] = {
    (128, "c2_1"): {"qubits": 244, "t": 7680, "clifford": 46659, "t_depth": 160},
    (128, "c2_2"): {"qubits": 260, "t": 8960, "clifford": 54099, "t_depth": 80},
    (128, "c2_3"): {"qubits": 376, "t": 8960, "clifford": 54419, "t_depth": 70},
    (192, "c2_1"): {"qubits": 308, "t": 8448, "clifford": 51395, "t_depth": 176},
    (192, "c2_2"): {"qubits": 324, "t": 9856, "clifford": 59579, "t_depth": 88},
    (192, "c2_3"): {"qubits": 440, "t": 9856, "clifford": 59931, "t_depth": 77},
    (256, "c2_1"): {"qubits": 372, "t": 9984, "clifford": 60639, "t_depth": 208},
    (256, "c2_2"): {"qubits": 388, "t": 11648, "clifford": 70311, "t_depth": 104},
    (256, "c2_3"): {"qubits": 504, "t": 11648, "clifford": 70727, "t_depth": 91},
}

# Byte-substitution totals over a full cipher run, by key size and the
# in-place S-box variant.
REFERENCE_SUBBYTES: dict[tuple[int, str], dict[str, int]] = {
    (128, "c3_1"): {"qubits": 640, "t": 49920, "clifford": 297600, "t_depth": 360},
    (128, "c3_2"): {"qubits": 704, "t": 42220, "clifford": 256320, "t_depth": 240},
    (128, "c3_3"): {"qubits": 768, "t": 43520, "clifford": 265440, "t_depth": 100},
    (128, "c3_4"): {"qubits": 1216, "t": 43520, "clifford": 268000, "t_depth": 80},
    (192, "c3_1"): {"qubits": 704, "t": 59904, "clifford": 357120, "t_depth": 432},
    (192, "c3_2"): {"qubits": 768, "t": 50688, "clifford": 307584, "t_depth": 288},
    (192, "c3_3"): {"qubits": 832, "t": 52224, "clifford": 318528, "t_depth": 120},
    (192, "c3_4"): {"qubits": 1280, "t": 52224, "clifford": 321600, "t_depth": 96},
    (256, "c3_1"): {"qubits": 768, "t": 69888, "clifford": 416640, "t_depth": 504},
    (256, "c3_2"): {"qubits": 832, "t": 59136, "clifford": 358848, "t_depth": 336},
    (256, "c3_3"): {"qubits": 869, "t": 60928, "clifford": 371616, "t_depth": 140},
    (256, "c3_4"): {"qubits": 1344, "t": 60928, "clifford": 375200, "t_depth": 112},
}

# Full-cipher totals, keyed by (key bits, KE S-box, round S-box).
REFERENCE_AES: dict[tuple[int, str, str], dict[str, int]] = {
    (128, "c2_1", "c3_1"): {"qubits": 884, "t": 57600, "clifford": 349219, "t_depth": 360, "dw_t": 318240},
    (128, "c2_2", "c3_1"): {"qubits": 900, "t": 58880, "clifford": 356659, "t_depth": 360, "dw_t": 324000},
    (128, "c2_3", "c3_1"): {"qubits": 1016, "t": 58880, "clifford": 356979, "t_depth": 360, "dw_t": 365760},
    (128, "c2_1", "c3_2"): {"qubits": 948, "t": 49920, "clifford": 307939, "t_depth": 240, "dw_t": 227520},
    (128, "c2_2", "c3_2"): {"qubits": 964, "t": 51200, "clifford": 315379, "t_depth": 240, "dw_t": 231360},
    (128, "c2_3", "c3_2"): {"qubits": 1080, "t": 51200, "clifford": 315699, "t_depth": 240, "dw_t": 259200},
    (128, "c2_1", "c3_3"): {"qubits": 1012, "t": 51200, "clifford": 317059, "t_depth": 160, "dw_t": 161920},
    (128, "c2_2", "c3_3"): {"qubits": 1028, "t": 52480, "clifford": 324499, "t_depth": 100, "dw_t": 102800},
    (128, "c2_3", "c3_3"): {"qubits": 1144, "t": 52480, "clifford": 324819, "t_depth": 100, "dw_t": 114400},
    (128, "c2_1", "c3_4"): {"qubits": 1460, "t": 51200, "clifford": 319619, "t_depth": 160, "dw_t": 233600},
    (128, "c2_2", "c3_4"): {"qubits": 1476, "t": 52480, "clifford": 327059, "t_depth": 80, "dw_t": 118080},
    (128, "c2_3", "c3_4"): {"qubits": 1592, "t": 52480, "clifford": 327379, "t_depth": 80, "dw_t": 127360},
    (192, "c2_1", "c3_1"): {"qubits": 1012, "t": 68352, "clifford": 414467, "t_depth": 432, "dw_t": 437184},
    (192, "c2_2", "c3_1"): {"qubits": 1028, "t": 69760, "clifford": 422651, "t_depth": 432, "dw_t": 444096},
    (192, "c2_3", "c3_1"): {"qubits": 1144, "t": 69760, "clifford": 423003, "t_depth": 432, "dw_t": 494208},
    (192, "c2_1", "c3_2"): {"qubits": 1076, "t": 59136, "clifford": 364931, "t_depth": 288, "dw_t": 309888},
    (192, "c2_2", "c3_2"): {"qubits": 1092, "t": 60544, "clifford": 373115, "t_depth": 288, "dw_t": 314496},
    (192, "c2_3", "c3_2"): {"qubits": 1208, "t": 60544, "clifford": 373467, "t_depth": 288, "dw_t": 347904},
    (192, "c2_1", "c3_3"): {"qubits": 1140, "t": 60672, "clifford": 375875, "t_depth": 176, "dw_t": 200640},
    (192, "c2_2", "c3_3"): {"qubits": 1156, "t": 62080, "clifford": 384059, "t_depth": 120, "dw_t": 138720},
    (192, "c2_3", "c3_3"): {"qubits": 1272, "t": 62080, "clifford": 384411, "t_depth": 120, "dw_t": 152640},
    (192, "c2_1", "c3_4"): {"qubits": 1588, "t": 60672, "clifford": 378947, "t_depth": 176, "dw_t": 279488},
    (192, "c2_2", "c3_4"): {"qubits": 1604, "t": 62080, "clifford": 387131, "t_depth": 96, "dw_t": 153984},
    (192, "c2_3", "c3_4"): {"qubits": 1720, "t": 62080, "clifford": 387483, "t_depth": 96, "dw_t": 165120},
    (256, "c2_1", "c3_1"): {"qubits": 1140, "t": 79872, "clifford": 484223, "t_depth": 504, "dw_t": 574560},
    (256, "c2_2", "c3_1"): {"qubits": 1156, "t": 81536, "clifford": 493895, "t_depth": 504, "dw_t": 582624},
    (256, "c2_3", "c3_1"): {"qubits": 1272, "t": 81536, "clifford": 494311, "t_depth": 504, "dw_t": 641088},
    (256, "c2_1", "c3_2"): {"qubits": 1204, "t": 69120, "clifford": 426431, "t_depth": 336, "dw_t": 404544},
    (256, "c2_2", "c3_2"): {"qubits": 1220, "t": 70784, "clifford": 436103, "t_depth": 336, "dw_t": 409920},
    (256, "c2_3", "c3_2"): {"qubits": 1336, "t": 70784, "clifford": 436519, "t_depth": 336, "dw_t": 448896},
    (256, "c2_1", "c3_3"): {"qubits": 1268, "t": 70912, "clifford": 439199, "t_depth": 208, "dw_t": 263744},
    (256, "c2_2", "c3_3"): {"qubits": 1284, "t": 72576, "clifford": 448871, "t_depth": 140, "dw_t": 179760},
    (256, "c2_3", "c3_3"): {"qubits": 1400, "t": 72576, "clifford": 449287, "t_depth": 140, "dw_t": 196000},
    (256, "c2_1", "c3_4"): {"qubits": 1716, "t": 70912, "clifford": 442783, "t_depth": 208, "dw_t": 356928},
    (256, "c2_2", "c3_4"): {"qubits": 1732, "t": 72576, "clifford": 452455, "t_depth": 112, "dw_t": 193984},
    (256, "c2_3", "c3_4"): {"qubits": 1848, "t": 72576, "clifford": 452871, "t_depth": 112, "dw_t": 206976},
}


def parity_rows(rep: ResourceReport, ref: dict[str, int]) -> list[tuple[str, int, int, float]]:
    """Signed relative deltas (ours - reference) / reference per metric."""
    ours = rep.as_dict()
    rows = []
    for metric, ref_val in ref.items():
        got = int(ours[metric])
        delta = (got - ref_val) / ref_val if ref_val else float(got != ref_val)
        rows.append((metric, got, ref_val, delta))
    return rows


def format_report(rep: ResourceReport, fmt: str = "table") -> str:
    d = rep.as_dict()
    if fmt == "kv":
        return "\n".join(f"{k}={v}" for k, v in d.items()) + "\n"
    pad = max(len(k) for k in d)
    return "\n".join(f"{k.ljust(pad)}  {v}" for k, v in d.items()) + "\n"


def format_parity(rep: ResourceReport, ref: dict[str, int], fmt: str = "table") -> str:
    rows = parity_rows(rep, ref)
    if fmt == "kv":
        lines = [f"name={rep.name}"]
        for metric, got, want, delta in rows:
            lines.append(f"{metric}.ours={got}")
            lines.append(f"{metric}.ref={want}")
            lines.append(f"{metric}.delta={delta:+.4f}")
        return "\n".join(lines) + "\n"
    lines = [f"{rep.name}  ({rep.strategy})",
             f"{'metric':<14}{'ours':>10}{'ref':>10}{'delta':>9}"]
    for metric, got, want, delta in rows:
        lines.append(f"{metric:<14}{got:>10}{want:>10}{delta:>+9.1%}")
    return "\n".join(lines) + "\n"
