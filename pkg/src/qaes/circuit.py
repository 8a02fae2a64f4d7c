"""Reversible-circuit intermediate representation.

A circuit is an ordered gate list over integer wire indices, with role
annotations (input / output / ancilla), optional wire labels, and named
registers recording where logical values enter and leave.  Circuits are
treated as immutable values once built; construction goes through
:class:`Builder`, and structural operations (composition, inversion,
wire permutation) return fresh circuits.

Gate operand order is controls first, target last.
"""

from __future__ import annotations

from dataclasses import dataclass, field

GATE_ARITY = {
    "X": 1, "H": 1, "S": 1, "S_DG": 1, "T": 1, "T_DG": 1,
    "CNOT": 2, "CZ": 2,
    "TOFFOLI": 3, "QAND": 3, "QAND_DG": 3,
}

# Gate kind under circuit inversion; everything not listed is self-inverse.
_DAGGER_KIND = {
    "T": "T_DG", "T_DG": "T",
    "S": "S_DG", "S_DG": "S",
    "QAND": "QAND_DG", "QAND_DG": "QAND",
}

# Kinds with classical (basis-state) semantics.
CLASSICAL_KINDS = frozenset({"X", "CNOT", "TOFFOLI", "QAND", "QAND_DG"})


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in GATE_ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != GATE_ARITY[self.kind]:
            raise ValueError(
                f"{self.kind} expects {GATE_ARITY[self.kind]} operands, "
                f"got {len(self.qubits)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.kind} operands must be distinct: {self.qubits}")

    def dagger(self) -> "Gate":
        return Gate(_DAGGER_KIND.get(self.kind, self.kind), self.qubits)


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    gates: tuple[Gate, ...]
    name: str = ""
    roles: dict[int, str] = field(default_factory=dict)
    labels: dict[int, str] = field(default_factory=dict)
    regs: dict[str, tuple[int, ...]] = field(default_factory=dict)
    # Optional locality tags, one per gate (empty = all zone 0).
    # Parallel lanes emit under distinct zones so decomposition keeps
    # helper wires lane-local.
    gate_zones: tuple[int, ...] = ()

    def __post_init__(self):
        for g in self.gates:
            for q in g.qubits:
                if not 0 <= q < self.n_qubits:
                    raise ValueError(
                        f"gate {g.kind}{g.qubits} references wire {q} "
                        f"outside 0..{self.n_qubits - 1}")

    def __len__(self) -> int:
        return len(self.gates)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for g in self.gates:
            out[g.kind] = out.get(g.kind, 0) + 1
        return out

    def ancilla_wires(self) -> tuple[int, ...]:
        return tuple(q for q in range(self.n_qubits)
                     if self.roles.get(q, "ancilla") == "ancilla")

    def zone_of(self, gate_index: int) -> int:
        return self.gate_zones[gate_index] if self.gate_zones else 0

    def dagger(self) -> "Circuit":
        return Circuit(self.n_qubits, tuple(g.dagger() for g in reversed(self.gates)),
                       name=self.name + "_dg" if self.name else "",
                       roles=dict(self.roles), labels=dict(self.labels),
                       regs=dict(self.regs),
                       gate_zones=tuple(reversed(self.gate_zones)))

    def to_text(self) -> str:
        lines = [f"name {self.name}" if self.name else "name circuit",
                 f"qubits {self.n_qubits}"]
        lines += [f"ancilla q{q}" for q in self.ancilla_wires()]
        lines += [" ".join([g.kind] + [f"q{q}" for q in g.qubits])
                  for g in self.gates]
        return "\n".join(lines) + "\n"


def compose(c1: Circuit, c2: Circuit, wire_map: dict[int, int] | None = None) -> Circuit:
    """Concatenate c2 after c1, mapping c2's wires through wire_map.

    The default map is the identity.  The map must be injective; targets
    may extend past c1's width, in which case the result grows.
    """
    if wire_map is None:
        wire_map = {q: q for q in range(c2.n_qubits)}
    for q in wire_map:
        if not 0 <= q < c2.n_qubits:
            raise ValueError(f"wire map key {q} not allocated in second circuit")
    targets = list(wire_map.values())
    if len(set(targets)) != len(targets):
        raise ValueError("wire map collision: targets must be distinct")
    for q in range(c2.n_qubits):
        if q not in wire_map:
            raise ValueError(f"wire map missing entry for wire {q}")
    n = max([c1.n_qubits] + [t + 1 for t in targets])
    mapped = tuple(Gate(g.kind, tuple(wire_map[q] for q in g.qubits))
                   for g in c2.gates)
    roles = dict(c1.roles)
    for q, r in c2.roles.items():
        roles.setdefault(wire_map[q], r)
    return Circuit(n, c1.gates + mapped, name=c1.name, roles=roles,
                   labels=dict(c1.labels), regs=dict(c1.regs))


def permute_wires(c: Circuit, perm: dict[int, int]) -> Circuit:
    """Relabel wires: old index q becomes perm[q].  Zero gates added."""
    if sorted(perm) != list(range(c.n_qubits)) or \
            sorted(perm.values()) != list(range(c.n_qubits)):
        raise ValueError("perm must be a bijection on the circuit's wires")
    gates = tuple(Gate(g.kind, tuple(perm[q] for q in g.qubits)) for g in c.gates)
    return Circuit(c.n_qubits, gates, name=c.name,
                   roles={perm[q]: r for q, r in c.roles.items()},
                   labels={perm[q]: s for q, s in c.labels.items()},
                   regs={k: tuple(perm[q] for q in ws) for k, ws in c.regs.items()},
                   gate_zones=c.gate_zones)


def from_text(text: str) -> Circuit:
    name = ""
    n = 0
    roles: dict[int, str] = {}
    gates: list[Gate] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "name":
            name = parts[1] if len(parts) > 1 else ""
        elif parts[0] == "qubits":
            n = int(parts[1])
        elif parts[0] == "ancilla":
            roles[int(parts[1][1:])] = "ancilla"
        else:
            gates.append(Gate(parts[0], tuple(int(p[1:]) for p in parts[1:])))
    for q in range(n):
        roles.setdefault(q, "input")
    return Circuit(n, tuple(gates), name=name, roles=roles)


class Builder:
    """Mutable helper for constructing circuits wire by wire.

    Scratch wires are allocated from a free pool so sequential gadgets
    reuse space; ``push_pool`` restricts allocation to a pre-reserved
    wire set, which keeps independent parallel lanes on disjoint wires.
    """

    def __init__(self, name: str = ""):
        self.name = name
        self._gates: list[Gate] = []
        self._n = 0
        self._free: list[int] = []
        self._pools: list[list[int]] = []
        self.roles: dict[int, str] = {}
        self.labels: dict[int, str] = {}
        self._gate_zones: list[int] = []
        self._zone_stack: list[int] = [0]

    @property
    def n_qubits(self) -> int:
        return self._n

    def alloc(self, k: int, role: str = "ancilla", label: str | None = None) -> tuple[int, ...]:
        out = []
        for _ in range(k):
            if self._pools:
                if not self._pools[-1]:
                    raise RuntimeError("lane pool exhausted")
                q = self._pools[-1].pop()
            elif self._free:
                q = self._free.pop()
            else:
                q = self._n
                self._n += 1
            self.roles.setdefault(q, role)
            if role != "ancilla":
                self.roles[q] = role
            out.append(q)
        if label:
            for i, q in enumerate(out):
                self.labels[q] = f"{label}{i}" if k > 1 else label
        return tuple(out)

    def free(self, wires) -> None:
        dest = self._pools[-1] if self._pools else self._free
        dest.extend(wires)

    def push_pool(self, wires, zone: int | None = None) -> None:
        """Scope allocation to a reserved wire set; gates emitted inside
        carry ``zone`` (inherited from the enclosing scope if None)."""
        self._pools.append(list(wires))
        self._zone_stack.append(self._zone_stack[-1] if zone is None else zone)

    def pop_pool(self) -> list[int]:
        """Remove the active pool, returning its current free-wire list
        (callers re-push it to keep a lane's wire set closed)."""
        self._zone_stack.pop()
        return self._pools.pop()

    # gate emitters -------------------------------------------------

    def append(self, kind: str, *qubits: int) -> None:
        self._gates.append(Gate(kind, tuple(int(q) for q in qubits)))
        self._gate_zones.append(self._zone_stack[-1])

    def x(self, t: int) -> None:
        self.append("X", t)

    def cx(self, c: int, t: int) -> None:
        self.append("CNOT", c, t)

    def ccx(self, c1: int, c2: int, t: int) -> None:
        self.append("TOFFOLI", c1, c2, t)

    def qand(self, c1: int, c2: int, t: int) -> None:
        self.append("QAND", c1, c2, t)

    def qand_dg(self, c1: int, c2: int, t: int) -> None:
        self.append("QAND_DG", c1, c2, t)

    def xor_reg(self, src, dst) -> None:
        """CNOT fan: dst ^= src, wire by wire."""
        for s, d in zip(src, dst):
            self.cx(s, d)

    def mark(self) -> int:
        return len(self._gates)

    def dagger_tail(self, mark: int) -> None:
        """Replace everything emitted since ``mark`` with its inverse."""
        tail = self._gates[mark:]
        self._gates[mark:] = [g.dagger() for g in reversed(tail)]
        self._gate_zones[mark:] = list(reversed(self._gate_zones[mark:]))

    def build(self, regs: dict[str, tuple[int, ...]] | None = None,
              name: str | None = None) -> Circuit:
        zones = tuple(self._gate_zones) if any(self._gate_zones) else ()
        return Circuit(self._n, tuple(self._gates),
                       name=self.name if name is None else name,
                       roles=dict(self.roles), labels=dict(self.labels),
                       regs=dict(regs or {}), gate_zones=zones)
