"""Assembly of full AES-128/192/256 encryption circuits.

State bytes follow the standard column-major order (byte 4*c + r is row
r of column c) with LSB-first bits inside each byte.  ShiftRows and the
key schedule's word rotation are wire relabelings, MixColumns and
AddRoundKey are CNOT layers, and the byte substitutions run on sixteen
parallel lanes (four for the key schedule), each with a private ancilla
pool sized from the standalone S-box circuit.

Key expansion is interleaved just in time: before each AddRoundKey the
word recurrence advances slot by slot until the four words that round
needs are materialized, so a key-schedule stage always lands between the
round functions that surround it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import aesref
from .blocks import build_sbox, emit_sbox_c2, emit_sbox_c3
from .circuit import Builder, Circuit
from .linear import synth_mixcolumns

VARIANTS = (128, 192, 256)
KE_SBOXES = ("c2_1", "c2_2", "c2_3")
ROUND_SBOXES = ("c3_1", "c3_2", "c3_3", "c3_4")
POOL_POLICIES = ("separate", "shared")


@dataclass(frozen=True)
class AesConfig:
    variant: int = 128
    ke_sbox: str = "c2_2"
    round_sbox: str = "c3_3"
    pool_policy: str = "separate"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.ke_sbox not in KE_SBOXES:
            raise ValueError(f"ke_sbox must be one of {KE_SBOXES}")
        if self.round_sbox not in ROUND_SBOXES:
            raise ValueError(f"round_sbox must be one of {ROUND_SBOXES}")
        if self.pool_policy not in POOL_POLICIES:
            raise ValueError(f"pool_policy must be one of {POOL_POLICIES}")

    @property
    def n_rounds(self) -> int:
        return aesref.ROUNDS[self.variant // 8]

    @property
    def n_key_words(self) -> int:
        return aesref.KEY_WORDS[self.variant // 8]

    def name(self) -> str:
        return f"aes{self.variant}_{self.ke_sbox}_{self.round_sbox}"


def parse_config(text: str) -> AesConfig:
    """Flat key=value config: variant, ke_sbox, round_sbox, pool_policy."""
    kv: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"expected key=value, got {line!r}")
        k, v = line.split("=", 1)
        kv[k.strip()] = v.strip()
    known = {"variant", "ke_sbox", "round_sbox", "pool_policy"}
    unknown = set(kv) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    cfg = {}
    if "variant" in kv:
        cfg["variant"] = int(kv["variant"])
    for k in ("ke_sbox", "round_sbox", "pool_policy"):
        if k in kv:
            cfg[k] = kv[k]
    return AesConfig(**cfg)


def sbox_pool_size(name: str) -> int:
    """Ancilla wires one lane needs, from the standalone circuit width."""
    c = build_sbox(name[:2], int(name[-1]))
    io = 16 if name.startswith("c2") else 8
    return c.n_qubits - io


@dataclass
class AesLayout:
    circuit: Circuit
    pt_wires: list[tuple[int, ...]]   # 16 input bytes
    key_wires: list[tuple[int, ...]]  # key bytes in order
    ct_wires: list[tuple[int, ...]]   # 16 output bytes
    key_out_wires: list[tuple[int, ...]]  # final round key, relabeled
    # every schedule word still held in the key register at the end:
    # (word index, [four byte registers])
    key_final: list[tuple[int, list[tuple[int, ...]]]] = field(default_factory=list)
    pool_wires: list[int] = field(default_factory=list)


def build_addroundkey() -> Circuit:
    bld = Builder("addroundkey")
    state = bld.alloc(128, role="input", label="s")
    key = bld.alloc(128, role="input", label="k")
    for i in range(128):
        bld.cx(key[i], state[i])
    return bld.build(regs={"state": state, "key": key, "out": state})


def build_mixcolumn() -> Circuit:
    r = synth_mixcolumns()
    c = r.circuit
    return Circuit(c.n_qubits, c.gates, name="mixcolumn",
                   roles={q: "input" for q in range(32)},
                   regs={"col": tuple(range(32)), "out": r.out_wires})


def build_mixcolumns() -> Circuit:
    """All four columns in parallel on a 128-wire state."""
    bld = Builder("mixcolumns")
    state = bld.alloc(128, role="input", label="s")
    synth = synth_mixcolumns()
    out = []
    for col in range(4):
        reg = state[32 * col: 32 * col + 32]
        for g in synth.circuit.gates:
            bld.cx(reg[g.qubits[0]], reg[g.qubits[1]])
        out.extend(reg[w] for w in synth.out_wires)
    return bld.build(regs={"state": state, "out": tuple(out)})


def shiftrows_wire_perm() -> dict[int, int]:
    """128-wire permutation of ShiftRows (byte relabeling, zero gates)."""
    byte_perm = aesref.shift_rows_byte_perm()
    perm = {}
    for new_byte, old_byte in enumerate(byte_perm):
        for bit in range(8):
            perm[8 * old_byte + bit] = 8 * new_byte + bit
    return perm


class _KeySchedule:
    """In-place word recurrence on the key register.

    ``pools`` is a shared registry of ancilla free-lists; the schedule
    draws its four lanes from ``pool_idx`` so the experimental shared
    policy can alias the round lanes without double-booking wires.
    """

    def __init__(self, bld: Builder, cfg: AesConfig, key_bytes,
                 pools: list[list[int]], pool_idx: list[int]):
        self.bld = bld
        self.cfg = cfg
        self.nk = cfg.n_key_words
        # words[slot][byte] = 8-wire register
        self.words = [[tuple(key_bytes[4 * w + b]) for b in range(4)]
                      for w in range(self.nk)]
        self.pools = pools
        self.pool_idx = pool_idx
        self.t = self.nk

    def word(self, m: int) -> list[tuple[int, ...]]:
        return self.words[m % self.nk]

    def advance_to(self, t_needed: int) -> None:
        while self.t < t_needed:
            self._advance_one()

    def _advance_one(self) -> None:
        bld, t, nk = self.bld, self.t, self.nk
        slot = self.words[t % nk]
        prev = self.words[(t - 1) % nk]
        sbox_rot = t % nk == 0
        sbox_plain = nk == 8 and t % 8 == 4
        if sbox_rot or sbox_plain:
            variant = int(self.cfg.ke_sbox[-1])
            for lane in range(4):
                src = prev[(lane + 1) % 4] if sbox_rot else prev[lane]
                idx = self.pool_idx[lane]
                bld.push_pool(self.pools[idx])
                slot[lane] = emit_sbox_c2(bld, src, slot[lane], variant)
                self.pools[idx] = bld.pop_pool()
            if sbox_rot:
                rc = aesref.rcon(t // nk)
                for bit in range(8):
                    if (rc >> bit) & 1:
                        bld.x(slot[0][bit])
        else:
            for b in range(4):
                for i in range(8):
                    bld.cx(prev[b][i], slot[b][i])
        self.t += 1


def build_aes(cfg: AesConfig) -> AesLayout:
    bld = Builder(cfg.name())
    state = [bld.alloc(8, role="input", label=f"s{k}") for k in range(16)]
    key_bytes = [bld.alloc(8, role="input", label=f"k{k}")
                 for k in range(cfg.variant // 8)]
    pt_wires = [tuple(b) for b in state]
    key_wires = [tuple(b) for b in key_bytes]

    round_extra = sbox_pool_size(cfg.round_sbox)
    pools: list[list[int]] = [list(bld.alloc(round_extra)) for _ in range(16)]
    if cfg.pool_policy == "separate":
        ke_extra = sbox_pool_size(cfg.ke_sbox)
        pools += [list(bld.alloc(ke_extra)) for _ in range(4)]
        ke_idx = [16, 17, 18, 19]
    else:
        # experimental: key schedule borrows the first four round lanes
        ke_idx = [0, 1, 2, 3]
    lane_idx = list(range(16))
    pool_wires = [w for p in pools for w in p]

    ks = _KeySchedule(bld, cfg, key_bytes, pools, ke_idx)
    sbox_variant = int(cfg.round_sbox[-1])
    byte_perm = aesref.shift_rows_byte_perm()
    mixsynth = synth_mixcolumns()

    def add_round_key(i: int) -> None:
        ks.advance_to(4 * i + 4)
        for c in range(4):
            word = ks.word(4 * i + c)
            for r in range(4):
                for bit in range(8):
                    bld.cx(word[r][bit], state[4 * c + r][bit])

    add_round_key(0)
    for rnd in range(1, cfg.n_rounds + 1):
        for k in range(16):
            idx = lane_idx[k]
            bld.push_pool(pools[idx])
            state[k] = emit_sbox_c3(bld, state[k], sbox_variant)
            pools[idx] = bld.pop_pool()
        state[:] = [state[byte_perm[k]] for k in range(16)]
        # lanes follow their bytes through the relabeling
        lane_idx[:] = [lane_idx[byte_perm[k]] for k in range(16)]
        if rnd != cfg.n_rounds:
            for col in range(4):
                reg = [w for b in range(4) for w in state[4 * col + b]]
                for g in mixsynth.circuit.gates:
                    bld.cx(reg[g.qubits[0]], reg[g.qubits[1]])
                new = [reg[w] for w in mixsynth.out_wires]
                for b in range(4):
                    state[4 * col + b] = tuple(new[8 * b: 8 * b + 8])
        add_round_key(rnd)

    key_out = [tuple(ks.word(4 * cfg.n_rounds + c)[r])
               for c in range(4) for r in range(4)]
    key_final = [(m, list(ks.word(m))) for m in range(ks.t - ks.nk, ks.t)]
    circ = bld.build(regs={
        "pt": tuple(w for b in pt_wires for w in b),
        "key": tuple(w for b in key_wires for w in b),
        "ct": tuple(w for b in state for w in b),
        "key_out": tuple(w for b in key_out for w in b),
    })
    return AesLayout(circ, pt_wires, key_wires,
                     [tuple(b) for b in state], key_out, key_final, pool_wires)
