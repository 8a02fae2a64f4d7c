"""Builders for the nonlinear circuit blocks.

Everything is organized around emitters that write gates into a shared
:class:`~qaes.circuit.Builder` and return the wires now holding each
logical register.  In-place blocks relocate their register: the result
lands on fresh wires and the old wires are proven clean and returned to
the allocation pool, so "in place" is a matter of bookkeeping rather
than extra gates.

Registers are LSB-first wire tuples (``reg[i]`` = wire of bit i).
Tower-field elements travel as two 4-wire registers (low, high).

Compute/uncompute Toffoli pairs are emitted as QAND / QAND_DG so the
cost model can price the uncompute side as Clifford-only.  A Toffoli
onto a wire that is not known clean stays a plain TOFFOLI.
"""

from __future__ import annotations

from .circuit import Builder, Circuit
from .linear import SynthResult, synth_u_am_inv, synth_u_m

# Scratch appetite of the emitters (combination wires + product wires).
MUL_SCRATCH = 18
INV_SCRATCH = 14

SBOX_CONST_BITS = (0, 1, 5, 6)  # set bits of the S-box additive constant


# ---------------------------------------------------------------------------
# Linear pieces
# ---------------------------------------------------------------------------

def emit_linear(bld: Builder, synth: SynthResult, reg) -> tuple[int, ...]:
    """Run a synthesized CNOT network on ``reg``; returns the relabeled
    register (wire of output bit i)."""
    for g in synth.circuit.gates:
        bld.cx(reg[g.qubits[0]], reg[g.qubits[1]])
    return tuple(reg[w] for w in synth.out_wires)


def emit_linear_dg(bld: Builder, synth: SynthResult, reg) -> tuple[int, ...]:
    """Undo ``emit_linear``: feed it the relabeled register it returned."""
    inv_map = {w: j for j, w in enumerate(synth.out_wires)}
    phys = {j: reg[inv_map[j]] for j in range(len(reg))}
    for g in reversed(synth.circuit.gates):
        bld.cx(phys[g.qubits[0]], phys[g.qubits[1]])
    return tuple(phys[j] for j in range(len(reg)))


def emit_q2lambda(bld: Builder, q) -> tuple[int, ...]:
    """In-place multiply-by-lambda of a squared element: 3 CNOTs plus a
    wire relabel."""
    bld.cx(q[1], q[2])
    bld.cx(q[0], q[1])
    bld.cx(q[1], q[3])
    return (q[2], q[0], q[3], q[1])


def emit_sq_lambda_accum(bld: Builder, src, dst) -> None:
    """dst ^= lambda * src^2 (pure CNOT fan)."""
    for s in (src[1], src[0]):
        bld.cx(s, dst[3])
    for s in (src[3], src[1], src[0]):
        bld.cx(s, dst[2])
    bld.cx(src[0], dst[1])
    for s in (src[2], src[1]):
        bld.cx(s, dst[0])


def emit_sq_accum(bld: Builder, src, dst) -> None:
    """dst ^= src^2 (pure CNOT fan)."""
    bld.cx(src[3], dst[3])
    for s in (src[3], src[1]):
        bld.cx(s, dst[2])
    bld.cx(src[2], dst[1])
    for s in (src[2], src[0]):
        bld.cx(s, dst[0])


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------

def _form_combos(bld: Builder, r) -> tuple[int, ...]:
    """Five sums of input bits used by the shared-product expansion:
    (all, 3+2, 3+1, 2+0, 1+0)."""
    c = bld.alloc(5)
    bld.cx(r[3], c[1]); bld.cx(r[2], c[1])
    bld.cx(r[3], c[2]); bld.cx(r[1], c[2])
    bld.cx(r[2], c[3]); bld.cx(r[0], c[3])
    bld.cx(r[1], c[4]); bld.cx(r[0], c[4])
    bld.cx(c[1], c[0]); bld.cx(c[4], c[0])
    return c


def _unform_combos(bld: Builder, r, c) -> None:
    bld.cx(c[4], c[0]); bld.cx(c[1], c[0])
    bld.cx(r[0], c[4]); bld.cx(r[1], c[4])
    bld.cx(r[0], c[3]); bld.cx(r[2], c[3])
    bld.cx(r[1], c[2]); bld.cx(r[3], c[2])
    bld.cx(r[2], c[1]); bld.cx(r[3], c[1])
    bld.free(c)


def emit_mul0(bld: Builder, a, b, out=None, out_clean: bool | None = None) -> tuple[int, ...]:
    """Product of two 4-bit registers via nine shared partial products.

    With a clean target the single-use sum-of-all product lands on the
    output wires through the AND gadget directly; an arbitrary (XOR)
    target takes it through a plain Toffoli instead.  All nine product
    gadgets sit in one layer, so the whole multiplier is one T stage.
    """
    if out_clean is None:
        out_clean = out is None
    if out is None:
        out = bld.alloc(4)
    ca = _form_combos(bld, a)
    cb = _form_combos(bld, b)
    p = bld.alloc(8)  # pair products (3+2),(3+1),(2+0),(1+0), bits 2,1,0, bit 3
    bld.qand(ca[1], cb[1], p[0])
    bld.qand(ca[2], cb[2], p[1])
    bld.qand(ca[3], cb[3], p[2])
    bld.qand(ca[4], cb[4], p[3])
    bld.qand(a[2], b[2], p[4])
    bld.qand(a[1], b[1], p[5])
    bld.qand(a[0], b[0], p[6])
    bld.qand(a[3], b[3], p[7])
    if out_clean:
        bld.qand(ca[0], cb[0], out[3])
    else:
        bld.ccx(ca[0], cb[0], out[3])
    for s in (p[0], p[1], p[2], p[3], p[4], p[5], p[6]):
        bld.cx(s, out[3])
    for s in (p[0], p[2], p[5], p[6]):
        bld.cx(s, out[2])
    for s in (p[0], p[1], p[3], p[6]):
        bld.cx(s, out[1])
    for s in (p[7], p[1], p[4], p[5], p[6]):
        bld.cx(s, out[0])
    bld.qand_dg(a[3], b[3], p[7])
    bld.qand_dg(a[0], b[0], p[6])
    bld.qand_dg(a[1], b[1], p[5])
    bld.qand_dg(a[2], b[2], p[4])
    bld.qand_dg(ca[4], cb[4], p[3])
    bld.qand_dg(ca[3], cb[3], p[2])
    bld.qand_dg(ca[2], cb[2], p[1])
    bld.qand_dg(ca[1], cb[1], p[0])
    bld.free(p)
    _unform_combos(bld, b, cb)
    _unform_combos(bld, a, ca)
    return out


def emit_mul1(bld: Builder, a, b, h) -> None:
    """h ^= a * b; h is an arbitrary 4-bit register."""
    emit_mul0(bld, a, b, out=h, out_clean=False)


def emit_mul0_clear(bld: Builder, x, y, reg, free_reg: bool = True) -> None:
    """Uncompute reg, which must hold x * y; wires return to the pool."""
    m = bld.mark()
    emit_mul0(bld, x, y, out=reg, out_clean=True)
    bld.dagger_tail(m)
    if free_reg:
        bld.free(reg)


# ---------------------------------------------------------------------------
# Inversion in the 4-bit field
# ---------------------------------------------------------------------------

def emit_inv_core(bld: Builder, src, dst) -> None:
    """dst ^= inverse(src), by the algebraic normal form of the 4-bit
    inversion table.

    The ten distinct product terms are built in two gadget layers (the
    degree-3 terms reuse degree-2 ancillas), fanned into dst, then
    uncomputed, so the core costs two T stages and leaves src intact.
    """
    c = bld.alloc(4)
    bld.xor_reg(src, c)
    p = bld.alloc(10)
    p32, p31, p30, p21, p20, p10, p321, p320, p310, p210 = p
    bld.qand(src[3], src[2], p32)
    bld.qand(src[1], src[0], p10)
    bld.qand(c[3], c[1], p31)
    bld.qand(c[2], c[0], p20)
    bld.qand(src[3], src[0], p30)
    bld.qand(src[2], src[1], p21)
    bld.qand(p32, c[1], p321)
    bld.qand(p20, c[3], p320)
    bld.qand(p31, c[0], p310)
    bld.qand(p10, c[2], p210)
    for s in (src[3], src[2], src[1], p32, p31, p30, p321):
        bld.cx(s, dst[3])
    for s in (src[3], src[2], p30, p20, p10, p320):
        bld.cx(s, dst[2])
    for s in (src[3], p31, p21, p20, p10, p310):
        bld.cx(s, dst[1])
    for s in (src[3], src[2], src[1], src[0], p21, p20, p321, p210):
        bld.cx(s, dst[0])
    bld.qand_dg(p10, c[2], p210)
    bld.qand_dg(p31, c[0], p310)
    bld.qand_dg(p20, c[3], p320)
    bld.qand_dg(p32, c[1], p321)
    bld.qand_dg(src[2], src[1], p21)
    bld.qand_dg(src[3], src[0], p30)
    bld.qand_dg(c[2], c[0], p20)
    bld.qand_dg(c[3], c[1], p31)
    bld.qand_dg(src[1], src[0], p10)
    bld.qand_dg(src[3], src[2], p32)
    bld.free(p)
    bld.xor_reg(src, c)
    bld.free(c)


def emit_inv1(bld: Builder, b) -> tuple[int, ...]:
    """Out-of-place inversion: returns fresh wires holding b^-1, with b
    preserved where it was."""
    out = bld.alloc(4)
    emit_inv_core(bld, b, out)
    return out


def emit_inv0(bld: Builder, b) -> tuple[int, ...]:
    """In-place inversion by double application of the core: inversion is
    an involution, so a second core run uncomputes the input.  The
    result relocates; the old wires come back clean.

    The two cores get disjoint scratch so the second core's products
    overlap the first core's uncompute instead of queuing behind it.
    """
    out = bld.alloc(4)
    blk1 = bld.alloc(INV_SCRATCH)
    blk2 = bld.alloc(INV_SCRATCH)
    bld.push_pool(blk1)
    emit_inv_core(bld, b, out)
    bld.pop_pool()
    bld.push_pool(blk2)
    emit_inv_core(bld, out, b)
    bld.pop_pool()
    bld.free(blk1)
    bld.free(blk2)
    bld.free(b)
    return out


# ---------------------------------------------------------------------------
# Norm (x^17) accumulation
# ---------------------------------------------------------------------------

def emit_norm17_accum(bld: Builder, p0, p1, t) -> None:
    """t ^= p1^2*lambda + p0^2 + p0*p1, the base-field norm of (p0, p1).

    Pure XOR accumulation: emitting it a second time clears t again,
    which is how every pipeline below retires its norm register.
    """
    emit_sq_lambda_accum(bld, p1, t)
    emit_sq_accum(bld, p0, t)
    emit_mul1(bld, p0, p1, t)


# ---------------------------------------------------------------------------
# In-place multiplier (first register becomes the product)
# ---------------------------------------------------------------------------

def emit_mul2(bld: Builder, a, b, variant: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """a-wires turn into a*b (relocated); b is preserved.  Variant 1
    routes the inversion of b through the in-place circuit, variant 2
    through the out-of-place one.  b = 0 is outside the contract: the
    cleanup multiplies by b's inverse, and 0 has none."""
    prod = emit_mul0(bld, a, b)
    if variant == 1:
        binv = emit_inv0(bld, b)
        emit_mul0_clear(bld, prod, binv, a)
        b_out = emit_inv0(bld, binv)
    elif variant == 2:
        binv = emit_inv1(bld, b)
        emit_mul0_clear(bld, prod, binv, a)
        emit_inv_core(bld, b, binv)
        bld.free(binv)
        b_out = b
    else:
        raise ValueError(f"unknown mul2 variant {variant}")
    return prod, b_out


# ---------------------------------------------------------------------------
# Tower-field inversion pipelines
# ---------------------------------------------------------------------------

def _with_scratch(bld: Builder, size: int):
    return bld.alloc(size)


def emit_uinv0(bld: Builder, p0, p1, variant: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(p0, p1) preserved; returns fresh registers with the tower-field
    inverse.  Variant 1 inverts the norm in place, variant 2 keeps the
    norm alive through the out-of-place inverter."""
    t = bld.alloc(4)
    emit_norm17_accum(bld, p0, p1, t)
    if variant == 1:
        ti = emit_inv0(bld, t)
        n1 = emit_mul0(bld, ti, p1)
        bld.xor_reg(p1, p0)  # p0-wires now hold p0 + p1
        n0 = emit_mul0(bld, ti, p0)
        bld.xor_reg(p1, p0)
        emit_norm17_accum(bld, n0, n1, ti)  # ti held the norm of the result
        bld.free(ti)
    elif variant == 2:
        v = emit_inv1(bld, t)
        n1 = emit_mul0(bld, v, p1)
        bld.xor_reg(p1, p0)
        n0 = emit_mul0(bld, v, p0)
        bld.xor_reg(p1, p0)
        emit_inv_core(bld, t, v)
        bld.free(v)
        emit_norm17_accum(bld, p0, p1, t)
        bld.free(t)
    else:
        raise ValueError(f"unknown uinv0 variant {variant}")
    return n0, n1


def emit_uinv1(bld: Builder, p0, p1, h0, h1, variant: int) -> None:
    """(h0, h1) ^= inverse(p0, p1); everything else restored."""
    t = bld.alloc(4)
    emit_norm17_accum(bld, p0, p1, t)
    if variant == 1:
        ti = emit_inv0(bld, t)
        emit_mul1(bld, ti, p1, h1)
        bld.xor_reg(p1, p0)
        emit_mul1(bld, ti, p0, h0)
        bld.xor_reg(p1, p0)
        t2 = emit_inv0(bld, ti)
        emit_norm17_accum(bld, p0, p1, t2)
        bld.free(t2)
    elif variant == 2:
        v = emit_inv1(bld, t)
        emit_mul1(bld, v, p1, h1)
        bld.xor_reg(p1, p0)
        emit_mul1(bld, v, p0, h0)
        bld.xor_reg(p1, p0)
        emit_inv_core(bld, t, v)
        bld.free(v)
        emit_norm17_accum(bld, p0, p1, t)
        bld.free(t)
    elif variant == 3:
        v = emit_inv1(bld, t)
        v2 = bld.alloc(4)
        bld.xor_reg(v, v2)
        bld.xor_reg(p1, p0)
        pool1 = _with_scratch(bld, MUL_SCRATCH)
        pool2 = _with_scratch(bld, MUL_SCRATCH)
        bld.push_pool(pool1)
        emit_mul1(bld, v, p1, h1)
        bld.pop_pool()
        bld.push_pool(pool2)
        emit_mul1(bld, v2, p0, h0)
        bld.pop_pool()
        bld.free(pool1)
        bld.free(pool2)
        bld.xor_reg(p1, p0)
        bld.xor_reg(v, v2)
        bld.free(v2)
        emit_inv_core(bld, t, v)
        bld.free(v)
        emit_norm17_accum(bld, p0, p1, t)
        bld.free(t)
    else:
        raise ValueError(f"unknown uinv1 variant {variant}")


def emit_uinv2(bld: Builder, p0, p1, variant: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Fully in-place tower inversion: the input wires come back clean
    and the inverse lands on fresh registers.

    Variants trade ancillas for depth: 1 re-inverts the norm around
    every multiplication, 2 shares one inversion across both, 3 swaps
    the in-place inverter for the out-of-place one, 4 additionally runs
    the two multiplier pairs on register copies so they parallelize.
    """
    t = bld.alloc(4)
    emit_norm17_accum(bld, p0, p1, t)
    bld.xor_reg(p1, p0)  # p0-wires hold the summed register for good
    s = p0
    if variant == 1:
        ti = emit_inv0(bld, t)
        n0 = emit_mul0(bld, ti, s)
        t2 = emit_inv0(bld, ti)
        emit_mul0_clear(bld, n0, t2, s)
        ti2 = emit_inv0(bld, t2)
        n1 = emit_mul0(bld, ti2, p1)
        t3 = emit_inv0(bld, ti2)
        emit_mul0_clear(bld, n1, t3, p1)
        ti3 = emit_inv0(bld, t3)
        emit_norm17_accum(bld, n0, n1, ti3)
        bld.free(ti3)
    elif variant == 2:
        ti = emit_inv0(bld, t)
        n0 = emit_mul0(bld, ti, s)
        n1 = emit_mul0(bld, ti, p1)
        t2 = emit_inv0(bld, ti)
        emit_mul0_clear(bld, n0, t2, s)
        emit_mul0_clear(bld, n1, t2, p1)
        ti2 = emit_inv0(bld, t2)
        emit_norm17_accum(bld, n0, n1, ti2)
        bld.free(ti2)
    elif variant == 3:
        v = emit_inv1(bld, t)
        n0 = emit_mul0(bld, v, s)
        n1 = emit_mul0(bld, v, p1)
        emit_mul0_clear(bld, n0, t, s)
        emit_mul0_clear(bld, n1, t, p1)
        emit_inv_core(bld, v, t)  # t held the inverse of v
        bld.free(t)
        emit_norm17_accum(bld, n0, n1, v)
        bld.free(v)
    elif variant == 4:
        v = emit_inv1(bld, t)
        v2 = bld.alloc(4)
        bld.xor_reg(v, v2)
        n0 = bld.alloc(4)
        n1 = bld.alloc(4)
        pool1 = _with_scratch(bld, MUL_SCRATCH)
        pool2 = _with_scratch(bld, MUL_SCRATCH)
        bld.push_pool(pool1)
        emit_mul0(bld, v, s, out=n0, out_clean=True)
        bld.pop_pool()
        bld.push_pool(pool2)
        emit_mul0(bld, v2, p1, out=n1, out_clean=True)
        bld.pop_pool()
        bld.xor_reg(v, v2)
        t2 = bld.alloc(4)
        bld.xor_reg(t, t2)
        bld.push_pool(pool1)
        emit_mul0_clear(bld, n0, t, s, free_reg=False)
        bld.pop_pool()
        bld.push_pool(pool2)
        emit_mul0_clear(bld, n1, t2, p1, free_reg=False)
        bld.pop_pool()
        bld.free(pool1)
        bld.free(pool2)
        bld.free(s)
        bld.free(p1)
        bld.xor_reg(t, t2)
        bld.free(t2)
        bld.free(v2)
        emit_inv_core(bld, v, t)
        bld.free(t)
        emit_norm17_accum(bld, n0, n1, v)
        bld.free(v)
    else:
        raise ValueError(f"unknown uinv2 variant {variant}")
    return n0, n1


# ---------------------------------------------------------------------------
# S-box circuits
# ---------------------------------------------------------------------------

def emit_sbox_c1(bld: Builder, a, variant: int) -> tuple[int, ...]:
    """|a>|0..> -> |a>|S(a)>|0..>; returns the fresh output register."""
    p = emit_linear(bld, synth_u_m(), a)
    n0, n1 = emit_uinv0(bld, p[0:4], p[4:8], variant)
    emit_linear_dg(bld, synth_u_m(), p)
    out = emit_linear(bld, synth_u_am_inv(), n0 + n1)
    for i in SBOX_CONST_BITS:
        bld.x(out[i])
    return out


def emit_sbox_c2(bld: Builder, a, b, variant: int) -> tuple[int, ...]:
    """|a>|b>|0..> -> |a>|b + S(a)>|0..>; returns the (relocated) wires
    of the second register."""
    from .linear import synth_u_am_inv_dg
    p = emit_linear(bld, synth_u_m(), a)
    h = emit_linear(bld, synth_u_am_inv_dg(), b)
    emit_uinv1(bld, p[0:4], p[4:8], h[0:4], h[4:8], variant)
    emit_linear_dg(bld, synth_u_m(), p)
    out = emit_linear(bld, synth_u_am_inv(), h)
    for i in SBOX_CONST_BITS:
        bld.x(out[i])
    return out


def emit_sbox_c3(bld: Builder, a, variant: int) -> tuple[int, ...]:
    """|a>|0..> -> |S(a)>|0..>, in place up to relocation."""
    p = emit_linear(bld, synth_u_m(), a)
    n0, n1 = emit_uinv2(bld, p[0:4], p[4:8], variant)
    out = emit_linear(bld, synth_u_am_inv(), n0 + n1)
    for i in SBOX_CONST_BITS:
        bld.x(out[i])
    return out


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

def build_q2lambda() -> Circuit:
    bld = Builder("q2lambda")
    q = bld.alloc(4, role="input", label="q")
    out = emit_q2lambda(bld, q)
    return bld.build(regs={"q": q, "out": out})


def build_inv0() -> Circuit:
    bld = Builder("inv0")
    b = bld.alloc(4, role="input", label="b")
    out = emit_inv0(bld, b)
    return bld.build(regs={"b": b, "out": out})


def build_inv1() -> Circuit:
    bld = Builder("inv1")
    b = bld.alloc(4, role="input", label="b")
    out = emit_inv1(bld, b)
    return bld.build(regs={"b": b, "out": out, "b_copy": b})


def build_mul0() -> Circuit:
    bld = Builder("mul0")
    a = bld.alloc(4, role="input", label="a")
    b = bld.alloc(4, role="input", label="b")
    out = emit_mul0(bld, a, b)
    return bld.build(regs={"a": a, "b": b, "out": out})


def build_mul1() -> Circuit:
    bld = Builder("mul1")
    a = bld.alloc(4, role="input", label="a")
    b = bld.alloc(4, role="input", label="b")
    h = bld.alloc(4, role="input", label="h")
    emit_mul1(bld, a, b, h)
    return bld.build(regs={"a": a, "b": b, "h": h, "out": h})


def build_mul2(variant: int) -> Circuit:
    bld = Builder(f"mul2_v{variant}")
    a = bld.alloc(4, role="input", label="a")
    b = bld.alloc(4, role="input", label="b")
    prod, b_out = emit_mul2(bld, a, b, variant)
    return bld.build(regs={"a": a, "b": b, "out": prod, "b_out": b_out})


def build_uinv0(variant: int) -> Circuit:
    bld = Builder(f"uinv0_{variant}")
    p = bld.alloc(8, role="input", label="p")
    n0, n1 = emit_uinv0(bld, p[0:4], p[4:8], variant)
    return bld.build(regs={"p": p, "out": n0 + n1})


def build_uinv1(variant: int) -> Circuit:
    bld = Builder(f"uinv1_{variant}")
    p = bld.alloc(8, role="input", label="p")
    h = bld.alloc(8, role="input", label="h")
    emit_uinv1(bld, p[0:4], p[4:8], h[0:4], h[4:8], variant)
    return bld.build(regs={"p": p, "h": h, "out": h})


def build_uinv2(variant: int) -> Circuit:
    bld = Builder(f"uinv2_{variant}")
    p = bld.alloc(8, role="input", label="p")
    n0, n1 = emit_uinv2(bld, p[0:4], p[4:8], variant)
    return bld.build(regs={"p": p, "out": n0 + n1})


def build_sbox(kind: str, variant: int) -> Circuit:
    bld = Builder(f"{kind}_{variant}")
    a = bld.alloc(8, role="input", label="a")
    if kind == "c1":
        out = emit_sbox_c1(bld, a, variant)
        regs = {"a": a, "out": out}
    elif kind == "c2":
        b = bld.alloc(8, role="input", label="b")
        out = emit_sbox_c2(bld, a, b, variant)
        regs = {"a": a, "b": b, "out": out}
    elif kind == "c3":
        out = emit_sbox_c3(bld, a, variant)
        regs = {"a": a, "out": out}
    else:
        raise ValueError(f"unknown S-box kind {kind}")
    return bld.build(regs=regs)


def build_u_m() -> Circuit:
    r = synth_u_m()
    c = r.circuit
    return Circuit(c.n_qubits, c.gates, name="u_m",
                   roles={q: "input" for q in range(c.n_qubits)},
                   regs={"a": tuple(range(8)), "out": r.out_wires})


def build_u_am_inv() -> Circuit:
    r = synth_u_am_inv()
    c = r.circuit
    return Circuit(c.n_qubits, c.gates, name="u_am_inv",
                   roles={q: "input" for q in range(c.n_qubits)},
                   regs={"a": tuple(range(8)), "out": r.out_wires})


CATALOG: dict[str, object] = {
    "q2lambda": build_q2lambda,
    "inv0": build_inv0,
    "inv1": build_inv1,
    "mul0": build_mul0,
    "mul1": build_mul1,
    "mul2_v1": lambda: build_mul2(1),
    "mul2_v2": lambda: build_mul2(2),
    "uinv0_1": lambda: build_uinv0(1),
    "uinv0_2": lambda: build_uinv0(2),
    "uinv1_1": lambda: build_uinv1(1),
    "uinv1_2": lambda: build_uinv1(2),
    "uinv1_3": lambda: build_uinv1(3),
    "uinv2_1": lambda: build_uinv2(1),
    "uinv2_2": lambda: build_uinv2(2),
    "uinv2_3": lambda: build_uinv2(3),
    "uinv2_4": lambda: build_uinv2(4),
    "c1_1": lambda: build_sbox("c1", 1),
    "c1_2": lambda: build_sbox("c1", 2),
    "c2_1": lambda: build_sbox("c2", 1),
    "c2_2": lambda: build_sbox("c2", 2),
    "c2_3": lambda: build_sbox("c2", 3),
    "c3_1": lambda: build_sbox("c3", 1),
    "c3_2": lambda: build_sbox("c3", 2),
    "c3_3": lambda: build_sbox("c3", 3),
    "c3_4": lambda: build_sbox("c3", 4),
    "u_m": build_u_m,
    "u_am_inv": build_u_am_inv,
}


def build(name: str) -> Circuit:
    try:
        factory = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog circuit {name!r}") from None
    return factory()
