"""Exponent-compression canonical form and the elementary transforms around it.

For each variable the distinct positive exponents appearing among the
generators of I and J form the "type" (k_1 < ... < k_s); the canonical form
replaces the i-th smallest exponent by i, per variable.  Each per-variable
substitution is a strictly increasing bijection on occurring exponents, so
divisibility among generators is both preserved and reflected: minimal
generating sets stay minimal, generator counts are unchanged, and
J strictly inside I stays that way.  Those facts are re-checked at run time
and any violation raises, since it would mean the substitution was wrong.
"""

from __future__ import annotations

from .ideals import Factor, FactorError, Monomial, MonomialIdeal


class GapError(ValueError):
    """collapse_gap_step was asked to close a gap that is not there."""


def _occurring_powers(gens, v: int) -> tuple[int, ...]:
    return tuple(sorted({m[v] for m in gens if m[v] > 0}))


def type_wrt(F: Factor, v: int) -> tuple[int, ...]:
    """Distinct positive x_v-exponents across G(I) and G(J), increasing."""
    if not 0 <= v < F.n:
        raise IndexError(f"variable index {v} out of range for {F.n} variables")
    return _occurring_powers(F.union_gens(), v)


def ideal_type_wrt(I: MonomialIdeal, v: int) -> tuple[int, ...]:
    """Same as type_wrt but for a single ideal."""
    if not 0 <= v < I.n:
        raise IndexError(f"variable index {v} out of range for {I.n} variables")
    return _occurring_powers(I.gens, v)


def _substituted(gens, v: int, emap: dict) -> list[Monomial]:
    return [m[:v] + (emap.get(m[v], m[v]),) + m[v + 1 :] for m in gens]


def _remap_ideal(I: MonomialIdeal, v: int, emap: dict) -> MonomialIdeal:
    out = MonomialIdeal(I.n, _substituted(I.gens, v, emap))
    if len(out.gens) != len(I.gens):
        raise RuntimeError(
            "internal error: exponent substitution merged generators "
            f"({len(I.gens)} -> {len(out.gens)}); the map was not order-preserving"
        )
    return out


def _remap_factor(F: Factor, v: int, emap: dict) -> Factor:
    I2 = _remap_ideal(F.I, v, emap)
    J2 = _remap_ideal(F.J, v, emap)
    try:
        return Factor(I2, J2)
    except FactorError as exc:
        raise RuntimeError(f"internal error: exponent substitution broke J < I: {exc}")


def _compression_map(powers) -> dict:
    return {k: i for i, k in enumerate(powers, start=1)}


def canonicalize_var(F: Factor, v: int) -> Factor:
    """Compress the x_v-exponents of F to 1..s, preserving their order."""
    powers = type_wrt(F, v)
    if not powers or powers[-1] == len(powers):
        return F  # already of type (1, ..., s)
    return _remap_factor(F, v, _compression_map(powers))


def canonicalize(F: Factor) -> Factor:
    """Canonical form: compress every variable.  Idempotent and order-independent."""
    for v in range(F.n):
        F = canonicalize_var(F, v)
    return F


def canonicalize_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """Canonical form of a single ideal (the J = 0 case, without the wrapper)."""
    for v in range(I.n):
        powers = ideal_type_wrt(I, v)
        if not powers or powers[-1] == len(powers):
            continue
        I = _remap_ideal(I, v, _compression_map(powers))
    return I


def is_canonical(F: Factor) -> bool:
    """True iff every variable has type (1, ..., s)."""
    return all(
        (not p or p[-1] == len(p)) for p in (type_wrt(F, v) for v in range(F.n))
    )


def collapse_gap_step(F: Factor, v: int, j: int) -> Factor:
    """Slide every x_v-exponent above the j-th one down by one, across a gap.

    With type (k_1 < ... < k_s) and k_0 = 0, index j (0 <= j < s) is valid
    when k_j + 1 < k_{j+1}; the step decrements the x_v-exponent of every
    generator whose exponent is k_i with i > j.  Iterating until no gap
    remains, over all variables, reproduces canonicalize.
    """
    powers = type_wrt(F, v)
    s = len(powers)
    if not 0 <= j < s:
        raise GapError(f"gap index {j} out of range for type {powers}")
    lower = powers[j - 1] if j > 0 else 0
    if lower + 1 >= powers[j]:
        raise GapError(
            f"no gap at index {j} of type {powers} for variable {v}: "
            f"{lower} + 1 >= {powers[j]}"
        )
    return _remap_factor(F, v, {k: k - 1 for k in powers[j:]})


def applicable_gaps(F: Factor) -> list[tuple[int, int]]:
    """All (v, j) pairs accepted by collapse_gap_step."""
    out = []
    for v in range(F.n):
        prev = 0
        for j, k in enumerate(type_wrt(F, v)):
            if prev + 1 < k:
                out.append((v, j))
            prev = k
    return out


def shift_transform(F: Factor, v: int, k: int) -> Factor:
    """Multiply every generator with x_v-degree at least k by x_v (k >= 1)."""
    if not 0 <= v < F.n:
        raise IndexError(f"variable index {v} out of range for {F.n} variables")
    if k < 1:
        raise ValueError("shift threshold k must be at least 1")

    def bumped(I: MonomialIdeal) -> MonomialIdeal:
        gens = [
            m[:v] + (m[v] + 1,) + m[v + 1 :] if m[v] >= k else m for m in I.gens
        ]
        out = MonomialIdeal(I.n, gens)
        if len(out.gens) != len(I.gens):
            raise RuntimeError("internal error: shift merged generators")
        return out

    try:
        return Factor(bumped(F.I), bumped(F.J))
    except FactorError as exc:
        raise RuntimeError(f"internal error: shift broke J < I: {exc}")
