"""Monomials, monomial ideals, and factors I/J over a fixed polynomial ring.

A monomial is a bare exponent tuple; the ambient variable count travels with
the ideal.  Ideals keep their generating set minimal and deglex-sorted, so
equality is structural and printing is deterministic.  All types are
immutable by construction and every operation returns fresh values.
"""

from __future__ import annotations

Monomial = tuple[int, ...]

# machine-width guard: exponents beyond this are rejected at construction
MAX_EXPONENT = 2**31 - 1


class DimensionError(ValueError):
    """Operands belong to rings with different variable counts."""


class FactorError(ValueError):
    """The pair (I, J) does not satisfy J strictly contained in I."""


def deglex_key(m: Monomial) -> tuple:
    """Sort key: total degree first, then lexicographically larger vectors first."""
    return (sum(m), tuple(-e for e in m))


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff x^u divides x^v, i.e. u <= v componentwise."""
    if len(u) != len(v):
        raise DimensionError(
            f"cannot compare exponent vectors of lengths {len(u)} and {len(v)}"
        )
    return all(a <= b for a, b in zip(u, v))


def minimalize(gens) -> tuple[Monomial, ...]:
    """Divisibility-minimal subset of gens, deglex-sorted and duplicate-free."""
    out: list[Monomial] = []
    # ascending degree: a kept generator can divide a later one, never vice versa
    for m in sorted({tuple(g) for g in gens}, key=deglex_key):
        if not any(divides(k, m) for k in out):
            out.append(m)
    return tuple(out)


class MonomialIdeal:
    """A monomial ideal stored as its minimal generating set.

    The zero ideal has no generators; the unit ideal is generated by the
    all-zero exponent vector.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens=()):
        if n < 1:
            raise ValueError("variable count must be positive")
        checked = []
        for g in gens:
            g = tuple(int(e) for e in g)
            if len(g) != n:
                raise DimensionError(
                    f"generator {g} has {len(g)} exponents, expected {n}"
                )
            for e in g:
                if e < 0:
                    raise ValueError(f"negative exponent in generator {g}")
                if e > MAX_EXPONENT:
                    raise ValueError(f"exponent {e} exceeds the 2^31 - 1 cap")
            checked.append(g)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", minimalize(checked))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def contains(self, m) -> bool:
        """Membership of x^m: some generator divides it."""
        m = tuple(m)
        if len(m) != self.n:
            raise DimensionError(
                f"monomial {m} has {len(m)} exponents, expected {self.n}"
            )
        return any(divides(g, m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff other is a subset of self."""
        if self.n != other.n:
            raise DimensionError("ideals live in different rings")
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens={list(self.gens)})"


class Factor:
    """The factor module I/J; J must be strictly contained in I (J = 0 allowed)."""

    __slots__ = ("I", "J")

    def __init__(self, I: MonomialIdeal, J: MonomialIdeal | None = None):
        if J is None:
            J = MonomialIdeal(I.n)
        if I.n != J.n:
            raise DimensionError("I and J live in different rings")
        if not I.contains_ideal(J):
            bad = next(g for g in J.gens if not I.contains(g))
            raise FactorError(
                f"J is not contained in I: generator {bad} of J lies outside I"
            )
        if J.contains_ideal(I):
            raise FactorError("J equals I; the factor I/J would be zero")
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)

    def __setattr__(self, name, value):
        raise AttributeError("Factor is immutable")

    @property
    def n(self) -> int:
        return self.I.n

    def union_gens(self) -> tuple[Monomial, ...]:
        """Generators of I followed by generators of J."""
        return self.I.gens + self.J.gens

    def join_exponents(self) -> Monomial:
        """Componentwise maximum over all generators of I and J."""
        g = [0] * self.n
        for m in self.union_gens():
            for j, e in enumerate(m):
                if e > g[j]:
                    g[j] = e
        return tuple(g)

    def support(self, a) -> bool:
        """True iff x^a lies in I but not in J."""
        return self.I.contains(a) and not self.J.contains(a)

    def __eq__(self, other):
        return isinstance(other, Factor) and self.I == other.I and self.J == other.J

    def __hash__(self):
        return hash((self.I, self.J))

    def __repr__(self):
        return f"Factor(I={self.I!r}, J={self.J!r})"


def join_exponents(F: Factor) -> Monomial:
    """Free-function alias for Factor.join_exponents."""
    return F.join_exponents()
