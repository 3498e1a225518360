"""Brute-force arc-space classes for monomial functions.

This is the independent cross-check for the resolution-based zeta pipeline:
for a monomial function the truncated-arc loci can be parametrized directly,
with no reference to resolution data.

Scope: one affine variable with exponent ``a``, plus any number of unit
variables (coordinates constrained to the torus).  Writing an arc modulo
``t^(n+1)`` and asking the function to have order exactly ``n`` forces
``a | n``; with ``n = a m`` the affine coordinate is ``c t^m + ...`` with
``c != 0``, the unit coordinates keep free constant terms, and the leading
coefficient of the composed series is ``c^a`` times a unit monomial.  The
locus where that leading coefficient is 1 is a cyclic cover of order ``a``
of the torus base, away from an affine factor of free higher coefficients:

    [arc locus] = [order-a cover] . L^((n - m) + n l),      l = #units,

with the residual cyclic action of order ``a`` acting on the cover.  For
``a = 2`` the cover is the Z2-bundle of square roots of the unit monomial,
expressed through the declared square-root generators; for ``a >= 3`` with
trivial unit twisting it is the standard order-``a`` cover symbol.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bundles import BundleClass
from .errors import UnsupportedShape
from .halflaurent import HalfLaurent
from .motive import Motive, symbol_motive, upsilon
from .registry import Registry


@dataclass(frozen=True)
class MonomialFunction:
    """x_0^a0 ... x_{k-1}^a{k-1} with the ``unit_vars`` indices on the torus."""

    exponents: tuple[int, ...]
    unit_vars: frozenset[int] = frozenset()

    def __post_init__(self):
        if not self.exponents or any(a < 1 for a in self.exponents):
            raise UnsupportedShape("exponents must be a nonempty positive list")
        if any(i < 0 or i >= len(self.exponents) for i in self.unit_vars):
            raise UnsupportedShape("unit-variable index out of range")

    @property
    def affine_vars(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.exponents))
                     if i not in self.unit_vars)

    @property
    def dim(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class ArcContext:
    """Naming conventions tying oracle output to a fixture's vocabulary.

    ``unit_generators`` lists, per unit variable in index order, the declared
    square-root generator of that coordinate on ``base_space``;
    ``cover_symbols`` names the registered order-a cover symbols used for
    a >= 3.
    """

    registry: Registry
    base_space: str
    unit_generators: tuple[str, ...] = ()
    cover_symbols: dict[int, str] = field(default_factory=dict)


def _single_affine_exponent(f: MonomialFunction) -> int:
    affine = f.affine_vars
    if len(affine) != 1:
        raise UnsupportedShape(
            "arc oracle handles exactly one affine variable, got "
            f"{len(affine)}")
    return f.exponents[affine[0]]


def _cover_class(f: MonomialFunction, ctx: ArcContext) -> Motive:
    """Class of the order-a cover of the torus base, with its cyclic action."""
    reg = ctx.registry
    a = _single_affine_exponent(f)
    unit_exps = [f.exponents[i] for i in sorted(f.unit_vars)]
    if a == 1:
        return Motive.one(reg, ctx.base_space)
    if a == 2:
        if len(ctx.unit_generators) != len(unit_exps):
            raise UnsupportedShape(
                "context must name one square-root generator per unit variable")
        bits = 0
        for b, gen in zip(unit_exps, ctx.unit_generators):
            if b % 2:
                bits ^= 1 << reg.generator_index(ctx.base_space, gen)
        # square roots of the leading unit monomial: 1 - L^(1/2) . Y(bits)
        return (Motive.one(reg, ctx.base_space)
                - upsilon(reg, BundleClass(ctx.base_space, bits))
                .scale(HalfLaurent.power(1)))
    if any(b % a for b in unit_exps):
        raise UnsupportedShape(
            f"order-{a} cover with nontrivial unit twisting is outside the "
            "oracle fragment")
    name = ctx.cover_symbols.get(a, f"mu{a}")
    return symbol_motive(reg, name)


def arc_class(f: MonomialFunction, n: int, ctx: ArcContext) -> Motive:
    """Class of the order-n arc locus with leading coefficient 1."""
    if n < 1:
        raise UnsupportedShape("arc order must be positive")
    reg = ctx.registry
    a = _single_affine_exponent(f)
    if n % a:
        return Motive.zero(reg, ctx.base_space)
    m = n // a
    free = (n - m) + n * len(f.unit_vars)
    return _cover_class(f, ctx).scale(HalfLaurent.power(2 * free))


def zeta_truncated(f: MonomialFunction, k: int, ctx: ArcContext) -> list[Motive]:
    """Coefficients of T^0 .. T^k of the zeta series, straight from arcs.

    Coefficient n is ``arc_class(f, n) . L^(-n dim U)``; the T^0 entry is
    zero because the series starts at n = 1.
    """
    reg = ctx.registry
    out = [Motive.zero(reg, ctx.base_space)]
    for n in range(1, k + 1):
        out.append(arc_class(f, n, ctx).scale(HalfLaurent.power(-2 * n * f.dim)))
    return out
