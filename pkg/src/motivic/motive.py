"""Exact arithmetic in the decidable fragment of the monodromic motive ring.

A :class:`Motive` over a registered space X is a finite sum of terms

    coeff * [s1] . [s2] ... . Y(b)

where ``coeff`` is a half-integer Laurent polynomial in L, the ``[s_i]`` are
registered monodromy symbols (a multiset, stored as a sorted name tuple) and
``Y(b)`` is the group-ring unit attached to an F2 bundle class ``b``.  The
representation is the normal form for the convolution product: coefficients
multiply by adding exponents, bundle classes add over F2 (so the Z2-bundle
group law holds by construction), and monomials take unions.  Order-2
symbols declared as Z2-covers never appear: they are eagerly rewritten to
``1 - L^(1/2) . Y(p)`` at construction time.

The product of two terms that both carry opaque monodromy of order >= 2 is
outside the fragment and raises :class:`OdotUndecidable` instead of
guessing.  The plain fibre product ``mot_dot`` is exposed only where it
provably coincides with the convolution product (one operand with trivial
monodromy, integral coefficients and no bundle part); elsewhere it raises
:class:`DotUndefined`.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .bundles import BundleClass
from .errors import (DotUndefined, MissingTransport, NoUnderlyingClass,
                     OdotUndecidable, RegistryError, SpaceMismatch)
from .halflaurent import HalfLaurent
from .registry import Registry

TermKey = tuple[tuple[str, ...], int]


class Motive:
    """Element of the fragment ring over a fixed base space."""

    __slots__ = ("reg", "space", "_terms")

    def __init__(self, reg: Registry, space: str,
                 terms: Mapping[TermKey, HalfLaurent] | Iterable[tuple[TermKey, HalfLaurent]] = ()):
        reg.space(space)
        self.reg = reg
        self.space = space
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[TermKey, HalfLaurent] = {}
        for (mon, bits), coeff in items:
            mon = tuple(sorted(mon))
            self._check_term(reg, space, mon, bits)
            key = (mon, bits)
            c = acc.get(key)
            c = coeff if c is None else c + coeff
            if c.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = c
        self._terms = acc

    @staticmethod
    def _check_term(reg: Registry, space: str, mon: tuple[str, ...], bits: int) -> None:
        ngens = len(reg.generators.get(space, ()))
        if bits >> ngens:
            raise RegistryError(f"bundle bits {bits} out of range on {space!r}")
        for name in mon:
            sym = reg.symbol(name)
            if sym.cover_bits is not None:
                raise RegistryError(
                    f"cover symbol {name!r} must be rewritten, not stored")
            if not reg.symbol_allowed_on(sym, space):
                raise SpaceMismatch(
                    f"symbol {name!r} lives on {sym.space!r}, not on {space!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, reg: Registry, space: str) -> "Motive":
        return cls(reg, space)

    @classmethod
    def one(cls, reg: Registry, space: str) -> "Motive":
        return cls(reg, space, {((), 0): HalfLaurent.const(1)})

    @classmethod
    def coefficient(cls, reg: Registry, space: str, coeff: HalfLaurent) -> "Motive":
        return cls(reg, space, {((), 0): coeff})

    @classmethod
    def half_power(cls, reg: Registry, space: str, k2: int) -> "Motive":
        """L^(k2/2) as an element over ``space``."""
        return cls.coefficient(reg, space, HalfLaurent.power(k2))

    # -- inspection ----------------------------------------------------------

    def terms(self) -> list[tuple[TermKey, HalfLaurent]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {((), 0): HalfLaurent.const(1)}

    def is_plain(self) -> bool:
        """Trivial monodromy: no bundles, no opaque symbols, integral powers."""
        for (mon, bits), coeff in self._terms.items():
            if bits or not coeff.is_integral():
                return False
            if any(self.reg.symbol(n).order > 1 for n in mon):
                return False
        return True

    def _term_opaque(self, mon: tuple[str, ...]) -> bool:
        return any(self.reg.symbol(n).order > 1 for n in mon)

    def normalized(self) -> "Motive":
        return Motive(self.reg, self.space, self._terms)

    # -- additive structure ------------------------------------------------------

    def __add__(self, other: "Motive") -> "Motive":
        self._same_space(other)
        acc = dict(self._terms)
        items = list(acc.items()) + list(other._terms.items())
        return Motive(self.reg, self.space, items)

    def __neg__(self) -> "Motive":
        return Motive(self.reg, self.space,
                      {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Motive") -> "Motive":
        return self + (-other)

    def scale(self, coeff: HalfLaurent | int) -> "Motive":
        if isinstance(coeff, int):
            coeff = HalfLaurent.const(coeff)
        return Motive(self.reg, self.space,
                      {k: c * coeff for k, c in self._terms.items()})

    def _same_space(self, other: "Motive") -> None:
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space!r} vs {other.space!r}")

    # -- products ------------------------------------------------------------------

    def odot(self, other: "Motive") -> "Motive":
        """Convolution product, defined on the fragment."""
        self._same_space(other)
        out: list[tuple[TermKey, HalfLaurent]] = []
        for (mon1, bits1), c1 in self._terms.items():
            op1 = self._term_opaque(mon1)
            for (mon2, bits2), c2 in other._terms.items():
                if op1 and other._term_opaque(mon2):
                    raise OdotUndecidable(
                        f"product of opaque monomials {mon1} and {mon2}")
                out.append(((tuple(sorted(mon1 + mon2)), bits1 ^ bits2), c1 * c2))
        return Motive(self.reg, self.space, out)

    def dot(self, other: "Motive") -> "Motive":
        """Fibre product; exposed only where it agrees with the convolution."""
        self._same_space(other)
        if not (self.is_plain() or other.is_plain()):
            raise DotUndefined(
                "fibre product needs one operand with trivial monodromy")
        return self.odot(other)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Motive) and self.space == other.space
                and self._terms == other._terms)

    def __hash__(self) -> int:
        return hash((self.space, tuple(sorted((k, c.key()) for k, c in self._terms.items()))))

    def text(self) -> str:
        from .render import motive_text

        return motive_text(self)

    def __repr__(self) -> str:
        return f"<Motive {self.space}: {self.text()}>"


# -- free-function operation names ----------------------------------------------------


def mot_add(a: Motive, b: Motive) -> Motive:
    return a + b


def mot_odot(a: Motive, b: Motive) -> Motive:
    return a.odot(b)


def mot_dot(a: Motive, b: Motive) -> Motive:
    return a.dot(b)


def mot_equal(a: Motive, b: Motive) -> bool:
    if a.space != b.space:
        raise SpaceMismatch(f"{a.space!r} vs {b.space!r}")
    return a == b


def mot_boxdot(a: Motive, b: Motive) -> Motive:
    """External convolution product over a registered product space."""
    from .errors import UnregisteredProduct

    if a.reg is not b.reg:
        raise RegistryError("operands come from different registries")
    reg = a.reg
    try:
        prod = reg.product_of(a.space, b.space)
    except RegistryError as exc:
        raise UnregisteredProduct(str(exc)) from None
    out: list[tuple[TermKey, HalfLaurent]] = []
    for (mon1, bits1), c1 in a._terms.items():
        op1 = a._term_opaque(mon1)
        for (mon2, bits2), c2 in b._terms.items():
            if op1 and b._term_opaque(mon2):
                raise OdotUndecidable(
                    f"external product of opaque monomials {mon1} and {mon2}")
            mon = tuple(sorted(
                [prod.symbol_images[(0, n)] for n in mon1]
                + [prod.symbol_images[(1, n)] for n in mon2]))
            bits = 0
            for side, src, b_ in ((0, a.space, bits1), (1, b.space, bits2)):
                for gname in reg.names_of(src, b_):
                    bits ^= 1 << reg.generator_index(
                        prod.name, prod.bundle_images[(side, gname)])
            out.append(((mon, bits), c1 * c2))
    return Motive(reg, prod.name, out)


def upsilon(reg: Registry, p: BundleClass) -> Motive:
    """Group-ring unit attached to a bundle class; Y(0) is the ring identity."""
    return Motive(reg, p.space, {((), p.bits): HalfLaurent.const(1)})


def symbol_motive(reg: Registry, name: str) -> Motive:
    """The class of a registered symbol, in normal form.

    Plain and opaque symbols are monomials; declared Z2-cover symbols are
    rewritten to ``1 - L^(1/2) . Y(p)``.
    """
    sym = reg.symbol(name)
    if sym.cover_bits is None:
        return Motive(reg, sym.space, {((name,), 0): HalfLaurent.const(1)})
    # the two entries may share a key when the cover class is trivial
    return Motive(reg, sym.space, [
        (((), 0), HalfLaurent.const(1)),
        (((), sym.cover_bits), HalfLaurent.power(1, -1)),
    ])


# -- functoriality -------------------------------------------------------------------


def pullback(reg: Registry, morphism: str, m: Motive) -> Motive:
    mor = reg.morphism(morphism)
    if m.space != mor.target:
        raise SpaceMismatch(
            f"motive on {m.space!r} cannot be pulled along {morphism!r} "
            f"with target {mor.target!r}")
    out = Motive.zero(reg, mor.source)
    for (mon, bits), coeff in m._terms.items():
        img = Motive.coefficient(reg, mor.source, coeff)
        for name in mon:
            entry = mor.pull_symbols.get(name)
            if entry is None:
                sym = reg.symbol(name)
                if reg.symbol_allowed_on(sym, mor.source):
                    entry = symbol_motive(reg, name)
                else:
                    raise MissingTransport(
                        f"morphism {morphism!r} has no image for symbol {name!r}")
            elif isinstance(entry, str):
                entry = symbol_motive(reg, entry)
            img = img.odot(entry)
        newbits = 0
        for gname in reg.names_of(mor.target, bits):
            if gname in mor.pull_bundles:
                newbits ^= mor.pull_bundles[gname]
            else:
                try:
                    newbits ^= 1 << reg.generator_index(mor.source, gname)
                except RegistryError:
                    raise MissingTransport(
                        f"morphism {morphism!r} has no image for generator "
                        f"{gname!r}") from None
        img = img.odot(upsilon(reg, BundleClass(mor.source, newbits)))
        out = out + img
    return out


def pushforward(reg: Registry, morphism: str, m: Motive) -> Motive:
    """Transport along a morphism using its declared pushforward table.

    Terms are mapped by exact (monomial, bundle) pattern.  A term ``c.Y(b)``
    with no declared pattern falls back to the expansion through a declared
    cover image: ``c . L^(-1/2) . (image(1) - image(cover b))``, which is the
    projection-formula computation of the pushforward of an Y-class.
    """
    mor = reg.morphism(morphism)
    if m.space != mor.source:
        raise SpaceMismatch(
            f"motive on {m.space!r} cannot be pushed along {morphism!r} "
            f"with source {mor.source!r}")
    out = Motive.zero(reg, mor.target)
    for (mon, bits), coeff in m._terms.items():
        entry = mor.push_classes.get((mon, bits))
        if entry is not None:
            out = out + entry.scale(coeff)
            continue
        if not mon and bits:
            unit = mor.push_classes.get(((), 0))
            cover = mor.push_classes.get((("__cover__",), bits))
            if unit is not None and cover is not None:
                out = out + (unit - cover).scale(coeff * HalfLaurent.power(-1))
                continue
        raise MissingTransport(
            f"morphism {morphism!r} has no pushforward entry for term "
            f"({mon}, bits={bits})")
    return out


def pi_forget(m: Motive) -> Motive:
    """Forget the monodromy action, landing in the plain subring.

    L^(1/2) maps to -1.  Opaque symbols need a declared underlying class.
    Terms carrying a bundle class are expressible only through their
    L^(1/2)-divisible part, via a registered cover symbol for the class.
    """
    reg = m.reg
    out = Motive.zero(reg, m.space)
    for (mon, bits), coeff in m._terms.items():
        prod = Motive.one(reg, m.space)
        for name in mon:
            sym = reg.symbol(name)
            if sym.order == 1:
                prod = prod.dot(symbol_motive(reg, name))
            else:
                if sym.underlying is None:
                    raise NoUnderlyingClass(
                        f"symbol {name!r} has no declared underlying class")
                prod = prod.dot(sym.underlying)
        even = HalfLaurent({k: c for k, c in coeff.items() if k % 2 == 0})
        odd = HalfLaurent({k - 1: c for k, c in coeff.items() if k % 2})
        if bits == 0:
            out = out + prod.scale(even - odd)
            continue
        if not even.is_zero():
            raise NoUnderlyingClass(
                f"Y-term with coefficient {coeff.text()} has no integral "
                "L^(1/2)-divisible form")
        cover = reg.cover_symbol_for_bits(m.space, bits)
        if cover is None or cover.underlying is None:
            raise NoUnderlyingClass(
                f"no cover symbol with underlying class for bundle bits {bits}")
        # c . L^(1/2) . Y(b) = c . (1 - [P_b]);  forget termwise.
        out = out + prod.scale(odd) - prod.dot(cover.underlying).scale(odd)
    return out
