"""Registry of base spaces, monodromy symbols, bundle generators and morphisms.

Every computation runs against a registry that is built once and then treated
as read-only.  It records:

* named base spaces, optionally with a declared smooth dimension and a list
  of named strata (sub-loci whose symbols may appear in motives over the
  ambient space);
* monodromy symbols: named generators ``[S, action]`` with the order of the
  cyclic group the action factors through.  Order-2 symbols may be declared
  as principal Z2-bundle covers, in which case they are eagerly rewritten
  into the group-ring normal form ``1 - L^(1/2) . Y(p)`` and never appear in
  stored terms;
* per-space ordered lists of F2 bundle generators (a presentation of the
  finitely generated subgroup of Z2-bundle classes in play);
* morphisms with explicit pullback/pushforward transport tables;
* product spaces with symbol/generator images for external products;
* square-root data: the bookkept correspondence between (line bundle,
  squared trivialization) pairs and bundle classes.

The absolute point is registered under the name ``"K"`` in every registry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import RegistryError, UnknownDatum

POINT = "K"

MORPHISM_KINDS = ("open-inclusion", "etale", "to-point", "general")


@dataclass(frozen=True)
class Space:
    name: str
    dim: Optional[int] = None
    strata: tuple[str, ...] = ()


@dataclass(frozen=True)
class Symbol:
    """A named monodromic generator over a space.

    ``order`` is the order of the cyclic quotient the action factors
    through; ``order == 1`` means trivial monodromy.  ``underlying`` is the
    declared non-equivariant class (a Motive), used by the monodromy-forget
    map.  ``cover_bits`` marks the symbol as a Z2-bundle cover with the given
    class; such symbols are rewritten away at construction time.
    """

    name: str
    space: str
    order: int = 1
    underlying: Optional[object] = None  # Motive; typed loosely to avoid a cycle
    cover_bits: Optional[int] = None


@dataclass(frozen=True)
class Morphism:
    name: str
    source: str
    target: str
    kind: str = "general"
    # pullback images: target symbol name -> Motive over source
    pull_symbols: dict[str, object] = field(default_factory=dict)
    # pullback images: target generator name -> bits over source
    pull_bundles: dict[str, int] = field(default_factory=dict)
    # pushforward images: (monomial, bits) term key -> Motive over target
    push_classes: dict[tuple[tuple[str, ...], int], object] = field(default_factory=dict)


@dataclass(frozen=True)
class Product:
    """A declared product space X x Y with symbol/generator images."""

    name: str
    left: str
    right: str
    # (side, name) -> image name on the product; side is 0 (left) or 1 (right)
    symbol_images: dict[tuple[int, str], str] = field(default_factory=dict)
    bundle_images: dict[tuple[int, str], str] = field(default_factory=dict)


class Registry:
    """Immutable-after-setup lookup structure for all named data."""

    def __init__(self) -> None:
        self.spaces: dict[str, Space] = {}
        self.symbols: dict[str, Symbol] = {}
        self.generators: dict[str, tuple[str, ...]] = {}
        self.morphisms: dict[str, Morphism] = {}
        self.products: dict[str, Product] = {}
        self.square_roots: dict[tuple[str, str, str], int] = {}
        self.declare_space(POINT, dim=0)

    # -- spaces ------------------------------------------------------------

    def declare_space(self, name: str, dim: Optional[int] = None,
                      strata: tuple[str, ...] = ()) -> Space:
        if name in self.spaces:
            raise RegistryError(f"space {name!r} already declared")
        sp = Space(name, dim, tuple(strata))
        self.spaces[name] = sp
        self.generators.setdefault(name, ())
        return sp

    def space(self, name: str) -> Space:
        try:
            return self.spaces[name]
        except KeyError:
            raise RegistryError(f"unknown space {name!r}") from None

    def dim(self, name: str) -> int:
        d = self.space(name).dim
        if d is None:
            raise RegistryError(f"space {name!r} has no declared dimension")
        return d

    # -- bundle generators ---------------------------------------------------

    def declare_generators(self, space: str, names: tuple[str, ...] | list[str]) -> None:
        self.space(space)
        existing = self.generators.get(space, ())
        for n in names:
            if n in existing:
                raise RegistryError(f"generator {n!r} already declared on {space!r}")
        self.generators[space] = existing + tuple(names)

    def generator_index(self, space: str, name: str) -> int:
        gens = self.generators.get(space, ())
        try:
            return gens.index(name)
        except ValueError:
            raise RegistryError(f"unknown bundle generator {name!r} on {space!r}") from None

    def bits_of(self, space: str, names) -> int:
        bits = 0
        for n in names:
            bits ^= 1 << self.generator_index(space, n)
        return bits

    def names_of(self, space: str, bits: int) -> tuple[str, ...]:
        gens = self.generators.get(space, ())
        if bits >> len(gens):
            raise RegistryError(f"bundle bits {bits} out of range for {space!r}")
        return tuple(g for i, g in enumerate(gens) if bits >> i & 1)

    # -- symbols --------------------------------------------------------------

    def declare_symbol(self, name: str, space: str, order: int = 1,
                       underlying: Optional[object] = None,
                       cover_bits: Optional[int] = None) -> Symbol:
        if name in self.symbols:
            raise RegistryError(f"symbol {name!r} already declared")
        self.space(space)
        if order < 1:
            raise RegistryError("symbol order must be positive")
        if cover_bits is not None and order != 2:
            raise RegistryError("only order-2 symbols can be declared as Z2-covers")
        if underlying is not None and not underlying.is_plain():
            raise RegistryError(
                f"underlying class of {name!r} must have trivial monodromy")
        sym = Symbol(name, space, order, underlying, cover_bits)
        self.symbols[name] = sym
        return sym

    def symbol(self, name: str) -> Symbol:
        try:
            return self.symbols[name]
        except KeyError:
            raise RegistryError(f"unknown symbol {name!r}") from None

    def symbol_allowed_on(self, sym: Symbol, space: str) -> bool:
        if sym.space == space:
            return True
        return sym.space in self.space(space).strata

    # -- morphisms ---------------------------------------------------------------

    def declare_morphism(self, name: str, source: str, target: str,
                         kind: str = "general",
                         pull_symbols: Optional[dict[str, object]] = None,
                         pull_bundles: Optional[dict[str, int]] = None,
                         push_classes: Optional[dict] = None) -> Morphism:
        if name in self.morphisms:
            raise RegistryError(f"morphism {name!r} already declared")
        if kind not in MORPHISM_KINDS:
            raise RegistryError(f"unknown morphism kind {kind!r}")
        self.space(source)
        self.space(target)
        mor = Morphism(name, source, target, kind,
                       dict(pull_symbols or {}), dict(pull_bundles or {}),
                       dict(push_classes or {}))
        self.morphisms[name] = mor
        return mor

    def morphism(self, name: str) -> Morphism:
        try:
            return self.morphisms[name]
        except KeyError:
            raise RegistryError(f"unknown morphism {name!r}") from None

    # -- products ----------------------------------------------------------------

    def declare_product(self, name: str, left: str, right: str,
                        dim: Optional[int] = None) -> Product:
        """Register the product space and auto-register images of all symbols
        and generators of the factors, named ``<product>.<original>``."""
        lsp, rsp = self.space(left), self.space(right)
        if dim is None and lsp.dim is not None and rsp.dim is not None:
            dim = lsp.dim + rsp.dim
        self.declare_space(name, dim=dim)
        symbol_images: dict[tuple[int, str], str] = {}
        bundle_images: dict[tuple[int, str], str] = {}
        for side, factor in ((0, left), (1, right)):
            for g in self.generators.get(factor, ()):
                img = f"{name}.{g}"
                if img in self.generators.get(name, ()):
                    img = f"{name}.{side}.{g}"  # self-products collide
                self.declare_generators(name, (img,))
                bundle_images[(side, g)] = img
            for sym in [s for s in self.symbols.values() if s.space == factor]:
                img = f"{name}.{sym.name}"
                if img in self.symbols:
                    img = f"{name}.{side}.{sym.name}"
                self.declare_symbol(img, name, sym.order, sym.underlying, sym.cover_bits)
                symbol_images[(side, sym.name)] = img
        prod = Product(name, left, right, symbol_images, bundle_images)
        self.products[name] = prod
        return prod

    def product_of(self, left: str, right: str) -> Product:
        for prod in self.products.values():
            if prod.left == left and prod.right == right:
                return prod
        raise RegistryError(f"no registered product of {left!r} and {right!r}")

    # -- square-root data ----------------------------------------------------------

    def declare_square_root(self, space: str, line_bundle: str,
                            trivialization: str, bits: int) -> None:
        key = (space, line_bundle, trivialization)
        if key in self.square_roots:
            raise RegistryError(f"square-root datum {key} already declared")
        self.space(space)
        self.square_roots[key] = bits

    def square_root_bits(self, space: str, line_bundle: str, trivialization: str) -> int:
        key = (space, line_bundle, trivialization)
        if key not in self.square_roots:
            raise UnknownDatum(f"square-root datum {key} not registered")
        return self.square_roots[key]

    # -- helpers --------------------------------------------------------------------

    def cover_symbol_for_bits(self, space: str, bits: int) -> Optional[Symbol]:
        """First registered cover symbol on ``space`` carrying exactly ``bits``."""
        for sym in sorted(self.symbols.values(), key=lambda s: s.name):
            if sym.space == space and sym.cover_bits == bits:
                return sym
        return None

    def compose(self, inner: str, outer: str, name: str) -> Morphism:
        """Register the composite of ``outer . inner`` with composed tables.

        ``inner``: S -> T and ``outer``: T -> V give a morphism S -> V whose
        pullback table is computed by pulling outer images back along inner.
        Pushforward tables are not composed automatically.
        """
        from .motive import pullback  # deferred: motive imports registry

        f = self.morphism(inner)
        g = self.morphism(outer)
        if f.target != g.source:
            raise RegistryError("morphisms do not compose")
        pull_symbols = {}
        for sym_name, image in g.pull_symbols.items():
            pull_symbols[sym_name] = pullback(self, inner, image)
        pull_bundles = {}
        for gen, bits in g.pull_bundles.items():
            acc = 0
            for gname in self.names_of(f.target, bits):
                if gname in f.pull_bundles:
                    acc ^= f.pull_bundles[gname]
                else:  # same-name fallback, as in runtime pullback
                    try:
                        acc ^= 1 << self.generator_index(f.source, gname)
                    except RegistryError:
                        raise RegistryError(
                            f"cannot compose: {gname!r} untransported") from None
            pull_bundles[gen] = acc
        kind = g.kind if g.kind == f.kind else "general"
        return self.declare_morphism(name, f.source, g.target, kind,
                                     pull_symbols, pull_bundles)
