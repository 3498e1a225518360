"""F2-linear algebra of principal Z2-bundle classes.

Bundle classes on a space are elements of the F2 vector space spanned by the
space's declared generators, stored as bitmasks over the registry's ordered
generator list.  Tensor product is XOR, so every class is self-inverse by
construction.  The correspondence with (line bundle, squared trivialization)
pairs is pure bookkeeping: data are registered once and looked up here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpaceMismatch
from .registry import Registry


@dataclass(frozen=True)
class BundleClass:
    space: str
    bits: int = 0

    def is_zero(self) -> bool:
        return self.bits == 0

    def tensor(self, other: "BundleClass") -> "BundleClass":
        if self.space != other.space:
            raise SpaceMismatch(
                f"bundle classes on {self.space!r} and {other.space!r}")
        return BundleClass(self.space, self.bits ^ other.bits)

    __mul__ = tensor

    def names(self, reg: Registry) -> tuple[str, ...]:
        return reg.names_of(self.space, self.bits)

    def text(self, reg: Registry) -> str:
        if self.bits == 0:
            return "Y(0)"
        return "Y(" + "+".join(self.names(reg)) + ")"


def trivial(space: str) -> BundleClass:
    return BundleClass(space, 0)


def generator(reg: Registry, space: str, name: str) -> BundleClass:
    return BundleClass(space, 1 << reg.generator_index(space, name))


def bundle_class(reg: Registry, space: str, names) -> BundleClass:
    return BundleClass(space, reg.bits_of(space, names))


def bundle_tensor(p: BundleClass, q: BundleClass) -> BundleClass:
    return p.tensor(q)


def from_square_root(reg: Registry, space: str, line_bundle: str,
                     trivialization: str) -> BundleClass:
    """Look up the class recorded for a (line bundle, trivialization) pair."""
    return BundleClass(space, reg.square_root_bits(space, line_bundle, trivialization))


def tensor_square_roots(reg: Registry, space: str,
                        first: tuple[str, str], second: tuple[str, str]) -> BundleClass:
    """Bookkept tensor of two square-root data: classes multiply."""
    a = from_square_root(reg, space, *first)
    b = from_square_root(reg, space, *second)
    return a.tensor(b)


def bundle_pullback(reg: Registry, morphism: str, cls: BundleClass) -> BundleClass:
    """F2-linear transport of a bundle class along a registered morphism."""
    from .errors import MissingTransport

    mor = reg.morphism(morphism)
    if cls.space != mor.target:
        raise SpaceMismatch(
            f"class on {cls.space!r} cannot be pulled along {morphism!r} "
            f"with target {mor.target!r}")
    acc = 0
    for name in reg.names_of(mor.target, cls.bits):
        if name in mor.pull_bundles:
            acc ^= mor.pull_bundles[name]
        elif mor.source == mor.target:
            acc ^= 1 << reg.generator_index(mor.source, name)
        else:
            try:
                acc ^= 1 << reg.generator_index(mor.source, name)
            except Exception:
                raise MissingTransport(
                    f"morphism {morphism!r} has no image for generator {name!r}"
                ) from None
    return BundleClass(mor.source, acc)
