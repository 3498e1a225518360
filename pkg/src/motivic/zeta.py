"""Motivic zeta functions from resolution combinatorics.

The input is the combinatorial shadow of a log resolution: a set of divisors
with multiplicities ``N_i`` and discrepancies ``nu_i``, and for each nonempty
divisor subset ``I`` with nonempty open stratum the class of its cyclic
cover of order ``m_I = gcd(N_i : i in I)``.  From these the zeta function is
assembled exactly as a sum of motive coefficients times factors

    L^(-nu) T^N / (1 - L^(-nu) T^N),

one factor per divisor in ``I``, with coefficient ``(L-1)^(|I|-1)`` times
the cover class.  The nearby cycle is minus the large-T limit, computed by
substituting ``-1`` for every factor; the vanishing cycle is its normalized
difference from the ambient fibre class, restricted to the critical locus
through user-supplied restriction tables.  Resolutions are inputs, never
computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .errors import MissingRestriction, ValidationFailed
from .halflaurent import HalfLaurent
from .motive import Motive
from .registry import POINT, Registry

DivKey = frozenset


@dataclass(frozen=True)
class Divisor:
    id: str
    N: int
    nu: int
    boundary: bool = False  # closure of a component of the zero locus away
    #                         from the critical locus; forces N = nu = 1


@dataclass(frozen=True)
class Stratum:
    """Open stratum data for a divisor subset: its cover class and order."""

    cls: Motive
    cover_order: int


@dataclass(frozen=True)
class RestrictionTable:
    """Restrictions of stratum classes to one critical-value slice X_c.

    ``ambient`` is the class of X_c written in the same symbol vocabulary as
    the restricted strata (defaults to the ring identity); declaring it as a
    sum of stratum symbols is the user-level scissor relation that makes
    cancellation happen in normal form.
    """

    space: str
    classes: dict[DivKey, Motive]
    ambient: Optional[Motive] = None


@dataclass(frozen=True)
class PointTable:
    """Point restrictions of every stratum class, over the absolute point."""

    value: str
    classes: dict[DivKey, Motive]


@dataclass
class ResolutionData:
    registry: Registry
    space_u0: str
    dim_u: int
    divisors: list[Divisor] = field(default_factory=list)
    strata: dict[DivKey, Stratum] = field(default_factory=dict)
    critical_values: list[str] = field(default_factory=lambda: ["0"])
    restrictions: dict[str, RestrictionTable] = field(default_factory=dict)
    points: dict[str, PointTable] = field(default_factory=dict)
    constant: bool = False

    def divisor(self, did: str) -> Divisor:
        for d in self.divisors:
            if d.id == did:
                return d
        raise KeyError(did)


@dataclass(frozen=True)
class RatTerm:
    coeff: Motive
    factors: tuple[tuple[int, int], ...]  # sorted (N, nu) multiset


class RationalMotive:
    """Finite sum of motive coefficients times products of zeta factors."""

    def __init__(self, space: str, terms: list[RatTerm]):
        self.space = space
        acc: dict[tuple, Motive] = {}
        for t in terms:
            key = tuple(sorted(t.factors))
            if key in acc:
                acc[key] = acc[key] + t.coeff
            else:
                acc[key] = t.coeff
        self.terms = tuple(RatTerm(c, k) for k, c in sorted(acc.items())
                           if not c.is_zero())

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RationalMotive) and self.space == other.space
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.space, self.terms))

    def text(self) -> str:
        from .render import rational_text

        return rational_text(self)

    def __repr__(self) -> str:
        return f"<RationalMotive {self.space}: {self.text()}>"


def validate_resolution(r: ResolutionData) -> list[str]:
    """Diagnostics list; empty iff the combinatorial invariants all hold."""
    diags: list[str] = []
    seen = set()
    for d in r.divisors:
        if d.id in seen:
            diags.append(f"duplicate divisor id {d.id!r}")
        seen.add(d.id)
        if d.N < 1 or d.nu < 1:
            diags.append(f"divisor {d.id!r} needs positive N and nu")
        if d.boundary and (d.N != 1 or d.nu != 1):
            diags.append(f"boundary divisor {d.id!r} must have N = nu = 1")
    if r.constant and r.divisors:
        diags.append("constant-function data cannot carry divisors")
    for key, stratum in sorted(r.strata.items(), key=lambda kv: sorted(kv[0])):
        names = sorted(key)
        if not key:
            diags.append("empty divisor subset in strata")
            continue
        missing = [n for n in names if n not in seen]
        if missing:
            diags.append(f"stratum {names} references unknown divisors {missing}")
            continue
        m = 0
        for n in names:
            m = gcd(m, r.divisor(n).N)
        if stratum.cover_order != m:
            diags.append(
                f"stratum {names}: declared cover order {stratum.cover_order} "
                f"!= gcd of multiplicities {m}")
        if stratum.cls.space != r.space_u0:
            diags.append(f"stratum {names}: class lives on {stratum.cls.space!r},"
                         f" expected {r.space_u0!r}")
        order = _visible_order(stratum.cls)
        if stratum.cover_order == 1 and order != 1:
            diags.append(f"stratum {names}: order-1 cover with monodromic class")
        if stratum.cover_order >= 3 and order != stratum.cover_order:
            diags.append(
                f"stratum {names}: class monodromy order {order} != declared "
                f"{stratum.cover_order}")
    return diags


def _visible_order(m: Motive) -> int:
    order = 1
    for (mon, bits), coeff in m.terms():
        if bits or not coeff.is_integral():
            order = max(order, 2)
        for name in mon:
            order = max(order, m.reg.symbol(name).order)
    return order


def _require_valid(r: ResolutionData) -> None:
    diags = validate_resolution(r)
    if diags:
        raise ValidationFailed(diags)


def zeta_function(r: ResolutionData) -> RationalMotive:
    _require_valid(r)
    reg = r.registry
    terms = []
    lminus1 = HalfLaurent({2: 1, 0: -1})
    for key, stratum in r.strata.items():
        size = len(key)
        coeff = stratum.cls.scale(lminus1 ** (size - 1))
        factors = tuple(sorted((r.divisor(n).N, r.divisor(n).nu) for n in key))
        terms.append(RatTerm(coeff, factors))
    return RationalMotive(r.space_u0, terms)


def expand_series(z: RationalMotive, k: int, reg: Registry) -> list[Motive]:
    """Exact coefficients of T^0 .. T^k."""
    out = [Motive.zero(reg, z.space) for _ in range(k + 1)]
    for term in z.terms:
        # coefficients of the factor product as Laurent polynomials in L
        series: dict[int, HalfLaurent] = {0: HalfLaurent.const(1)}
        for N, nu in term.factors:
            nxt: dict[int, HalfLaurent] = {}
            for deg, c in series.items():
                j = 1
                while deg + j * N <= k:
                    d = deg + j * N
                    add = c * HalfLaurent.power(-2 * j * nu)
                    nxt[d] = nxt.get(d, HalfLaurent.zero()) + add
                    j += 1
            series = nxt
            if not series:
                break
        for deg, c in series.items():
            if deg == 0 and term.factors:
                continue
            out[deg] = out[deg] + term.coeff.scale(c)
    return out


def nearby_cycle(r: ResolutionData) -> Motive:
    """Minus the large-T limit of the zeta function.

    Each factor tends to -1, so a term with m factors contributes its
    coefficient times (-1)^(m+1).
    """
    _require_valid(r)
    reg = r.registry
    if r.constant:
        return Motive.zero(reg, r.space_u0)
    z = zeta_function(r)
    out = Motive.zero(reg, z.space)
    for term in z.terms:
        sign = -1 if len(term.factors) % 2 == 0 else 1
        out = out + term.coeff.scale(sign)
    return out


def _restricted_nearby(r: ResolutionData, table: RestrictionTable,
                       support_only: bool) -> Motive:
    """Sum of (1-L)^(|I|-1) times restricted stratum classes.

    With ``support_only`` the boundary singletons are dropped: those terms
    cancel against the off-critical part of the ambient fibre class, which
    is the support argument behind the vanishing-cycle normal form.
    """
    reg = r.registry
    one_minus_l = HalfLaurent({0: 1, 2: -1})
    out = Motive.zero(reg, table.space)
    for key in sorted(r.strata, key=sorted):
        names = sorted(key)
        if support_only and len(key) == 1 and r.divisor(names[0]).boundary:
            continue
        if key not in table.classes:
            raise MissingRestriction(f"no restriction of stratum {names}")
        out = out + table.classes[key].scale(one_minus_l ** (len(key) - 1))
    return out


def vanishing_cycle(r: ResolutionData, c: str = "0") -> Motive:
    """Normalized vanishing-cycle class over the declared slice X_c."""
    _require_valid(r)
    reg = r.registry
    if c not in r.critical_values:
        raise MissingRestriction(f"{c!r} is not a declared critical value")
    table = r.restrictions.get(c)
    if table is None:
        raise MissingRestriction(f"no restriction table for critical value {c!r}")
    ambient = table.ambient if table.ambient is not None \
        else Motive.one(reg, table.space)
    if r.constant:
        inner = ambient
    else:
        inner = ambient - _restricted_nearby(r, table, support_only=True)
    return inner.scale(HalfLaurent.power(-r.dim_u))


def milnor_fibre_at(r: ResolutionData, x: str) -> Motive:
    """Pointwise normalized class L^(-dim U/2) . (1 - MF(x)) over the point."""
    _require_valid(r)
    reg = r.registry
    table = r.points.get(x)
    if table is None:
        raise MissingRestriction(f"no point-restriction table for {x!r}")
    one_minus_l = HalfLaurent({0: 1, 2: -1})
    mf = Motive.zero(reg, POINT)
    if not r.constant:
        for key in sorted(r.strata, key=sorted):
            if key not in table.classes:
                raise MissingRestriction(
                    f"no restriction of stratum {sorted(key)} to point {x!r}")
            mf = mf + table.classes[key].scale(one_minus_l ** (len(key) - 1))
    return (Motive.one(reg, POINT) - mf).scale(HalfLaurent.power(-r.dim_u))


def inverse_series_constant_term(z: RationalMotive, reg: Registry,
                                 order: int = 4) -> Motive:
    """Constant term of the expansion in T^(-1), computed per term.

    Each factor expands as -sum_{j>=0} L^(j nu) T^(-j N); the constant term
    of the product is the product of the j = 0 parts, i.e. (-1)^m.  The
    expansion is carried to ``order`` to make the check nontrivial.
    """
    out = Motive.zero(reg, z.space)
    for term in z.terms:
        series: dict[int, HalfLaurent] = {0: HalfLaurent.const(1)}
        for N, nu in term.factors:
            nxt: dict[int, HalfLaurent] = {}
            for deg, c in series.items():
                j = 0
                while deg + j * N <= order:
                    d = deg + j * N
                    add = c * HalfLaurent.power(2 * j * nu, -1)
                    nxt[d] = nxt.get(d, HalfLaurent.zero()) + add
                    j += 1
            series = nxt
        const = series.get(0, HalfLaurent.zero())
        out = out + term.coeff.scale(const)
    return out
