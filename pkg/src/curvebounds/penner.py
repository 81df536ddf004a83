"""Support propagation for the genus-g Penner-style map.

The map is a cyclic rotation composed with three Dehn twists along the
index-1 curves of a 3g-curve chain system.  Tracking which curves can meet
the image of a starting curve after k iterates gives distance-2 certificates
in the curve graph and hence exact upper bounds 2/k.

The inner trace loop runs on int bitmasks (one bit per curve); the public
set-based operations are independent and are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import NamedTuple

__all__ = [
    "BaseCurve",
    "PennerSystem",
    "SupportSet",
    "TraceResult",
    "NoCertificateError",
    "twist_support",
    "rotate",
    "step",
    "certify",
    "trace",
    "k_star",
    "penner_upper_bound",
]

FAMILIES = ("a", "b", "c")


class NoCertificateError(RuntimeError):
    """The trace found no iterate with a distance-2 certificate."""


class BaseCurve(NamedTuple):
    family: str
    index: int

    def __str__(self) -> str:
        return f"{self.family}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "BaseCurve":
        fam, idx = text[:1], text[1:]
        if fam not in FAMILIES or not idx.isdigit() or int(idx) < 1:
            raise ValueError(f"bad curve label {text!r}")
        return cls(fam, int(idx))


SupportSet = frozenset  # of BaseCurve


@lru_cache(maxsize=None)
def _curve(family: str, index: int) -> BaseCurve:
    return BaseCurve(family, index)


@dataclass(frozen=True)
class PennerSystem:
    """Chain system of 3g curves a_1..a_g, b_1..b_g, c_1..c_g with the 0/1
    intersection pattern  a_j-b_j,  c_j-b_j,  c_j-b_{j-1}  (indices mod g,
    so b_0 means b_g); all other pairs are disjoint.
    """

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise ValueError(f"chain system needs genus >= 2, got {self.genus}")

    def curves(self) -> tuple[BaseCurve, ...]:
        g = self.genus
        return tuple(
            _curve(f, i) for f in FAMILIES for i in range(1, g + 1)
        )

    def _check(self, c: BaseCurve) -> None:
        if c.family not in FAMILIES or not 1 <= c.index <= self.genus:
            raise ValueError(f"curve {c} outside genus-{self.genus} system")

    def intersect(self, x: BaseCurve, y: BaseCurve) -> int:
        self._check(x)
        self._check(y)
        if x.family > y.family:
            x, y = y, x
        g = self.genus
        if (x.family, y.family) == ("a", "b"):
            return int(x.index == y.index)
        if (x.family, y.family) == ("b", "c"):
            # c_j meets b_j and b_{j-1}
            return int(y.index == x.index or (y.index - 1 - (x.index - 1)) % g == 1)
        return 0

    def neighbors(self, c: BaseCurve) -> frozenset:
        self._check(c)
        g = self.genus
        i = c.index
        if c.family == "a":
            return frozenset({_curve("b", i)})
        if c.family == "b":
            return frozenset(
                {_curve("a", i), _curve("c", i), _curve("c", i % g + 1)}
            )
        # c-family: b_i and b_{i-1} with wraparound
        return frozenset({_curve("b", i), _curve("b", (i - 2) % g + 1)})


def twist_support(system: PennerSystem, support: SupportSet, alpha: BaseCurve) -> SupportSet:
    """Support after twisting along alpha: alpha joins when something in the
    support already meets it."""
    system._check(alpha)
    if any(system.intersect(x, alpha) for x in support):
        return frozenset(support | {alpha})
    return frozenset(support)


def rotate(system: PennerSystem, support: SupportSet) -> SupportSet:
    """Index rotation j -> j-1 (1 wraps to g) applied to every curve."""
    g = system.genus
    return frozenset(
        _curve(c.family, g if c.index == 1 else c.index - 1) for c in support
    )


def step(system: PennerSystem, support: SupportSet) -> SupportSet:
    """One iterate: twists along a_1, then b_1, then c_1, then the rotation."""
    s = twist_support(system, support, _curve("a", 1))
    s = twist_support(system, s, _curve("b", 1))
    s = twist_support(system, s, _curve("c", 1))
    return rotate(system, s)


def certify(
    system: PennerSystem, support: SupportSet, start: BaseCurve
) -> BaseCurve | None:
    """First curve (a-family first, then b, then c, by index) disjoint from
    `start` and from everything in `support`, or None.

    Such a witness pins the curve-graph distance between `start` and any
    curve inside the support to at most 2.
    """
    system._check(start)
    for w in system.curves():
        if w in support or system.intersect(w, start):
            continue
        if all(not system.intersect(w, x) for x in support):
            return w
    return None


def k_star(genus: int) -> int:
    """Iterate count certified by the rotation-chain argument:
    (g-1) + floor((g-1)/2) * (g+1)."""
    if genus < 2:
        raise ValueError(f"needs genus >= 2, got {genus}")
    return (genus - 1) + ((genus - 1) // 2) * (genus + 1)


@dataclass(frozen=True)
class TraceResult:
    """Orbit supports S_0..S_K with every certified iterate.

    `bound * best_k == 2` whenever a certificate exists.
    """

    genus: int
    cap: int
    masks: tuple[int, ...]
    certificates: tuple[tuple[int, BaseCurve], ...]
    best_k: int | None
    bound: Fraction | None

    @cached_property
    def supports(self) -> tuple[frozenset, ...]:
        g = self.genus
        out = []
        for mask in self.masks:
            curves = []
            m = mask
            while m:
                low = m & -m
                cid = low.bit_length() - 1
                curves.append(_curve(FAMILIES[cid // g], cid % g + 1))
                m ^= low
            out.append(frozenset(curves))
        return tuple(out)


def trace(genus: int, cap: int | None = None) -> TraceResult:
    """Iterate the support of the starting curve a_g, certifying each step.

    Stops at `cap` (default 3g^2) or as soon as the support has saturated to
    the full system and repeats.
    """
    system = PennerSystem(genus)
    g = genus
    if cap is None:
        cap = 3 * g * g
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")

    nbits = 3 * g
    full = (1 << nbits) - 1
    lows = 1 | (1 << g) | (1 << 2 * g)  # the three index-1 bits
    shift = g - 1

    def bit(fam: int, idx: int) -> int:
        return 1 << (fam * g + idx - 1)

    def nbr_mask(c: BaseCurve) -> int:
        m = 0
        for n in system.neighbors(c):
            m |= bit(FAMILIES.index(n.family), n.index)
        return m

    twist_curves = [
        (bit(f, 1), nbr_mask(_curve(FAMILIES[f], 1))) for f in range(3)
    ]
    start_bit = bit(0, g)
    # A witness at step k is any curve outside the closed neighborhood of
    # the support and disjoint from the start, i.e. any bit missing from
    # `blocked` other than b_g.  The intersection pattern commutes with the
    # index rotation, so `blocked` evolves by the same bit rotation as the
    # support and only grows when a twist joins.  The least available bit
    # is automatically the a-family-first, lowest-index witness.
    closed = [
        (cbit | nmask, cbit, nmask) for cbit, nmask in twist_curves
    ]
    not_bg = full & ~bit(1, g)
    blocked = start_bit | nbr_mask(_curve("a", g))

    s = start_bit
    masks = [s]
    certificates: list[tuple[int, BaseCurve]] = []
    for k in range(1, cap + 1):
        for cmask, cbit, nmask in closed:
            if s & nmask:
                s |= cbit
                blocked |= cmask
        s = ((s & ~lows) >> 1) | ((s & lows) << shift)
        blocked = ((blocked & ~lows) >> 1) | ((blocked & lows) << shift)
        masks.append(s)
        avail = not_bg & ~blocked
        if avail:
            low = (avail & -avail).bit_length() - 1
            certificates.append((k, _curve(FAMILIES[low // g], low % g + 1)))
        if s == full and masks[-2] == full:
            break

    best_k = max((k for k, _ in certificates), default=None)
    bound = Fraction(2, best_k) if best_k else None
    return TraceResult(
        genus=genus,
        cap=cap,
        masks=tuple(masks),
        certificates=tuple(certificates),
        best_k=best_k,
        bound=bound,
    )


def penner_upper_bound(genus: int, cap: int | None = None) -> tuple[int, Fraction]:
    """Best certified iterate and the exact bound 2/k it yields."""
    result = trace(genus, cap)
    if result.best_k is None:
        raise NoCertificateError(
            f"no certified iterate for genus {genus} within cap {result.cap}"
        )
    return result.best_k, result.bound
