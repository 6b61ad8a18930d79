"""Named generating functions for the partition families, plus identity checks.

Every family is an infinite product of binomial factors (1 +/- q^n)^e; the
builders truncate the product at factor index n = order, which is exact
because factor n only contributes from degree n on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .series import EXACT, Mod, Ring, Series, binomial_product

FAMILY_KINDS = ("over", "oddover", "plane", "plk", "restricted", "ncolor")


@dataclass(frozen=True)
class Multiset:
    """A finite multiset of positive integer parts, canonically merged."""

    entries: tuple[tuple[int, int], ...]  # (part, multiplicity), sorted by part

    def __post_init__(self) -> None:
        merged: dict[int, int] = {}
        for part, mult in self.entries:
            if part < 1 or mult < 1:
                raise ValueError(f"parts and multiplicities must be >= 1: ({part}, {mult})")
            merged[part] = merged.get(part, 0) + mult
        if not merged:
            raise ValueError("multiset must be nonempty")
        object.__setattr__(
            self, "entries", tuple(sorted(merged.items()))
        )

    @classmethod
    def from_parts(cls, parts) -> "Multiset":
        """Build from an iterable of parts with repetition, e.g. [1,2,2,3,3]."""
        return cls(tuple((int(p), 1) for p in parts))

    @property
    def parts(self) -> tuple[int, ...]:
        """All parts expanded with multiplicity."""
        return tuple(p for p, mult in self.entries for _ in range(mult))

    def lcm(self) -> int:
        return math.lcm(*(p for p, _ in self.entries))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Family:
    """Identifier for one of the partition families with generating functions.

    kind 'plk' is the k-rowed plane overpartition family and needs k >= 1;
    'restricted' is partitions into parts from a multiset; 'ncolor' shares
    the plane-overpartition generating function by definition (the claim is
    asserted against the enumeration oracle, not assumed silently).
    """

    kind: str
    k: int | None = None
    parts: Multiset | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "plk":
            if self.k is None or self.k < 1:
                raise ValueError("plk family needs k >= 1")
        elif self.k is not None:
            raise ValueError(f"family {self.kind!r} does not take k")
        if self.kind == "restricted":
            if self.parts is None:
                raise ValueError("restricted family needs a part multiset")
        elif self.parts is not None:
            raise ValueError(f"family {self.kind!r} does not take parts")

    @classmethod
    def overpartitions(cls) -> "Family":
        return cls("over")

    @classmethod
    def odd_overpartitions(cls) -> "Family":
        return cls("oddover")

    @classmethod
    def plane(cls) -> "Family":
        return cls("plane")

    @classmethod
    def k_rowed(cls, k: int) -> "Family":
        return cls("plk", k=k)

    @classmethod
    def restricted(cls, parts) -> "Family":
        ms = parts if isinstance(parts, Multiset) else Multiset.from_parts(parts)
        return cls("restricted", parts=ms)

    @classmethod
    def ncolor(cls) -> "Family":
        return cls("ncolor")

    @property
    def token(self) -> str:
        """Compact stable string form, e.g. 'plk4' or 'restricted:1,2,2'."""
        if self.kind == "plk":
            return f"plk{self.k}"
        if self.kind == "restricted":
            return f"restricted:{self.parts}"
        return self.kind

    @classmethod
    def from_token(cls, token: str) -> "Family":
        if token.startswith("plk"):
            return cls.k_rowed(int(token[3:]))
        if token.startswith("restricted:"):
            parts = [int(p) for p in token.split(":", 1)[1].split(",")]
            return cls.restricted(parts)
        return cls(token)

    def __str__(self) -> str:
        return self.token


def _family_factors(family: Family, order: int):
    if family.kind == "restricted":
        for part, mult in family.parts.entries:
            yield (-1, part, -mult)
        return
    for n in range(1, order + 1):
        if family.kind == "over":
            e = 1
        elif family.kind == "oddover":
            if n % 2 == 0:
                continue
            e = 1
        elif family.kind == "plk":
            e = min(family.k, n)
        else:  # plane, ncolor
            e = n
        yield (+1, n, e)
        yield (-1, n, -e)


def build_series(family: Family, order: int, ring: Ring = EXACT) -> Series:
    """Truncated generating function of the family over the given ring."""
    return binomial_product(ring, order, _family_factors(family, order))


def phi_series(sign: int, order: int, ring: Ring = EXACT) -> Series:
    """Theta series phi(+/-q) = 1 + 2*sum_{n>=1} (+/-1)^n q^(n^2)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for n in range(1, math.isqrt(order) + 1):
        coeffs[n * n] = 2 if (sign > 0 or n % 2 == 0) else -2
    return Series(ring, order, coeffs)


def _positive_square_series(order: int, ring: Ring, stride: int = 1) -> Series:
    """sum_{n>=1} q^(stride * n^2), truncated."""
    coeffs = [0] * (order + 1)
    n = 1
    while stride * n * n <= order:
        coeffs[stride * n * n] = 1
        n += 1
    return Series(ring, order, coeffs)


def sum_of_squares_series(k: int, order: int, ring: Ring = EXACT) -> Series:
    """Series of c_k(n): ordered representations of n as k positive squares."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _positive_square_series(order, ring).pow(k)


def two_adic_overpartition(order: int, bits: int) -> Series:
    """Overpartition series mod 2^bits from its 2-adic square-count expansion.

    Returns 1 + sum_{j=1}^{bits-1} 2^j sum_n (-1)^(n+j) c_j(n) q^n over
    Z/2^bits; equal to the product form of the overpartition series.
    """
    if bits < 2:
        raise ValueError("bits must be >= 2")
    ring = Mod(2**bits)
    base = _positive_square_series(order, ring)
    acc = [0] * (order + 1)
    acc[0] = 1
    c_j = None
    for j in range(1, bits):
        c_j = base if c_j is None else c_j.mul(base)
        scale = 2**j
        for n in range(1, order + 1):
            parity = -1 if (n + j) % 2 else 1
            acc[n] += scale * parity * c_j[n]
    return Series(ring, order, acc)


def phi_product_approx(bits: int, order: int, odd_parts: bool = False) -> Series:
    """Finite theta product congruent to the (odd-parts) overpartition series.

    mod 2^bits:  prod_{j=0..bits-2} phi(q^(2^j))^(2^j)  for overpartitions;
    with odd_parts, phi(q) * prod_{j=1..bits-1} phi(q^(2^j))^(2^(j-1)) for
    overpartitions into odd parts.
    """
    if bits < 2:
        raise ValueError("bits must be >= 2")
    ring = Mod(2**bits)
    if odd_parts:
        layers = [(1, 1)] + [(2**j, 2 ** (j - 1)) for j in range(1, bits)]
    else:
        layers = [(2**j, 2**j) for j in range(bits - 1)]
    out = Series.one(ring, order)
    for stride, exponent in layers:
        theta = _positive_square_series(order, ring, stride=stride)
        factor = Series.one(ring, order).add(theta).add(theta)  # 1 + 2*theta
        out = out.mul(factor.pow(exponent))
    return out


def tail_product_series(n: int, order: int, ring: Ring = EXACT) -> Series:
    """Tail product prod_{i>n} (1+q^i)/(1-q^i); n = 0 is the full product."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def factors():
        for i in range(n + 1, order + 1):
            yield (+1, i, 1)
            yield (-1, i, -1)

    return binomial_product(ring, order, factors())


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one series identity coefficient by coefficient."""

    label: str
    order: int
    passed: bool
    first_mismatch: int | None = None


def _compare(label: str, lhs: Series, rhs: Series) -> IdentityReport:
    idx = lhs.first_mismatch(rhs)
    return IdentityReport(label, lhs.order, idx is None, idx)


def check_phi_factorizations(order: int) -> list[IdentityReport]:
    """Exactly verify the theta refactorings of the overpartition series.

    Checks  P(q) = phi(q) * P(q^2)^2  and  P_odd(q) = phi(q) * P(q^2)
    up to the given order, where P is the overpartition series.
    """
    over = build_series(Family.overpartitions(), order)
    odd = build_series(Family.odd_overpartitions(), order)
    phi = phi_series(+1, order)
    over_q2 = over.inflate(2)
    return [
        _compare("over = phi * over(q^2)^2", over, phi.mul(over_q2).mul(over_q2)),
        _compare("oddover = phi * over(q^2)", odd, phi.mul(over_q2)),
    ]


def check_jacobi_specializations(order: int) -> list[IdentityReport]:
    """Verify both z = +/-1 specializations of the triple product identity.

    prod (1-q^(2n))(1 +/- q^(2n-1))^2 equals the theta series phi(+/-q).
    """

    def product(sign: int) -> Series:
        def factors():
            for n in range(1, order + 1):
                if 2 * n <= order:
                    yield (-1, 2 * n, 1)
                if 2 * n - 1 <= order:
                    yield (sign, 2 * n - 1, 2)

        return binomial_product(EXACT, order, factors())

    return [
        _compare("triple product, z=+1", product(+1), phi_series(+1, order)),
        _compare("triple product, z=-1", product(-1), phi_series(-1, order)),
    ]
