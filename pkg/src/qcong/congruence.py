"""Arithmetic-progression congruence claims, the checker, and the built-in suite.

A claim states that a family's counting function, sampled along l*n + b for
n >= n_start, has a constant residue, equals another family's function, or
matches a number-theoretic predicate, all modulo m.  The built-in suite
encodes the congruence catalog for overpartitions and (k-rowed) plane
overpartitions modulo 4, 8, 12 and 64 under stable labels.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .genfun import Family, build_series
from .series import EXACT, Mod, Series


class SeriesOrderTooSmall(ValueError):
    """A verification bound exceeds the truncation order of a series."""


# -- number-theoretic predicates ----------------------------------------------


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_twice_square(n: int) -> bool:
    return n % 2 == 0 and is_square(n // 2)


def odd_divisor_signature(n: int) -> int:
    """Number of odd divisors of n >= 2, via trial-division factorization."""
    if n < 2:
        raise ValueError("n must be >= 2")
    while n % 2 == 0:
        n //= 2
    count = 1
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            count *= e + 1
        p += 2
    if n > 1:
        count *= 2
    return count


def _square_split(n: int) -> int:
    return 2 if is_square(n) or is_twice_square(n) else 0


def _nonsquare_odd(n: int) -> int | None:
    return 0 if (n % 2 == 1 and not is_square(n)) else None


def _odd_divisor_formula(n: int) -> int:
    return 2 * odd_divisor_signature(n)


# Each predicate maps an argument to the expected residue, or None to skip it.
PREDICATES = {
    "square-or-twice-square": _square_split,
    "nonsquare-odd": _nonsquare_odd,
    "odd-divisor-formula": _odd_divisor_formula,
}


# -- claim model ----------------------------------------------------------------


@dataclass(frozen=True)
class Constant:
    residue: int


@dataclass(frozen=True)
class Equivalent:
    other: Family


@dataclass(frozen=True)
class Predicate:
    name: str


@dataclass(frozen=True)
class Claim:
    """family(l*n + b) compared modulo ``modulus`` for n >= n_start."""

    label: str
    family: Family
    modulus: int
    l: int
    b: int
    kind: Constant | Equivalent | Predicate
    n_start: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if self.l < 1 or not 0 <= self.b < self.l:
            raise ValueError("need l >= 1 and 0 <= b < l")
        if self.n_start < 0:
            raise ValueError("n_start must be >= 0")
        if isinstance(self.kind, Constant) and not 0 <= self.kind.residue < self.modulus:
            raise ValueError("constant residue must be reduced")
        if isinstance(self.kind, Predicate) and self.kind.name not in PREDICATES:
            raise ValueError(f"unknown predicate {self.kind.name!r}")

    def kind_json(self) -> dict:
        if isinstance(self.kind, Constant):
            return {"type": "constant", "residue": self.kind.residue}
        if isinstance(self.kind, Equivalent):
            return {"type": "equivalent", "other": self.kind.other.token}
        return {"type": "predicate", "id": self.kind.name}


@dataclass(frozen=True)
class SumClaim:
    """sum_i family_i(l*n + b_i) has a constant residue modulo ``modulus``."""

    label: str
    terms: tuple[tuple[Family, int], ...]  # (family, offset b_i)
    modulus: int
    l: int
    residue: int
    n_start: int = 0

    def kind_json(self) -> dict:
        return {
            "type": "sum",
            "terms": [{"family": f.token, "b": b} for f, b in self.terms],
            "residue": self.residue,
        }


@dataclass(frozen=True)
class Report:
    """Outcome of checking one claim up to a bound."""

    claim: Claim | SumClaim
    bound: int
    members: int
    outcome: str  # "pass" | "counterexample"
    counterexample: tuple[int, int, int, int] | None = None  # n, arg, got, want
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> dict:
        c = self.claim
        out = {
            "label": c.label,
            "family": (
                c.family.token
                if isinstance(c, Claim)
                else [f.token for f, _ in c.terms]
            ),
            "ap": {
                "l": c.l,
                "b": c.b if isinstance(c, Claim) else [b for _, b in c.terms],
                "n_start": c.n_start,
            },
            "modulus": c.modulus,
            "kind": c.kind_json(),
            "outcome": self.outcome,
            "members": self.members,
            "bound": self.bound,
        }
        if self.counterexample is not None:
            n, arg, got, want = self.counterexample
            out["counterexample"] = {"n": n, "arg": arg, "got": got, "expected": want}
        if self.note:
            out["note"] = self.note
        return out


class SeriesStore:
    """Builds each (family, modulus) series once at a fixed order.

    Claims share expensive series; verification functions consume the store
    instead of constructing anything themselves.  Immutable Series values
    make the cache safe to share across verification threads.
    """

    def __init__(self, order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        self._cache: dict[tuple[Family, int | None], Series] = {}

    def get(self, family: Family, modulus: int | None = None) -> Series:
        key = (family, modulus)
        got = self._cache.get(key)
        if got is None:
            ring = EXACT if modulus is None else Mod(modulus)
            got = build_series(family, self.order, ring)
            self._cache[key] = got
        return got

    def put(self, family: Family, modulus: int | None, series: Series) -> None:
        if series.order != self.order:
            raise ValueError("series order does not match the store")
        self._cache[(family, modulus)] = series


def _require_order(series: Series, bound: int) -> None:
    if series.order < bound:
        raise SeriesOrderTooSmall(
            f"series order {series.order} < verification bound {bound}"
        )


def verify_claim(claim: Claim, store: SeriesStore, bound: int) -> Report:
    """Check every progression member l*n + b <= bound with n >= n_start."""
    series = store.get(claim.family, claim.modulus)
    _require_order(series, bound)
    other = None
    if isinstance(claim.kind, Equivalent):
        other = store.get(claim.kind.other, claim.modulus)
        _require_order(other, bound)
    predicate = PREDICATES[claim.kind.name] if isinstance(claim.kind, Predicate) else None

    members = 0
    m = claim.modulus
    for arg in range(claim.l * claim.n_start + claim.b, bound + 1, claim.l):
        if isinstance(claim.kind, Constant):
            want = claim.kind.residue
        elif other is not None:
            want = other[arg]
        else:
            raw = predicate(arg)
            if raw is None:
                continue
            want = raw % m
        members += 1
        got = series[arg]
        if got != want:
            n = (arg - claim.b) // claim.l
            return Report(claim, bound, members, "counterexample", (n, arg, got, want))
    note = "no progression members within bound" if members == 0 else ""
    return Report(claim, bound, members, "pass", note=note)


def verify_sum_claim(claim: SumClaim, store: SeriesStore, bound: int) -> Report:
    """Check sum_i a_i(l*n + b_i) = residue (mod m) for all members <= bound."""
    if not claim.terms:
        return Report(claim, bound, 0, "pass", note="vacuous: no terms")
    series = [store.get(f, claim.modulus) for f, _ in claim.terms]
    for s in series:
        _require_order(s, bound)
    offsets = [b for _, b in claim.terms]
    members = 0
    n = claim.n_start
    while claim.l * n + max(offsets) <= bound:
        members += 1
        total = sum(s[claim.l * n + b] for s, b in zip(series, offsets))
        if total % claim.modulus != claim.residue:
            return Report(
                claim,
                bound,
                members,
                "counterexample",
                (n, claim.l * n, total % claim.modulus, claim.residue),
            )
        n += 1
    return Report(claim, bound, members, "pass")


def verify(claims, store: SeriesStore, bound: int, jobs: int = 1) -> list[Report]:
    """Verify many claims, reports returned in label order.

    Series are built up front (sequentially, so the store cache stays cheap)
    and the per-claim coefficient scans may run on a thread pool.
    """
    ordered = sorted(claims, key=lambda c: c.label)
    for c in ordered:  # warm the cache deterministically
        if isinstance(c, SumClaim):
            for f, _ in c.terms:
                store.get(f, c.modulus)
        else:
            store.get(c.family, c.modulus)
            if isinstance(c.kind, Equivalent):
                store.get(c.kind.other, c.modulus)

    def run(c):
        if isinstance(c, SumClaim):
            return verify_sum_claim(c, store, bound)
        return verify_claim(c, store, bound)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, ordered))
    return [run(c) for c in ordered]


# -- the built-in suite ---------------------------------------------------------


def _odd_primes_below(k: int) -> list[int]:
    return [p for p in range(3, k, 2) if all(p % d for d in range(3, math.isqrt(p) + 1, 2))]


def _even_k_rows(k: int) -> tuple[int, list[tuple[int, int]]]:
    """Progressions (b, residue) modulo lcm of odd j < k, per the parity rule.

    The l*n row has residue 0 for k = 0 (mod 4) and 2 for k = 2 (mod 4); the
    l*n + p^r rows have residue 0 for odd r and 2 for even r.
    """
    odd_js = list(range(1, k, 2))
    l = math.lcm(*odd_js)
    rows = [(0, 0 if k % 4 == 0 else 2)]
    for p in _odd_primes_below(k):
        e = 0
        rest = l
        while rest % p == 0:
            rest //= p
            e += 1
        for r in range(1, e + 1):
            rows.append((p**r, 0 if r % 2 == 1 else 2))
    return l, rows


def _ap_text(l: int, b: int) -> str:
    return f"{l}n+{b}" if b else f"{l}n"


def _canonical_ap(l: int, offset: int, n_start: int) -> tuple[int, int]:
    """Fold an offset >= l into the progression start: same argument set."""
    return offset % l, n_start + offset // l


def builtin_suite() -> list[Claim | SumClaim]:
    """The deterministic catalog of congruence claims, with stable labels."""
    plane = Family.plane()
    over = Family.overpartitions()
    oddover = Family.odd_overpartitions()
    claims: list[Claim | SumClaim] = []

    # square/twice-square residue split mod 4, and the family equivalence
    claims.append(
        Claim("thm1.2-pl-square-split-mod4", plane, 4, 1, 0,
              Predicate("square-or-twice-square"), n_start=1)
    )
    claims.append(
        Claim("thm1.2-pl-eq-oddover-mod4", plane, 4, 1, 0,
              Equivalent(oddover), n_start=1)
    )
    claims.append(
        Claim("thm2.6-oddover-square-split-mod4", oddover, 4, 1, 0,
              Predicate("square-or-twice-square"), n_start=1)
    )
    # odd-divisor-count formula mod 4, n >= 2
    claims.append(
        Claim("thm1.3-pl-odd-divisor-mod4", plane, 4, 1, 0,
              Predicate("odd-divisor-formula"), n_start=2)
    )

    # even-k rowed families: l*n and l*n + p^r rows mod 4
    for k in (2, 4, 6, 8, 10, 12):
        fam = Family.k_rowed(k)
        l, rows = _even_k_rows(k)
        for offset, residue in rows:
            b, n0 = _canonical_ap(l, offset, 1)
            claims.append(
                Claim(f"thm1.4-pl{k}-{_ap_text(l, offset)}-mod4", fam, 4, l, b,
                      Constant(residue), n_start=n0)
            )

    # the same rows restated as the corollary's explicit instances
    cor33 = {4: [0], 6: None, 8: None, 10: None, 12: None}  # None = all rows
    for k, keep in cor33.items():
        fam = Family.k_rowed(k)
        l, rows = _even_k_rows(k)
        for offset, residue in rows:
            if keep is not None and offset not in keep:
                continue
            b, n0 = _canonical_ap(l, offset, 1)
            claims.append(
                Claim(f"cor3.3-pl{k}-{_ap_text(l, offset)}-mod4", fam, 4, l, b,
                      Constant(residue), n_start=n0)
            )

    # odd-rowed families agree with overpartitions on odd arguments mod 4
    for half in range(0, 7):
        k = 2 * half + 1
        claims.append(
            Claim(f"thm1.5-pl{k}-2n+1-eq-over-mod4", Family.k_rowed(k), 4, 2, 1,
                  Equivalent(over), n_start=0)
        )
    claims.append(
        Claim("cor3.2-pl-2n+1-eq-over-mod4", plane, 4, 2, 1,
              Equivalent(over), n_start=0)
    )

    # odd-rowed families agree with overpartitions along lcm-of-evens rows
    for half in (2, 3, 4):
        k = 2 * half + 1
        l = math.lcm(*range(2, 2 * half + 1, 2))
        fam = Family.k_rowed(k)
        for j in range(2, half.bit_length() + 2, 2):
            if 2 ** (j - 1) > half:
                continue
            b, n0 = _canonical_ap(l, 2**j, 1)
            claims.append(
                Claim(f"thm1.6-pl{k}-{l}n+{2**j}-eq-over-mod4", fam, 4, l, b,
                      Equivalent(over), n_start=n0)
            )
        if half % 2 == 0:
            claims.append(
                Claim(f"thm1.6-pl{k}-{l}n-eq-over-mod4", fam, 4, l, 0,
                      Equivalent(over), n_start=0)
            )

    # 4- and 8-rowed rows that vanish mod 8
    for k, l, b in ((4, 12, 0), (4, 6, 3), (8, 210, 0), (8, 210, 3),
                    (8, 210, 9), (8, 210, 105)):
        claims.append(
            Claim(f"thm1.7-pl{k}-{_ap_text(l, b)}-mod8", Family.k_rowed(k), 8,
                  l, b, Constant(0), n_start=1)
        )

    claims.append(
        Claim("thm1.8-over-nonsquare-odd-mod8", over, 8, 2, 1,
              Predicate("nonsquare-odd"), n_start=0)
    )
    for b in (1, 5):
        claims.append(
            Claim(f"thm1.9-pl5-12n+{b}-eq-over-mod8", Family.k_rowed(5), 8,
                  12, b, Equivalent(over), n_start=0)
        )

    claims.append(Claim("cor3.1-pl-4n+3-mod4", plane, 4, 4, 3, Constant(0)))

    # arguments 9^alpha*(54n+45) are odd nonsquares: everything vanishes mod 4
    for fam in [plane] + [Family.k_rowed(2 * j + 1) for j in range(0, 7)]:
        tag = "pl" if fam.kind == "plane" else fam.token.replace("plk", "pl")
        for l, b in ((54, 45), (486, 405)):
            claims.append(
                Claim(f"cor3.4-{tag}-{l}n+{b}-mod4", fam, 4, l, b, Constant(0))
            )

    claims.append(
        SumClaim("cor3.5-pl4-sum-4n+123-mod4",
                 ((Family.k_rowed(4), 1), (Family.k_rowed(4), 2),
                  (Family.k_rowed(4), 3)),
                 modulus=4, l=4, residue=0, n_start=0)
    )

    # overpartition congruences mod 8 along 2^a*3^b progressions, offset 5
    for l in (8, 16, 24, 48):
        claims.append(
            Claim(f"cor3.10-over-{l}n+5-mod8", over, 8, l, 5, Constant(0))
        )
    claims.append(Claim("cor3.11-over-4n+3-mod8", over, 8, 4, 3, Constant(0)))
    # 5-rowed analog: needs the factor 3 in the progression modulus (the
    # 8n+5 and 16n+5 variants are false: pl_5(21) = 4 mod 8)
    for l in (24, 48):
        claims.append(
            Claim(f"cor3.12-pl5-{l}n+5-mod8", Family.k_rowed(5), 8, l, 5,
                  Constant(0))
        )

    # classical overpartition congruences restated as claims
    claims.append(Claim("ext-over-9n+6-mod8", over, 8, 9, 6, Constant(0)))
    claims.append(Claim("ext-over-8n+7-mod64", over, 64, 8, 7, Constant(0)))
    claims.append(Claim("ext-over-27n+18-mod12", over, 12, 27, 18, Constant(0)))
    claims.append(Claim("ext-over-243n+162-mod12", over, 12, 243, 162, Constant(0)))

    return claims


def claims_by_label(prefixes) -> list[Claim | SumClaim]:
    """Suite claims whose label starts with any of the given prefixes."""
    wanted = tuple(prefixes)
    return [c for c in builtin_suite() if c.label.startswith(wanted)]
