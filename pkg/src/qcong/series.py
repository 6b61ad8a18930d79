"""Truncated formal power series over exact or modular integer rings.

The exact ring carries arbitrary-precision integers (plane-overpartition
counts overflow 64 bits well below weight 100).  The modular ring keeps fully
reduced machine-word residues in an int64 numpy array, because congruence
verification over Z/2^k is the hot path and must never touch big integers.

Series are immutable; every operation returns a new value, and binary
operations insist on an identical ring and truncation order rather than
silently aligning precision.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

import numpy as np

# Residues live in [0, m).  Adding two of them must stay inside int64, so the
# modulus is capped one bit below the type; scaled passes additionally need
# (m-1)^2 to fit, which the kernels check per call before falling back to
# plain Python integers.
_MOD_CAP = 2**62
_I64_CAP = 2**63


class NonUnitConstantTerm(ValueError):
    """Constant term is not invertible in the coefficient ring."""


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: exact integers when ``modulus`` is None, else Z/m."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        m = self.modulus
        if m is not None and not (2 <= m < _MOD_CAP):
            raise ValueError(f"modulus must satisfy 2 <= m < 2**62, got {m}")

    @property
    def exact(self) -> bool:
        return self.modulus is None

    def __repr__(self) -> str:
        return "Z" if self.exact else f"Z/{self.modulus}"


EXACT = Ring()


def Mod(m: int) -> Ring:
    """The ring of integers modulo m."""
    return Ring(m)


def _normalize_exact(coeffs) -> tuple[int, ...]:
    return tuple(operator.index(c) for c in coeffs)


def _normalize_mod(coeffs, m: int) -> np.ndarray:
    if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.int64:
        arr = coeffs % m
    else:
        # Big or negative Python ints reduce before entering int64 storage.
        arr = np.fromiter(
            (operator.index(c) % m for c in coeffs), dtype=np.int64
        )
    arr.flags.writeable = False
    return arr


class Series:
    """A truncated power series c0 + c1*q + ... + cN*q^N over a Ring."""

    __slots__ = ("ring", "order", "_c")

    def __init__(self, ring: Ring, order: int, coeffs):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        if len(coeffs) != order + 1:
            raise ValueError(
                f"need exactly {order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", order)
        if ring.exact:
            object.__setattr__(self, "_c", _normalize_exact(coeffs))
        else:
            object.__setattr__(self, "_c", _normalize_mod(coeffs, ring.modulus))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Series is immutable")

    @classmethod
    def _wrap(cls, ring: Ring, storage) -> "Series":
        """Adopt already-normalized storage without copying (internal)."""
        s = object.__new__(cls)
        object.__setattr__(s, "ring", ring)
        object.__setattr__(s, "order", len(storage) - 1)
        if isinstance(storage, np.ndarray):
            storage.flags.writeable = False
        object.__setattr__(s, "_c", storage)
        return s

    @classmethod
    def zero(cls, ring: Ring, order: int) -> "Series":
        return cls(ring, order, [0] * (order + 1))

    @classmethod
    def one(cls, ring: Ring, order: int) -> "Series":
        return cls(ring, order, [1] + [0] * order)

    # -- access ------------------------------------------------------------

    def coeff(self, i: int) -> int:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient index {i} outside [0, {self.order}]")
        return int(self._c[i])

    __getitem__ = coeff

    def tolist(self) -> list[int]:
        return [int(c) for c in self._c]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and self.tolist() == other.tolist()
        )

    __hash__ = None

    def __repr__(self) -> str:
        head = ", ".join(str(int(c)) for c in self._c[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"Series({self.ring!r}, order={self.order}, [{head}{tail}])"

    def first_mismatch(self, other: "Series") -> int | None:
        """Smallest index where the two series differ, or None."""
        self._compat(other)
        for i in range(self.order + 1):
            if int(self._c[i]) != int(other._c[i]):
                return i
        return None

    def _compat(self, other: "Series") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    # -- ring operations -----------------------------------------------------

    def add(self, other: "Series") -> "Series":
        self._compat(other)
        if self.ring.exact:
            return Series._wrap(
                self.ring, tuple(a + b for a, b in zip(self._c, other._c))
            )
        return Series._wrap(self.ring, (self._c + other._c) % self.ring.modulus)

    def sub(self, other: "Series") -> "Series":
        self._compat(other)
        if self.ring.exact:
            return Series._wrap(
                self.ring, tuple(a - b for a, b in zip(self._c, other._c))
            )
        return Series._wrap(self.ring, (self._c - other._c) % self.ring.modulus)

    def mul(self, other: "Series") -> "Series":
        """Cauchy product truncated at the common order."""
        self._compat(other)
        n = self.order
        m = self.ring.modulus
        if m is not None and (m - 1) * (m - 1) * (n + 1) < _I64_CAP:
            out = np.convolve(self._c, other._c)[: n + 1] % m
            return Series._wrap(self.ring, out)
        a = self.tolist()
        b = other.tolist()
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for k in range(i, n + 1):
                out[k] += ai * b[k - i]
        if m is not None:
            out = [c % m for c in out]
            return Series._wrap(self.ring, np.array(out, dtype=np.int64))
        return Series._wrap(self.ring, tuple(out))

    __add__ = add
    __sub__ = sub
    __mul__ = mul

    def pow(self, e: int) -> "Series":
        """Repeated-squaring power; ``pow(a, 0)`` is one."""
        if e < 0:
            raise ValueError("negative exponent: use inverse_of_unit")
        result = Series.one(self.ring, self.order)
        base = self
        while e:
            if e & 1:
                result = result.mul(base)
            e >>= 1
            if e:
                base = base.mul(base)
        return result

    __pow__ = pow

    def inverse_of_unit(self) -> "Series":
        """Multiplicative inverse; requires an invertible constant term."""
        n = self.order
        m = self.ring.modulus
        a = self.tolist()
        u = a[0]
        if m is None:
            if u not in (1, -1):
                raise NonUnitConstantTerm(f"constant term {u} is not a unit in Z")
            uinv = u
        else:
            try:
                uinv = pow(u, -1, m)
            except ValueError:
                raise NonUnitConstantTerm(
                    f"constant term {u} is not a unit mod {m}"
                ) from None
        b = [0] * (n + 1)
        b[0] = uinv
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                if a[i]:
                    acc += a[i] * b[k - i]
            b[k] = -uinv * acc
            if m is not None:
                b[k] %= m
        if m is not None:
            return Series._wrap(self.ring, np.array(b, dtype=np.int64))
        return Series._wrap(self.ring, tuple(b))

    def mul_binomial_power(self, sign: int, n: int, e: int) -> "Series":
        """Multiply by (1 + sign*q^n)^e, computed by sparse stride passes.

        ``sign`` is +1 or -1; ``e`` may be negative (division).  Cost is
        O(min(|e|, N/n) * N) rather than a dense series product.
        """
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if self.ring.exact:
            buf = list(self._c)
            _apply_exact(buf, sign, n, e)
            return Series._wrap(self.ring, tuple(buf))
        buf = self._c.copy()
        _apply_mod(buf, sign, n, e, self.ring.modulus)
        return Series._wrap(self.ring, buf)

    def reduce_mod(self, m: int) -> "Series":
        """Ring homomorphism onto Z/m (the modulus chain must divide)."""
        cur = self.ring.modulus
        if cur is not None and cur % m != 0:
            raise ValueError(f"cannot reduce mod {m}: {m} does not divide {cur}")
        return Series(Mod(m), self.order, self.tolist())

    def inflate(self, stride: int, order: int | None = None) -> "Series":
        """Substitute q -> q^stride, truncating at ``order`` (default: same)."""
        if stride < 1:
            raise ValueError("stride must be >= 1")
        order = self.order if order is None else order
        if self.order < order // stride:
            raise ValueError(
                f"need base order >= {order // stride}, have {self.order}"
            )
        out = [0] * (order + 1)
        for j in range(0, order + 1, stride):
            out[j] = int(self._c[j // stride])
        return Series(self.ring, order, out)


def f_series(n: int, order: int, ring: Ring = EXACT) -> Series:
    """The factor (1+q^n)/(1-q^n) = 1 + 2*sum_{m>=1} q^(n*m), truncated."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for j in range(n, order + 1, n):
        coeffs[j] = 2
    return Series(ring, order, coeffs)


def binomial_product(ring: Ring, order: int, factors) -> Series:
    """Product of binomial factors (1 + sign*q^n)^e over one shared buffer.

    ``factors`` yields (sign, n, e) triples.  This is the workhorse behind
    every generating-function constructor; it avoids allocating an
    intermediate Series per factor.
    """
    if ring.exact:
        buf = [0] * (order + 1)
        buf[0] = 1
        for sign, n, e in factors:
            _apply_exact(buf, sign, n, e)
        return Series._wrap(ring, tuple(buf))
    arr = np.zeros(order + 1, dtype=np.int64)
    arr[0] = 1
    m = ring.modulus
    for sign, n, e in factors:
        _apply_mod(arr, sign, n, e, m)
    return Series._wrap(ring, arr)


def _binomial_terms(sign: int, e: int, t_max: int) -> list[int]:
    """Exact coefficients c_t of (1 + sign*q^n)^e at q^(n*t), t = 0..t_max."""
    out = [1]
    c = 1
    if e >= 0:
        for t in range(1, t_max + 1):
            c = c * (e - t + 1) // t  # C(e, t)
            out.append(c if sign > 0 or t % 2 == 0 else -c)
    else:
        for t in range(1, t_max + 1):
            c = c * (-e + t - 1) // t  # C(|e|+t-1, t)
            out.append(c if sign < 0 or t % 2 == 0 else -c)
    return out


def _apply_exact(buf: list, sign: int, n: int, e: int) -> None:
    """In-place multiply of an exact coefficient buffer by (1 + sign*q^n)^e."""
    top = len(buf) - 1
    t_cap = top // n
    if e == 0 or t_cap == 0:
        return
    if 0 < e <= t_cap:
        for _ in range(e):
            # descending keeps buf[j - n] untouched until it is read
            if sign > 0:
                for j in range(top, n - 1, -1):
                    buf[j] += buf[j - n]
            else:
                for j in range(top, n - 1, -1):
                    buf[j] -= buf[j - n]
        return
    if e < 0 and -e <= t_cap:
        for _ in range(-e):
            # ascending prefix recurrence b[j] = a[j] - sign*b[j-n]
            if sign > 0:
                for j in range(n, top + 1):
                    buf[j] -= buf[j - n]
            else:
                for j in range(n, top + 1):
                    buf[j] += buf[j - n]
        return
    t_max = min(e, t_cap) if e > 0 else t_cap
    terms = _binomial_terms(sign, e, t_max)
    snap = buf[:]
    for t in range(1, t_max + 1):
        ct = terms[t]
        if ct == 0:
            continue
        base = n * t
        for j in range(base, top + 1):
            buf[j] += ct * snap[j - base]


def _apply_mod(arr: np.ndarray, sign: int, n: int, e: int, m: int) -> None:
    """In-place multiply of a reduced int64 buffer by (1 + sign*q^n)^e mod m."""
    top = arr.shape[0] - 1
    t_cap = top // n
    if e == 0 or t_cap == 0:
        return
    if 0 < e <= 2:
        hi, lo = arr[n:], arr[:-n]
        for _ in range(e):
            # numpy buffers overlapping ufunc operands, so the shifted
            # operand is read entirely from pre-pass values
            if sign > 0:
                np.add(hi, lo, out=hi)
            else:
                np.subtract(hi, lo, out=hi)
            arr %= m
        return
    if e < 0 and -e <= t_cap and -e * n <= t_cap:
        if m * (t_cap + 2) < _I64_CAP:
            for _ in range(-e):
                _divide_pass_mod(arr, sign, n, m)
            return
    t_max = t_cap if e < 0 else min(e, t_cap)
    terms = _binomial_terms(sign, e, t_max)
    if (m - 1) * (m - 1) * (t_max + 2) < _I64_CAP:
        snap = arr.copy()
        for t in range(1, t_max + 1):
            ct = terms[t] % m
            if ct:
                arr[n * t :] += ct * snap[: top + 1 - n * t]
        arr %= m
    elif (m - 1) * (m - 1) + m < _I64_CAP:
        snap = arr.copy()
        for t in range(1, t_max + 1):
            ct = terms[t] % m
            if ct:
                view = arr[n * t :]
                np.add(view, ct * snap[: top + 1 - n * t], out=view)
                view %= m
    else:
        # enormous modulus: do it with Python integers
        buf = [int(x) for x in arr]
        _apply_exact(buf, sign, n, e)
        arr[:] = np.fromiter((c % m for c in buf), dtype=np.int64, count=top + 1)


def _divide_pass_mod(arr: np.ndarray, sign: int, n: int, m: int) -> None:
    """One in-place division of ``arr`` by (1 + sign*q^n) mod m.

    Per residue class mod n the quotient is a running (alternating for
    sign=+1) prefix sum; partial sums stay below m*(len/n + 1) by the
    caller's headroom check.
    """
    for r in range(n):
        lane = arr[r::n]
        if sign < 0:
            lane[:] = np.cumsum(lane) % m
        else:
            tmp = lane.copy()
            tmp[1::2] = -tmp[1::2]
            tmp = np.cumsum(tmp)
            tmp[1::2] = -tmp[1::2]
            lane[:] = tmp % m
