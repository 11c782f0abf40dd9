"""Exact symmetric-function arithmetic in the power-sum basis.

Coefficients are polynomials in a single indeterminate ``t`` with integer
coefficients.  A polynomial is a plain tuple of Python ints, lowest degree
first, with no trailing zeros (the zero polynomial is ``()``).  Partitions
are tuples of positive ints in weakly decreasing order.

Canonical term order (used for rendering and serialization): partitions are
sorted by size first, then lexicographically on their parts, so for size 3
the order is ``(1,1,1) < (2,1) < (3)``.  Cache files depend on this order.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping

Partition = tuple
TPoly = tuple


# --------------------------------------------------------------------------
# partitions

def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted(parts, reverse=True))
    if parts and parts[-1] < 1:
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def merge_partitions(a: Partition, b: Partition) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def _sort_key(lam):
    return (sum(lam), lam)


# --------------------------------------------------------------------------
# univariate polynomials in t

def tpoly(*coeffs: int) -> TPoly:
    return tp_norm(coeffs)


def tp_norm(coeffs: Iterable[int]) -> TPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def tp_add(a: TPoly, b: TPoly) -> TPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return tp_norm(out)


def tp_neg(a: TPoly) -> TPoly:
    return tuple(-x for x in a)


def tp_sub(a: TPoly, b: TPoly) -> TPoly:
    return tp_add(a, tp_neg(b))


def tp_mul(a: TPoly, b: TPoly) -> TPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tp_norm(out)


def tp_scale(a: TPoly, c: int) -> TPoly:
    if c == 0:
        return ()
    return tuple(c * x for x in a)


def tp_shift(a: TPoly, k: int) -> TPoly:
    """Multiply by t**k (k >= 0)."""
    if not a:
        return ()
    return (0,) * k + a


def tp_one_plus_t_pow(m: int) -> TPoly:
    """(1+t)**m."""
    return tuple(comb(m, i) for i in range(m + 1))


def tp_pow(a: TPoly, k: int) -> TPoly:
    out: TPoly = (1,)
    for _ in range(k):
        out = tp_mul(out, a)
    return out


def tp_eval(a: TPoly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def tp_compose_linear(a: TPoly, shift: int) -> TPoly:
    """Return a(t + shift) as a polynomial in t."""
    out: TPoly = ()
    base = tp_norm((shift, 1))
    for c in reversed(a):
        out = tp_add(tp_mul(out, base), (c,) if c else ())
    return out


def tp_render(a: TPoly, var: str = "t") -> str:
    """Render a polynomial, e.g. ``3t^2+t^3``; no surrounding parentheses."""
    if not a:
        return "0"
    pieces = []
    for k, c in enumerate(a):
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("-" if c < 0 else "+") + body)
    return "".join(pieces)


# --------------------------------------------------------------------------
# power-sum expansions with polynomial coefficients

class PPoly:
    """Element of the p-basis module over Z[t]: a map Partition -> TPoly."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, TPoly] | None = None):
        clean = {}
        if terms:
            for lam, c in terms.items():
                c = tp_norm(c)
                if c:
                    clean[tuple(lam)] = c
        self.terms = clean

    @classmethod
    def p(cls, lam: Iterable[int], coeff: TPoly = (1,)) -> "PPoly":
        return cls({make_partition(lam): coeff})

    @classmethod
    def zero(cls) -> "PPoly":
        return cls()

    @classmethod
    def _raw(cls, terms: dict) -> "PPoly":
        # trusted constructor: keys sorted, values normalized and nonzero
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def is_zero(self) -> bool:
        return not self.terms

    def keys(self):
        return sorted(self.terms, key=_sort_key)

    def items(self):
        return [(k, self.terms[k]) for k in self.keys()]

    def __getitem__(self, lam) -> TPoly:
        return self.terms.get(tuple(lam), ())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"PPoly({self.render()!r})"

    def __str__(self):
        return self.render()

    def __add__(self, other: "PPoly") -> "PPoly":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = tp_add(out.get(lam, ()), c)
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return PPoly._raw(out)

    def __neg__(self) -> "PPoly":
        return PPoly._raw({k: tp_neg(v) for k, v in self.terms.items()})

    def __sub__(self, other: "PPoly") -> "PPoly":
        return self + (-other)

    def scale(self, c: TPoly | int) -> "PPoly":
        if isinstance(c, int):
            c = tp_norm((c,))
        out = {}
        for lam, v in self.terms.items():
            prod = tp_mul(v, c)
            if prod:
                out[lam] = prod
        return PPoly._raw(out)

    def __mul__(self, other):
        if isinstance(other, (int, tuple)):
            return self.scale(other)
        out: dict = {}
        for la, ca in self.terms.items():
            for lb, cb in other.terms.items():
                key = merge_partitions(la, lb)
                out[key] = tp_add(out.get(key, ()), tp_mul(ca, cb))
        return PPoly({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def omega(self) -> "PPoly":
        out = {}
        for lam, c in self.terms.items():
            sign = -1 if (sum(lam) - len(lam)) % 2 else 1
            out[lam] = c if sign == 1 else tp_neg(c)
        return PPoly._raw(out)

    def at_t(self, t_val: int) -> "PPoly":
        """Substitute an integer for t; every coefficient becomes a constant."""
        out = {}
        for lam, c in self.terms.items():
            v = tp_eval(c, t_val)
            if v:
                out[lam] = (v,)
        return PPoly._raw(out)

    def shift_t(self, k: int) -> "PPoly":
        return PPoly._raw({lam: tp_shift(c, k) for lam, c in self.terms.items()})

    def degrees(self) -> set:
        return {sum(lam) for lam in self.terms}

    def substitute(self, t_val, power_sum: Callable[[int], object]):
        """Evaluate with t = t_val and p_k replaced by ``power_sum(k)``."""
        t_val = Fraction(t_val)
        cache: dict = {}
        total = Fraction(0)
        for lam, c in self.terms.items():
            term = tp_eval(c, t_val)
            if term == 0:
                continue
            for k in lam:
                if k not in cache:
                    cache[k] = power_sum(k)
                term *= cache[k]
            total += term
        return total

    def evaluate(self, t_val, xs: Iterable) -> Fraction:
        """Exact value at t = t_val, x_i = xs[i] and all later variables zero."""
        xs = [Fraction(x) for x in xs]
        return self.substitute(t_val, lambda k: sum((x ** k for x in xs), Fraction(0)))

    # -- text forms --------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for lam, c in self.items():
            basis = "p[" + ",".join(map(str, lam)) + "]"
            nonzero = [(k, x) for k, x in enumerate(c) if x]
            if len(nonzero) == 1:
                k, x = nonzero[0]
                neg = x < 0
                body = tp_render(tp_shift((abs(x),), k))
                text = basis if body == "1" else f"{body} {basis}"
            else:
                neg = False
                text = f"({tp_render(c)}) {basis}"
            if not out:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)

    def serialize(self) -> bytes:
        """Canonical bytes: equal polynomials give equal bytes and vice versa."""
        if not self.terms:
            return b"0"
        parts = []
        for lam, c in self.items():
            parts.append("[" + ",".join(map(str, lam)) + "]:" + ",".join(map(str, c)))
        return ";".join(parts).encode("ascii")

    @classmethod
    def deserialize(cls, data: bytes | str) -> "PPoly":
        if isinstance(data, bytes):
            data = data.decode("ascii")
        if data == "0":
            return cls()
        terms = {}
        for chunk in data.split(";"):
            head, _, coeffs = chunk.partition(":")
            if not (head.startswith("[") and head.endswith("]")) or not coeffs:
                raise ValueError(f"malformed term {chunk!r}")
            inner = head[1:-1]
            lam = tuple(int(x) for x in inner.split(",")) if inner else ()
            if lam != make_partition(lam):
                raise ValueError(f"partition not in decreasing order: {lam}")
            c = tuple(int(x) for x in coeffs.split(","))
            if not c or c[-1] == 0 or lam in terms:
                raise ValueError(f"malformed term {chunk!r}")
            terms[lam] = c
        return cls(terms)


# --------------------------------------------------------------------------
# bivariate integer polynomials

class BivarPoly:
    """Integer polynomial in two variables, stored as {(i, j): coeff}."""

    __slots__ = ("terms", "names")

    def __init__(self, terms: Mapping | None = None, names=("x", "y")):
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}
        self.names = names

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1, names=("x", "y")) -> "BivarPoly":
        return cls({(i, j): c}, names)

    @classmethod
    def one(cls, names=("x", "y")) -> "BivarPoly":
        return cls({(0, 0): 1}, names)

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivarPoly(out, self.names)

    def __mul__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            return BivarPoly({k: v * other for k, v in self.terms.items()}, self.names)
        out: dict = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                out[(a + c, b + d)] = out.get((a + c, b + d), 0) + u * v
        return BivarPoly(out, self.names)

    __rmul__ = __mul__

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((v * x ** i * y ** j for (i, j), v in self.terms.items()), Fraction(0))

    def render(self) -> str:
        if not self.terms:
            return "0"
        xn, yn = self.names
        out = []
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = self.terms[(i, j)]
            mono = "".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in ((xn, i), (yn, j)) if e
            )
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"BivarPoly({self.render()!r})"

    __str__ = render
