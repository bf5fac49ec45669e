"""Exact degree-based indices: the edge weight psi, AZI, generalised ABC, and
closed-form AZI values for the named extremal families."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational, Real
from typing import Union

from .graph import Graph, GraphError, is_connected

Number = Union[int, Fraction]


def _rational(x: object, name: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction, Rational)):
        raise TypeError(f"{name} must be an int or Fraction, got {type(x).__name__}")
    return Fraction(x)


def psi(x: Number, y: Number) -> Fraction:
    """Edge weight ``(xy / (x + y - 2))**3`` for endpoint degrees x, y."""
    x, y = _rational(x, "x"), _rational(y, "y")
    if x <= 0 or y <= 0:
        raise ValueError("degrees must be positive")
    if x + y <= 2:
        raise ValueError(f"psi undefined for x + y <= 2 (got {x}, {y})")
    return (x * y / (x + y - 2)) ** 3


@lru_cache(maxsize=None)
def _psi_int(x: int, y: int) -> Fraction:
    return psi(x, y)


def edge_weight(x: int, y: int) -> Fraction:
    """Cached ``psi`` for integer degree pairs."""
    return _psi_int(min(x, y), max(x, y))


def azi(G: Graph) -> Fraction:
    """Augmented Zagreb index of a connected graph on at least three vertices."""
    if G.n < 3:
        raise GraphError("AZI needs at least three vertices")
    if not is_connected(G):
        raise GraphError("AZI needs a connected graph")
    d = G.degrees
    return sum((edge_weight(d[u], d[v]) for u, v in G.edges), Fraction(0))


def azi_unchecked(G: Graph) -> Fraction:
    """AZI without the connectivity check, for hot enumeration loops."""
    d = G.degrees
    return sum((edge_weight(d[u], d[v]) for u, v in G.edges), Fraction(0))


def _integral_alpha(alpha: object) -> int | None:
    if isinstance(alpha, bool):
        raise TypeError("alpha must be a number")
    if isinstance(alpha, int):
        return alpha
    if isinstance(alpha, Fraction) and alpha.denominator == 1:
        return int(alpha)
    return None


def abc_alpha(G: Graph, alpha: Real) -> Fraction | float:
    """Generalised ABC index; exact for integer ``alpha``, float otherwise."""
    if not is_connected(G):
        raise GraphError("ABC index needs a connected graph")
    if alpha == 0:
        return Fraction(G.m)
    if alpha < 0 and G.n == 2:
        raise GraphError("negative alpha is undefined on the single edge")
    d = G.degrees
    k = _integral_alpha(alpha)
    if k is not None:
        return sum((Fraction(d[u] + d[v] - 2, d[u] * d[v]) ** k for u, v in G.edges), Fraction(0))
    a = float(alpha)
    return sum(((d[u] + d[v] - 2) / (d[u] * d[v])) ** a for u, v in G.edges)


def azi_lower_bound(e: int, p: int, s: int, delta: int) -> Fraction:
    """Edge-class lower bound on AZI.

    ``p`` pendant edges weigh at least ``(delta/(delta-1))**3``, ``s`` edges with
    a degree-2 end weigh exactly 8, and the rest weigh at least ``(9/4)**3``.
    """
    for name, val in (("e", e), ("p", p), ("s", s), ("delta", delta)):
        if not isinstance(val, int) or val < 0:
            raise ValueError(f"{name} must be a nonnegative integer")
    if delta < 2:
        raise ValueError("delta must be at least 2")
    if p + s > e:
        raise ValueError("need e >= p + s")
    return p * Fraction(delta, delta - 1) ** 3 + 8 * s + (e - p - s) * Fraction(9, 4) ** 3


def lower_bound_counts(G: Graph) -> tuple[int, int, int, int]:
    """(e, p, s, delta) for ``azi_lower_bound``.

    ``s`` counts non-pendant edges with a degree-2 endpoint so the three
    classes are disjoint.
    """
    d = G.degrees
    p = sum(1 for u, v in G.edges if min(d[u], d[v]) == 1)
    s = sum(1 for u, v in G.edges if min(d[u], d[v]) >= 2 and 2 in (d[u], d[v]))
    return G.m, p, s, max(d)


# --- closed forms -------------------------------------------------------------

F = Fraction

# The printed constants for the two families below are rounded; EXACT_CONSTANTS
# holds the values obtained by summing the fixed part of the graph directly.
PRINTED_CONSTANTS = {"c_55": F(6961, 78), "b_6": F(7088, 81)}
EXACT_CONSTANTS = {"c_55": F(2203959131, 24696000), "b_6": F(604843, 6912)}

CLOSED_FORMS = ("w", "a_kk", "c_44", "c_55", "a_split", "b_6")


def _tail(a: int, b: int) -> Fraction:
    return F(a ** 3, b ** 2)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def eval_closed_form(form: str, *, n: int, k: int | None = None, c: int | None = None,
                     s: int | None = None, exact: bool = False) -> Fraction:
    """Closed-form AZI of a named family member.

    ``form`` is one of:
      ``w``        W(n; c, s), needs c >= 1 and 1 <= s <= (n-c-2)/2
      ``a_kk``     A(k, k, n-2k), needs k >= 4 and n-2k >= 4
      ``c_44``     C(4, 4, n-8), needs n >= 15
      ``c_55``     C(5, 5, n-10), needs n >= 15
      ``a_split``  A(k, floor((n-k)/2), ceil((n-k)/2)), needs k >= 4 and n >= 3k+3
      ``b_6``      B(6, ceil(n/2)-3, floor(n/2)-3), needs n >= 15
    With ``exact=True`` the rounded constants of ``c_55`` and ``b_6`` are
    replaced by their exact values.
    """
    if form == "w":
        _need(c is not None and s is not None, "w needs c and s")
        _need(c >= 1 and 1 <= s and 2 * s <= n - c - 2, "w needs c >= 1 and 1 <= s <= (n-c-2)/2")
        return ((n - c - 2 - s) * F(n - s - 1, n - 2 - s) ** 3
                + (s - 1) * F(s + c, s + c - 1) ** 3 + 16 * (c + 1))
    if form == "a_kk":
        _need(k is not None and k >= 4 and n - 2 * k >= 4, "a_kk needs k >= 4 and n-2k >= 4")
        return F(5259, 64) + _tail(n - 2 * k - 2, n - 2 * k - 3) + 2 * _tail(k - 2, k - 3)
    if form == "c_44":
        _need(n >= 15, "c_44 needs n >= 15")
        return F(5289, 64) + _tail(n - 10, n - 11)
    if form == "c_55":
        _need(n >= 15, "c_55 needs n >= 15")
        const = (EXACT_CONSTANTS if exact else PRINTED_CONSTANTS)["c_55"]
        return const + _tail(n - 12, n - 13)
    if form == "a_split":
        _need(k is not None and k >= 4 and n >= 3 * k + 3, "a_split needs k >= 4 and n >= 3k+3")
        r = n - k
        if r % 2 == 0:
            rest = _tail(r - 4, r - 6)
        else:
            rest = _tail(r - 3, r - 5) / 2 + _tail(r - 5, r - 7) / 2
        return F(5259, 64) + _tail(k - 2, k - 3) + rest
    if form == "b_6":
        _need(n >= 15, "b_6 needs n >= 15")
        const = (EXACT_CONSTANTS if exact else PRINTED_CONSTANTS)["b_6"]
        if n % 2 == 0:
            rest = _tail(n - 10, n - 12)
        else:
            rest = _tail(n - 9, n - 11) / 2 + _tail(n - 11, n - 13) / 2
        return const + rest
    raise ValueError(f"unknown closed form {form!r}; expected one of {CLOSED_FORMS}")


def to_decimal(x: Fraction, digits: int = 17) -> str:
    return format(float(x), f".{digits}g")


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
