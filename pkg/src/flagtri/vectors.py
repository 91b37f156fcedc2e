"""Face-number algebra: f-, h- and gamma-vectors plus the edge-density bounds.

Everything here is exact. Rational thresholds are either returned as
``fractions.Fraction`` or compared after multiplying through by 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


class VectorError(ValueError):
    """Raised for malformed vectors or violated preconditions."""


class NotSymmetricError(VectorError):
    """The h-vector is not palindromic, so it has no gamma-vector."""


class DimensionError(VectorError):
    """A dimension-specific routine got a vector of the wrong dimension."""


def _as_ints(entries: Iterable[int]) -> tuple[int, ...]:
    out = []
    for x in entries:
        if isinstance(x, bool) or int(x) != x:
            raise VectorError(f"non-integer entry {x!r}")
        out.append(int(x))
    return tuple(out)


@dataclass(frozen=True)
class FaceVector:
    """(f_{-1}, f_0, ..., f_d); ``d`` is derived from the length."""

    entries: tuple[int, ...]

    def __post_init__(self):
        e = _as_ints(self.entries)
        object.__setattr__(self, "entries", e)
        if not e or e[0] != 1:
            raise VectorError("f_{-1} must be 1")
        if any(x < 0 for x in e):
            raise VectorError(f"negative face count in {e}")
        if len(e) > 1 and e[-1] < 1:
            raise VectorError("top-dimensional count f_d must be >= 1")

    @property
    def d(self) -> int:
        return len(self.entries) - 2

    def __getitem__(self, i: int) -> int:
        """Face count in dimension ``i`` (so ``f[-1] == 1``)."""
        if not -1 <= i <= self.d:
            raise IndexError(i)
        return self.entries[i + 1]

    def __str__(self) -> str:
        return format_vector(self.entries)


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        e = _as_ints(self.entries)
        object.__setattr__(self, "entries", e)
        if not e or e[0] != 1:
            raise VectorError("h_0 must be 1")

    @property
    def d(self) -> int:
        return len(self.entries) - 2

    def __str__(self) -> str:
        return format_vector(self.entries)


@dataclass(frozen=True)
class GammaVector:
    """(gamma_0, ..., gamma_{floor((d+1)/2)}).

    The length alone does not pin down ``d`` (d=2 and d=3 both give three
    entries), so the dimension is stored explicitly.
    """

    d: int
    entries: tuple[int, ...]

    def __post_init__(self):
        e = _as_ints(self.entries)
        object.__setattr__(self, "entries", e)
        if self.d < -1:
            raise VectorError("dimension must be >= -1")
        if len(e) != (self.d + 1) // 2 + 1:
            raise VectorError(
                f"gamma-vector of a {self.d}-complex has {(self.d + 1) // 2 + 1} entries, got {len(e)}")
        if e[0] != 1:
            raise VectorError("gamma_0 must be 1")

    def __str__(self) -> str:
        return format_vector(self.entries)


# -- parsing / printing -------------------------------------------------------

def parse_vector(text: str) -> tuple[int, ...]:
    """Parse ``"1,8,24,32,16"`` into a tuple of ints."""
    parts = [p.strip() for p in text.strip().split(",")]
    if not parts or any(p == "" for p in parts):
        raise VectorError(f"malformed vector {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise VectorError(f"malformed vector {text!r}") from exc


def format_vector(entries: Sequence[int]) -> str:
    return ",".join(str(x) for x in entries)


# -- polynomial helpers (coefficient lists, lowest degree first) ---------------

def _binomial_row(shift: int, power: int) -> list[int]:
    """Coefficients of (x + shift)**power."""
    return [comb(power, j) * shift ** (power - j) for j in range(power + 1)]


# -- transforms ----------------------------------------------------------------

def f_to_h(f: FaceVector) -> HVector:
    """sum_i h_i x^{d+1-i} = sum_i f_i (x-1)^{d-i}."""
    d = f.d
    D = d + 1
    # coefficient of x^{D-k} on the right is h_k
    coeffs = [0] * (D + 1)
    for i in range(-1, d + 1):
        for j, c in enumerate(_binomial_row(-1, d - i)):
            coeffs[j] += f[i] * c
    return HVector(tuple(coeffs[D - k] for k in range(D + 1)))


def h_to_f(h: HVector) -> FaceVector:
    # substitute x = y + 1: sum_i f_i y^{d-i} = sum_k h_k (y+1)^{d+1-k}
    d = h.d
    D = d + 1
    coeffs = [0] * (D + 1)
    for k, hk in enumerate(h.entries):
        for j, c in enumerate(_binomial_row(1, D - k)):
            coeffs[j] += hk * c
    f = tuple(coeffs[d - i] for i in range(-1, d + 1))
    if any(x < 0 for x in f):
        raise VectorError(f"h-vector {h} gives negative face numbers {f}")
    return FaceVector(f)


def is_dehn_sommerville(h: HVector) -> bool:
    e = h.entries
    return all(e[i] == e[len(e) - 1 - i] for i in range(len(e)))


def h_to_gamma(h: HVector) -> GammaVector:
    """Solve sum h_i x^i = sum gamma_i x^i (x+1)^{d+1-2i}."""
    if not is_dehn_sommerville(h):
        raise NotSymmetricError(f"h-vector {h} is not palindromic")
    D = h.d + 1
    top = D // 2
    gamma: list[int] = []
    for j in range(top + 1):
        acc = h.entries[j]
        for i, g in enumerate(gamma):
            acc -= g * comb(D - 2 * i, j - i)
        gamma.append(acc)
    result = GammaVector(h.d, tuple(gamma))
    # the lower half determines gamma; symmetry makes the upper half agree
    assert gamma_to_h(result) == h
    return result


def gamma_to_h(g: GammaVector) -> HVector:
    D = g.d + 1
    coeffs = [0] * (D + 1)
    for i, gi in enumerate(g.entries):
        for j, c in enumerate(_binomial_row(1, D - 2 * i)):
            coeffs[i + j] += gi * c
    return HVector(tuple(coeffs))


# -- three-dimensional shortcuts ----------------------------------------------

def _require_3d(f: FaceVector) -> None:
    if f.d != 3:
        raise DimensionError(f"expected a 3-dimensional f-vector, got d={f.d}")


def eulerian_3d_relations(f: FaceVector) -> bool:
    """f_2 = 2(f_1 - f_0) and f_3 = f_1 - f_0."""
    _require_3d(f)
    return f[2] == 2 * (f[1] - f[0]) and f[3] == f[1] - f[0]


def gamma_from_f_3d(f: FaceVector) -> GammaVector:
    _require_3d(f)
    if not eulerian_3d_relations(f):
        raise VectorError(f"{f} violates f_2 = 2(f_1-f_0), f_3 = f_1-f_0")
    return GammaVector(3, (1, f[0] - 8, f[1] - 5 * f[0] + 16))


BELOW = "below"
STRICT_WINDOW = "strict_window"
EQUALITY_BOUNDARY = "equality_boundary"
ABOVE_UPPER = "above_upper"


def edge_density_region(f0: int, f1: int) -> str:
    """Place (f0, f1) relative to (f0^2+2f0+17)/4 < f1 <= f0^2/4 + f0.

    ``above_upper`` wins over ``equality_boundary`` for f0 <= 8, where the
    lower threshold already exceeds the upper one.
    """
    if f0 < 1 or f1 < 0:
        raise VectorError("need f0 >= 1 and f1 >= 0")
    lower = f0 * f0 + 2 * f0 + 17
    upper = f0 * f0 + 4 * f0
    if 4 * f1 > upper:
        return ABOVE_UPPER
    if 4 * f1 == lower:
        return EQUALITY_BOUNDARY
    if 4 * f1 > lower:
        return STRICT_WINDOW
    return BELOW


def turan_threshold(n: int) -> Fraction:
    """(n^2 + 2n + 17) / 4."""
    return Fraction(n * n + 2 * n + 17, 4)


def upper_edge_bound(n: int) -> Fraction:
    """n^2/4 + n, the maximum edge count of a closed flag 3-manifold."""
    return Fraction(n * n, 4) + n


def multipartite_edge_bounds(s: int, f0: int) -> tuple[Fraction, Fraction]:
    """(f0^2 (s-1)/(2s) + f0,  f0^2 (s-1)/(2s) + f0 (s-1)/s + (7s+3)/(2s))."""
    if s < 2 or f0 < 1:
        raise VectorError("need s >= 2 and f0 >= 1")
    quad = Fraction(f0 * f0 * (s - 1), 2 * s)
    upper = quad + f0
    threshold = quad + Fraction(f0 * (s - 1), s) + Fraction(7 * s + 3, 2 * s)
    return upper, threshold


def threshold_split_identity(k: int, l: int) -> tuple[int, Fraction]:
    """Return (kl + 2k + l + 6, (l-k+1)^2 / 4); they sum to the threshold at n=k+l+2."""
    lhs = k * l + 2 * k + l + 6
    gap = Fraction((l - k + 1) ** 2, 4)
    if lhs + gap != turan_threshold(k + l + 2):
        raise AssertionError(f"identity broken at k={k}, l={l}")
    return lhs, gap
