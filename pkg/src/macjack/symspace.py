"""The N-colored ring of symmetric functions: bases, conversions, scalar products.

Elements are finite linear combinations of basis labels (multipartitions)
over a rational-function coefficient field, homogeneous of one total degree.
Two bases are supported: products of power sums p and products of monomial
symmetric functions m, one factor per color.

Per-color transition tables between the bases are computed once per degree
by expanding power-sum products in finitely many concrete variables (n
variables suffice in degree n) and inverting the resulting system exactly;
the N-colored tables are the color-wise tensor products.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from .field import RationalFunction, Ring
from .partitions import (
    MultiPartition,
    Partition,
    check_multipartition,
    enumerate_multipartitions,
    mp_to_json,
    mp_weight,
    partitions_of,
)


class DegreeMismatchError(ValueError):
    """Pairing or combining elements of different degrees (or color counts)."""


class BasisKind(enum.Enum):
    POWERSUM = "powersum"
    MONOMIAL = "monomial"


# ---------------------------------------------------------------------------
# Per-color transition tables (exact, cached per degree)
# ---------------------------------------------------------------------------


def _expand_powersum(parts: Partition, n_vars: int) -> Dict[Tuple[int, ...], int]:
    """Expand a product of power sums in n_vars concrete variables."""
    poly = {(0,) * n_vars: 1}
    for r in parts:
        out: Dict[Tuple[int, ...], int] = {}
        for exp, c in poly.items():
            for i in range(n_vars):
                e = list(exp)
                e[i] += r
                key = tuple(e)
                out[key] = out.get(key, 0) + c
        poly = out
    return poly


@lru_cache(maxsize=None)
def powersum_to_monomial(n: int) -> Dict[Tuple[Partition, Partition], Fraction]:
    """Table R with p_lambda = sum_mu R[lambda, mu] m_mu in degree n."""
    if n == 0:
        return {((), ()): Fraction(1)}
    table: Dict[Tuple[Partition, Partition], Fraction] = {}
    for lam in partitions_of(n):
        poly = _expand_powersum(lam, n)
        for mu in partitions_of(n):
            exp = tuple(mu) + (0,) * (n - len(mu))
            c = poly.get(exp, 0)
            if c:
                table[(lam, mu)] = Fraction(c)
    return table


@lru_cache(maxsize=None)
def monomial_to_powersum(n: int) -> Dict[Tuple[Partition, Partition], Fraction]:
    """Inverse table with m_mu = sum_lam S[mu, lam] p_lam, by exact elimination."""
    parts = list(partitions_of(n))
    k = len(parts)
    fwd = powersum_to_monomial(n)
    # Augmented system: rows indexed by lambda, columns by mu, then identity.
    rows = [
        [fwd.get((lam, mu), Fraction(0)) for mu in parts]
        + [Fraction(1) if i == j else Fraction(0) for j in range(k)]
        for i, lam in enumerate(parts)
    ]
    for col in range(k):
        pivot = next(r for r in range(col, k) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(k):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
    # rows[mu_index][k + lam_index] is now the inverse matrix entry.
    table: Dict[Tuple[Partition, Partition], Fraction] = {}
    for i, mu in enumerate(parts):
        for j, lam in enumerate(parts):
            c = rows[i][k + j]
            if c:
                table[(mu, lam)] = c
    return table


@lru_cache(maxsize=None)
def _table_rows(n: int, direction: str) -> Dict[Partition, Tuple[Tuple[Partition, Fraction], ...]]:
    table = powersum_to_monomial(n) if direction == "p2m" else monomial_to_powersum(n)
    rows: Dict[Partition, List[Tuple[Partition, Fraction]]] = {}
    for (src, dst), c in table.items():
        rows.setdefault(src, []).append((dst, c))
    return {src: tuple(items) for src, items in rows.items()}


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------


class SymmetricElement:
    """Homogeneous element of the N-colored ring in a declared basis.

    Coefficients are rational functions over the session ring; zero
    coefficients are never stored.  Treated as immutable.
    """

    __slots__ = ("ring", "basis", "degree", "coeffs")

    def __init__(
        self,
        ring: Ring,
        basis: BasisKind,
        coeffs: Dict[MultiPartition, RationalFunction],
        degree: int = None,
    ):
        clean = {mp: c for mp, c in coeffs.items() if not c.is_zero()}
        weights = {mp_weight(mp) for mp in clean}
        if len(weights) > 1:
            raise DegreeMismatchError(f"inhomogeneous element: weights {sorted(weights)}")
        for mp in clean:
            if len(mp) != ring.n_colors:
                raise DegreeMismatchError(
                    f"label {mp} has {len(mp)} colors, ring has {ring.n_colors}"
                )
        if degree is None:
            if not weights:
                raise DegreeMismatchError("zero element needs an explicit degree")
            degree = weights.pop()
        elif weights and weights.pop() != degree:
            raise DegreeMismatchError("declared degree disagrees with labels")
        self.ring = ring
        self.basis = basis
        self.degree = degree
        self.coeffs = clean

    # Constructors ------------------------------------------------------------

    @staticmethod
    def basis_element(ring: Ring, mp, basis: BasisKind) -> "SymmetricElement":
        mp = check_multipartition(mp, ring.n_colors)
        return SymmetricElement(ring, basis, {mp: ring.one}, mp_weight(mp))

    @staticmethod
    def powersum(ring: Ring, mp) -> "SymmetricElement":
        return SymmetricElement.basis_element(ring, mp, BasisKind.POWERSUM)

    @staticmethod
    def monomial(ring: Ring, mp) -> "SymmetricElement":
        return SymmetricElement.basis_element(ring, mp, BasisKind.MONOMIAL)

    @staticmethod
    def zero(ring: Ring, basis: BasisKind, degree: int) -> "SymmetricElement":
        return SymmetricElement(ring, basis, {}, degree)

    # Views -------------------------------------------------------------------

    @property
    def n_colors(self) -> int:
        return self.ring.n_colors

    def coefficient(self, mp) -> RationalFunction:
        return self.coeffs.get(tuple(tuple(c) for c in mp), self.ring.zero)

    def support(self) -> Tuple[MultiPartition, ...]:
        return tuple(sorted(self.coeffs, key=_canonical_position(self.n_colors, self.degree)))

    def is_zero(self) -> bool:
        return not self.coeffs

    # Linear structure ----------------------------------------------------------

    def _check(self, other: "SymmetricElement"):
        if self.ring != other.ring or self.basis != other.basis:
            raise DegreeMismatchError("elements live in different spaces or bases")
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )

    def __add__(self, other: "SymmetricElement") -> "SymmetricElement":
        self._check(other)
        out = dict(self.coeffs)
        for mp, c in other.coeffs.items():
            s = out.get(mp)
            out[mp] = c if s is None else s + c
        return SymmetricElement(self.ring, self.basis, out, self.degree)

    def __neg__(self) -> "SymmetricElement":
        return self.scale_rf(self.ring.const(-1))

    def __sub__(self, other: "SymmetricElement") -> "SymmetricElement":
        return self + (-other)

    def scale_rf(self, factor: RationalFunction) -> "SymmetricElement":
        out = {mp: c * factor for mp, c in self.coeffs.items()}
        return SymmetricElement(self.ring, self.basis, out, self.degree)

    def scale(self, value) -> "SymmetricElement":
        out = {mp: c.scale(Fraction(value)) for mp, c in self.coeffs.items()}
        return SymmetricElement(self.ring, self.basis, out, self.degree)

    def equals(self, other: "SymmetricElement") -> bool:
        self._check(other)
        keys = set(self.coeffs) | set(other.coeffs)
        zero = self.ring.zero
        return all(
            self.coeffs.get(mp, zero).equals(other.coeffs.get(mp, zero)) for mp in keys
        )

    # Basis conversion -----------------------------------------------------------

    def convert(self, target: BasisKind) -> "SymmetricElement":
        """Re-express the element in the target basis (exact, invertible)."""
        if target == self.basis:
            return self
        direction = "p2m" if self.basis == BasisKind.POWERSUM else "m2p"
        out: Dict[MultiPartition, RationalFunction] = {}
        for mp, coeff in self.coeffs.items():
            rows = [_table_rows(sum(comp), direction)[comp] for comp in mp]
            for combo in itertools.product(*rows):
                target_mp = tuple(dst for dst, _ in combo)
                scale = Fraction(1)
                for _, c in combo:
                    scale *= c
                term = coeff.scale(scale)
                prev = out.get(target_mp)
                out[target_mp] = term if prev is None else prev + term
        return SymmetricElement(self.ring, target, out, self.degree)

    # Serialization ----------------------------------------------------------------

    def to_json_dict(self) -> dict:
        order = enumerate_multipartitions(self.n_colors, self.degree, "L")
        items = [
            {"index": mp_to_json(mp), "value": str(self.coeffs[mp])}
            for mp in order
            if mp in self.coeffs
        ]
        return {
            "basis": self.basis.value,
            "N": self.n_colors,
            "degree": self.degree,
            "coeffs": items,
        }

    def __repr__(self) -> str:
        name = "p" if self.basis == BasisKind.POWERSUM else "m"
        if not self.coeffs:
            return "0"
        bits = []
        for mp in self.support():
            label = ",".join("(" + ",".join(map(str, c)) + ")" for c in mp)
            bits.append(f"({self.coeffs[mp]})*{name}[{label}]")
        return " + ".join(bits)


def _canonical_position(n_colors: int, degree: int):
    order = enumerate_multipartitions(n_colors, degree, "L")
    index = {mp: i for i, mp in enumerate(order)}
    return lambda mp: index[mp]


# ---------------------------------------------------------------------------
# Scalar products
# ---------------------------------------------------------------------------


def z_factor(partition: Partition) -> int:
    """The symmetry factor prod_k k^{m_k} m_k! of a partition."""
    mult: Dict[int, int] = {}
    for part in partition:
        mult[part] = mult.get(part, 0) + 1
    out = 1
    for k, m in mult.items():
        out *= k ** m * factorial(m)
    return out


class GramMatrix:
    """Diagonal Gram data of one scalar product on one graded component."""

    __slots__ = ("kind", "n_colors", "degree", "entries")

    def __init__(self, kind: str, n_colors: int, degree: int, entries: Dict[MultiPartition, RationalFunction]):
        self.kind = kind
        self.n_colors = n_colors
        self.degree = degree
        self.entries = entries

    def entry(self, mp) -> RationalFunction:
        return self.entries[tuple(tuple(c) for c in mp)]


def gram(ring: Ring, kind: str, n_colors: int, degree: int) -> GramMatrix:
    """Diagonal of the scalar product on the power-sum basis.

    kind "qt" (macdonald ring):  prod_i z(lam_i) prod_k (1-q^{l_k})/(1-t^{l_k})
    kind "beta" (jack ring):     prod_i z(lam_i) beta^(-len(lam_i))
    """
    if kind not in ("qt", "beta"):
        raise ValueError(f"unknown scalar product kind {kind!r}")
    expected_mode = "macdonald" if kind == "qt" else "jack"
    if ring.mode != expected_mode:
        raise ValueError(f"scalar product {kind!r} needs a {expected_mode}-mode ring")
    if ring.n_colors != n_colors:
        raise ValueError("color count disagrees with ring")
    one = ring.one
    entries: Dict[MultiPartition, RationalFunction] = {}
    if kind == "qt":
        q = ring.var("a") ** 4
        t = ring.var("b") ** 4
    else:
        beta = ring.var("beta")
    for mp in enumerate_multipartitions(n_colors, degree, "L"):
        value = one
        for comp in mp:
            value = value.scale(z_factor(comp))
            if kind == "qt":
                for part in comp:
                    value = value * (one - q ** part) / (one - t ** part)
            else:
                value = value / beta ** len(comp)
        entries[mp] = value
    return GramMatrix(kind, n_colors, degree, entries)


def scalar_product(
    f: SymmetricElement, g: SymmetricElement, kind: str
) -> RationalFunction:
    """Exact scalar product; both sides are converted to power sums internally."""
    if f.ring != g.ring:
        raise DegreeMismatchError("elements live over different rings")
    if f.degree != g.degree:
        raise DegreeMismatchError(f"degree mismatch: {f.degree} vs {g.degree}")
    fp = f.convert(BasisKind.POWERSUM)
    gp = g.convert(BasisKind.POWERSUM)
    g_matrix = gram(f.ring, kind, f.n_colors, f.degree)
    total = f.ring.zero
    for mp, c in fp.coeffs.items():
        d = gp.coeffs.get(mp)
        if d is not None:
            total = total + c * d * g_matrix.entries[mp]
    return total
