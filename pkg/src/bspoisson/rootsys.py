"""Root systems of simple Lie algebras in simple-root coordinates.

Roots are integer tuples of length ``rank`` giving coefficients in the basis
of simple roots.  The invariant form is normalized so that short roots have
squared length 2; simple reflections are indexed from 1 as in the usual
Bourbaki numbering.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


class RootSystemError(ValueError):
    """Raised on an invalid type/rank or a query outside the root system."""


def _gram(type_label: str, rank: int) -> list[list[int]]:
    """Symmetric matrix of inner products of simple roots (short roots norm 2)."""
    g = [[0] * rank for _ in range(rank)]

    def chain(i: int, j: int, value: int) -> None:
        g[i][j] = g[j][i] = value

    if type_label == "A":
        norms = [2] * rank
        edges = [(i, i + 1, -1) for i in range(rank - 1)]
    elif type_label == "B":
        norms = [4] * (rank - 1) + [2]
        edges = [(i, i + 1, -2) for i in range(rank - 1)]
    elif type_label == "C":
        norms = [2] * (rank - 1) + [4]
        edges = [(i, i + 1, -1) for i in range(rank - 2)] + [(rank - 2, rank - 1, -2)]
    elif type_label == "D":
        norms = [2] * rank
        edges = [(i, i + 1, -1) for i in range(rank - 2)] + [(rank - 3, rank - 1, -1)]
    elif type_label == "E":
        norms = [2] * rank
        # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
        edges = [(0, 2, -1), (1, 3, -1)] + [(i, i + 1, -1) for i in range(2, rank - 1)]
    elif type_label == "F":
        norms = [4, 4, 2, 2]
        edges = [(0, 1, -2), (1, 2, -2), (2, 3, -1)]
    elif type_label == "G":
        norms = [2, 6]
        edges = [(0, 1, -3)]
    else:
        raise RootSystemError(f"unknown type {type_label!r}")
    for i, n in enumerate(norms):
        g[i][i] = n
    for i, j, v in edges:
        chain(i, j, v)
    return g


def _check_type(type_label: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(type_label)
    if not ok:
        raise RootSystemError(f"invalid simple type {type_label}{rank}")


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    gram: tuple[tuple[int, ...], ...] = field(repr=False)
    root_index: dict[Root, int] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def roots(self) -> tuple[Root, ...]:
        """All roots: positive ones followed by their negatives."""
        return self.positive_roots + tuple(neg(r) for r in self.positive_roots)

    def simple(self, i: int) -> Root:
        """The simple root alpha_i (1-based)."""
        self._check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return v in self.root_index or neg(v) in self.root_index

    def height(self, v: Sequence[int]) -> int:
        return sum(v)

    def norm(self, v: Sequence[int]) -> int:
        return inner(self, v, v)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple index {i} out of range 1..{self.rank}")

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"


def neg(v: Sequence[int]) -> Root:
    return tuple(-x for x in v)


def add(u: Sequence[int], v: Sequence[int], scale: int = 1) -> Root:
    """Return u + scale * v."""
    return tuple(a + scale * b for a, b in zip(u, v))


def parse_type(label: str) -> tuple[str, int]:
    """Split a label such as ``"G2"`` or ``"b3"`` into ``("G", 2)``."""
    label = label.strip().upper()
    if len(label) < 2 or not label[1:].isdigit():
        raise RootSystemError(f"cannot parse type label {label!r}")
    return label[0], int(label[1:])


def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Cartan data and positive roots for a simple type.

    ``build_root_system("G2")`` and ``build_root_system("G", 2)`` are
    equivalent.  Positive roots are found by closing the simple roots under
    addition of simple roots using root strings, then sorted by height and
    lexicographically within a height.
    """
    if rank is None:
        type_label, rank = parse_type(type_label)
    type_label = type_label.upper()
    _check_type(type_label, rank)
    g = _gram(type_label, rank)
    d = tuple(g[i][i] // 2 for i in range(rank))
    cartan = tuple(
        tuple(2 * g[i][j] // g[i][i] for j in range(rank)) for i in range(rank)
    )

    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                if beta == simples[i]:
                    continue
                p = 0
                while add(beta, simples[i], -(p + 1)) in found:
                    p += 1
                # p - q = <beta, alpha_i^vee>
                pairing = sum(beta[m] * cartan[i][m] for m in range(rank))
                q = p - pairing
                if q > 0:
                    up = add(beta, simples[i])
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt

    positive = tuple(sorted(found, key=lambda r: (sum(r), r)))
    return RootSystem(
        type_label=type_label,
        rank=rank,
        cartan=cartan,
        d=d,
        positive_roots=positive,
        gram=tuple(tuple(row) for row in g),
        root_index={r: k for k, r in enumerate(positive)},
    )


def inner(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Invariant form <lam, mu> on the root lattice."""
    if len(lam) != rs.rank or len(mu) != rs.rank:
        raise RootSystemError("dimension mismatch")
    g = rs.gram
    return sum(
        lam[a] * g[a][b] * mu[b]
        for a in range(rs.rank)
        if lam[a]
        for b in range(rs.rank)
        if mu[b]
    )


def coroot_pairing(rs: RootSystem, lam: Sequence[int], i: int) -> int:
    """<lam, alpha_i^vee> for a simple index i (1-based)."""
    row = rs.cartan[i - 1]
    return sum(lam[m] * row[m] for m in range(rs.rank))


def coroot_coeffs(rs: RootSystem, beta: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of h_beta in the basis of simple coroots h_{alpha_j}."""
    nb = rs.norm(beta)
    out = []
    for j in range(rs.rank):
        c = Fraction(beta[j] * 2 * rs.d[j], nb)
        if c.denominator != 1:
            raise RootSystemError(f"{beta} has a non-integral coroot")
        out.append(int(c))
    return tuple(out)


def reflect_simple(rs: RootSystem, i: int, lam: Sequence[int]) -> Root:
    """s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
    rs._check_index(i)
    c = coroot_pairing(rs, lam, i)
    out = list(lam)
    out[i - 1] -= c
    return tuple(out)


def reflect(rs: RootSystem, beta: Sequence[int], lam: Sequence[int]) -> Root:
    """Reflection in an arbitrary root beta."""
    c = Fraction(2 * inner(rs, lam, beta), rs.norm(beta))
    assert c.denominator == 1
    return add(lam, beta, -int(c))


def apply_weyl_prefix(
    rs: RootSystem,
    word: Sequence[int],
    gamma: Sequence[bool],
    i: int,
    lam: Sequence[int],
) -> Root:
    """Apply gamma_1 gamma_2 ... gamma_i to lam.

    ``gamma[m]`` is True when the m-th letter is the reflection and False
    when it is the identity.  The rightmost factor acts first.
    """
    if not 0 <= i <= len(word):
        raise RootSystemError(f"prefix length {i} out of range 0..{len(word)}")
    if len(gamma) != len(word):
        raise RootSystemError("subexpression length does not match word")
    out = tuple(lam)
    for m in range(i - 1, -1, -1):
        if gamma[m]:
            out = reflect_simple(rs, word[m], out)
    return out


def root_string(rs: RootSystem, i: int, beta: Sequence[int]) -> tuple[int, int]:
    """(p, q) for the alpha_i-string beta - p alpha_i, ..., beta + q alpha_i."""
    rs._check_index(i)
    beta = tuple(beta)
    a = rs.simple(i)
    if not rs.is_root(beta):
        raise RootSystemError(f"{beta} is not a root of {rs.name}")
    if beta == a or beta == neg(a):
        raise RootSystemError("root string through +-alpha_i is undefined here")
    p = 0
    while rs.is_root(add(beta, a, -(p + 1))):
        p += 1
    q = 0
    while rs.is_root(add(beta, a, q + 1)):
        q += 1
    return p, q


def is_positive_root(rs: RootSystem, lam: Sequence[int]) -> bool:
    return tuple(lam) in rs.root_index


def check_word(rs: RootSystem, word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(int(x) for x in word)
    for x in word:
        rs._check_index(x)
    return word


KNOWN_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def all_simple_types(max_rank: int = 8) -> list[tuple[str, int]]:
    """Every simple type of rank at most ``max_rank``."""
    out = []
    for t in "ABCDEFG":
        for n in range(1, max_rank + 1):
            try:
                _check_type(t, n)
            except RootSystemError:
                continue
            out.append((t, n))
    return out
