"""Poisson brackets of the coordinate functions on Bott-Samelson charts.

A chart is given by a word ``(s_{a_1}, ..., s_{a_n})`` of simple reflections
(stored as the tuple of 1-based simple indices) and a subexpression
``gamma``, a tuple of booleans with ``True`` meaning the reflection is kept.

Two independent engines compute the action of the root vector field
``sigma_beta`` on the coordinates ``z_k``:

* :func:`sigma_closed` sums over chains of roots ``beta_(j_1, ..., j_l)``
  (the sets ``J_k``) and assembles ``phi`` and ``psi``;
* :func:`sigma_recursive` peels off one letter at a time, conjugating the
  root vector through the first factor of the chart.

:func:`bracket_table` then assembles ``{z_i, z_k}`` for all ``i < k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chevalley import CCoeffKey, StructureTable, c_coeff, kappa_image, string_range
from .poly import Derivation, IntegralityError, Polynomial
from .rootsys import (
    Root,
    RootSystem,
    add,
    apply_weyl_prefix,
    coroot_coeffs,
    coroot_pairing,
    inner,
    is_positive_root,
    neg,
)

Word = tuple[int, ...]
Gamma = tuple[bool, ...]


def _kappa(bit: bool) -> str:
    return "s" if bit else "e"


def _check_chart(rs: RootSystem, word: Sequence[int], gamma: Sequence[bool]) -> tuple[Word, Gamma]:
    word = tuple(int(x) for x in word)
    gamma = tuple(bool(b) for b in gamma)
    if len(word) != len(gamma):
        raise ValueError("subexpression length does not match word")
    for x in word:
        if not 1 <= x <= rs.rank:
            raise ValueError(f"letter {x} out of range for {rs.name}")
    return word, gamma


def full(word: Sequence[int]) -> Gamma:
    return (True,) * len(word)


def trivial(word: Sequence[int]) -> Gamma:
    return (False,) * len(word)


# -- chains of roots --------------------------------------------------------


def _chain_levels(
    st: StructureTable, word: Word, gamma: Gamma, beta: Root
) -> list[list[tuple[tuple[int, ...], Fraction]]]:
    """For each level k (0-based), the pairs (j_1..j_{k-1}, c-product) in J_k.

    A depth-first walk through the chains beta_(j_1, ..., j_l); whenever the
    current root equals alpha_l the multi-index so far is recorded for level
    l.  If the current root is alpha_l the only continuation is gamma_l = e
    with j_l = 0 and factor 1.
    """
    cache = st._cache.setdefault("chains", {})
    key = (word, gamma, beta)
    if key in cache:
        return cache[key]
    rs = st.rs
    n = len(word)
    levels: list[list[tuple[tuple[int, ...], Fraction]]] = [[] for _ in range(n)]

    def walk(level: int, cur: Root, js: tuple[int, ...], c: Fraction) -> None:
        a = rs.simple(word[level])
        if cur == a:
            levels[level].append((js, c))
            if level + 1 < n and not gamma[level]:
                walk(level + 1, cur, js + (0,), c)
            return
        if level + 1 >= n:
            return
        kappa = _kappa(gamma[level])
        image = kappa_image(rs, word[level], kappa, cur)
        for j in string_range(rs, word[level], kappa, cur):
            nxt = add(image, a, -j)
            if not is_positive_root(rs, nxt):
                continue
            cj = c_coeff(st, CCoeffKey(word[level], cur, kappa, j))
            walk(level + 1, nxt, js + (j,), c * cj)

    walk(0, tuple(beta), (), Fraction(1))
    cache[key] = levels
    return levels


def enumerate_Jk(
    st: StructureTable, word: Sequence[int], gamma: Sequence[bool], beta: Sequence[int], k: int
) -> list[tuple[tuple[int, ...], Fraction]]:
    """Elements of J_k with their coefficient products (k is 1-based).

    For k = 1 the only candidate is the empty multi-index, present exactly
    when beta = alpha_1.
    """
    word, gamma = _check_chart(st.rs, word, gamma)
    beta = tuple(beta)
    if not is_positive_root(st.rs, beta):
        raise ValueError(f"{beta} is not a positive root")
    if not 1 <= k <= len(word):
        raise ValueError(f"k = {k} out of range")
    return list(_chain_levels(st, word, gamma, beta)[k - 1])


def _phi_all(st: StructureTable, word: Word, gamma: Gamma, beta: Root) -> list[Polynomial]:
    n = len(word)
    out = []
    for k, entries in enumerate(_chain_levels(st, word, gamma, beta)):
        terms: dict[tuple[int, ...], Fraction] = {}
        for js, c in entries:
            e = js + (0,) * (n - k)
            terms[e] = terms.get(e, 0) + c
        out.append(Polynomial(n, terms))
    return out


def phi(st: StructureTable, word, gamma, beta, k: int) -> Polynomial:
    """phi_beta(z_1, ..., z_{k-1}) in len(word) variables."""
    word, gamma = _check_chart(st.rs, word, gamma)
    if not 1 <= k <= len(word):
        raise ValueError(f"k = {k} out of range")
    return _phi_all(st, word, gamma, tuple(beta))[k - 1]


def _weight_ratio(rs: RootSystem, word: Word, gamma: Gamma, i: int, k: int) -> Fraction:
    """2 <g^i(a_i), g^k(a_k)> / <a_i, a_i> for 1-based i, k."""
    ri = apply_weyl_prefix(rs, word, gamma, i, rs.simple(word[i - 1]))
    rk = apply_weyl_prefix(rs, word, gamma, k, rs.simple(word[k - 1]))
    return Fraction(2 * inner(rs, ri, rk), rs.norm(ri))


def psi(st: StructureTable, word, gamma, beta, k: int) -> Polynomial:
    """psi_beta(z_1, ..., z_{k-1}) in len(word) variables."""
    rs = st.rs
    word, gamma = _check_chart(rs, word, gamma)
    n = len(word)
    phis = _phi_all(st, word, gamma, tuple(beta))
    out = Polynomial.zero(n)
    for i in range(1, k):
        if gamma[i - 1]:
            continue
        ratio = _weight_ratio(rs, word, gamma, i, k)
        if ratio:
            out = out - (Polynomial.var(n, i - 1) * phis[i - 1]).scale(ratio)
    return out


def sigma_closed(st: StructureTable, word, gamma, beta, k: int) -> Polynomial:
    """sigma_{e_beta}(z_k) from phi and psi (k is 1-based)."""
    word, gamma = _check_chart(st.rs, word, gamma)
    n = len(word)
    f = phi(st, word, gamma, beta, k)
    g = psi(st, word, gamma, beta, k)
    zk = Polynomial.var(n, k - 1)
    if gamma[k - 1]:
        return f + g * zk
    return -(f * zk * zk) + g * zk


def sigma_recursive(st: StructureTable, word, gamma, beta, k: int) -> Polynomial:
    """sigma_{e_beta}(z_k) by conjugating through the first letter, recursively."""
    rs = st.rs
    word, gamma = _check_chart(rs, word, gamma)
    return _sigma_rec(st, word, gamma, tuple(beta), k)


def _sigma_rec(st: StructureTable, word: Word, gamma: Gamma, beta: Root, k: int) -> Polynomial:
    cache = st._cache.setdefault("rec", {})
    key = (word, gamma, beta, k)
    if key in cache:
        return cache[key]
    rs = st.rs
    n = len(word)
    a1 = rs.simple(word[0])
    z1 = Polynomial.var(n, 0)
    if k == 1:
        if beta != a1:
            out = Polynomial.zero(n)
        elif gamma[0]:
            out = Polynomial.const(n, 1)
        else:
            out = -(z1 * z1)
        cache[key] = out
        return out

    rest_w, rest_g = word[1:], gamma[1:]
    out = Polynomial.zero(n)
    if beta == a1:
        if not gamma[0]:
            out = _sigma_rec(st, rest_w, rest_g, a1, k - 1).embed(n, 1)
            # torus part: z_k has weight -(g_2 ... g_k)(a_k) on the shorter word
            wk = apply_weyl_prefix(rs, rest_w, rest_g, k - 1, rs.simple(word[k - 1]))
            pairing = coroot_pairing(rs, wk, word[0])
            if pairing:
                out = out - (z1 * Polynomial.var(n, k - 1)).scale(pairing)
    else:
        kappa = _kappa(gamma[0])
        image = kappa_image(rs, word[0], kappa, beta)
        for j in string_range(rs, word[0], kappa, beta):
            nxt = add(image, a1, -j)
            if not is_positive_root(rs, nxt):
                continue
            c = c_coeff(st, CCoeffKey(word[0], beta, kappa, j))
            inner_part = _sigma_rec(st, rest_w, rest_g, nxt, k - 1).embed(n, 1)
            if inner_part:
                out = out + (Polynomial.var(n, 0, j) * inner_part).scale(c)
    cache[key] = out
    return out


# -- bracket tables ---------------------------------------------------------


def quadratic_coeff(rs: RootSystem, word, gamma, i: int, k: int) -> int:
    """+-<g^i(a_i), g^k(a_k)>, with + when gamma_i = e and - when gamma_i = s_i."""
    word, gamma = _check_chart(rs, word, gamma)
    ri = apply_weyl_prefix(rs, word, gamma, i, rs.simple(word[i - 1]))
    rk = apply_weyl_prefix(rs, word, gamma, k, rs.simple(word[k - 1]))
    v = inner(rs, ri, rk)
    return -v if gamma[i - 1] else v


@dataclass
class BracketTable:
    """The brackets f[(i, k)] = {z_i, z_k} for 1 <= i < k <= n, with chart data.

    ``weights[i-1]`` is the T-weight of z_i in simple-root coordinates,
    ``h[i-1]`` the torus element h_i in simple-coroot coordinates and
    ``c[(i, k)] = lambda_k(h_i)`` the coefficient of z_i z_k.
    """

    rs: RootSystem
    word: Word
    gamma: Gamma
    f: dict[tuple[int, int], Polynomial]
    weights: list[Root]
    h: list[tuple[Fraction, ...]]
    c: dict[tuple[int, int], int]
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.word)

    def bracket(self, i: int, k: int) -> Polynomial:
        """{z_i, z_k} for any 1-based i, k."""
        if i == k:
            return Polynomial.zero(self.n)
        if i < k:
            return self.f[(i, k)]
        return -self.f[(k, i)]

    def gamma_bits(self) -> str:
        return "".join("1" if b else "0" for b in self.gamma)

    def weight_of_h(self, lam: Sequence[int], i: int) -> Fraction:
        """lambda(h_i) for a weight lam in simple-root coordinates."""
        return pair_weight(self.rs, lam, self.h[i - 1])

    def same_brackets(self, other: BracketTable) -> bool:
        return self.f == other.f

    def __iter__(self):
        return iter(sorted(self.f.items()))


def pair_weight(rs: RootSystem, lam: Sequence[int], h: Sequence[Fraction]) -> Fraction:
    """lam(h) with h in simple-coroot coordinates."""
    return sum(
        (Fraction(c) * coroot_pairing(rs, lam, j + 1) for j, c in enumerate(h) if c),
        Fraction(0),
    )


def chart_weights(rs: RootSystem, word: Word, gamma: Gamma) -> list[Root]:
    """lambda_i = -g^i(a_i)."""
    return [
        neg(apply_weyl_prefix(rs, word, gamma, i, rs.simple(word[i - 1])))
        for i in range(1, len(word) + 1)
    ]


def chart_torus(rs: RootSystem, word: Word, gamma: Gamma) -> list[tuple[Fraction, ...]]:
    """h_i = -(<a_i, a_i>/2) g^{i-1}(h_{a_i}) in simple-coroot coordinates."""
    out = []
    for i in range(1, len(word) + 1):
        a = rs.simple(word[i - 1])
        r = apply_weyl_prefix(rs, word, gamma, i - 1, a)
        half = Fraction(rs.norm(a), 2)
        out.append(tuple(-half * c for c in coroot_coeffs(rs, r)))
    return out


def sigma_suffix(st: StructureTable, word: Word, gamma: Gamma, i: int, k: int, engine=None) -> Polynomial:
    """sigma_i(z_k) on the suffix chart after letter i, in the global n variables."""
    engine = engine or sigma_closed
    rs = st.rs
    n = len(word)
    local = engine(st, word[i:], gamma[i:], rs.simple(word[i - 1]), k - i)
    return local.embed(n, i)


def bracket_table(st: StructureTable, word, gamma, engine=None) -> BracketTable:
    """All brackets {z_i, z_k} on the chart (word, gamma).

    ``engine`` selects the sigma implementation (closed form by default).
    Raises IntegralityError if a Chevalley table yields a fractional
    coefficient.
    """
    rs = st.rs
    word, gamma = _check_chart(rs, word, gamma)
    n = len(word)
    f: dict[tuple[int, int], Polynomial] = {}
    c: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            q = quadratic_coeff(rs, word, gamma, i, k)
            val = (Polynomial.var(n, i - 1) * Polynomial.var(n, k - 1)).scale(q)
            if gamma[i - 1]:
                sig = sigma_suffix(st, word, gamma, i, k, engine)
                val = val - sig.scale(rs.norm(rs.simple(word[i - 1])))
            if st.chevalley and not val.is_integral():
                raise IntegralityError(f"{{z_{i}, z_{k}}} = {val} is not integral")
            f[(i, k)] = val
            c[(i, k)] = q
    return BracketTable(
        rs=rs,
        word=word,
        gamma=gamma,
        f=f,
        weights=chart_weights(rs, word, gamma),
        h=chart_torus(rs, word, gamma),
        c=c,
    )


# -- Ore data -----------------------------------------------------------------


class OreShapeError(ValueError):
    """b_i(z_k) is not in C[z_{i+1}, ..., z_k]."""


@dataclass
class OreData:
    """Derivations a_i, b_i on C[z_{i+1}..z_n] and reversed b'_k on C[z_1..z_{k-1}].

    Indices are 1-based; ``a[i]`` and ``b[i]`` exist for 1 <= i <= n - 1 and
    ``b_rev[k]`` for 2 <= k <= n.
    """

    a: dict[int, Derivation]
    b: dict[int, Derivation]
    b_rev: dict[int, Derivation]


def extract_ore_data(t: BracketTable) -> OreData:
    n = t.n
    a: dict[int, Derivation] = {}
    b: dict[int, Derivation] = {}
    for i in range(1, n):
        a_img = {}
        b_img = {}
        for k in range(i + 1, n + 1):
            coeff = t.weight_of_h(t.weights[k - 1], i)
            a_img[k - 1] = Polynomial.var(n, k - 1).scale(coeff)
            rest = t.f[(i, k)] - (Polynomial.var(n, i - 1) * Polynomial.var(n, k - 1)).scale(coeff)
            if not rest.in_vars(range(i, k)):
                raise OreShapeError(f"b_{i}(z_{k}) = {rest} escapes C[z_{i + 1}..z_{k}]")
            b_img[k - 1] = rest
        a[i] = Derivation(n, a_img)
        b[i] = Derivation(n, b_img)
    b_rev = {
        k: Derivation(n, {i - 1: b[i].images[k - 1] for i in range(1, k)})
        for k in range(2, n + 1)
    }
    return OreData(a=a, b=b, b_rev=b_rev)
