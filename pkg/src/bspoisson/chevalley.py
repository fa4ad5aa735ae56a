"""Structure constants of a Chevalley basis and the root-string coefficients.

``N[(a, b)]`` is the scalar with ``[e_a, e_b] = N[(a, b)] e_{a+b}`` whenever
``a + b`` is a root.  Signs are fixed by the extraspecial-pair algorithm:
positive roots are taken in height-lexicographic order, every extraspecial
pair gets ``N = +(p + 1)``, and all remaining constants follow from the
Chevalley relations.

The module also carries an independent model of the adjoint action of the
one-parameter subgroups ``u_{+-alpha}(t) = exp(t e_{+-alpha})`` used to
cross-check the closed-form coefficients ``c_coeff``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .poly import Polynomial
from .rootsys import (
    Root,
    RootSystem,
    RootSystemError,
    add,
    coroot_coeffs,
    coroot_pairing,
    neg,
    reflect_simple,
    root_string,
)


class StructureError(RuntimeError):
    """The structure table violates a Chevalley identity."""


@dataclass(eq=False)
class StructureTable:
    rs: RootSystem
    N: dict[tuple[Root, Root], Fraction]
    chevalley: bool = True
    _cache: dict = field(default_factory=dict, repr=False)

    def n(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """N_{a,b}; raises KeyError when a + b is not a root."""
        return self.N[(tuple(a), tuple(b))]

    def transformed(self, scales: Mapping[Root, Fraction | int]) -> StructureTable:
        """Structure constants after e_b -> s e_b and e_{-b} -> e_{-b}/s.

        ``scales`` maps positive roots to nonzero scalars; unlisted roots keep
        their vectors.  The relation [e_b, e_{-b}] = h_b is preserved, but
        the result is a Chevalley basis only when every scale is +-1.
        """
        lam: dict[Root, Fraction] = {}
        for r in self.rs.positive_roots:
            s = Fraction(scales.get(r, 1))
            if not s:
                raise ValueError("scale must be nonzero")
            lam[r] = s
            lam[neg(r)] = 1 / s
        out = {
            (a, b): v * lam[a] * lam[b] / lam[add(a, b)] for (a, b), v in self.N.items()
        }
        chev = self.chevalley and all(abs(s) == 1 for s in lam.values())
        return StructureTable(self.rs, out, chev)

    def __repr__(self) -> str:
        return f"StructureTable({self.rs.name}, {len(self.N)} constants)"


def _extraspecial_table(rs: RootSystem) -> dict[tuple[Root, Root], Fraction]:
    pos = rs.positive_roots
    order = rs.root_index
    norm = {r: rs.norm(r) for r in rs.roots}
    N: dict[tuple[Root, Root], Fraction] = {}

    def p_of(a: Root, b: Root) -> int:
        p = 0
        while rs.is_root(add(b, a, -(p + 1))):
            p += 1
        return p

    extraspecial: dict[Root, tuple[Root, Root]] = {}
    for xi in pos:
        for a in pos:
            if order[a] >= order[xi]:
                break
            b = add(xi, a, -1)
            if b in order and order[a] < order[b]:
                extraspecial[xi] = (a, b)
                break

    def lookup(a: Root, b: Root) -> Fraction:
        """N for any pair whose sum has height below the roots being processed."""
        key = (a, b)
        if key in N:
            return N[key]
        a_pos = a in order
        b_pos = b in order
        if a_pos and b_pos:
            return -lookup(b, a)
        if not a_pos and not b_pos:
            return -lookup(neg(a), neg(b))
        if not a_pos:
            return -lookup(b, a)
        # a > 0 > b, g = -(a + b): N_{a,b}/(g,g) = N_{b,g}/(a,a) = N_{g,a}/(b,b)
        g = neg(add(a, b))
        if g in order:
            return Fraction(norm[g], norm[b]) * lookup(g, a)
        return -Fraction(norm[g], norm[a]) * lookup(neg(b), neg(g))

    for xi in pos:
        if xi not in extraspecial:
            continue
        g, d = extraspecial[xi]
        ngd = Fraction(p_of(g, d) + 1)
        N[(g, d)] = ngd
        N[(d, g)] = -ngd
        for a in pos:
            b = add(xi, a, -1)
            if b not in order or order[a] >= order[b] or (a, b) == (g, d):
                continue
            # four roots a, b, -g, -d summing to zero
            total = Fraction(0)
            bg = add(b, g, -1)
            if rs.is_root(bg):
                total += lookup(b, neg(g)) * lookup(a, neg(d)) / norm[bg]
            ag = add(a, g, -1)
            if rs.is_root(ag):
                total += lookup(neg(g), a) * lookup(b, neg(d)) / norm[ag]
            val = norm[xi] * total / ngd
            N[(a, b)] = val
            N[(b, a)] = -val

    full: dict[tuple[Root, Root], Fraction] = {}
    roots = rs.roots
    for a in roots:
        for b in roots:
            s = add(a, b)
            if rs.is_root(s):
                full[(a, b)] = lookup(a, b)
    return full


def _check_table(st: StructureTable) -> None:
    rs = st.rs
    for (a, b), v in st.N.items():
        if st.N[(b, a)] != -v:
            raise StructureError(f"N not antisymmetric at {a}, {b}")
        if st.chevalley:
            if st.N[(neg(a), neg(b))] != -v:
                raise StructureError(f"Chevalley relation fails at {a}, {b}")
            p = 0
            while rs.is_root(add(b, a, -(p + 1))):
                p += 1
            if abs(v) != p + 1:
                raise StructureError(f"|N_{a},{b}| = {v} but p + 1 = {p + 1}")
        g = neg(add(a, b))
        lhs = v / rs.norm(g)
        if st.chevalley and (
            lhs != st.N[(b, g)] / rs.norm(a) or lhs != st.N[(g, a)] / rs.norm(b)
        ):
            raise StructureError(f"three-root identity fails at {a}, {b}")


def build_chevalley(rs: RootSystem) -> StructureTable:
    st = StructureTable(rs, _extraspecial_table(rs), True)
    _check_table(st)
    return st


# -- root-string coefficients ----------------------------------------------


@dataclass(frozen=True)
class CCoeffKey:
    alpha: int
    beta: Root
    kappa: str  # "s" or "e"
    j: int


def epsilon_seq(st: StructureTable, alpha: int, beta: Sequence[int]) -> list[Fraction]:
    """epsilon_j = (j + 1) / N_{alpha, beta - (p - j) alpha} for 0 <= j < p + q."""
    rs = st.rs
    beta = tuple(beta)
    p, q = root_string(rs, alpha, beta)
    a = rs.simple(alpha)
    return [Fraction(j + 1) / st.n(a, add(beta, a, -(p - j))) for j in range(p + q)]


def _prod(xs: Sequence[Fraction]) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def c_coeff(st: StructureTable, key: CCoeffKey) -> Fraction:
    """Coefficient of t^j e_{kappa(beta) - j alpha} in Ad_{p_{kappa,alpha}(t)^{-1}} e_beta."""
    rs = st.rs
    beta = tuple(key.beta)
    a = rs.simple(key.alpha)
    if key.kappa not in ("s", "e"):
        raise ValueError(f"kappa must be 's' or 'e', got {key.kappa!r}")
    if beta == a:
        if key.kappa == "e" and key.j == 0:
            return Fraction(1)
        raise RootSystemError("only kappa = e, j = 0 is defined for beta = alpha")
    cache = st._cache.setdefault("c", {})
    ck = (key.alpha, beta, key.kappa, key.j)
    if ck in cache:
        return cache[ck]
    p, q = root_string(rs, key.alpha, beta)
    eps = epsilon_seq(st, key.alpha, beta)
    j = key.j
    if key.kappa == "s":
        if not 0 <= j <= q:
            raise RootSystemError(f"j = {j} outside 0..{q}")
        val = (-1) ** p * _prod(eps[:p]) / _prod(eps[: q - j]) * comb(p + j, j)
    else:
        if not 0 <= j <= p:
            raise RootSystemError(f"j = {j} outside 0..{p}")
        val = (-1) ** j * _prod(eps[p - j : p]) * comb(q + j, j)
    if st.chevalley and val.denominator != 1:
        raise StructureError(f"non-integral coefficient {val} for {key}")
    cache[ck] = val
    return val


def kappa_image(rs: RootSystem, alpha: int, kappa: str, beta: Sequence[int]) -> Root:
    return reflect_simple(rs, alpha, beta) if kappa == "s" else tuple(beta)


def string_range(rs: RootSystem, alpha: int, kappa: str, beta: Sequence[int]) -> range:
    """Admissible j for (alpha, beta, kappa): 0..q for s, 0..p for e."""
    p, q = root_string(rs, alpha, beta)
    return range(q + 1) if kappa == "s" else range(p + 1)


# -- adjoint action oracle -------------------------------------------------
#
# A Lie algebra element is a dict from basis keys to coefficient polynomials.
# Keys are ("e", root) for root vectors and ("h", j) for the simple coroot
# h_{alpha_j}, j 0-based.


def _bracket_basis(st: StructureTable, x, y) -> dict:
    rs = st.rs
    kx, vx = x
    ky, vy = y
    if kx == "h" and ky == "h":
        return {}
    if kx == "h":
        return {y: Fraction(coroot_pairing(rs, vy, vx + 1))}
    if ky == "h":
        return {x: -Fraction(coroot_pairing(rs, vx, vy + 1))}
    s = add(vx, vy)
    if not any(s):
        return {("h", j): Fraction(c) for j, c in enumerate(coroot_coeffs(rs, vx)) if c}
    if rs.is_root(s):
        return {("e", s): st.n(vx, vy)}
    return {}


def ad(st: StructureTable, x, vec: dict) -> dict:
    """[x, vec] for a basis key x."""
    out: dict = {}
    for key, coeff in vec.items():
        for k2, c2 in _bracket_basis(st, x, key).items():
            v = out.get(k2)
            v = coeff * c2 if v is None else v + coeff * c2
            if v:
                out[k2] = v
            else:
                out.pop(k2, None)
    return out


def _vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        w = out[k] + c if k in out else c
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def exp_ad(st: StructureTable, root: Sequence[int], t: Polynomial, vec: dict) -> dict:
    """Ad_{u_root(t)} vec = exp(t ad e_root) vec, summed until the series stops."""
    x = ("e", tuple(root))
    out = dict(vec)
    term = dict(vec)
    m = 0
    while True:
        m += 1
        term = ad(st, x, term)
        if not term:
            break
        if m > 3:
            raise StructureError("ad e_root is not nilpotent of degree <= 3")
        term = {k: c * t * Fraction(1, m) for k, c in term.items()}
        out = _vec_add(out, term)
    return out


def ad_sdot_inverse(st: StructureTable, alpha: int, vec: dict, nvars: int) -> dict:
    """Ad of sdot_alpha^{-1} = u_alpha(1) u_{-alpha}(-1) u_alpha(1)."""
    a = st.rs.simple(alpha)
    one = Polynomial.const(nvars, 1)
    vec = exp_ad(st, a, one, vec)
    vec = exp_ad(st, neg(a), -one, vec)
    return exp_ad(st, a, one, vec)


def ad_sdot(st: StructureTable, alpha: int, vec: dict, nvars: int) -> dict:
    """Ad of sdot_alpha = u_alpha(-1) u_{-alpha}(1) u_alpha(-1)."""
    a = st.rs.simple(alpha)
    one = Polynomial.const(nvars, 1)
    vec = exp_ad(st, a, -one, vec)
    vec = exp_ad(st, neg(a), one, vec)
    return exp_ad(st, a, -one, vec)


def ad_p_inverse(st: StructureTable, alpha: int, kappa: str, t: Polynomial, vec: dict) -> dict:
    """Ad of p_{kappa,alpha}(t)^{-1} where p = u_{-kappa(alpha)}(t) kappa-dot."""
    a = st.rs.simple(alpha)
    if kappa == "e":
        return exp_ad(st, neg(a), -t, vec)
    vec = exp_ad(st, a, -t, vec)
    return ad_sdot_inverse(st, alpha, vec, t.nvars)


def ad_group_expand(
    st: StructureTable, alpha: int, kappa: str, beta: Sequence[int]
) -> dict[int, tuple[Root, Fraction]]:
    """Expand Ad_{p_{kappa,alpha}(t)^{-1}}(e_beta) as sum_j coeff_j t^j e_{root_j}.

    Returns ``{j: (root_j, coeff_j)}``.  Computed only from the structure
    constants through truncated exponentials of ad e_{+-alpha}.
    """
    rs = st.rs
    beta = tuple(beta)
    a = rs.simple(alpha)
    if beta == a or beta == neg(a):
        raise RootSystemError("beta must differ from +-alpha")
    if not rs.is_root(beta):
        raise RootSystemError(f"{beta} is not a root")
    t = Polynomial.var(1, 0)
    vec = ad_p_inverse(st, alpha, kappa, t, {("e", beta): Polynomial.const(1, 1)})
    out: dict[int, tuple[Root, Fraction]] = {}
    for (kind, r), poly in vec.items():
        if kind != "e":
            raise StructureError(f"unexpected Cartan component in Ad of e_{beta}")
        for (j,), c in poly.terms.items():
            if j in out:
                raise StructureError(f"two root vectors at t^{j}")
            out[j] = (r, c)
    return dict(sorted(out.items()))


def basis_keys(rs: RootSystem) -> list:
    return [("h", j) for j in range(rs.rank)] + [("e", r) for r in rs.roots]


def lie_jacobi_violations(st: StructureTable, limit: int = 1) -> list:
    """Basis triples where [x,[y,z]] + [y,[z,x]] + [z,[x,y]] != 0."""
    keys = basis_keys(st.rs)
    bad = []
    for i, x in enumerate(keys):
        for j in range(i + 1, len(keys)):
            y = keys[j]
            for z in keys[j + 1 :]:
                total = _vec_add(
                    _vec_add(ad(st, x, _bracket_basis(st, y, z)), ad(st, y, _bracket_basis(st, z, x))),
                    ad(st, z, _bracket_basis(st, x, y)),
                )
                if total:
                    bad.append((x, y, z))
                    if len(bad) >= limit:
                        return bad
    return bad


def chevalley_pairs(st: StructureTable):
    """Iterate over (simple index, root beta != +-alpha, kappa, j) in range."""
    rs = st.rs
    for i in range(1, rs.rank + 1):
        a = rs.simple(i)
        for beta in rs.roots:
            if beta == a or beta == neg(a):
                continue
            for kappa in ("s", "e"):
                for j in string_range(rs, i, kappa, beta):
                    yield CCoeffKey(i, beta, kappa, j)

