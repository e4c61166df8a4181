"""The four Schur-like dual basis pairs and the constructions built on them.

Each tableau family yields an NSym basis (sh, rsh, fsh, bsh) and a dual
QSym basis (sh*, rsh*, fsh*, bsh*), registered from the family's own
tableau counts: with C the canonical composition list of degree n and
K[i][j] the number of family tableaux of shape C[i] and type C[j],

    H_{C[j]}  = sum_i K[i][j] X_{C[i]},      X*_{C[i]} = sum_j K[i][j] M_{C[j]},

so X->H inverts K exactly over the integers.  On top of the bases live
the Pieri rules, the beth creation operators, Jacobi-Trudi expansions,
ribbon multiplication, skew and skew-II functions, structure coefficients,
coproduct formulas, and the bridge to symmetric functions.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import NamedTuple

from . import compositions as comps
from . import core
from . import tableaux as tab
from .core import NSYM, QSYM, Element, TensorElement, multiply, term

NSYM_TOKEN = {"shin": "sh", "row_strict": "rsh", "flipped": "fsh", "backward": "bsh"}
QSYM_TOKEN = {fam: tok + "*" for fam, tok in NSYM_TOKEN.items()}
FAMILY_OF_TOKEN = {tok: fam for fam, tok in NSYM_TOKEN.items()}

# the side and generator of each family's Pieri rule
PIERI_SIDE = {"shin": "right", "row_strict": "right", "flipped": "left", "backward": "left"}
PIERI_GENERATOR = {"shin": "H", "row_strict": "E", "flipped": "H", "backward": "E"}


def family_name(family: str) -> str:
    """Accept either a family name or its NSym basis token."""
    if family in NSYM_TOKEN:
        return family
    if family in FAMILY_OF_TOKEN:
        return FAMILY_OF_TOKEN[family]
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# basis registration

@lru_cache(maxsize=None)
def _positions(n: int) -> dict:
    return {c: i for i, c in enumerate(comps.compositions(n))}


@lru_cache(maxsize=None)
def _kappa_inverse(family: str, n: int) -> tuple:
    try:
        return core.exact_inverse(tab.kappa_matrix(family, n))
    except ArithmeticError as exc:  # pragma: no cover - cannot occur for correct counts
        raise ArithmeticError(f"{family} transition matrix at degree {n}: {exc}") from exc


def _make_expanders(family: str):
    def expand_nsym(comp):
        n = sum(comp)
        cs = comps.compositions(n)
        i = _positions(n)[tuple(comp)]
        kinv = _kappa_inverse(family, n)
        return {cs[j]: kinv[j][i] for j in range(len(cs)) if kinv[j][i]}

    def unexpand_nsym(comp):
        n = sum(comp)
        cs = comps.compositions(n)
        j = _positions(n)[tuple(comp)]
        kappa = tab.kappa_matrix(family, n)
        return {cs[i]: kappa[i][j] for i in range(len(cs)) if kappa[i][j]}

    def expand_qsym(comp):
        n = sum(comp)
        cs = comps.compositions(n)
        i = _positions(n)[tuple(comp)]
        kappa = tab.kappa_matrix(family, n)
        return {cs[j]: kappa[i][j] for j in range(len(cs)) if kappa[i][j]}

    def unexpand_qsym(comp):
        n = sum(comp)
        cs = comps.compositions(n)
        j = _positions(n)[tuple(comp)]
        kinv = _kappa_inverse(family, n)
        return {cs[i]: kinv[j][i] for i in range(len(cs)) if kinv[j][i]}

    return expand_nsym, unexpand_nsym, expand_qsym, unexpand_qsym


def register_bases() -> None:
    """Install the eight Schur-like bases into the conversion registry."""
    if "sh" in core.bases():
        return
    for family in tab.FAMILIES:
        en, un, eq, uq = _make_expanders(family)
        core.register_basis(NSYM_TOKEN[family], NSYM, en, un)
        core.register_basis(QSYM_TOKEN[family], QSYM, eq, uq)


# ---------------------------------------------------------------------------
# Pieri rules and beth operators

def pieri(family: str, alpha, r: int, side=None, generator=None) -> Element:
    """Multiply the family basis element by H_r or E_r on the family's side,
    expanded combinatorially through strip extensions."""
    family = family_name(family)
    alpha = comps.check_composition(alpha)
    if r < 0:
        raise ValueError("strip size must be nonnegative")
    want_side, want_gen = PIERI_SIDE[family], PIERI_GENERATOR[family]
    if side is not None and side != want_side:
        raise ValueError(f"{family} has a {want_side} Pieri rule, not {side}")
    if generator is not None and generator != want_gen:
        raise ValueError(f"{family}'s Pieri rule multiplies by {want_gen}_r, not {generator}_r")
    tok = NSYM_TOKEN[family]
    if want_side == "right":
        betas = tab.strip_extensions(alpha, r)
    else:
        betas = tuple(
            comps.reverse(b) for b in tab.strip_extensions(comps.reverse(alpha), r)
        )
    out = core.zero(NSYM)
    for beta in betas:
        out = out + term(tok, beta)
    return out


def beth(m: int, x: Element) -> Element:
    """The creation operator on NSym: on the H basis it prepends m and
    subtracts the word with m slipped behind the first part."""
    if not isinstance(m, int) or m <= 0:
        raise ValueError("beth index must be a positive integer")
    if x.algebra != NSYM:
        raise ValueError("beth acts on NSym")
    out = {}

    def add(comp, c):
        key = ("H", comp)
        out[key] = out.get(key, 0) + c

    for comp, c in x.canonical_dict().items():
        if not comp:
            add((m,), c)
        else:
            add((m,) + comp, c)
            add((comp[0], m) + comp[1:], -c)
    return Element(NSYM, out)


# ---------------------------------------------------------------------------
# Jacobi-Trudi

class RestrictedPermutation(NamedTuple):
    values: tuple  # sigma as (sigma(1), ..., sigma(k)), with sigma(i) >= i-1

    @property
    def sign(self) -> int:
        v = self.values
        inversions = sum(
            1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] > v[j]
        )
        return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def restricted_permutations(k: int) -> tuple:
    """All permutations sigma of {1..k} with sigma(i) >= i-1."""
    return tuple(
        RestrictedPermutation(p)
        for p in permutations(range(1, k + 1))
        if all(p[i] >= i for i in range(k))
    )


def jacobi_trudi(family: str, beta) -> Element:
    """Signed H- or E-word expansion of the family basis element.

    Defined for strictly increasing beta (sh, rsh) and strictly decreasing
    beta (fsh, bsh); for the latter the permutations act on the reversal
    and each word is reversed afterwards.
    """
    family = family_name(family)
    beta = comps.check_composition(beta)
    k = len(beta)
    increasing = all(a < b for a, b in zip(beta, beta[1:]))
    decreasing = all(a > b for a, b in zip(beta, beta[1:]))
    if family in ("shin", "row_strict"):
        if not increasing:
            raise ValueError(
                f"no determinant expansion for {beta}: the index must be strictly "
                "increasing (the (2,2,4) expansion cannot be written this way)"
            )
        base = beta
        flip_words = False
    else:
        if not decreasing:
            raise ValueError(
                f"no determinant expansion for {beta}: the index must be strictly "
                "decreasing (the (2,2,4) expansion cannot be written this way)"
            )
        base = comps.reverse(beta)
        flip_words = True
    gen = "H" if family in ("shin", "flipped") else "E"
    out = core.zero(NSYM)
    for sigma in restricted_permutations(k):
        word = tuple(base[s - 1] for s in sigma.values)
        if flip_words:
            word = comps.reverse(word)
        out = out + sigma.sign * term(gen, word)
    return out


@lru_cache(maxsize=None)
def _pieri_elimination(alpha: tuple) -> tuple:
    """H-expansion of sh_alpha computed purely from the Pieri rule:
    sh_prefix * H_last expands as the sum over strip extensions, so
    sh_alpha is the product minus the other strips (each earlier in the
    (length, last part) order).  Independent of the K-matrix route."""
    if not alpha:
        return (((), 1),)
    prefix, r = alpha[:-1], alpha[-1]
    acc = {}
    for comp, c in _pieri_elimination(prefix):
        acc[comp + (r,)] = acc.get(comp + (r,), 0) + c
    for beta in tab.strip_extensions(prefix, r):
        if beta == alpha:
            continue
        for comp, c in _pieri_elimination(beta):
            acc[comp] = acc.get(comp, 0) - c
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def pieri_elimination(alpha) -> Element:
    """Oracle route for sh_alpha in H, built only from strip extensions."""
    alpha = comps.check_composition(alpha)
    return Element(NSYM, {("H", c): v for c, v in _pieri_elimination(alpha)})


# ---------------------------------------------------------------------------
# ribbon multiplication, skew functions, structure coefficients

def ribbon_multiply(family: str, alpha, beta) -> Element:
    """The product of the family basis element with R_beta (on the family's
    side), expanded by counting standard skew family tableaux with descent
    composition beta."""
    family = family_name(family)
    alpha = comps.check_composition(alpha)
    beta = comps.check_composition(beta)
    tok = NSYM_TOKEN[family]
    left_sided = PIERI_SIDE[family] == "left"
    n = sum(alpha) + sum(beta)
    out = {}
    for gamma in comps.compositions(n):
        if not alpha:
            shape = tab.straight(gamma)
        elif left_sided:
            if not comps.dominated(comps.reverse(alpha), comps.reverse(gamma)):
                continue
            shape = tab.skew2(gamma, alpha)
        else:
            if not comps.dominated(alpha, gamma):
                continue
            shape = tab.skew(gamma, alpha)
        if not tab.is_chain_legal(shape):
            continue
        count = sum(
            1
            for t in tab.enumerate_standard(shape, family)
            if tab.descent_composition(t) == beta
        )
        if count:
            out[(tok, gamma)] = count
    return Element(NSYM, out)


def skew(family: str, outer, inner) -> Element:
    """The skew QSym function of the family, via the perp operator."""
    family = family_name(family)
    outer = comps.check_composition(outer)
    inner = comps.check_composition(inner)
    if not comps.dominated(inner, outer):
        warnings.warn(f"skew: {inner} is not contained in {outer}; result is zero")
        return core.zero(QSYM)
    return core.perp(term(NSYM_TOKEN[family], inner), term(QSYM_TOKEN[family], outer))


def skew_ii(family: str, outer, inner) -> Element:
    """The skew-II QSym function, via the right-perp operator (total)."""
    family = family_name(family)
    outer = comps.check_composition(outer)
    inner = comps.check_composition(inner)
    return core.rperp(term(NSYM_TOKEN[family], inner), term(QSYM_TOKEN[family], outer))


class StructureCoefficient(NamedTuple):
    alpha: tuple
    beta: tuple
    gamma: tuple
    value: int


def structure_coeffs(family: str, beta, gamma) -> tuple:
    """All nonzero coefficients of X_alpha in X_beta * X_gamma."""
    family = family_name(family)
    tok = NSYM_TOKEN[family]
    beta = comps.check_composition(beta)
    gamma = comps.check_composition(gamma)
    product = multiply(term(tok, beta), term(tok, gamma), basis=tok)
    return tuple(
        StructureCoefficient(comp, beta, gamma, coeff)
        for (_, comp), coeff in product.sorted_terms()
    )


def coproduct_formula_report(family: str, alpha, variant: str = "skew"):
    """Assemble the coproduct of the family's starred basis element from
    skew (variant "skew") or skew-II (variant "skew2") pieces, summing over
    *all* inner compositions.

    Returns (tensor, violations) where violations lists the (beta, piece)
    pairs that fall outside the nominal containment bound yet contribute.
    """
    family = family_name(family)
    if family != "shin":
        raise ValueError("coproduct formulas are stated for the shin pair; "
                         "transport the others through the involutions")
    if variant not in ("skew", "skew2"):
        raise ValueError(f"unknown variant {variant!r}")
    alpha = comps.check_composition(alpha)
    ntok, qtok = NSYM_TOKEN[family], QSYM_TOKEN[family]
    n = sum(alpha)
    terms = {}
    violations = []
    for m in range(n + 1):
        for beta in comps.compositions(m):
            if variant == "skew":
                piece = core.perp(term(ntok, beta), term(qtok, alpha))
                if piece.is_zero():
                    continue
                if not comps.dominated(beta, alpha):
                    violations.append((beta, piece))
                for (_, gamma), c in piece.terms.items():
                    key = ((qtok, beta), ("M", gamma))
                    terms[key] = terms.get(key, 0) + c
            else:
                piece = core.rperp(term(ntok, beta), term(qtok, alpha))
                if piece.is_zero():
                    continue
                if not comps.dominated(comps.reverse(beta), comps.reverse(alpha)):
                    violations.append((beta, piece))
                for (_, gamma), c in piece.terms.items():
                    key = (("M", gamma), (qtok, beta))
                    terms[key] = terms.get(key, 0) + c
    return TensorElement(QSYM, terms), violations


def coproduct_formula(family: str, alpha, variant: str = "skew") -> TensorElement:
    return coproduct_formula_report(family, alpha, variant)[0]


# ---------------------------------------------------------------------------
# the symmetric subspace: m / h / s expansions inside QSym

class SymElement:
    """An integer combination of m, h, or s symmetric functions, indexed by
    partitions, realized when needed as the symmetric subspace of QSym."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs=None):
        if basis not in ("m", "h", "s"):
            raise ValueError(f"unknown Sym basis {basis!r}")
        self.basis = basis
        self.coeffs = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if not comps.is_partition(lam) and lam != ():
                raise ValueError(f"not a partition: {lam!r}")
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            if c:
                self.coeffs[lam] = c

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, SymElement) or other.basis != self.basis:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymElement(self.basis, out)

    def __neg__(self):
        return SymElement(self.basis, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Multiply inside QSym (Sym is a subring) and read the product back."""
        if not isinstance(other, SymElement):
            return NotImplemented
        product = multiply(self.to_qsym(), other.to_qsym())
        detected = schur_detect(product)
        if detected is None:  # pragma: no cover - products of symmetric f stay symmetric
            raise ArithmeticError("product left the symmetric subspace")
        return detected

    def __eq__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.to_basis("m").coeffs == other.to_basis("m").coeffs

    __hash__ = None

    def to_basis(self, target: str) -> "SymElement":
        if target == self.basis:
            return SymElement(self.basis, dict(self.coeffs))
        route = {
            ("s", "m"): _s_to_m,
            ("h", "s"): _h_to_s,
            ("h", "m"): lambda c: _s_to_m(_h_to_s(c)),
            ("m", "s"): _m_to_s,
            ("s", "h"): None,
            ("m", "h"): None,
        }.get((self.basis, target))
        if route is None:
            raise ValueError(f"no conversion from {self.basis} to {target}")
        return SymElement(target, route(self.coeffs))

    def to_qsym(self) -> Element:
        mcoeffs = self.to_basis("m").coeffs
        terms = {}
        for lam, c in mcoeffs.items():
            for alpha in set(permutations(lam)):
                terms[("M", alpha)] = c
        return Element(QSYM, terms)

    def sorted_terms(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for lam, c in self.sorted_terms():
            body = f"{self.basis}[{','.join(map(str, lam))}]"
            word = body if abs(c) == 1 else f"{abs(c)} {body}"
            if not pieces:
                pieces.append(word if c > 0 else f"-{word}")
            else:
                pieces.append(f"+ {word}" if c > 0 else f"- {word}")
        return " ".join(pieces)

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"index": list(lam), "coeff": str(c)} for lam, c in self.sorted_terms()
            ],
        }


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> tuple:
    """K[i][j] = #SSYT of shape lambda_i and weight mu_j over partitions(n)."""
    ps = comps.partitions(n)
    return tuple(tuple(tab.count_K("shin", lam, mu) for mu in ps) for lam in ps)


def _by_degree(coeffs):
    out = {}
    for lam, c in coeffs.items():
        out.setdefault(sum(lam), {})[lam] = c
    return out


def _s_to_m(coeffs):
    out = {}
    for n, piece in _by_degree(coeffs).items():
        ps = comps.partitions(n)
        kost = kostka_matrix(n)
        for lam, c in piece.items():
            i = ps.index(lam)
            for j, mu in enumerate(ps):
                if kost[i][j]:
                    out[mu] = out.get(mu, 0) + c * kost[i][j]
    return out


def _h_to_s(coeffs):
    # h_mu = sum_lam K[lam][mu] s_lam
    out = {}
    for n, piece in _by_degree(coeffs).items():
        ps = comps.partitions(n)
        kost = kostka_matrix(n)
        for mu, c in piece.items():
            j = ps.index(mu)
            for i, lam in enumerate(ps):
                if kost[i][j]:
                    out[lam] = out.get(lam, 0) + c * kost[i][j]
    return out


def _m_to_s(coeffs):
    # solve sum_lam d_lam K[lam][mu] = a_mu exactly; the system is
    # unitriangular in dominance order, so integer solutions exist
    out = {}
    for n, piece in _by_degree(coeffs).items():
        ps = comps.partitions(n)
        kost = kostka_matrix(n)
        a = [Fraction(piece.get(mu, 0)) for mu in ps]
        # back-substitute against K^T: process lambdas from dominance-largest
        d = [Fraction(0)] * len(ps)
        for i in reversed(range(len(ps))):
            acc = a[i] - sum(d[k] * kost[k][i] for k in range(i + 1, len(ps)))
            if kost[i][i] != 1:
                raise ArithmeticError("Kostka matrix is not unitriangular")
            d[i] = acc
        # verify the full system, not just the triangular part
        for j in range(len(ps)):
            if sum(d[i] * kost[i][j] for i in range(len(ps))) != a[j]:
                raise ArithmeticError("m-expansion is not in the span of Schur functions")
        for i, lam in enumerate(ps):
            if d[i].denominator != 1:
                raise ArithmeticError("s-expansion is not integral")
            if d[i]:
                out[lam] = out.get(lam, 0) + int(d[i])
    return out


def forgetful_chi(x: Element) -> SymElement:
    """The projection of NSym onto Sym sending H_alpha to h_{sort(alpha)}."""
    if x.algebra != NSYM:
        raise ValueError("the forgetful map acts on NSym")
    out = {}
    for comp, c in x.canonical_dict().items():
        lam = comps.sort_to_partition(comp)
        out[lam] = out.get(lam, 0) + c
    return SymElement("h", out)


def schur_detect(f: Element):
    """Return the s-expansion of f if it is symmetric, else None.

    f is symmetric when its M-coefficients are constant on sort classes,
    including the rearrangements that do not appear explicitly.
    """
    if f.algebra != QSYM:
        raise ValueError("schur_detect acts on QSym")
    md = f.canonical_dict()
    by_partition = {}
    for comp, c in md.items():
        lam = comps.sort_to_partition(comp)
        if comp == lam:
            by_partition[lam] = c
    for comp, c in md.items():
        if by_partition.get(comps.sort_to_partition(comp), 0) != c:
            return None
    for lam, c in by_partition.items():
        for alpha in set(permutations(lam)):
            if md.get(alpha, 0) != c:
                return None
    return SymElement("m", by_partition).to_basis("s")


def littlewood_richardson(mu, nu) -> dict:
    """LR coefficients via the QSym embedding: multiply s_mu s_nu as
    quasisymmetric functions and read the product back into Schur terms."""
    mu, nu = tuple(mu), tuple(nu)
    product = multiply(
        SymElement("s", {mu: 1}).to_qsym(), SymElement("s", {nu: 1}).to_qsym()
    )
    detected = schur_detect(product)
    if detected is None:
        raise ArithmeticError("product of Schur functions failed to be symmetric")
    return dict(detected.coeffs)


register_bases()
