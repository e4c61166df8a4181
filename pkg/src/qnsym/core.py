"""Elements of NSym and QSym with exact integer coefficients.

Every element is stored as a sparse dictionary mapping (basis token,
composition) to an integer.  H (complete homogeneous) and M (monomial) are
the canonical bases of NSym and QSym; every other basis registers a pair
of expansion maps to and from the canonical one, and all structural
operations (products, coproducts, the pairing, involutions, the antipode)
are computed canonically and converted back.

Coefficients live in the integers by design: the canonical transition
matrices of all registered bases are integral both ways, and any division
that fails to be exact raises instead of silently leaving the ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple

from . import compositions as comps

NSYM = "NSym"
QSYM = "QSym"
CANONICAL = {NSYM: "H", QSYM: "M"}

# display/sort order of tokens; schur-like tokens are appended on registration
_TOKEN_ORDER = ["H", "E", "R", "M", "F"]


class _BasisInfo(NamedTuple):
    algebra: str
    expand: Callable  # comp -> {comp: int}, image of basis element in canonical
    unexpand: Callable  # comp -> {comp: int}, canonical element in this basis


_REGISTRY: dict = {}


def register_basis(token: str, algebra: str, expand, unexpand) -> None:
    if algebra not in (NSYM, QSYM):
        raise ValueError(f"unknown algebra {algebra!r}")
    if token in _REGISTRY:
        raise ValueError(f"basis {token!r} already registered")
    _REGISTRY[token] = _BasisInfo(algebra, expand, unexpand)
    if token not in _TOKEN_ORDER:
        _TOKEN_ORDER.append(token)
    _expand.cache_clear()
    _unexpand.cache_clear()


def bases(algebra=None) -> tuple:
    return tuple(
        t for t, info in _REGISTRY.items() if algebra in (None, info.algebra)
    )


def check_basis(token: str, algebra=None) -> str:
    info = _REGISTRY.get(token)
    if info is None:
        raise KeyError(f"unknown basis {token!r}")
    if algebra is not None and info.algebra != algebra:
        raise ValueError(f"basis {token!r} lives in {info.algebra}, not {algebra}")
    return token


def algebra_of(token: str) -> str:
    return _REGISTRY[check_basis(token)].algebra


@lru_cache(maxsize=None)
def _expand(basis: str, comp: tuple) -> tuple:
    return tuple(sorted(_REGISTRY[basis].expand(comp).items()))


@lru_cache(maxsize=None)
def _unexpand(basis: str, comp: tuple) -> tuple:
    return tuple(sorted(_REGISTRY[basis].unexpand(comp).items()))


# ---------------------------------------------------------------------------
# exact linear algebra over the integers

def exact_inverse(rows) -> tuple:
    """Invert an integer matrix, insisting the inverse is integral too."""
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ArithmeticError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        piv = aug[col][col]
        aug[col] = [v / piv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    inv = []
    for r in range(n):
        out_row = []
        for v in aug[r][n:]:
            if v.denominator != 1:
                raise ArithmeticError("inverse is not integral")
            out_row.append(int(v))
        inv.append(tuple(out_row))
    return tuple(inv)


# ---------------------------------------------------------------------------
# elements

def _term_sort_key(key):
    basis, comp = key
    return (sum(comp), comp, _TOKEN_ORDER.index(basis))


class Element:
    """A finite integer combination of basis elements of NSym or QSym."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: str, terms=None):
        if algebra not in (NSYM, QSYM):
            raise ValueError(f"unknown algebra {algebra!r}")
        self.algebra = algebra
        self.terms = {}
        for (basis, comp), coeff in (terms or {}).items():
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient {coeff!r} is not an integer")
            if coeff:
                check_basis(basis, algebra)
                self.terms[(basis, tuple(comp))] = coeff

    # -- construction helpers

    def copy(self) -> "Element":
        return Element(self.algebra, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple:
        return tuple(sorted({sum(c) for _, c in self.terms}))

    def coefficient(self, basis: str, comp) -> int:
        return self.terms.get((basis, tuple(comp)), 0)

    def support_basis(self):
        """The single basis token all terms use, or None if mixed/empty."""
        seen = {b for b, _ in self.terms}
        return seen.pop() if len(seen) == 1 else None

    # -- ring structure

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.algebra != self.algebra:
            raise ValueError("cannot add NSym and QSym elements")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return Element(self.algebra, terms)

    def __radd__(self, other):
        if other == 0:  # so the builtin sum() works
            return self.copy()
        return NotImplemented

    def __neg__(self):
        return Element(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.algebra, {k: c * other for k, c in self.terms.items()})
        if isinstance(other, Element):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if self.algebra != other.algebra:
            return False
        return self.canonical_dict() == other.canonical_dict()

    __hash__ = None

    # -- basis changes

    def canonical_dict(self) -> dict:
        """Coefficients in the canonical basis, as {composition: int}."""
        target = CANONICAL[self.algebra]
        out = {}
        for (basis, comp), coeff in self.terms.items():
            if basis == target:
                out[comp] = out.get(comp, 0) + coeff
            else:
                for c2, v in _expand(basis, comp):
                    out[c2] = out.get(c2, 0) + coeff * v
        return {c: v for c, v in out.items() if v}

    def convert(self, target: str) -> "Element":
        check_basis(target, self.algebra)
        canonical = CANONICAL[self.algebra]
        if target == canonical:
            return Element(
                self.algebra,
                {(canonical, c): v for c, v in self.canonical_dict().items()},
            )
        terms = {}
        for comp, coeff in self.canonical_dict().items():
            for c2, v in _unexpand(target, comp):
                k = (target, c2)
                terms[k] = terms.get(k, 0) + coeff * v
        return Element(self.algebra, terms)

    # -- presentation

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _term_sort_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (basis, comp), coeff in self.sorted_terms():
            body = f"{basis}[{','.join(map(str, comp))}]"
            mag = abs(coeff)
            word = body if mag == 1 else f"{mag} {body}"
            if not pieces:
                pieces.append(word if coeff > 0 else f"-{word}")
            else:
                pieces.append(f"+ {word}" if coeff > 0 else f"- {word}")
        return " ".join(pieces)

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "terms": [
                {"basis": b, "index": list(c), "coeff": str(v)}
                for (b, c), v in self.sorted_terms()
            ],
        }


def element_from_json(data: dict) -> Element:
    terms = {}
    for t in data["terms"]:
        key = (t["basis"], tuple(t["index"]))
        terms[key] = terms.get(key, 0) + int(t["coeff"])
    return Element(data["algebra"], terms)


def term(basis: str, comp, coeff: int = 1) -> Element:
    comp = comps.check_composition(comp)
    return Element(algebra_of(basis), {(basis, comp): coeff})


def zero(algebra: str) -> Element:
    return Element(algebra)


def one(algebra: str) -> Element:
    return Element(algebra, {(CANONICAL[algebra], ()): 1})


def convert(x: Element, target: str) -> Element:
    return x.convert(target)


# ---------------------------------------------------------------------------
# canonical products

@lru_cache(maxsize=None)
def quasi_shuffle(a: tuple, b: tuple) -> tuple:
    """M_a * M_b as ((composition, coefficient), ...)."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out = {}
    for g, c in quasi_shuffle(a[1:], b):
        k = (a[0],) + g
        out[k] = out.get(k, 0) + c
    for g, c in quasi_shuffle(a, b[1:]):
        k = (b[0],) + g
        out[k] = out.get(k, 0) + c
    for g, c in quasi_shuffle(a[1:], b[1:]):
        k = (a[0] + b[0],) + g
        out[k] = out.get(k, 0) + c
    return tuple(sorted(out.items()))


def _canonical_product(algebra: str, a: tuple, b: tuple) -> tuple:
    if algebra == NSYM:
        return ((a + b, 1),)
    return quasi_shuffle(a, b)


def multiply(x: Element, y: Element, basis=None) -> Element:
    if x.algebra != y.algebra:
        raise ValueError("cannot multiply NSym and QSym elements")
    algebra = x.algebra
    out = {}
    for a, ca in x.canonical_dict().items():
        for b, cb in y.canonical_dict().items():
            for g, v in _canonical_product(algebra, a, b):
                out[g] = out.get(g, 0) + ca * cb * v
    canonical = CANONICAL[algebra]
    result = Element(algebra, {(canonical, c): v for c, v in out.items()})
    target = basis or x.support_basis() or canonical
    return result.convert(target)


# ---------------------------------------------------------------------------
# coproducts and tensors

class TensorElement:
    """An integer combination of two-fold tensors over one algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: str, terms=None):
        if algebra not in (NSYM, QSYM):
            raise ValueError(f"unknown algebra {algebra!r}")
        self.algebra = algebra
        self.terms = {}
        for ((bl, cl), (br, cr)), coeff in (terms or {}).items():
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient {coeff!r} is not an integer")
            if coeff:
                check_basis(bl, algebra)
                check_basis(br, algebra)
                self.terms[((bl, tuple(cl)), (br, tuple(cr)))] = coeff

    def __add__(self, other):
        if not isinstance(other, TensorElement) or other.algebra != self.algebra:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return TensorElement(self.algebra, terms)

    def __radd__(self, other):
        if other == 0:
            return TensorElement(self.algebra, dict(self.terms))
        return NotImplemented

    def __neg__(self):
        return TensorElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Componentwise product: (a (x) b)(c (x) d) = ac (x) bd."""
        if not isinstance(other, TensorElement) or other.algebra != self.algebra:
            return NotImplemented
        out = {}
        left = self.canonical_dict()
        right = other.canonical_dict()
        for (a1, a2), c1 in left.items():
            for (b1, b2), c2 in right.items():
                for g1, v1 in _canonical_product(self.algebra, a1, b1):
                    for g2, v2 in _canonical_product(self.algebra, a2, b2):
                        k = (g1, g2)
                        out[k] = out.get(k, 0) + c1 * c2 * v1 * v2
        canonical = CANONICAL[self.algebra]
        return TensorElement(
            self.algebra,
            {((canonical, g1), (canonical, g2)): v for (g1, g2), v in out.items()},
        )

    def canonical_dict(self) -> dict:
        """Coefficients with both legs canonical: {(compL, compR): int}."""
        out = {}
        for ((bl, cl), (br, cr)), coeff in self.terms.items():
            for c1, v1 in _leg_expand(self.algebra, bl, cl):
                for c2, v2 in _leg_expand(self.algebra, br, cr):
                    k = (c1, c2)
                    out[k] = out.get(k, 0) + coeff * v1 * v2
        return {k: v for k, v in out.items() if v}

    def convert(self, left_basis: str, right_basis: str) -> "TensorElement":
        check_basis(left_basis, self.algebra)
        check_basis(right_basis, self.algebra)
        terms = {}
        for (c1, c2), coeff in self.canonical_dict().items():
            for d1, v1 in _leg_unexpand(self.algebra, left_basis, c1):
                for d2, v2 in _leg_unexpand(self.algebra, right_basis, c2):
                    k = ((left_basis, d1), (right_basis, d2))
                    terms[k] = terms.get(k, 0) + coeff * v1 * v2
        return TensorElement(self.algebra, terms)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.canonical_dict() == other.canonical_dict()
        )

    __hash__ = None

    def sorted_terms(self) -> list:
        return sorted(
            self.terms.items(),
            key=lambda kv: (_term_sort_key(kv[0][0]), _term_sort_key(kv[0][1])),
        )

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for ((bl, cl), (br, cr)), coeff in self.sorted_terms():
            body = (
                f"{bl}[{','.join(map(str, cl))}]"
                f" (x) {br}[{','.join(map(str, cr))}]"
            )
            mag = abs(coeff)
            word = body if mag == 1 else f"{mag} {body}"
            if not pieces:
                pieces.append(word if coeff > 0 else f"-{word}")
            else:
                pieces.append(f"+ {word}" if coeff > 0 else f"- {word}")
        return " ".join(pieces)

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "terms": [
                {
                    "left": {"basis": bl, "index": list(cl)},
                    "right": {"basis": br, "index": list(cr)},
                    "coeff": str(v),
                }
                for ((bl, cl), (br, cr)), v in self.sorted_terms()
            ],
        }


def _leg_expand(algebra, basis, comp):
    if basis == CANONICAL[algebra]:
        return ((comp, 1),)
    return _expand(basis, comp)


def _leg_unexpand(algebra, basis, comp):
    if basis == CANONICAL[algebra]:
        return ((comp, 1),)
    return _unexpand(basis, comp)


def tensor_term(basis_l: str, comp_l, basis_r: str, comp_r, coeff: int = 1) -> TensorElement:
    algebra = algebra_of(basis_l)
    if algebra_of(basis_r) != algebra:
        raise ValueError("tensor legs must live in one algebra")
    return TensorElement(
        algebra, {((basis_l, tuple(comp_l)), (basis_r, tuple(comp_r))): coeff}
    )


@lru_cache(maxsize=None)
def _coproduct_H(comp: tuple) -> tuple:
    """Deltas of H_comp: each part splits as i + (part - i)."""
    pieces = {((), ()): 1}
    for part in comp:
        nxt = {}
        for (l, r), c in pieces.items():
            for i in range(part + 1):
                left = l + (i,) if i else l
                right = r + (part - i,) if part - i else r
                k = (left, right)
                nxt[k] = nxt.get(k, 0) + c
        pieces = nxt
    return tuple(sorted(pieces.items()))


def coproduct(x: Element) -> TensorElement:
    algebra = x.algebra
    canonical = CANONICAL[algebra]
    out = {}
    for comp, coeff in x.canonical_dict().items():
        if algebra == NSYM:
            splits = _coproduct_H(comp)
        else:  # M deconcatenates
            splits = tuple(
                ((comp[:i], comp[i:]), 1) for i in range(len(comp) + 1)
            )
        for (l, r), v in splits:
            k = ((canonical, l), (canonical, r))
            out[k] = out.get(k, 0) + coeff * v
    return TensorElement(algebra, out)


def counit(x: Element) -> int:
    return sum(c for (b, comp), c in x.terms.items() if not comp)


# ---------------------------------------------------------------------------
# duality

def pair(h: Element, f: Element) -> int:
    """The duality pairing; h must be NSym and f QSym."""
    if h.algebra != NSYM or f.algebra != QSYM:
        raise ValueError("pair() takes an NSym element then a QSym element")
    hc = h.canonical_dict()
    fc = f.canonical_dict()
    if len(hc) > len(fc):
        hc, fc = fc, hc
    return sum(c * fc.get(comp, 0) for comp, c in hc.items())


def pair_tensor(tx: TensorElement, ty: TensorElement) -> int:
    """Legwise pairing of an NSym tensor with a QSym tensor."""
    if tx.algebra != NSYM or ty.algebra != QSYM:
        raise ValueError("pair_tensor() takes an NSym tensor then a QSym tensor")
    xc = tx.canonical_dict()
    yc = ty.canonical_dict()
    return sum(c * yc.get(k, 0) for k, c in xc.items())


def perp(h: Element, f: Element) -> Element:
    """The operator on QSym adjoint to left multiplication by h.

    In canonical terms: peel the H-indices of h off the *front* of the
    M-indices of f.
    """
    if h.algebra != NSYM or f.algebra != QSYM:
        raise ValueError("perp() takes an NSym element then a QSym element")
    out = {}
    for beta, hc in h.canonical_dict().items():
        k = len(beta)
        for delta, fc in f.canonical_dict().items():
            if delta[:k] == beta:
                key = ("M", delta[k:])
                out[key] = out.get(key, 0) + hc * fc
    return Element(QSYM, out)


def rperp(h: Element, f: Element) -> Element:
    """Adjoint to right multiplication by h: peel H-indices off the back."""
    if h.algebra != NSYM or f.algebra != QSYM:
        raise ValueError("rperp() takes an NSym element then a QSym element")
    out = {}
    for beta, hc in h.canonical_dict().items():
        k = len(beta)
        for delta, fc in f.canonical_dict().items():
            if k <= len(delta) and delta[len(delta) - k :] == beta:
                key = ("M", delta[: len(delta) - k])
                out[key] = out.get(key, 0) + hc * fc
    return Element(QSYM, out)


# ---------------------------------------------------------------------------
# involutions and the antipode

_INDEX_MAP = {
    "psi": comps.complement,
    "rho": comps.reverse,
    "omega": comps.transpose,
}

# carrier bases on which each involution acts by reindexing
_CARRIER = {NSYM: "R", QSYM: "F"}

# preferred output basis for elements supported on a single basis
_PARTNER = {
    "psi": {"H": "E", "E": "H", "sh": "rsh", "rsh": "sh", "fsh": "bsh", "bsh": "fsh",
            "sh*": "rsh*", "rsh*": "sh*", "fsh*": "bsh*", "bsh*": "fsh*"},
    "rho": {"sh": "fsh", "fsh": "sh", "rsh": "bsh", "bsh": "rsh",
            "sh*": "fsh*", "fsh*": "sh*", "rsh*": "bsh*", "bsh*": "rsh*"},
    "omega": {"H": "E", "E": "H", "sh": "bsh", "bsh": "sh", "rsh": "fsh", "fsh": "rsh",
              "sh*": "bsh*", "bsh*": "sh*", "rsh*": "fsh*", "fsh*": "rsh*"},
}


def involution(name: str, x: Element, basis=None) -> Element:
    """Apply psi, rho, or omega; the result is converted to `basis` if given,
    else to the natural partner of x's basis (or the canonical basis)."""
    if name not in _INDEX_MAP:
        raise ValueError(f"unknown involution {name!r}")
    carrier = _CARRIER[x.algebra]
    index_map = _INDEX_MAP[name]
    mapped = {}
    for (_, comp), coeff in x.convert(carrier).terms.items():
        k = (carrier, index_map(comp))
        mapped[k] = mapped.get(k, 0) + coeff
    result = Element(x.algebra, mapped)
    if basis is None:
        support = x.support_basis()
        basis = _PARTNER[name].get(support, support) or CANONICAL[x.algebra]
    return result.convert(basis)


def antipode(x: Element, basis=None) -> Element:
    """The Hopf antipode, acting on the ribbon/fundamental carrier by
    transposing the index and attaching the sign (-1)^degree."""
    carrier = _CARRIER[x.algebra]
    mapped = {}
    for (_, comp), coeff in x.convert(carrier).terms.items():
        sign = -1 if sum(comp) % 2 else 1
        k = (carrier, comps.transpose(comp))
        mapped[k] = mapped.get(k, 0) + sign * coeff
    result = Element(x.algebra, mapped)
    target = basis or x.support_basis() or CANONICAL[x.algebra]
    return result.convert(target)


# ---------------------------------------------------------------------------
# transition matrices

class TransitionMatrix(NamedTuple):
    source: str
    target: str
    degree: int
    indices: tuple  # compositions of the degree, canonical order
    rows: tuple  # rows[i][j] = coefficient of target[indices[j]] in source[indices[i]]


@lru_cache(maxsize=None)
def transition_matrix(source: str, target: str, degree: int) -> TransitionMatrix:
    if algebra_of(source) != algebra_of(target):
        raise ValueError("transition matrix needs two bases of one algebra")
    cs = comps.compositions(degree)
    where = {c: j for j, c in enumerate(cs)}
    rows = []
    for a in cs:
        x = term(source, a).convert(target)
        row = [0] * len(cs)
        for (_, c), v in x.terms.items():
            row[where[c]] = v
        rows.append(tuple(row))
    return TransitionMatrix(source, target, degree, cs, tuple(rows))


# ---------------------------------------------------------------------------
# the five classical bases

def _expand_E(comp):
    n = sum(comp)
    out = {}
    for beta in comps.refinements(comp):
        out[beta] = out.get(beta, 0) + (-1) ** (n - len(beta))
    return out


def _unexpand_E(comp):
    n = sum(comp)
    out = {}
    for alpha in comps.refinements(comp):
        out[alpha] = out.get(alpha, 0) + (-1) ** (n - len(alpha))
    return out


def _expand_R(comp):
    out = {}
    for beta in comps.coarsenings(comp):
        out[beta] = out.get(beta, 0) + (-1) ** (len(comp) - len(beta))
    return out


def _unexpand_R(comp):
    return {alpha: 1 for alpha in comps.coarsenings(comp)}


def _expand_F(comp):
    return {beta: 1 for beta in comps.refinements(comp)}


def _unexpand_F(comp):
    out = {}
    for beta in comps.refinements(comp):
        out[beta] = out.get(beta, 0) + (-1) ** (len(beta) - len(comp))
    return out


def _identity_expand(comp):
    return {tuple(comp): 1}


register_basis("H", NSYM, _identity_expand, _identity_expand)
register_basis("M", QSYM, _identity_expand, _identity_expand)
register_basis("E", NSYM, _expand_E, _unexpand_E)
register_basis("R", NSYM, _expand_R, _unexpand_R)
register_basis("F", QSYM, _expand_F, _unexpand_F)
