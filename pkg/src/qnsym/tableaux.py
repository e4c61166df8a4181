"""Composition tableaux for the four Schur-like families.

Shapes are compositions drawn with left-justified rows, row 1 on top.  A
skew shape removes a left prefix of boxes from each of the *top* rows; a
skew-II shape removes a left prefix from each of the *bottom* rows (the
last len(inner) rows of the outer shape, matched to inner in order).

Each family fixes a row order, a column order, a reading order, and a
descent rule; column conditions compare consecutive boxes in the same
column taken in increasing row order, skipping rows that are too short
(or whose box in that column was removed):

family      rows (left to right)  columns (top down)  reading         descent i
shin        weakly increasing     strictly increasing bottom up, L-R  i+1 strictly below
row_strict  strictly increasing   weakly increasing   top down,  L-R  i+1 weakly above
flipped     weakly decreasing     strictly increasing bottom up, R-L  i+1 strictly below
backward    strictly decreasing   weakly increasing   top down,  R-L  i+1 weakly above
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import compositions as comps

FAMILIES = ("shin", "row_strict", "flipped", "backward")

_ROW_OK = {
    "shin": lambda a, b: a <= b,
    "row_strict": lambda a, b: a < b,
    "flipped": lambda a, b: a >= b,
    "backward": lambda a, b: a > b,
}
_COL_OK = {
    "shin": lambda a, b: a < b,
    "row_strict": lambda a, b: a <= b,
    "flipped": lambda a, b: a < b,
    "backward": lambda a, b: a <= b,
}
# descent rule: is i a descent when i sits in row r and i+1 in row s?
_DESCENT = {
    "shin": lambda r, s: s > r,
    "row_strict": lambda r, s: s <= r,
    "flipped": lambda r, s: s > r,
    "backward": lambda r, s: s <= r,
}
_READS_BOTTOM_UP = {"shin": True, "row_strict": False, "flipped": True, "backward": False}
_READS_RIGHT_TO_LEFT = {"shin": False, "row_strict": False, "flipped": True, "backward": True}


def _check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    return family


@dataclass(frozen=True)
class Shape:
    kind: str  # "straight" | "skew" | "skew2"
    outer: tuple
    inner: tuple = ()

    @property
    def removed(self) -> tuple:
        """Boxes removed from the left of each row of outer."""
        k, inner = len(self.outer), self.inner
        if self.kind == "skew":
            return tuple(inner) + (0,) * (k - len(inner))
        if self.kind == "skew2":
            return (0,) * (k - len(inner)) + tuple(inner)
        return (0,) * k

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_lengths(self) -> tuple:
        return tuple(o - r for o, r in zip(self.outer, self.removed))

    def cells(self) -> list:
        """Unremoved boxes as (row, column) pairs, row-major, 0-indexed."""
        rem = self.removed
        return [(r, c) for r, o in enumerate(self.outer) for c in range(rem[r], o)]


def straight(outer) -> Shape:
    return Shape("straight", comps.check_composition(outer))


def skew(outer, inner) -> Shape:
    outer = comps.check_composition(outer)
    inner = comps.check_composition(inner)
    if not comps.dominated(inner, outer):
        raise ValueError(f"inner {inner} not contained in outer {outer}")
    return Shape("skew", outer, inner)


def skew2(outer, inner) -> Shape:
    outer = comps.check_composition(outer)
    inner = comps.check_composition(inner)
    if not comps.dominated(comps.reverse(inner), comps.reverse(outer)):
        raise ValueError(f"inner {inner} not contained in outer {outer} (bottom rows)")
    return Shape("skew2", outer, inner)


def is_chain_legal(shape: Shape) -> bool:
    """Whether the skew region can be built by adding boxes one at a time.

    A skew shape is buildable unless an unremoved box sits in the same
    column above a removed box; for skew-II, unless one sits below.
    """
    outer, rem = shape.outer, shape.removed
    k = len(outer)
    if shape.kind == "skew":
        return not any(
            outer[i] > rem[i] and rem[j] > rem[i]
            for i in range(k)
            for j in range(i + 1, k)
        )
    if shape.kind == "skew2":
        return not any(
            rem[i] > rem[j] and outer[j] > rem[j]
            for i in range(k)
            for j in range(i + 1, k)
        )
    return True


@dataclass(frozen=True)
class Tableau:
    family: str
    shape: Shape
    rows: tuple  # one tuple of entries per row of outer, removed boxes omitted

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> list:
        return [v for row in self.rows for v in row]

    def weight(self) -> tuple:
        """Multiplicity of each value 1..max as a weak composition."""
        vals = self.entries()
        top = max(vals, default=0)
        return tuple(vals.count(v) for v in range(1, top + 1))

    def type(self) -> tuple:
        return comps.flatten(self.weight())

    def is_standard(self) -> bool:
        return sorted(self.entries()) == list(range(1, self.size + 1))

    def to_json_dict(self) -> dict:
        return {
            "shape": {
                "kind": self.shape.kind,
                "outer": list(self.shape.outer),
                "inner": list(self.shape.inner),
            },
            "family": self.family,
            "rows": [list(r) for r in self.rows],
        }


def make_tableau(family, shape, rows) -> Tableau:
    t = Tableau(_check_family(family), shape, tuple(tuple(r) for r in rows))
    if not validate(t):
        raise ValueError(f"not a valid {family} tableau: {rows} on {shape}")
    return t


def _column_predecessors(shape: Shape) -> dict:
    """Map each cell to the previous cell in its column sequence, if any."""
    pred, last = {}, {}
    rem = shape.removed
    for r, o in enumerate(shape.outer):
        for c in range(rem[r], o):
            if c in last:
                pred[(r, c)] = last[c]
            last[c] = (r, c)
    return pred


def validate(t: Tableau) -> bool:
    shape, rows = t.shape, t.rows
    if len(rows) != len(shape.outer):
        return False
    if tuple(len(r) for r in rows) != shape.row_lengths():
        return False
    if any(not isinstance(v, int) or v < 1 for row in rows for v in row):
        return False
    row_ok, col_ok = _ROW_OK[t.family], _COL_OK[t.family]
    for row in rows:
        if any(not row_ok(a, b) for a, b in zip(row, row[1:])):
            return False
    rem = shape.removed
    for (r, c), (r0, c0) in _column_predecessors(shape).items():
        if not col_ok(rows[r0][c0 - rem[r0]], rows[r][c - rem[r]]):
            return False
    return True


def _backtrack(shape: Shape, family: str, type_vec, collect: bool):
    _check_family(family)
    type_vec = tuple(type_vec)
    if any(not isinstance(a, int) or a < 0 for a in type_vec):
        raise ValueError(f"bad type {type_vec!r}")
    cells = shape.cells()
    if sum(type_vec) != len(cells):
        return [] if collect else 0
    row_ok, col_ok = _ROW_OK[family], _COL_OK[family]
    rem = shape.removed
    col_pred = _column_predecessors(shape)
    # for each cell index, the filling positions to compare against
    left_of = []
    up_of = []
    index = {cell: i for i, cell in enumerate(cells)}
    for r, c in cells:
        left_of.append(index[(r, c - 1)] if c - 1 >= rem[r] else -1)
        up_of.append(index[col_pred[(r, c)]] if (r, c) in col_pred else -1)
    remaining = list(type_vec)
    values = [0] * len(cells)
    out = [] if collect else 0

    def place(i):
        nonlocal out
        if i == len(cells):
            if collect:
                rows = []
                k = 0
                for r, o in enumerate(shape.outer):
                    width = o - rem[r]
                    rows.append(tuple(values[k : k + width]))
                    k += width
                out.append(Tableau(family, shape, tuple(rows)))
            else:
                out += 1
            return
        li, ui = left_of[i], up_of[i]
        for v in range(1, len(remaining) + 1):
            if not remaining[v - 1]:
                continue
            if li >= 0 and not row_ok(values[li], v):
                continue
            if ui >= 0 and not col_ok(values[ui], v):
                continue
            remaining[v - 1] -= 1
            values[i] = v
            place(i + 1)
            remaining[v - 1] += 1

    place(0)
    return out


def enumerate_tableaux(shape: Shape, family: str, type_vec) -> list:
    """All family tableaux on shape whose value v appears type_vec[v-1] times.

    type_vec may be a weak composition (zeros allowed).  Tableaux come out
    in lexicographic order of the concatenated rows (top row first).
    """
    return _backtrack(shape, family, type_vec, collect=True)


def count_tableaux(shape: Shape, family: str, type_vec) -> int:
    return _backtrack(shape, family, type_vec, collect=False)


def enumerate_standard(shape: Shape, family: str) -> list:
    return enumerate_tableaux(shape, family, (1,) * shape.size)


def descent_composition(t: Tableau) -> tuple:
    """Descent composition of a standard tableau under its family's rule."""
    if not t.is_standard():
        raise ValueError("descent composition needs a standard tableau")
    n = t.size
    row_of = {}
    for r, row in enumerate(t.rows):
        for v in row:
            row_of[v] = r
    rule = _DESCENT[t.family]
    descents = [i for i in range(1, n) if rule(row_of[i], row_of[i + 1])]
    return comps.comp_of(descents, n)


def reading_order(t: Tableau) -> list:
    """Cells of t in the family's reading order."""
    rem = t.shape.removed
    rows = range(len(t.rows))
    if _READS_BOTTOM_UP[t.family]:
        rows = reversed(rows)
    order = []
    for r in rows:
        cols = range(rem[r], rem[r] + len(t.rows[r]))
        if _READS_RIGHT_TO_LEFT[t.family]:
            cols = reversed(cols)
        order.extend((r, c) for c in cols)
    return order


def reading_word(t: Tableau) -> tuple:
    rem = t.shape.removed
    return tuple(t.rows[r][c - rem[r]] for r, c in reading_order(t))


def standardize(t: Tableau) -> Tableau:
    """Relabel entries 1..n by value, ties broken by the reading order."""
    order = reading_order(t)
    rem = t.shape.removed
    ranked = sorted(
        range(len(order)),
        key=lambda i: (t.rows[order[i][0]][order[i][1] - rem[order[i][0]]], i),
    )
    label = {}
    for new, i in enumerate(ranked, start=1):
        label[order[i]] = new
    rows = tuple(
        tuple(label[(r, c)] for c in range(rem[r], rem[r] + len(t.rows[r])))
        for r in range(len(t.rows))
    )
    return Tableau(t.family, t.shape, rows)


def flip(t: Tableau) -> Tableau:
    """Reverse the row order and relabel i -> n+1-i: standard shin -> flipped."""
    if t.family != "shin" or not t.is_standard():
        raise ValueError("flip is defined on standard shin tableaux")
    n = t.size
    shape = t.shape
    if shape.kind == "straight":
        new_shape = straight(comps.reverse(shape.outer))
    elif shape.kind == "skew":
        new_shape = skew2(comps.reverse(shape.outer), comps.reverse(shape.inner))
    else:
        raise ValueError("flip expects a straight or skew shape")
    rows = tuple(tuple(n + 1 - v for v in row) for row in reversed(t.rows))
    return Tableau("flipped", new_shape, rows)


def count_K(family: str, alpha, beta) -> int:
    """Number of family tableaux of straight shape alpha and weight beta."""
    return count_tableaux(straight(alpha), family, beta)


def count_L(family: str, alpha, beta) -> int:
    """Number of standard family tableaux of shape alpha with descent composition beta."""
    beta = tuple(beta)
    return sum(
        1 for t in enumerate_standard(straight(alpha), family)
        if descent_composition(t) == beta
    )


@lru_cache(maxsize=None)
def kappa_matrix(family: str, n: int) -> tuple:
    """K[i][j] = #tableaux of shape C[i] and type C[j], C = compositions(n)."""
    cs = comps.compositions(n)
    return tuple(tuple(count_K(family, a, b) for b in cs) for a in cs)


@lru_cache(maxsize=None)
def ell_matrix(family: str, n: int) -> tuple:
    """L[i][j] = #standard tableaux of shape C[i] with descent composition C[j]."""
    cs = comps.compositions(n)
    where = {c: j for j, c in enumerate(cs)}
    out = []
    for a in cs:
        row = [0] * len(cs)
        for t in enumerate_standard(straight(a), family):
            row[where[descent_composition(t)]] += 1
        out.append(tuple(row))
    return tuple(out)


# ---------------------------------------------------------------------------
# shin strips and the box-adding order on compositions

def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def is_shin_strip(alpha, beta) -> bool:
    """Whether beta/alpha is a strip extension: each row of alpha may grow,
    at most one new last row appears, and once row i has grown no lower row
    of beta may reach past the old length alpha_i (the overhang rule)."""
    alpha, beta = tuple(alpha), tuple(beta)
    k, m = len(alpha), len(beta)
    if not (k <= m <= k + 1):
        return False
    padded = alpha + (0,) * (m - k)
    if any(b < a for a, b in zip(padded, beta)):
        return False
    for i in range(m):
        if beta[i] > padded[i] and any(beta[j] > padded[i] for j in range(i + 1, m)):
            return False
    return True


def strip_extensions(alpha, r: int) -> tuple:
    """All beta with |beta| = |alpha| + r such that beta/alpha is a strip."""
    alpha = tuple(alpha)
    if r < 0:
        raise ValueError("strip size must be nonnegative")
    if r == 0:
        return (alpha,)
    k = len(alpha)
    found = set()
    for extra_row in (0, 1):
        for d in _weak_compositions(r, k + extra_row):
            if extra_row and d[-1] == 0:
                continue
            beta = tuple(a + e for a, e in zip(alpha + (0,) * extra_row, d))
            if is_shin_strip(alpha, beta):
                found.add(beta)
    return tuple(sorted(found))


def poset_covers(alpha) -> tuple:
    return strip_extensions(alpha, 1)


def maximal_chains(beta, alpha) -> tuple:
    """All saturated chains beta = g0 < g1 < ... < gm = alpha, one box a step."""
    alpha, beta = tuple(alpha), tuple(beta)
    chains = []

    def grow(chain):
        cur = chain[-1]
        if cur == alpha:
            chains.append(tuple(chain))
            return
        for nxt in poset_covers(cur):
            if comps.dominated(nxt, alpha):
                chain.append(nxt)
                grow(chain)
                chain.pop()

    if comps.dominated(beta, alpha):
        grow([beta])
    return tuple(chains)


def chain_to_tableau(chain) -> Tableau:
    """Standard skew shin tableau recording at which step each box appeared."""
    chain = [tuple(g) for g in chain]
    beta, alpha = chain[0], chain[-1]
    filling = {}
    for step, (prev, cur) in enumerate(zip(chain, chain[1:]), start=1):
        prev = prev + (0,) * (len(cur) - len(prev))
        grown = [i for i in range(len(cur)) if cur[i] != prev[i]]
        if len(grown) != 1 or cur[grown[0]] != prev[grown[0]] + 1:
            raise ValueError("not a saturated box-adding chain")
        r = grown[0]
        filling[(r, cur[r] - 1)] = step
    shape = skew(alpha, beta) if beta else straight(alpha)
    rem = shape.removed
    rows = tuple(
        tuple(filling[(r, c)] for c in range(rem[r], alpha[r]))
        for r in range(len(alpha))
    )
    return Tableau("shin", shape, rows)
