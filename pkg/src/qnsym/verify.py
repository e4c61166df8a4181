"""Named identity suites, runnable from the CLI or from the test suite.

Each checker sweeps every instance of an identity up to a degree bound and
returns a VerifyReport: how many cases ran, and a reproducer string for
every failure (empty tuple means the identity held everywhere).
"""

from __future__ import annotations

import random
import time
from typing import NamedTuple

from . import compositions as comps
from . import core
from . import schurlike as sl
from . import tableaux as tab
from .core import antipode, coproduct, involution, multiply, pair, term


class VerifyReport(NamedTuple):
    identity: str
    max_degree: int
    cases: int
    failures: tuple
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.failures


def _comps_through(n):
    for m in range(n + 1):
        yield from comps.compositions(m)


# ---------------------------------------------------------------------------

DUAL_PAIRS = (("H", "M"), ("R", "F"), ("sh", "sh*"),
              ("rsh", "rsh*"), ("fsh", "fsh*"), ("bsh", "bsh*"))


def check_duality(max_degree, rng):
    cases, failures = 0, []
    for ntok, qtok in DUAL_PAIRS:
        for n in range(max_degree + 1):
            cs = comps.compositions(n)
            for a in cs:
                for b in cs:
                    got = pair(term(ntok, a), term(qtok, b))
                    cases += 1
                    if got != (1 if a == b else 0):
                        failures.append(
                            f"pair({ntok}{list(a)}, {qtok}{list(b)}) = {got}")
    return cases, failures


def check_involutions(max_degree, rng):
    cases, failures = 0, []
    names = ("psi", "rho", "omega")

    # involutivity and the composition law, on both carrier bases
    for n in range(max_degree + 1):
        for a in comps.compositions(n):
            for tok in ("R", "F"):
                x = term(tok, a)
                for name in names:
                    cases += 1
                    if involution(name, involution(name, x)) != x:
                        failures.append(f"{name}^2({tok}{list(a)}) != id")
                cases += 1
                if involution("omega", x) != involution("psi", involution("rho", x)) or \
                        involution("omega", x) != involution("rho", involution("psi", x)):
                    failures.append(f"omega != psi.rho on {tok}{list(a)}")

    # multiplicativity / anti-multiplicativity, seeded random pairs
    pool = [c for c in _comps_through(max_degree - 1) if c]
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        if sum(a) + sum(b) > max_degree:
            continue
        x, y = term("H", a), term("R", b)
        f, g = term("M", a), term("F", b)
        for name, anti in (("psi", False), ("rho", True), ("omega", True)):
            cases += 2
            lhs = involution(name, multiply(x, y))
            rhs = (multiply(involution(name, y), involution(name, x)) if anti
                   else multiply(involution(name, x), involution(name, y)))
            if lhs != rhs:
                failures.append(f"{name} product law fails on H{list(a)}, R{list(b)}")
            # all three are plain automorphisms on the quasisymmetric side
            if involution(name, multiply(f, g)) != multiply(
                    involution(name, f), involution(name, g)):
                failures.append(f"{name} product law fails on M{list(a)}, F{list(b)}")
        # duality invariance: <inv(h), inv(f)> = <h, f>
        for name in names:
            cases += 1
            if pair(involution(name, x), involution(name, f)) != pair(x, f):
                failures.append(f"{name} breaks the pairing on H{list(a)}, M{list(a)}")

    # the eight transport identities on the Schur-like bases
    for n in range(max_degree + 1):
        for a in comps.compositions(n):
            r = comps.reverse(a)
            checks = (
                (involution("psi", term("sh", a)), term("rsh", a), "psi(sh)"),
                (involution("rho", term("sh", a)), term("fsh", r), "rho(sh)"),
                (involution("omega", term("sh", a)), term("bsh", r), "omega(sh)"),
                (involution("psi", term("sh*", a)), term("rsh*", a), "psi(sh*)"),
                (involution("rho", term("sh*", a)), term("fsh*", r), "rho(sh*)"),
                (involution("omega", term("sh*", a)), term("bsh*", r), "omega(sh*)"),
            )
            for got, want, label in checks:
                cases += 1
                if got != want:
                    failures.append(f"{label} transport fails at {list(a)}")
    for outer, inner in (((1, 3, 2), (1, 2)), ((2, 3), (2,)), ((2, 2), (1, 1)),
                         ((1, 2, 4), (1, 2))):
        if sum(outer) > max_degree:
            continue
        s = sl.skew("sh", outer, inner)
        ro, ri = comps.reverse(outer), comps.reverse(inner)
        cases += 2
        if involution("rho", s) != sl.skew_ii("fsh", ro, ri):
            failures.append(f"rho skew transport fails at {outer}/{inner}")
        if involution("omega", s) != sl.skew_ii("bsh", ro, ri):
            failures.append(f"omega skew transport fails at {outer}/{inner}")
    return cases, failures


def check_jt_vs_pieri(max_degree, rng):
    """The oracle triangle: matrix inversion, Pieri elimination, and the
    signed permutation expansion must agree on strictly increasing indices."""
    cases, failures = 0, []
    for n in range(1, max_degree + 1):
        for beta in comps.compositions(n):
            if not all(x < y for x, y in zip(beta, beta[1:])):
                continue
            cases += 1
            via_matrix = term("sh", beta).convert("H")
            via_pieri = sl.pieri_elimination(beta)
            via_jt = sl.jacobi_trudi("sh", beta)
            if via_matrix != via_pieri:
                failures.append(f"matrix vs pieri route differ at sh{list(beta)}")
            if via_pieri != via_jt:
                failures.append(f"pieri vs jacobi-trudi route differ at sh{list(beta)}")
    return cases, failures


def check_antipode_shin(max_degree, rng):
    cases, failures = 0, []
    one = core.one(core.NSYM)
    for n in range(1, max_degree + 1):
        # antipode axiom on H_n: both convolutions kill it (counit is 0)
        left = core.zero(core.NSYM)
        right = core.zero(core.NSYM)
        for k in range(n + 1):
            hk = term("H", (k,)) if k else one
            hnk = term("H", (n - k,)) if n - k else one
            left = left + multiply(antipode(hk), hnk)
            right = right + multiply(hk, antipode(hnk))
        cases += 2
        if not left.is_zero():
            failures.append(f"(S*id) convolution on H[{n}] = {left}")
        if not right.is_zero():
            failures.append(f"(id*S) convolution on H[{n}] = {right}")
    for n in range(max_degree + 1):
        sign = (-1) ** n
        for a in comps.compositions(n):
            cases += 1
            if antipode(term("sh", a), basis="bsh") != sign * term(
                    "bsh", comps.reverse(a)):
                failures.append(f"S(sh{list(a)}) != (-1)^{n} bsh{list(comps.reverse(a))}")
    return cases, failures


def check_coproducts(max_degree, rng):
    cases, failures = 0, []
    for n in range(max_degree + 1):
        for alpha in comps.compositions(n):
            want = coproduct(term("sh*", alpha)).convert("M", "M")
            for variant in ("skew", "skew2"):
                cases += 1
                got = sl.coproduct_formula("sh", alpha, variant)
                if got.convert("M", "M") != want:
                    failures.append(
                        f"coproduct formula ({variant}) fails at sh*{list(alpha)}")
    return cases, failures


def check_schur_bridge(max_degree, rng):
    cases, failures = 0, []
    for n in range(1, max_degree + 1):
        for a in comps.compositions(n):
            image = sl.forgetful_chi(term("sh", a))
            cases += 1
            if comps.is_partition(a):
                if image != sl.SymElement("s", {a: 1}):
                    failures.append(f"chi(sh{list(a)}) != s{list(a)}")
            elif not image.to_basis("m").is_zero():
                failures.append(f"chi(sh{list(a)}) != 0 for non-partition")
        for lam in comps.partitions(n):
            rev = comps.reverse(lam)
            s_lam = sl.SymElement("s", {lam: 1})
            cases += 3
            if sl.schur_detect(term("sh*", lam)) != s_lam:
                failures.append(f"sh*{list(lam)} is not s{list(lam)}")
            if sl.schur_detect(term("fsh*", rev)) != s_lam:
                failures.append(f"fsh*{list(rev)} is not s{list(lam)}")
            if sl.schur_detect(term("bsh*", rev)) != sl.SymElement(
                    "s", {comps.conjugate(lam): 1}):
                failures.append(f"bsh*{list(rev)} is not the conjugate Schur function")
    # structure constants on partition indices = independently computed LR
    lr_bound = min(max_degree, 6)
    for total in range(2, lr_bound + 1):
        for k in range(1, total):
            for mu in comps.partitions(k):
                for nu in comps.partitions(total - k):
                    cases += 1
                    lr = sl.littlewood_richardson(mu, nu)
                    sc = {c.alpha: c.value for c in sl.structure_coeffs("sh", mu, nu)
                          if comps.is_partition(c.alpha)}
                    if sc != lr:
                        failures.append(f"LR mismatch at s{list(mu)} * s{list(nu)}")
    return cases, failures


def check_tableaux(max_degree, rng):
    cases, failures = 0, []
    for n in range(max_degree + 1):
        for alpha in comps.compositions(n):
            shape = tab.straight(alpha)
            shin = {t.rows for t in tab.enumerate_standard(shape, "shin")}
            rstrict = {t.rows for t in tab.enumerate_standard(shape, "row_strict")}
            flipped = {t.rows for t in tab.enumerate_standard(shape, "flipped")}
            backward = {t.rows for t in tab.enumerate_standard(shape, "backward")}
            cases += 2
            if shin != rstrict:
                failures.append(f"standard sets differ (shin/row-strict) at {list(alpha)}")
            if flipped != backward:
                failures.append(f"standard sets differ (flipped/backward) at {list(alpha)}")
            for rows in shin:
                cases += 1
                a = tab.descent_composition(tab.Tableau("shin", shape, rows))
                b = tab.descent_composition(tab.Tableau("row_strict", shape, rows))
                if b != comps.complement(a):
                    failures.append(f"descents not complementary at {rows}")
            # flip: descent-reversing bijection onto the reversed shape
            images = set()
            ralpha = comps.reverse(alpha)
            for t in tab.enumerate_standard(shape, "shin"):
                cases += 1
                f = tab.flip(t)
                if (f.shape.outer != ralpha or not tab.validate(f)
                        or tab.descent_composition(f)
                        != comps.reverse(tab.descent_composition(t))):
                    failures.append(f"flip misbehaves on {t.rows}")
                images.add(f.rows)
            target = {t.rows for t in
                      tab.enumerate_standard(tab.straight(ralpha), "flipped")}
            cases += 1
            if images != target:
                failures.append(f"flip is not onto at {list(alpha)}")
            # reverse hooks are the only indices with a one-term F-expansion
            if n:
                cases += 1
                is_rhook = all(p == 1 for p in alpha[:-1])
                if (term("sh*", alpha).convert("F") == term("F", alpha)) != is_rhook:
                    failures.append(f"reverse-hook characterization fails at {list(alpha)}")
    # chains in the strip poset count standard skew tableaux
    for n in range(1, max_degree + 1):
        for alpha in comps.compositions(n):
            for m in range(n + 1):
                for beta in comps.compositions(m):
                    cases += 1
                    chains = tab.maximal_chains(beta, alpha)
                    if not comps.dominated(beta, alpha):
                        expected = 0
                    else:
                        shape = tab.skew(alpha, beta) if beta else tab.straight(alpha)
                        expected = (len(tab.enumerate_standard(shape, "shin"))
                                    if tab.is_chain_legal(shape) else 0)
                    if len(chains) != expected:
                        failures.append(
                            f"chain count {len(chains)} != {expected} for "
                            f"{list(beta)} -> {list(alpha)}")
    return cases, failures


IDENTITIES = {
    "duality": (check_duality, 7),
    "involutions": (check_involutions, 6),
    "jt-vs-pieri": (check_jt_vs_pieri, 8),
    "antipode-shin": (check_antipode_shin, 6),
    "coproducts": (check_coproducts, 6),
    "schur-bridge": (check_schur_bridge, 7),
    "tableaux": (check_tableaux, 7),
}


def verify(identity: str, max_degree=None, seed: int = 0) -> VerifyReport:
    if identity not in IDENTITIES:
        raise KeyError(f"unknown identity {identity!r}; "
                       f"choose from {', '.join(sorted(IDENTITIES))}")
    checker, default_degree = IDENTITIES[identity]
    degree = default_degree if max_degree is None else max_degree
    rng = random.Random(seed)
    start = time.perf_counter()
    cases, failures = checker(degree, rng)
    seconds = time.perf_counter() - start
    return VerifyReport(identity, degree, cases, tuple(failures), seconds)
