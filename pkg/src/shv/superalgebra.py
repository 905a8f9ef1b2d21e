"""The super Heisenberg-Virasoro algebras of Ramond and Neveu-Schwarz type.

Ramond generators L_m, I_m, G_m are indexed by integers; the Neveu-Schwarz
variant indexes G by half-integers.  Indices are stored doubled so both
variants share one element type.  Defining relations:

    [L_m, L_n] = (n-m) L_{m+n}      [L_m, I_n] = n I_{m+n}
    [L_m, G_n] = n G_{m+n}          [G_m, G_n] = 2 I_{m+n}
    [I_m, I_n] = [I_m, G_n] = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

RAMOND = "ramond"
NEVEU_SCHWARZ = "ns"

FAMILIES = ("L", "I", "G")
PARITY = {"L": 0, "I": 0, "G": 1}

GenKey = Tuple[str, int]  # (family, doubled index)
RGen = Tuple[str, int]  # (family, integer index), Ramond only


class TagMismatchError(ValueError):
    """Raised when elements of different algebra tags are combined."""


class IdealCheckError(RuntimeError):
    """Internal consistency failure of a quotient's ideal property."""


def _check_doubled(algebra: str, family: str, doubled: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if algebra == RAMOND:
        if doubled % 2:
            raise ValueError(f"Ramond {family}-index must be an integer")
    elif algebra == NEVEU_SCHWARZ:
        want_odd = family == "G"
        if (doubled % 2 != 0) != want_odd:
            kind = "half-integer" if want_odd else "integer"
            raise ValueError(f"Neveu-Schwarz {family}-index must be a {kind}")
    else:
        raise ValueError(f"unknown algebra tag {algebra!r}")


class SuperElement:
    """Finite linear combination of indexed generators of one algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: str, terms: Dict[GenKey, Fraction]):
        clean: Dict[GenKey, Fraction] = {}
        for (family, doubled), coeff in terms.items():
            _check_doubled(algebra, family, doubled)
            c = Fraction(coeff)
            if c:
                clean[(family, doubled)] = c
        self.algebra = algebra
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c) -> "SuperElement":
        c = Fraction(c)
        return SuperElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __add__(self, other: "SuperElement") -> "SuperElement":
        if self.algebra != other.algebra:
            raise TagMismatchError("cannot add elements of different algebras")
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return SuperElement(self.algebra, acc)

    def __sub__(self, other: "SuperElement") -> "SuperElement":
        return self + other.scale(-1)

    def __neg__(self) -> "SuperElement":
        return self.scale(-1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SuperElement)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.algebra, tuple(sorted(self.terms.items()))))

    def sorted_terms(self) -> List[Tuple[str, int, Fraction]]:
        """Terms in canonical order: family L < I < G, then index ascending."""
        rank = {"L": 0, "I": 1, "G": 2}
        keys = sorted(self.terms, key=lambda k: (rank[k[0]], k[1]))
        return [(f, d, self.terms[(f, d)]) for f, d in keys]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for f, d, c in self.sorted_terms():
            idx = str(d // 2) if d % 2 == 0 else f"{d}/2"
            cs = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{cs}{f}_{{{idx}}}")
        return " + ".join(parts)


def zero(algebra: str = RAMOND) -> SuperElement:
    return SuperElement(algebra, {})


def gen(family: str, index, algebra: str = RAMOND, coeff=1) -> SuperElement:
    idx = Fraction(index)
    doubled = idx * 2
    if doubled.denominator != 1:
        raise ValueError(f"index {index} is not a half-integer")
    return SuperElement(algebra, {(family, int(doubled)): Fraction(coeff)})


def L(m: int) -> SuperElement:
    return gen("L", m)


def I(m: int) -> SuperElement:  # noqa: E741 - the generator family's letter
    return gen("I", m)


def G(m: int) -> SuperElement:
    return gen("G", m)


def ns_gen(family: str, index, coeff=1) -> SuperElement:
    return gen(family, index, algebra=NEVEU_SCHWARZ, coeff=coeff)


def _gen_bracket_d(f1: str, d1: int, f2: str, d2: int) -> Optional[Tuple[str, int, Fraction]]:
    """Bracket of two generators with doubled indices; None when it vanishes."""
    if f1 == "L":
        if f2 == "L":
            c = Fraction(d2 - d1, 2)
            fam = "L"
        elif f2 == "I":
            c = Fraction(d2, 2)
            fam = "I"
        else:
            c = Fraction(d2, 2)
            fam = "G"
    elif f2 == "L":
        if f1 == "I":
            c = Fraction(-d1, 2)
            fam = "I"
        else:
            c = Fraction(-d1, 2)
            fam = "G"
    elif f1 == "G" and f2 == "G":
        c = Fraction(2)
        fam = "I"
    else:
        return None
    if not c:
        return None
    return (fam, d1 + d2, c)


def rbracket(f1: str, m: int, f2: str, n: int) -> Optional[Tuple[str, int, Fraction]]:
    """Single-generator Ramond bracket with plain integer indices."""
    out = _gen_bracket_d(f1, 2 * m, f2, 2 * n)
    if out is None:
        return None
    fam, doubled, c = out
    return (fam, doubled // 2, c)


def bracket(x: SuperElement, y: SuperElement) -> SuperElement:
    """Bilinear extension of the defining relations."""
    if x.algebra != y.algebra:
        raise TagMismatchError("bracket requires a common algebra tag")
    acc: Dict[GenKey, Fraction] = {}
    for (f1, d1), c1 in x.terms.items():
        for (f2, d2), c2 in y.terms.items():
            out = _gen_bracket_d(f1, d1, f2, d2)
            if out is None:
                continue
            fam, d, c = out
            key = (fam, d)
            acc[key] = acc.get(key, Fraction(0)) + c1 * c2 * c
    return SuperElement(x.algebra, acc)


def parity_of(x: SuperElement) -> int:
    """Parity of a homogeneous element (raises on mixed parity)."""
    ps = {PARITY[f] for (f, _) in x.terms}
    if len(ps) > 1:
        raise ValueError("element is not homogeneous")
    return ps.pop() if ps else 0


# ---------------------------------------------------------------------------
# The formal distribution algebra of a conformal spec
# ---------------------------------------------------------------------------

def _falling(k: int, t: int) -> int:
    out = 1
    for s in range(t):
        out *= k - s
    return out


def _binom(m: int, j: int) -> Fraction:
    num = 1
    for s in range(j):
        num *= m - s
    return Fraction(num, factorial(j))


def formal_bracket(spec, x: RGen, y: RGen) -> Dict[RGen, Fraction]:
    """[x_(m), y_(n)] of formal-distribution symbols, from the j-th products.

    Uses [a_m, b_n] = sum_j C(m, j) (a_(j) b)_{m+n-j} together with
    (d a)_n = -n a_{n-1}.
    """
    from .conformal import jth_products

    (f1, m), (f2, n) = x, y
    acc: Dict[RGen, Fraction] = {}
    for j, elem in jth_products(spec, f1, f2):
        cj = _binom(m, j)
        if not cj:
            continue
        for (gname, de, _, _), c in elem.terms.items():
            idx = m + n - j
            coeff = cj * c * ((-1) ** de) * _falling(idx, de)
            if not coeff:
                continue
            key = (gname, idx - de)
            acc[key] = acc.get(key, Fraction(0)) + coeff
    return {k: v for k, v in acc.items() if v}


def _shift(sym: RGen) -> RGen:
    """Correspondence between algebra generators and formal symbols.

    L_m pairs with the symbol L_(1-m); I_m and G_m pair with I_(-m), G_(-m).
    The map is an involution in the index, so it converts in both directions.
    """
    f, m = sym
    return (f, 1 - m) if f == "L" else (f, -m)


def lie_of(spec, lo: int, hi: int) -> Dict[Tuple[RGen, RGen], Dict[RGen, Fraction]]:
    """Bracket table of Lie(spec) on indexed generators, after re-indexing.

    The formal bracket is computed via the j-th products and the table is
    expressed in the generators X_m obtained through the re-indexing above,
    restricted to indices in [lo, hi].
    """
    table: Dict[Tuple[RGen, RGen], Dict[RGen, Fraction]] = {}
    for f1 in FAMILIES:
        for m in range(lo, hi + 1):
            for f2 in FAMILIES:
                for n in range(lo, hi + 1):
                    raw = formal_bracket(spec, _shift((f1, m)), _shift((f2, n)))
                    table[((f1, m), (f2, n))] = {_shift(s): c for s, c in raw.items()}
    return table


def lie_matches_bracket(spec, lo: int, hi: int) -> bool:
    """Term-by-term comparison of lie_of with the defining relations."""
    table = lie_of(spec, lo, hi)
    for ((f1, m), (f2, n)), entry in table.items():
        expect = rbracket(f1, m, f2, n)
        want = {(expect[0], expect[1]): expect[2]} if expect else {}
        if entry != want:
            return False
    return True


# ---------------------------------------------------------------------------
# Neveu-Schwarz embedding
# ---------------------------------------------------------------------------

def _embed(x: SuperElement, l_coefficient: Fraction) -> SuperElement:
    if x.algebra != NEVEU_SCHWARZ:
        raise TagMismatchError("ns_embed expects a Neveu-Schwarz element")
    acc: Dict[GenKey, Fraction] = {}
    for (f, d), c in x.terms.items():
        scale = l_coefficient if f == "L" else Fraction(1)
        key = (f, 2 * d)
        acc[key] = acc.get(key, Fraction(0)) + c * scale
    return SuperElement(RAMOND, acc)


def ns_embed(x: SuperElement) -> SuperElement:
    """The embedding L_m -> (1/2) L_{2m}, I_m -> I_{2m}, G_r -> G_{2r}."""
    return _embed(x, Fraction(1, 2))


@dataclass
class EmbeddingReport:
    passed: bool
    bracket_failures: List[Tuple[GenKey, GenKey]]
    injective: bool


def check_ns_embedding(n: int, l_coefficient: Fraction = Fraction(1, 2)) -> EmbeddingReport:
    """Verify the embedding is a homomorphism and injective on generators.

    All generator pairs with |index| <= n are checked; l_coefficient exists
    so a deliberately corrupted map (e.g. coefficient 1) can be exercised.
    """
    gens: List[SuperElement] = []
    for f in ("L", "I"):
        gens.extend(gen(f, m, NEVEU_SCHWARZ) for m in range(-n, n + 1))
    # G-indices are half-integers r with |r| <= n
    gens.extend(
        SuperElement(NEVEU_SCHWARZ, {("G", d): Fraction(1)})
        for d in range(-2 * n + 1, 2 * n, 2)
    )
    failures = []
    for x in gens:
        for y in gens:
            lhs = _embed(bracket(x, y), l_coefficient)
            rhs = bracket(_embed(x, l_coefficient), _embed(y, l_coefficient))
            if lhs != rhs:
                failures.append((next(iter(x.terms)), next(iter(y.terms))))
    images = set()
    injective = True
    for x in gens:
        img = _embed(x, l_coefficient)
        key = tuple(sorted(img.terms))
        if not img.terms or key in images:
            injective = False
        images.add(key)
    return EmbeddingReport(not failures and injective, failures, injective)


# ---------------------------------------------------------------------------
# Subalgebras and the finite quotient
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubalgebraSpec:
    """Family-wise index lower bounds cutting out a subalgebra."""

    kind: str
    lbound: int
    ibound: int
    gbound: int

    def bound(self, family: str) -> int:
        return {"L": self.lbound, "I": self.ibound, "G": self.gbound}[family]


def S_alpha_beta(alpha: int, beta: int) -> SubalgebraSpec:
    if alpha < 0 or beta < 0 or alpha < 2 * beta:
        raise ValueError(f"need alpha >= 2*beta >= 0, got ({alpha}, {beta})")
    return SubalgebraSpec("offset", 0, -alpha, -beta)


def S_rst(r: int, s: int, t: int) -> SubalgebraSpec:
    if min(r, s, t) < 0:
        raise ValueError("bounds must be non-negative")
    return SubalgebraSpec("floor", r, s, t)


def T_sub(r: int) -> SubalgebraSpec:
    return S_rst(r, r, r)


def member(sub: SubalgebraSpec, x: SuperElement) -> bool:
    if x.algebra != RAMOND:
        raise TagMismatchError("membership is defined for Ramond elements")
    return all(d % 2 == 0 and d // 2 >= sub.bound(f) for (f, d) in x.terms)


@dataclass
class QuotientAlgebra:
    """Finite quotient with survivors L_0..L_{z+a}, I_{-a}..I_z, G_{-b}..G_{z+b}."""

    alpha: int
    beta: int
    z: int
    survivors: Tuple[RGen, ...]
    table: Dict[Tuple[RGen, RGen], Tuple[str, int, Fraction]]
    ideal_checked: bool = False
    jacobi_checked: bool = False

    def bracket(self, g1: RGen, g2: RGen) -> Optional[Tuple[str, int, Fraction]]:
        return self.table.get((g1, g2))


def _survivor_ranges(alpha: int, beta: int, z: int) -> Dict[str, Tuple[int, int]]:
    return {
        "L": (0, z + alpha),
        "I": (-alpha, z),
        "G": (-beta, z + beta),
    }


def quotient_algebra(alpha: int, beta: int, z: int, window: int = 4) -> QuotientAlgebra:
    """Build the quotient of the offset subalgebra by its depth-z ideal.

    Verifies the ideal property on a finite index window (bracket indices are
    additive and the bounds are linear, so violations would already occur at
    the minimal indices) and checks the super Jacobi identity of the
    truncated table exactly.
    """
    if alpha < 0 or beta < 0 or z < 0:
        raise ValueError("parameters must be non-negative")
    if alpha < 2 * beta:
        raise ValueError(f"need alpha >= 2*beta, got ({alpha}, {beta})")

    sub_bound = {"L": 0, "I": -alpha, "G": -beta}
    ideal_bound = {"L": z + alpha + 1, "I": z + 1, "G": z + beta + 1}

    # ideal property: [subalgebra, ideal] stays in the ideal
    width = z + alpha + beta + window
    for f1 in FAMILIES:
        for m in range(sub_bound[f1], sub_bound[f1] + width + 1):
            for f2 in FAMILIES:
                for n in range(ideal_bound[f2], ideal_bound[f2] + width + 1):
                    for a, b, p, q in ((f1, f2, m, n), (f2, f1, n, m)):
                        out = rbracket(a, p, b, q)
                        if out and out[1] < ideal_bound[out[0]]:
                            raise IdealCheckError(
                                f"[{a}_{p}, {b}_{q}] = {out[0]}_{out[1]} escapes the ideal"
                            )

    ranges = _survivor_ranges(alpha, beta, z)
    survivors: List[RGen] = []
    for f in FAMILIES:
        lo, hi = ranges[f]
        survivors.extend((f, m) for m in range(lo, hi + 1))
    surv_set = set(survivors)

    table: Dict[Tuple[RGen, RGen], Tuple[str, int, Fraction]] = {}
    for g1 in survivors:
        for g2 in survivors:
            out = rbracket(g1[0], g1[1], g2[0], g2[1])
            if out is None:
                continue
            fam, idx, c = out
            lo, _ = ranges[fam]
            if idx < lo:
                raise IdealCheckError(
                    f"[{g1}, {g2}] lands below the subalgebra bound"
                )
            if (fam, idx) in surv_set:
                table[(g1, g2)] = (fam, idx, c)

    qa = QuotientAlgebra(alpha, beta, z, tuple(survivors), table, ideal_checked=True)
    _verify_quotient_jacobi(qa)
    qa.jacobi_checked = True
    return qa


def _verify_quotient_jacobi(qa: QuotientAlgebra) -> None:
    def tbr(g1: RGen, g2: RGen):
        return qa.table.get((g1, g2))

    def acc_into(acc, term, scale):
        if term is None:
            return
        fam, idx, c = term
        key = (fam, idx)
        acc[key] = acc.get(key, Fraction(0)) + c * scale

    survivors = qa.survivors
    for x in survivors:
        px = PARITY[x[0]]
        for y in survivors:
            sign = -1 if px and PARITY[y[0]] else 1
            xy = tbr(x, y)
            for w in survivors:
                lhs: Dict[RGen, Fraction] = {}
                yz = tbr(y, w)
                if yz is not None:
                    acc_into(lhs, tbr(x, (yz[0], yz[1])), yz[2])
                rhs: Dict[RGen, Fraction] = {}
                if xy is not None:
                    acc_into(rhs, tbr((xy[0], xy[1]), w), xy[2])
                xz = tbr(x, w)
                if xz is not None:
                    acc_into(rhs, tbr(y, (xz[0], xz[1])), xz[2] * sign)
                lhs = {k: v for k, v in lhs.items() if v}
                rhs = {k: v for k, v in rhs.items() if v}
                if lhs != rhs:
                    raise IdealCheckError(
                        f"super Jacobi fails on truncated table at {x}, {y}, {w}"
                    )
