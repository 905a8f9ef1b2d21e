"""Lambda-bracket calculus for Lie conformal superalgebras.

Values of brackets live in a polynomial ring with three formal variables:
the module variable d (written ∂), the bracket variable λ and a second
bracket variable µ used by the Jacobi checker.  Every quantity is a finite
sum of terms  coeff * ∂^d λ^l µ^m * generator  with exact rational
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Tuple

Scalar = Fraction

SMono = Tuple[int, int, int]  # (d, l, m) exponents
SPoly = Dict[SMono, Fraction]

S_ONE: SPoly = {(0, 0, 0): Fraction(1)}
S_DEL: SPoly = {(1, 0, 0): Fraction(1)}
S_LAM: SPoly = {(0, 1, 0): Fraction(1)}
S_MU: SPoly = {(0, 0, 1): Fraction(1)}


class ResolutionError(KeyError):
    """A generator pair has no entry in the algebra or action table."""


def s_add(*ps: SPoly) -> SPoly:
    acc: SPoly = {}
    for p in ps:
        for k, v in p.items():
            acc[k] = acc.get(k, Fraction(0)) + v
    return {k: v for k, v in acc.items() if v}


def s_neg(p: SPoly) -> SPoly:
    return {k: -v for k, v in p.items()}


def s_scale(p: SPoly, c) -> SPoly:
    c = Fraction(c)
    if not c:
        return {}
    return {k: v * c for k, v in p.items()}


def s_mul(a: SPoly, b: SPoly) -> SPoly:
    acc: SPoly = {}
    for (d1, l1, m1), c1 in a.items():
        for (d2, l2, m2), c2 in b.items():
            k = (d1 + d2, l1 + l2, m1 + m2)
            acc[k] = acc.get(k, Fraction(0)) + c1 * c2
    return {k: v for k, v in acc.items() if v}


def s_pow(p: SPoly, n: int) -> SPoly:
    out = dict(S_ONE)
    for _ in range(n):
        out = s_mul(out, p)
    return out


GcTerm = Tuple[str, int, int, int]  # (generator, d, l, m)


class GcPoly:
    """Finite sum of scalar * ∂^d λ^l µ^m * generator terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[GcTerm, Fraction] | None = None):
        clean: Dict[GcTerm, Fraction] = {}
        if terms:
            for k, v in terms.items():
                c = Fraction(v)
                if c:
                    clean[k] = c
        self.terms = clean

    @classmethod
    def gen(cls, name: str, d: int = 0, l: int = 0, m: int = 0, coeff=1) -> "GcPoly":
        return cls({(name, d, l, m): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c) -> "GcPoly":
        c = Fraction(c)
        return GcPoly({k: v * c for k, v in self.terms.items()})

    def __add__(self, other: "GcPoly") -> "GcPoly":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return GcPoly(acc)

    def __sub__(self, other: "GcPoly") -> "GcPoly":
        return self + other.scale(-1)

    def __neg__(self) -> "GcPoly":
        return self.scale(-1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GcPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def generators(self) -> set:
        return {g for (g, _, _, _) in self.terms}

    def mul_spoly(self, p: SPoly) -> "GcPoly":
        acc: Dict[GcTerm, Fraction] = {}
        for (g, d1, l1, m1), c1 in self.terms.items():
            for (d2, l2, m2), c2 in p.items():
                k = (g, d1 + d2, l1 + l2, m1 + m2)
                acc[k] = acc.get(k, Fraction(0)) + c1 * c2
        return GcPoly(acc)

    def lambda_coefficients(self) -> Dict[int, "GcPoly"]:
        """Split by the power of λ (µ must not occur)."""
        out: Dict[int, Dict[GcTerm, Fraction]] = {}
        for (g, d, l, m), c in self.terms.items():
            if m:
                raise ValueError("second bracket variable present")
            out.setdefault(l, {})[(g, d, 0, 0)] = c
        return {l: GcPoly(t) for l, t in out.items()}

    def __repr__(self) -> str:
        return "GcPoly(" + render_poly(self) + ")"


def render_poly(p: GcPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (g, d, l, m), c in sorted(p.terms.items()):
        piece = ""
        if c == -1:
            piece = "-"
        elif c != 1:
            piece = f"{c}"
        if d:
            piece += "∂" if d == 1 else f"∂^{d}"
        if l:
            piece += "λ" if l == 1 else f"λ^{l}"
        if m:
            piece += "µ" if m == 1 else f"µ^{m}"
        parts.append(piece + g)
    return " + ".join(parts)


BTable = Dict[Tuple[str, str], GcPoly]


@dataclass
class ConformalAlgebraSpec:
    """Generators with parities plus a total table of λ-brackets.

    Table entries use the l-slot for powers of the bracket variable.
    """

    name: str
    parity: Dict[str, int]
    table: BTable

    @property
    def generators(self) -> List[str]:
        return list(self.parity)

    def entry(self, x: str, y: str) -> GcPoly:
        if (x, y) not in self.table:
            raise ResolutionError(f"no bracket entry for ({x}, {y})")
        return self.table[(x, y)]


def _mirror(entry: GcPoly, sign: int) -> GcPoly:
    """-(-1)^{|x||y|} [x_{-λ-∂} y]: substitute the bracket variable."""
    neg = s_neg(s_add(S_LAM, S_DEL))
    acc = GcPoly()
    for (g, d, l, m), c in entry.terms.items():
        if m:
            raise ValueError("table entries must not contain µ")
        piece = GcPoly.gen(g, d, 0, 0, coeff=c).mul_spoly(s_pow(neg, l))
        acc = acc + piece
    return acc.scale(-sign)


def make_spec(name: str, parity: Dict[str, int], brackets: Dict[Tuple[str, str], GcPoly]) -> ConformalAlgebraSpec:
    """Complete a one-directional bracket listing into a total table via skew."""
    table: BTable = {}
    for (x, y), entry in brackets.items():
        table[(x, y)] = entry
    for (x, y), entry in list(brackets.items()):
        if (y, x) not in table:
            sign = (-1) ** (parity[x] * parity[y])
            table[(y, x)] = _mirror(entry, sign)
    for x in parity:
        for y in parity:
            table.setdefault((x, y), GcPoly())
    return ConformalAlgebraSpec(name, dict(parity), table)


def s_spec() -> ConformalAlgebraSpec:
    """The super Heisenberg-Virasoro Lie conformal superalgebra (Δ = 2)."""
    L, Igen, Ggen = "L", "I", "G"
    br = {
        (L, L): GcPoly({(L, 1, 0, 0): Fraction(1), (L, 0, 1, 0): Fraction(2)}),
        (L, Igen): GcPoly({(Igen, 1, 0, 0): Fraction(1), (Igen, 0, 1, 0): Fraction(1)}),
        (L, Ggen): GcPoly({(Ggen, 1, 0, 0): Fraction(1), (Ggen, 0, 1, 0): Fraction(1)}),
        (Igen, Igen): GcPoly(),
        (Igen, Ggen): GcPoly(),
        (Ggen, Ggen): GcPoly({(Igen, 0, 0, 0): Fraction(2)}),
    }
    return make_spec("s", {"L": 0, "I": 0, "G": 1}, br)


def hv_spec() -> ConformalAlgebraSpec:
    """The (even) Heisenberg-Virasoro Lie conformal algebra on L and I."""
    br = {
        ("L", "L"): GcPoly({("L", 1, 0, 0): Fraction(1), ("L", 0, 1, 0): Fraction(2)}),
        ("L", "I"): GcPoly({("I", 1, 0, 0): Fraction(1), ("I", 0, 1, 0): Fraction(1)}),
        ("I", "I"): GcPoly(),
    }
    return make_spec("v", {"L": 0, "I": 0}, br)


BivarPoly = Dict[Tuple[int, int], Fraction]  # (d, l) -> coefficient


@dataclass
class ExtensionAnsatz:
    """Odd rank-one extension data (a, b, c, phi, psi) over the even algebra."""

    a: Fraction
    b: Fraction
    c: Fraction
    phi: BivarPoly = field(default_factory=dict)
    psi: BivarPoly = field(default_factory=dict)

    def __post_init__(self):
        self.a, self.b, self.c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        self.phi = {k: Fraction(v) for k, v in self.phi.items() if Fraction(v)}
        self.psi = {k: Fraction(v) for k, v in self.psi.items() if Fraction(v)}
        if not self.phi and not self.psi:
            raise ValueError("phi and psi must not both vanish")


def _embed_bivar(p: BivarPoly, target: str) -> GcPoly:
    return GcPoly({(target, d, l, 0): c for (d, l), c in p.items()})


def extension_spec(ansatz: ExtensionAnsatz) -> ConformalAlgebraSpec:
    """The ansatz algebra: 𝔳 extended by an odd generator G."""
    a, b, c = ansatz.a, ansatz.b, ansatz.c
    br = {
        ("L", "L"): GcPoly({("L", 1, 0, 0): Fraction(1), ("L", 0, 1, 0): Fraction(2)}),
        ("L", "I"): GcPoly({("I", 1, 0, 0): Fraction(1), ("I", 0, 1, 0): Fraction(1)}),
        ("I", "I"): GcPoly(),
        ("L", "G"): GcPoly({("G", 1, 0, 0): Fraction(1), ("G", 0, 1, 0): a, ("G", 0, 0, 0): b}),
        ("I", "G"): GcPoly({("G", 0, 0, 0): c}),
        ("G", "G"): _embed_bivar(ansatz.phi, "L") + _embed_bivar(ansatz.psi, "I"),
    }
    return make_spec("ansatz", {"L": 0, "I": 0, "G": 1}, br)


# ---------------------------------------------------------------------------
# Bracket evaluation
# ---------------------------------------------------------------------------

def eval_bracket(table: BTable, left: GcPoly, right: GcPoly, var: SPoly) -> GcPoly:
    """Bilinear bracket of two combinations, with bracket variable var.

    Sesquilinearity fixes the extension: a ∂-power on the left contributes
    (-var)^d, one on the right contributes (∂+var)^d.
    """
    acc: Dict[GcTerm, Fraction] = {}
    shift = s_add(S_DEL, var)
    negv = s_neg(var)
    for (g1, d1, l1, m1), c1 in left.terms.items():
        for (g2, d2, l2, m2), c2 in right.terms.items():
            if (g1, g2) not in table:
                raise ResolutionError(f"no bracket entry for ({g1}, {g2})")
            entry = table[(g1, g2)]
            if entry.is_zero():
                continue
            base = s_mul(s_pow(negv, d1), s_pow(shift, d2))
            base = s_mul(base, {(0, l1 + l2, m1 + m2): Fraction(1)})
            c12 = c1 * c2
            for (g, de, ve, mz), tc in entry.terms.items():
                if mz:
                    raise ValueError("table entries must not contain µ")
                factor = s_mul(base, s_pow(var, ve))
                for (dd, ll, mm), fc in factor.items():
                    key = (g, dd + de, ll, mm)
                    acc[key] = acc.get(key, Fraction(0)) + c12 * tc * fc
    return GcPoly(acc)


def lambda_bracket(spec: ConformalAlgebraSpec, x: GcPoly | str, y: GcPoly | str) -> GcPoly:
    """[x λ y] for ∂-polynomial combinations of generators."""
    xe = GcPoly.gen(x) if isinstance(x, str) else x
    ye = GcPoly.gen(y) if isinstance(y, str) else y
    for g in xe.generators() | ye.generators():
        if g not in spec.parity:
            raise ResolutionError(f"unknown generator {g!r}")
    return eval_bracket(spec.table, xe, ye, S_LAM)


@dataclass
class CheckReport:
    passed: bool
    violations: List[tuple]

    def __bool__(self) -> bool:
        return self.passed


def check_skew(spec: ConformalAlgebraSpec) -> CheckReport:
    """[x λ y] = -(-1)^{|x||y|} [y_{-λ-∂} x] for every ordered pair."""
    bad = []
    for x in spec.generators:
        for y in spec.generators:
            sign = (-1) ** (spec.parity[x] * spec.parity[y])
            if spec.entry(x, y) != _mirror(spec.entry(y, x), sign):
                bad.append((x, y))
    return CheckReport(not bad, bad)


def check_jacobi(spec: ConformalAlgebraSpec) -> CheckReport:
    """[x λ [y µ z]] = [[x λ y] λ+µ z] + (-1)^{|x||y|}[y µ [x λ z]]."""
    bad = []
    lam_mu = s_add(S_LAM, S_MU)
    for x in spec.generators:
        for y in spec.generators:
            sign = (-1) ** (spec.parity[x] * spec.parity[y])
            for z in spec.generators:
                xe, ye, ze = GcPoly.gen(x), GcPoly.gen(y), GcPoly.gen(z)
                lhs = eval_bracket(spec.table, xe, eval_bracket(spec.table, ye, ze, S_MU), S_LAM)
                rhs = eval_bracket(spec.table, eval_bracket(spec.table, xe, ye, S_LAM), ze, lam_mu)
                rhs = rhs + eval_bracket(spec.table, ye, eval_bracket(spec.table, xe, ze, S_LAM), S_MU).scale(sign)
                if lhs != rhs:
                    bad.append((x, y, z))
    return CheckReport(not bad, bad)


def jth_products(spec: ConformalAlgebraSpec, x: str, y: str) -> List[Tuple[int, GcPoly]]:
    """All nonzero j-th products x_(j) y = j! * (λ^j coefficient of [x λ y])."""
    entry = spec.entry(x, y)
    out = []
    for j, poly in sorted(entry.lambda_coefficients().items()):
        scaled = poly.scale(factorial(j))
        if not scaled.is_zero():
            out.append((j, scaled))
    return out


# ---------------------------------------------------------------------------
# Rank-one conformal modules over the even algebra
# ---------------------------------------------------------------------------

@dataclass
class RankOneModuleSpec:
    """Free rank-one module data: L acts by ∂ + aλ + b, I acts by c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        self.a, self.b, self.c = Fraction(self.a), Fraction(self.b), Fraction(self.c)

    def action_table(self) -> BTable:
        return {
            ("L", "v"): GcPoly(
                {("v", 1, 0, 0): Fraction(1), ("v", 0, 1, 0): self.a, ("v", 0, 0, 0): self.b}
            ),
            ("I", "v"): GcPoly({("v", 0, 0, 0): self.c}),
        }


def rank_one_irreducible(mod: RankOneModuleSpec) -> bool:
    return (mod.a, mod.c) != (Fraction(0), Fraction(0))


def check_conformal_module(spec: ConformalAlgebraSpec, mod: RankOneModuleSpec | BTable) -> CheckReport:
    """Verify x λ (y µ v) - (-1)^{|x||y|} y µ (x λ v) = [x λ y]_{λ+µ} v."""
    action = mod.action_table() if isinstance(mod, RankOneModuleSpec) else mod
    vbar = GcPoly.gen("v")
    lam_mu = s_add(S_LAM, S_MU)
    bad = []
    for x in spec.generators:
        for y in spec.generators:
            sign = (-1) ** (spec.parity[x] * spec.parity[y])
            xe, ye = GcPoly.gen(x), GcPoly.gen(y)
            lhs = eval_bracket(action, xe, eval_bracket(action, ye, vbar, S_MU), S_LAM)
            lhs = lhs - eval_bracket(action, ye, eval_bracket(action, xe, vbar, S_LAM), S_MU).scale(sign)
            rhs = eval_bracket(action, eval_bracket(spec.table, xe, ye, S_LAM), vbar, lam_mu)
            if lhs != rhs:
                bad.append((x, y))
    return CheckReport(not bad, bad)


# ---------------------------------------------------------------------------
# Classification of the rank-one odd extensions
# ---------------------------------------------------------------------------
#
# The classifier works with polynomials whose coefficients are linear forms
# in named unknowns (the coefficients of phi and psi).  Branching on c and b
# follows the degree-lowering substitutions of the underlying case analysis;
# inside each branch the remaining constraints are genuinely linear, and the
# solution space is computed as an exact nullspace.

LinForm = Dict[str, Fraction]
LinPoly = Dict[SMono, LinForm]


def _lp_add(a: LinPoly, b: LinPoly, scale: Fraction = Fraction(1)) -> LinPoly:
    acc: LinPoly = {k: dict(v) for k, v in a.items()}
    for mono, form in b.items():
        dst = acc.setdefault(mono, {})
        for name, c in form.items():
            dst[name] = dst.get(name, Fraction(0)) + c * scale
    return {
        mono: {n: c for n, c in form.items() if c}
        for mono, form in acc.items()
        if any(form.values())
    }


def _lp_mul_spoly(a: LinPoly, p: SPoly) -> LinPoly:
    acc: LinPoly = {}
    for (d1, l1, m1), form in a.items():
        for (d2, l2, m2), c in p.items():
            mono = (d1 + d2, l1 + l2, m1 + m2)
            dst = acc.setdefault(mono, {})
            for name, v in form.items():
                dst[name] = dst.get(name, Fraction(0)) + v * c
    return {m: {n: c for n, c in f.items() if c} for m, f in acc.items() if any(f.values())}


def _lp_unknown_poly(unknowns: Dict[Tuple[int, int], str], first: SPoly, second: SPoly) -> LinPoly:
    """Σ u_{d,e} · first^d · second^e with unknown coefficients."""
    acc: LinPoly = {}
    for (d, e), name in unknowns.items():
        sp = s_mul(s_pow(first, d), s_pow(second, e))
        for mono, c in sp.items():
            acc.setdefault(mono, {})[name] = acc.get(mono, {}).get(name, Fraction(0)) + c
    return acc


def _rows(lp: LinPoly, names: List[str]) -> List[List[Fraction]]:
    idx = {n: t for t, n in enumerate(names)}
    rows = []
    for form in lp.values():
        row = [Fraction(0)] * len(names)
        for n, c in form.items():
            row[idx[n]] = c
        rows.append(row)
    return rows


def _nullspace(rows: List[List[Fraction]], n: int) -> List[List[Fraction]]:
    """Basis of the solution space of rows·x = 0 over the rationals."""
    mat = [list(r) for r in rows if any(r)]
    pivots: List[int] = []
    r = 0
    for col in range(n):
        sel = None
        for t in range(r, len(mat)):
            if mat[t][col]:
                sel = t
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for t in range(len(mat)):
            if t != r and mat[t][col]:
                f = mat[t][col]
                mat[t] = [v - f * w for v, w in zip(mat[t], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for t, pc in enumerate(pivots):
            vec[pc] = -mat[t][fc]
        basis.append(vec)
    return basis


@dataclass(eq=True)
class ExtensionFamily:
    """A parametric solution family; psi = Δ · psi_unit with Δ free nonzero."""

    a: Fraction
    b: Fraction
    c: Fraction
    phi: BivarPoly
    psi_unit: BivarPoly
    delta_free: bool = True


def _family_verifies(fam: ExtensionFamily) -> bool:
    # Any single Jacobi/skew expression has degree <= 2 in Δ, so passing at
    # three sample values makes it an identity in Δ.
    for delta in (1, 2, 3):
        psi = {k: v * delta for k, v in fam.psi_unit.items()}
        try:
            ansatz = ExtensionAnsatz(fam.a, fam.b, fam.c, dict(fam.phi), psi)
        except ValueError:
            return False
        spec = extension_spec(ansatz)
        if not check_skew(spec).passed or not check_jacobi(spec).passed:
            return False
    return True


def classify_rank_one_extension(degree_bound: int, c_nonzero: bool = False) -> List[ExtensionFamily]:
    """All (a, b, c, phi, psi) with deg(phi), deg(psi) <= degree_bound that
    satisfy the conformal superalgebra axioms, as parametric families.

    With c_nonzero=True only the c != 0 branch of the case analysis is
    searched (it is empty).
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    D = degree_bound
    phi_unknowns = {(d, e): f"phi_{d}_{e}" for d in range(D + 1) for e in range(D + 1 - d)}
    psi_unknowns = {(d, e): f"psi_{d}_{e}" for d in range(D + 1) for e in range(D + 1 - d)}
    phi_names = list(phi_unknowns.values())
    psi_names = list(psi_unknowns.values())

    def forced_zero(lp: LinPoly, names: List[str]) -> bool:
        # true when lp = 0 admits only the trivial solution
        return not _nullspace(_rows(lp, names), len(names))

    if c_nonzero:
        # (I,G,G) Jacobi at λ=0 reads 2c·phi(∂,µ) = 0 and 2c·psi(∂,µ) = 0;
        # dividing by the nonzero c forces phi = psi = 0, which the standing
        # hypothesis excludes.
        phi_dm = _lp_unknown_poly(phi_unknowns, S_DEL, S_MU)
        psi_dm = _lp_unknown_poly(psi_unknowns, S_DEL, S_MU)
        if not (forced_zero(_lp_add({}, phi_dm, Fraction(2)), phi_names)
                and forced_zero(_lp_add({}, psi_dm, Fraction(2)), psi_names)):
            raise RuntimeError("c != 0 branch did not collapse as expected")
        return []

    # c = 0: the same Jacobi identity reduces to λ·phi(∂+λ, µ) = 0.
    del_lam = s_add(S_DEL, S_LAM)
    eq_phi = _lp_mul_spoly(_lp_unknown_poly(phi_unknowns, del_lam, S_MU), S_LAM)
    if not forced_zero(eq_phi, phi_names):
        raise RuntimeError("phi elimination failed")

    # b != 0: the (L,G,G) identity at λ=0 reads -2b·psi(∂,µ) = 0, so psi = 0
    # and the branch is empty.
    if not forced_zero(_lp_unknown_poly(psi_unknowns, S_DEL, S_MU), psi_names):
        raise RuntimeError("b != 0 branch did not collapse as expected")

    # b = 0, phi = 0.  Remaining constraint from the (L,G,G) Jacobi identity:
    #   E = (∂+λ)ψ(∂+λ,µ) - ((a-1)λ-µ)ψ(∂,λ+µ) - (∂+aλ+µ)ψ(∂,µ) = 0
    # plus skew symmetry ψ(∂,λ) = ψ(∂,-λ-∂).  The λ^1 row of E at ∂=0 forces
    # (n - 2(a-1))·ψ(0,·)_n = 0 for every n; if ψ(0,·) vanished entirely the
    # ∂=0 slice would force ψ = 0, so a = (n0+2)/2 for some n0 <= D.
    lam_mu = s_add(S_LAM, S_MU)
    neg_skew = s_neg(s_add(S_LAM, S_DEL))
    families: List[ExtensionFamily] = []
    for n0 in range(D + 1):
        a = Fraction(n0 + 2, 2)
        e_lhs = _lp_mul_spoly(_lp_unknown_poly(psi_unknowns, del_lam, S_MU), del_lam)
        coef1 = {(0, 1, 0): a - 1, (0, 0, 1): Fraction(-1)}
        e_mid = _lp_mul_spoly(_lp_unknown_poly(psi_unknowns, S_DEL, lam_mu), coef1)
        coef2 = {(1, 0, 0): Fraction(1), (0, 1, 0): a, (0, 0, 1): Fraction(1)}
        e_rhs = _lp_mul_spoly(_lp_unknown_poly(psi_unknowns, S_DEL, S_MU), coef2)
        eq = _lp_add(_lp_add(e_lhs, e_mid, Fraction(-1)), e_rhs, Fraction(-1))
        skew = _lp_add(
            _lp_unknown_poly(psi_unknowns, S_DEL, S_LAM),
            _lp_unknown_poly(psi_unknowns, S_DEL, neg_skew),
            Fraction(-1),
        )
        rows = _rows(eq, psi_names) + _rows(skew, psi_names)
        for vec in _nullspace(rows, len(psi_names)):
            psi_unit = {
                key: vec[t]
                for t, key in enumerate(psi_unknowns)
                if vec[t]
            }
            if not psi_unit:
                continue
            fam = ExtensionFamily(a, Fraction(0), Fraction(0), {}, psi_unit)
            if _family_verifies(fam) and fam not in families:
                families.append(fam)
    return families
