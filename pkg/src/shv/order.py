"""Sparse index vectors and the monomial orders that grade the induced modules.

An index vector is a finitely supported map from positions 1, 2, 3, ... to
non-negative exponents.  Position p in the three blocks of a PBW monomial
stands for the generators I_{-p-alpha}, G_{-p-beta} and L_{-p} respectively.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Tuple


class IndexVec:
    """Finitely supported exponent vector; positions start at 1."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[int, int] = {}
        for pos, exp in items:
            if pos < 1:
                raise ValueError(f"position must be >= 1, got {pos}")
            if exp < 0:
                raise ValueError(f"exponent must be >= 0, got {exp}")
            if exp:
                acc[pos] = acc.get(pos, 0) + exp
        self.entries: Tuple[Tuple[int, int], ...] = tuple(sorted(acc.items()))
        self._validate()

    def _validate(self) -> None:
        pass

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.entries

    def get(self, pos: int) -> int:
        for p, e in self.entries:
            if p == pos:
                return e
        return 0

    def weight(self) -> int:
        return sum(p * e for p, e in self.entries)

    def size(self) -> int:
        """Number of letters, counted with multiplicity."""
        return sum(e for _, e in self.entries)

    def min_support(self) -> int:
        if not self.entries:
            raise ValueError("min_support undefined for the zero vector")
        return self.entries[0][0]

    # -- derived vectors ----------------------------------------------------

    def lower_prime(self) -> "IndexVec":
        """Subtract 1 at the smallest supported position."""
        if not self.entries:
            raise ValueError("lower_prime undefined for the zero vector")
        p = self.entries[0][0]
        return self.sub(p)

    def add(self, pos: int, exp: int = 1) -> "IndexVec":
        return type(self)(self.entries + ((pos, exp),))

    def sub(self, pos: int, exp: int = 1) -> "IndexVec":
        acc = dict(self.entries)
        if acc.get(pos, 0) < exp:
            raise ValueError(f"cannot subtract {exp} at position {pos}")
        acc[pos] -= exp
        return type(self)(acc)

    # -- dunder plumbing -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IndexVec) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.entries))

    def __repr__(self) -> str:
        if not self.entries:
            return f"{type(self).__name__}(0)"
        body = "+".join(f"{e}*e{p}" if e != 1 else f"e{p}" for p, e in self.entries)
        return f"{type(self).__name__}({body})"

    def __lt__(self, other: "IndexVec") -> bool:
        return rev_lex_compare(self, other) < 0

    def __le__(self, other: "IndexVec") -> bool:
        return rev_lex_compare(self, other) <= 0

    def __gt__(self, other: "IndexVec") -> bool:
        return rev_lex_compare(self, other) > 0

    def __ge__(self, other: "IndexVec") -> bool:
        return rev_lex_compare(self, other) >= 0


class BoolIndex(IndexVec):
    """Index vector with exponents restricted to {0, 1} (the G-block)."""

    def _validate(self) -> None:
        for p, e in self.entries:
            if e > 1:
                raise ValueError(f"BoolIndex exponent at position {p} is {e} > 1")


ZERO = IndexVec()
ZERO_BOOL = BoolIndex()


def eps(pos: int) -> IndexVec:
    return IndexVec(((pos, 1),))


def beps(pos: int) -> BoolIndex:
    return BoolIndex(((pos, 1),))


def weight(vec: IndexVec) -> int:
    return vec.weight()


def min_support(vec: IndexVec) -> int:
    return vec.min_support()


def lower_prime(vec: IndexVec) -> IndexVec:
    return vec.lower_prime()


def rev_lex_compare(a: IndexVec, b: IndexVec) -> int:
    """Reverse lexicographic total order, scanning positions upward from 1.

    The first position where the exponents differ decides; the vector with
    the larger exponent there is the greater one, and the zero vector is the
    minimum.  Returns -1, 0 or 1.
    """
    ia, ib = a.entries, b.entries
    na, nb = len(ia), len(ib)
    ta = tb = 0
    while ta < na or tb < nb:
        pa = ia[ta][0] if ta < na else None
        pb = ib[tb][0] if tb < nb else None
        if pb is None or (pa is not None and pa < pb):
            return 1  # a has support where b has 0
        if pa is None or pb < pa:
            return -1
        ea, eb = ia[ta][1], ib[tb][1]
        if ea != eb:
            return 1 if ea > eb else -1
        ta += 1
        tb += 1
    return 0


Triple = Tuple[IndexVec, BoolIndex, IndexVec]


def principal_compare(x: Triple, y: Triple) -> int:
    """Principal total order on (i, j, k) triples.

    The comparison key is the six-tuple (i, w(i), j, w(j), k, w(k)), read in
    the reverse (right-to-left) direction: w(k) is the most significant
    slot, then k, then w(j), j, w(i), i.  This is the reading under which
    the degree-lowering steps of the simplicity probe strictly descend; see
    the order tests.
    """
    xi, xj, xk = x
    yi, yj, yk = y
    for a, b in (
        (xk.weight(), yk.weight()),
        (xk, yk),
        (xj.weight(), yj.weight()),
        (xj, yj),
        (xi.weight(), yi.weight()),
        (xi, yi),
    ):
        if isinstance(a, int):
            if a != b:
                return 1 if a > b else -1
        else:
            c = rev_lex_compare(a, b)
            if c:
                return c
    return 0


class PBWMonomial:
    """Canonical basis index I^i G^j L^k of an induced module.

    Position p of the three blocks denotes I_{-p-alpha}, G_{-p-beta}, L_{-p};
    written out, each block lists its letters with indices ascending to the
    right, I block first, then G, then L.
    """

    __slots__ = ("i", "j", "k", "alpha", "beta")

    def __init__(self, i: IndexVec, j: BoolIndex, k: IndexVec, alpha: int, beta: int):
        if alpha < 2 * beta:
            raise ValueError(f"offsets require alpha >= 2*beta, got ({alpha}, {beta})")
        if not isinstance(j, BoolIndex):
            j = BoolIndex(j.entries)
        self.i = i
        self.j = j
        self.k = k
        self.alpha = alpha
        self.beta = beta

    @classmethod
    def one(cls, alpha: int, beta: int) -> "PBWMonomial":
        return cls(ZERO, ZERO_BOOL, ZERO, alpha, beta)

    def is_one(self) -> bool:
        return self.i.is_zero() and self.j.is_zero() and self.k.is_zero()

    def triple(self) -> Triple:
        return (self.i, self.j, self.k)

    def total_weight(self) -> int:
        return self.i.weight() + self.j.weight() + self.k.weight()

    def g_count(self) -> int:
        return self.j.size()

    def letters(self) -> Tuple[Tuple[str, int], ...]:
        """The monomial as a word, leftmost letter first."""
        out: list[Tuple[str, int]] = []
        for p, e in reversed(self.i.entries):
            out.extend((("I", -p - self.alpha),) * e)
        for p, _ in reversed(self.j.entries):
            out.append(("G", -p - self.beta))
        for p, e in reversed(self.k.entries):
            out.extend((("L", -p),) * e)
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PBWMonomial)
            and self.i == other.i
            and self.j == other.j
            and self.k == other.k
            and self.alpha == other.alpha
            and self.beta == other.beta
        )

    def __hash__(self) -> int:
        return hash((self.i, self.j, self.k, self.alpha, self.beta))

    def __repr__(self) -> str:
        if self.is_one():
            return "PBW(1)"
        parts = [f"{f}_{{{n}}}" for f, n in self.letters()]
        return "PBW(" + " ".join(parts) + ")"

    def compare(self, other: "PBWMonomial") -> int:
        return principal_compare(self.triple(), other.triple())

    def __lt__(self, other: "PBWMonomial") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "PBWMonomial") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "PBWMonomial") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "PBWMonomial") -> bool:
        return self.compare(other) >= 0
