"""Planar Temperley-Lieb (n,m) diagrams and their calculus.

A diagram is a noncrossing perfect matching of n left and m right boundary
points.  Composition glues matched boundaries and counts the closed loops
that fall out; cell bases, link-state slicing, reflections and the one-bar
letter decomposition all live here.  Everything is immutable and hashable,
and the small diagram sets that drive the loop complexes are memoized.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

Endpoint = tuple[str, int]  # ('L', i) or ('R', j), 1-based top to bottom


class DiagramError(ValueError):
    """Invalid diagram data: parity, matching, or planarity failures."""


def _circular_position(ep: Endpoint, n: int, m: int) -> int:
    # Boundary order L1..Ln, Rm..R1 (counterclockwise around the square).
    side, i = ep
    if side == "L":
        if not 1 <= i <= n:
            raise DiagramError(f"endpoint {ep} out of range for n={n}")
        return i - 1
    if side == "R":
        if not 1 <= i <= m:
            raise DiagramError(f"endpoint {ep} out of range for m={m}")
        return n + (m - i)
    raise DiagramError(f"bad endpoint {ep!r}")


@dataclass(frozen=True)
class TLDiagram:
    """A Temperley-Lieb (n,m) diagram stored as sorted endpoint pairs."""

    n: int
    m: int
    pairs: tuple[tuple[Endpoint, Endpoint], ...]

    def __post_init__(self):
        n, m = self.n, self.m
        if n < 0 or m < 0 or (n + m) % 2 != 0:
            raise DiagramError(f"endpoint count {n}+{m} must be even and nonnegative")
        seen = set()
        for a, b in self.pairs:
            for ep in (a, b):
                if ep in seen:
                    raise DiagramError(f"endpoint {ep} matched twice")
                seen.add(ep)
        expected = {("L", i) for i in range(1, n + 1)} | {("R", j) for j in range(1, m + 1)}
        if seen != expected:
            raise DiagramError("pairs are not a perfect matching of all endpoints")
        canon = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        if canon != self.pairs:
            raise DiagramError("pairs are not in canonical order")
        pos = [(_circular_position(a, n, m), _circular_position(b, n, m))
               for a, b in self.pairs]
        for (a1, b1), (a2, b2) in combinations(pos, 2):
            lo, hi = min(a1, b1), max(a1, b1)
            in1 = lo < a2 < hi
            in2 = lo < b2 < hi
            if in1 != in2:
                raise DiagramError("pairs cross: diagram is not planar")

    # -- basic statistics ---------------------------------------------------
    def through_count(self) -> int:
        """Number of strands connecting the left boundary to the right."""
        return sum(1 for a, b in self.pairs if a[0] != b[0])

    def is_identity(self) -> bool:
        return self.n == self.m and all(
            a == ("L", i) and b == ("R", i)
            for i, (a, b) in enumerate(self.pairs, 1))

    def has_ll_pair(self) -> bool:
        return any(a[0] == "L" and b[0] == "L" for a, b in self.pairs)

    def has_rr_pair(self) -> bool:
        return any(a[0] == "R" and b[0] == "R" for a, b in self.pairs)

    # -- reflections ---------------------------------------------------------
    def reflect_lr(self) -> "TLDiagram":
        """Swap the roles of the two boundaries (an (n,m) -> (m,n) map)."""
        swap = {"L": "R", "R": "L"}
        return new_diagram(self.m, self.n,
                           [((swap[a[0]], a[1]), (swap[b[0]], b[1]))
                            for a, b in self.pairs])

    def reflect_tb(self) -> "TLDiagram":
        """Flip top to bottom: Li -> L(n+1-i), Rj -> R(m+1-j)."""
        def flip(ep):
            side, i = ep
            return (side, (self.n if side == "L" else self.m) + 1 - i)
        return new_diagram(self.n, self.m,
                           [(flip(a), flip(b)) for a, b in self.pairs])

    # -- text codec -----------------------------------------------------------
    def encode(self) -> str:
        body = ",".join(f"{a[0]}{a[1]}-{b[0]}{b[1]}" for a, b in self.pairs)
        return f"TL({self.n},{self.m}){{{body}}}"

    def __str__(self):
        return self.encode()


def new_diagram(n: int, m: int, pairs) -> TLDiagram:
    """Validated, canonicalized diagram from any iterable of endpoint pairs."""
    canon = tuple(sorted(tuple(sorted(p)) for p in pairs))
    return TLDiagram(n, m, canon)


_DIAGRAM_RE = re.compile(r"TL\((\d+),(\d+)\)\{([^}]*)\}")
_PAIR_RE = re.compile(r"([LR])(\d+)-([LR])(\d+)")


def parse_diagram(text: str) -> TLDiagram:
    text = re.sub(r"\s+", "", text)
    m = _DIAGRAM_RE.fullmatch(text)
    if not m:
        raise DiagramError(f"cannot parse diagram {text!r}")
    n, mm, body = int(m.group(1)), int(m.group(2)), m.group(3)
    pairs = []
    if body:
        pos = 0
        for chunk in body.split(","):
            pm = _PAIR_RE.fullmatch(chunk)
            if not pm:
                raise DiagramError(f"bad pair {chunk!r} in {text!r}")
            pairs.append(((pm.group(1), int(pm.group(2))),
                          (pm.group(3), int(pm.group(4)))))
            pos += 1
    return new_diagram(n, mm, pairs)


@lru_cache(maxsize=None)
def identity_diagram(n: int) -> TLDiagram:
    return new_diagram(n, n, [(("L", i), ("R", i)) for i in range(1, n + 1)])


EMPTY_DIAGRAM = TLDiagram(0, 0, ())


@lru_cache(maxsize=None)
def compose(d1: TLDiagram, d2: TLDiagram) -> tuple[TLDiagram, int]:
    """Concatenate d1 (n,m) with d2 (m,l); return the diagram and loop count.

    The m right points of d1 are glued to the m left points of d2.  Paths
    ending on the outer boundary give the pairs of the result; closed cycles
    among glued points are the loops.
    """
    if d1.m != d2.n:
        raise DiagramError(f"shape mismatch: ({d1.n},{d1.m}) then ({d2.n},{d2.m})")
    # Adjacency on glued points 1..m per side; outer endpoints stand alone.
    link1: dict = {}
    link2: dict = {}
    for a, b in d1.pairs:
        ka = ("g", a[1]) if a[0] == "R" else ("out", "L", a[1])
        kb = ("g", b[1]) if b[0] == "R" else ("out", "L", b[1])
        link1[ka] = kb
        link1[kb] = ka
    for a, b in d2.pairs:
        ka = ("g", a[1]) if a[0] == "L" else ("out", "R", a[1])
        kb = ("g", b[1]) if b[0] == "L" else ("out", "R", b[1])
        link2[ka] = kb
        link2[kb] = ka
    pairs = []
    visited = set()
    for start in list(link1) + list(link2):
        if start[0] != "out" or start in visited:
            continue
        visited.add(start)
        side = 1 if start in link1 else 2
        cur = link1[start] if side == 1 else link2[start]
        while cur[0] == "g":
            side = 3 - side
            cur = (link1 if side == 1 else link2)[cur]
        visited.add(cur)
        pairs.append(((start[1], start[2]), (cur[1], cur[2])))
    loops = 0
    seen = set()
    for g in range(1, d1.m + 1):
        node = ("g", g)
        if node in seen or node not in link1:
            continue
        cur, side = node, 1
        closed = True
        while True:
            seen.add(cur)
            cur = (link1 if side == 1 else link2)[cur]
            side = 3 - side
            if cur[0] == "out":
                closed = False
                break
            if cur == node and side == 1:
                break
            seen.add(cur)
        if closed:
            loops += 1
    # Gluing over 0 points leaves both traversal maps without cycles.
    return new_diagram(d1.n, d2.m, pairs), loops


@lru_cache(maxsize=None)
def enumerate_diagrams(n: int, m: int) -> tuple[TLDiagram, ...]:
    """All (n,m) diagrams in canonical (encoding-lexicographic) order."""
    if (n + m) % 2 != 0:
        raise DiagramError(f"endpoint count {n}+{m} must be even")
    order = [("L", i) for i in range(1, n + 1)] + [("R", j) for j in range(m, 0, -1)]

    def matchings(points):
        if not points:
            yield []
            return
        first = points[0]
        for k in range(1, len(points), 2):
            left = points[1:k]
            right = points[k + 1:]
            for lm in matchings(left):
                for rm in matchings(right):
                    yield [(first, points[k])] + lm + rm

    out = [new_diagram(n, m, pm) for pm in matchings(order)]
    return tuple(sorted(out, key=TLDiagram.encode))


def catalan(k: int) -> int:
    num, den = 1, 1
    for i in range(k):
        num *= 2 * k - i
        den *= i + 1
    return num // den // (k + 1)


# ---------------------------------------------------------------------------
# Cell modules and link states
# ---------------------------------------------------------------------------

LEFT_CELL = "left-cell"
RIGHT_CELL = "right-cell"


@dataclass(frozen=True)
class LinkState:
    """A cell-module basis element: one half of a sliced diagram.

    left-cell states are (n,k) diagrams with no right-to-right pair (a basis
    of the cell module with k defects); right-cell states are (k,n) diagrams
    with no left-to-left pair (the opposite module).
    """

    diagram: TLDiagram
    side: str

    def __post_init__(self):
        if self.side == LEFT_CELL:
            if self.diagram.has_rr_pair():
                raise DiagramError("left-cell state has a right-to-right pair")
        elif self.side == RIGHT_CELL:
            if self.diagram.has_ll_pair():
                raise DiagramError("right-cell state has a left-to-left pair")
        else:
            raise DiagramError(f"bad side tag {self.side!r}")

    @property
    def defects(self) -> int:
        return self.diagram.m if self.side == LEFT_CELL else self.diagram.n

    def encode(self) -> str:
        return self.diagram.encode()


@lru_cache(maxsize=None)
def cell_basis(n: int, k: int, side: str = LEFT_CELL) -> tuple[LinkState, ...]:
    """Basis of the cell module with k defects on n points, canonical order."""
    if k > n or (n - k) % 2 != 0 or k < 0:
        raise DiagramError(f"no cell module for n={n}, k={k}")
    if side == LEFT_CELL:
        pool = enumerate_diagrams(n, k)
        keep = [d for d in pool if not d.has_rr_pair()]
    else:
        pool = enumerate_diagrams(k, n)
        keep = [d for d in pool if not d.has_ll_pair()]
    return tuple(LinkState(d, side) for d in keep)


def slice_diagram(d: TLDiagram) -> tuple[LinkState, LinkState]:
    """Cut each through-strand of a square diagram into two numbered stubs.

    Through-strands are numbered top to bottom; strand s becomes right point
    s of the left half and left point s of the right half.  The two halves
    are the left and right link states, and unslice inverts the operation.
    """
    if d.n != d.m:
        raise DiagramError("slice is defined for square diagrams")
    through = sorted((a[1], b[1]) for a, b in d.pairs if a[0] == "L" and b[0] == "R")
    k = len(through)
    left_pairs = [p for p in d.pairs if p[0][0] == "L" and p[1][0] == "L"]
    right_pairs = [p for p in d.pairs if p[0][0] == "R" and p[1][0] == "R"]
    lp = list(left_pairs)
    rp = list(right_pairs)
    for s, (li, rj) in enumerate(through, 1):
        lp.append((("L", li), ("R", s)))
        rp.append((("L", s), ("R", rj)))
    return (LinkState(new_diagram(d.n, k, lp), LEFT_CELL),
            LinkState(new_diagram(k, d.m, rp), RIGHT_CELL))


def unslice(left: LinkState, right: LinkState) -> TLDiagram:
    """Rejoin matching stubs (stub i to stub i); inverse of slice_diagram."""
    if left.side != LEFT_CELL or right.side != RIGHT_CELL:
        raise DiagramError("unslice takes a left-cell and a right-cell state")
    if left.defects != right.defects:
        raise DiagramError(
            f"stub count mismatch: {left.defects} vs {right.defects}")
    d, loops = compose(left.diagram, right.diagram)
    if loops:
        raise DiagramError("stub joining closed a loop; halves are not cell states")
    return d


def close_up(s: LinkState) -> LinkState:
    """Join the two hanging strands of a 2-defect link state into one arc."""
    if s.defects != 2:
        raise DiagramError(f"close_up needs exactly 2 defects, got {s.defects}")
    stub_side = "R" if s.side == LEFT_CELL else "L"
    ends = []
    keep = []
    for a, b in s.diagram.pairs:
        if a[0] == stub_side:
            ends.append(b)
        elif b[0] == stub_side:
            ends.append(a)
        else:
            keep.append((a, b))
    keep.append(tuple(ends))
    if s.side == LEFT_CELL:
        return LinkState(new_diagram(s.diagram.n, 0, keep), LEFT_CELL)
    return LinkState(new_diagram(0, s.diagram.m, keep), RIGHT_CELL)


# ---------------------------------------------------------------------------
# Letters: the one-bar pieces of a loop system, for 2n = 4
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Letter:
    """What a loop system does on a single bar.

    left is a right-cell state (kl,4): the arcs and hanging strands drawn on
    the left of the bar; right is a left-cell state (4,kr) drawn on the
    right.  Every bar node is covered once by each half.  Hanging strands are
    the stubs joined to the neighbouring bars; adjacency of stub counts is a
    word-level condition, not checked here.
    """

    left: TLDiagram
    right: TLDiagram

    def __post_init__(self):
        if self.left.m != 4 or self.right.n != 4:
            raise DiagramError("letters are defined on 4 bar nodes")
        if self.left.has_ll_pair():
            raise DiagramError("left half has a stub-to-stub pair")
        if self.right.has_rr_pair():
            raise DiagramError("right half has a stub-to-stub pair")
        if self.left.n not in (0, 2) or self.right.m not in (0, 2):
            raise DiagramError("letter halves carry 0 or 2 stubs")

    @property
    def kl(self) -> int:
        return self.left.n

    @property
    def kr(self) -> int:
        return self.right.m

    def encode(self) -> str:
        return (f"LT({self.kl},{self.kr})"
                f"{{left={_half_text(self.left, 'L')};right={_half_text(self.right, 'R')}}}")

    def __str__(self):
        return self.encode()


def _half_text(d: TLDiagram, stub_boundary: str) -> str:
    # Stubs are the (k)-side points, nodes the 4-side; order S1,S2,N1..N4.
    def label(ep):
        return (f"S{ep[1]}" if ep[0] == stub_boundary else f"N{ep[1]}",
                (0, ep[1]) if ep[0] == stub_boundary else (1, ep[1]))

    pairs = []
    for a, b in d.pairs:
        (ta, ka), (tb, kb) = label(a), label(b)
        pairs.append(((ka, ta), (kb, tb)) if ka <= kb else ((kb, tb), (ka, ta)))
    pairs.sort()
    return ",".join(f"{a[1]}-{b[1]}" for a, b in pairs)


_LETTER_RE = re.compile(r"LT\((\d),(\d)\)\{left=([^;]*);right=([^}]*)\}")


def parse_letter(text: str) -> Letter:
    text = re.sub(r"\s+", "", text)
    m = _LETTER_RE.fullmatch(text)
    if not m:
        raise DiagramError(f"cannot parse letter {text!r}")
    kl, kr = int(m.group(1)), int(m.group(2))

    def half(body, stub_boundary, n, mm):
        pairs = []
        for chunk in body.split(","):
            pm = re.fullmatch(r"([SN])(\d)-([SN])(\d)", chunk)
            if not pm:
                raise DiagramError(f"bad half pair {chunk!r}")
            def ep(t, i):
                if t == "S":
                    return (stub_boundary, int(i))
                return ("R" if stub_boundary == "L" else "L", int(i))
            pairs.append((ep(pm.group(1), pm.group(2)), ep(pm.group(3), pm.group(4))))
        return new_diagram(n, mm, pairs)

    return Letter(half(m.group(3), "L", kl, 4), half(m.group(4), "R", 4, kr))


@lru_cache(maxsize=None)
def enumerate_letters(kl: int, kr: int) -> tuple[Letter, ...]:
    """All letters with the given stub counts, canonical order."""
    if kl not in (0, 2) or kr not in (0, 2):
        raise DiagramError("letters carry 0 or 2 stubs per side")
    lefts = cell_basis(4, kl, RIGHT_CELL)
    rights = cell_basis(4, kr, LEFT_CELL)
    out = [Letter(ls.diagram, rs.diagram) for ls in lefts for rs in rights]
    return tuple(sorted(out, key=Letter.encode))


def all_letters() -> tuple[Letter, ...]:
    out = []
    for kl in (0, 2):
        for kr in (0, 2):
            out.extend(enumerate_letters(kl, kr))
    return tuple(sorted(out, key=Letter.encode))
