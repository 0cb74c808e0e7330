"""Complexes of planar loops: loop systems pinned by bars, and their algebra.

A basis element (a pinned loop system) is a sequence of diagrams: a cell
state entering the first bar, square nonidentity diagrams between bars, and
a cell state leaving the last bar.  Bar deletion composes adjacent factors,
turning every loop that falls off the bars into a factor of the marked ring
element; the alternating sum of deletions is the differential.  Juxtaposing
pictures multiplies them.  The one-bar letters, the loop-count (weight) and
divider statistics, and the assembly of filtered subquotient complexes into
boundary-matrix data all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coeff import PointedRing
from .diagram import (EMPTY_DIAGRAM, LEFT_CELL, RIGHT_CELL, Letter,
                      LinkState, TLDiagram, cell_basis, close_up, compose,
                      enumerate_diagrams, slice_diagram, unslice)
from .homology import ChainComplexData, SparseMatrix


class GraffitoError(ValueError):
    pass


@dataclass(frozen=True)
class EndSpec:
    """End behaviour of a loop complex: open/closed ends plus augmentation."""

    left_open: bool = False
    right_open: bool = False
    augmented: bool = False

    def __post_init__(self):
        if self.augmented and (self.left_open or self.right_open):
            raise GraffitoError("only closed-end complexes can be augmented")

    @property
    def code(self) -> str:
        return ("o" if self.left_open else "c") + ("o" if self.right_open else "c")

    @classmethod
    def from_code(cls, code: str, augmented: bool = False) -> "EndSpec":
        if len(code) != 2 or set(code) - set("oc"):
            raise GraffitoError(f"bad end code {code!r}")
        return cls(code[0] == "o", code[1] == "o", augmented)


CLOSED = EndSpec()


@dataclass(frozen=True)
class Graffito:
    """A pinned loop system: the tensor-factor sequence beta_0 | ... | beta_p.

    factors[0] is a (k_l, 2n) state with no stub-to-stub pair, the inner
    factors are nonidentity (2n, 2n) diagrams, and factors[-1] is a
    (2n, k_r) state with no stub-to-stub pair; k is 0 at a closed end and 2
    at an open one.  The degree is the number of bars.  The single factor
    TL(0,0){} stands for the empty system, the degree-0 generator of an
    augmented complex.  Loop and divider counts (computed after closing any
    open ends) are cached at construction.
    """

    two_n: int
    left_open: bool
    right_open: bool
    factors: tuple[TLDiagram, ...]

    def __post_init__(self):
        n = self.two_n
        if n <= 0 or n % 2:
            raise GraffitoError("two_n must be a positive even integer")
        if self.is_empty_system:
            if self.left_open or self.right_open:
                raise GraffitoError("the empty system has closed ends")
            object.__setattr__(self, "_loops", 0)
            object.__setattr__(self, "_dividers", 0)
            return
        if len(self.factors) < 2:
            raise GraffitoError("a pinned system has at least one bar")
        kl = 2 if self.left_open else 0
        kr = 2 if self.right_open else 0
        if (kl or kr) and n != 4:
            raise GraffitoError("open ends are only defined for 2n = 4")
        first, last = self.factors[0], self.factors[-1]
        if (first.n, first.m) != (kl, n) or first.has_ll_pair():
            raise GraffitoError(f"bad entering state {first}")
        if (last.n, last.m) != (n, kr) or last.has_rr_pair():
            raise GraffitoError(f"bad leaving state {last}")
        for f in self.factors[1:-1]:
            if (f.n, f.m) != (n, n):
                raise GraffitoError(f"inner factor {f} has wrong shape")
            if f.is_identity():
                raise GraffitoError("inner factors must not be the identity")
        closed = self if not (kl or kr) else close_ends(self)
        loops, dividers = _closed_stats(closed.factors)
        object.__setattr__(self, "_loops", loops)
        object.__setattr__(self, "_dividers", dividers)

    @property
    def is_empty_system(self) -> bool:
        return self.factors == (EMPTY_DIAGRAM,)

    @property
    def degree(self) -> int:
        return 0 if self.is_empty_system else len(self.factors) - 1

    @property
    def ends(self) -> EndSpec:
        return EndSpec(self.left_open, self.right_open)

    def encode(self) -> str:
        body = " | ".join(f.encode() for f in self.factors)
        return f"G({self.ends.code})[{body}]"

    def __str__(self):
        return self.encode()


@lru_cache(maxsize=None)
def _closed_stats(factors: tuple[TLDiagram, ...]) -> tuple[int, int]:
    if factors == (EMPTY_DIAGRAM,):
        return 0, 0
    total = 0
    running = factors[0]
    for f in factors[1:]:
        running, loops = compose(running, f)
        total += loops
    dividers = sum(1 for f in factors[1:-1] if f.through_count() == 0)
    return total, dividers


def new_graffito(two_n: int, ends: EndSpec | str, factors) -> Graffito:
    if isinstance(ends, str):
        ends = EndSpec.from_code(ends)
    return Graffito(two_n, ends.left_open, ends.right_open, tuple(factors))


def empty_system(two_n: int = 4) -> Graffito:
    return Graffito(two_n, False, False, (EMPTY_DIAGRAM,))


def parse_graffito(text: str) -> Graffito:
    from .diagram import parse_diagram
    import re
    text = text.strip()
    m = re.fullmatch(r"G\((oo|oc|co|cc)\)\[(.*)\]", text, re.S)
    if not m:
        raise GraffitoError(f"cannot parse loop system {text!r}")
    factors = tuple(parse_diagram(part) for part in m.group(2).split("|"))
    if factors == (EMPTY_DIAGRAM,):
        return empty_system()
    two_n = factors[0].m
    return new_graffito(two_n, m.group(1), factors)


def parse_chain(text: str, ring: PointedRing) -> "Chain":
    """Parse the canonical chain form '<scalar>*G(..)[..] + ...' ('0' = zero)."""
    text = text.strip()
    if text == "0":
        return Chain(ring, {})
    dom = ring.domain
    terms: dict[Graffito, object] = {}
    for part in text.split(" + "):
        part = part.strip()
        cut = part.find("*G(")
        if cut < 0:
            raise GraffitoError(f"term {part!r} is not scalar*system")
        ctext = part[:cut].strip()
        if ctext.startswith("(") and ctext.endswith(")"):
            ctext = ctext[1:-1]
        g = parse_graffito(part[cut + 1:])
        v = dom.parse(ctext)
        terms[g] = dom.add(terms.get(g, dom.zero()), v)
    return Chain(ring, terms)


def loop_count(x: Graffito) -> int:
    """Number of loops in the system (open ends are closed up first)."""
    return x._loops


def divider_count(x: Graffito) -> int:
    """Inner factors the whole system passes by: those with no through strand."""
    return x._dividers


def nondivider_count(x: Graffito) -> int:
    return x.degree - 1 - divider_count(x)


def close_ends(x: Graffito) -> Graffito:
    """Join the hanging strand pair at each open end."""
    if x.is_empty_system or not (x.left_open or x.right_open):
        return x
    factors = list(x.factors)
    if x.left_open:
        factors[0] = close_up(LinkState(factors[0], RIGHT_CELL)).diagram
    if x.right_open:
        factors[-1] = close_up(LinkState(factors[-1], LEFT_CELL)).diagram
    return Graffito(x.two_n, False, False, tuple(factors))


# ---------------------------------------------------------------------------
# Chains
# ---------------------------------------------------------------------------

class Chain:
    """A finite linear combination of loop systems of one degree and shape."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PointedRing, terms: dict[Graffito, object] | None = None):
        self.ring = ring
        dom = ring.domain
        clean = {g: v for g, v in (terms or {}).items() if not dom.is_zero(v)}
        shapes = {(g.degree, g.left_open, g.right_open, g.two_n) for g in clean}
        if len(shapes) > 1:
            raise GraffitoError("chain mixes degrees or end shapes")
        self.terms = clean

    @classmethod
    def of(cls, ring: PointedRing, x: Graffito, coeff=None) -> "Chain":
        return cls(ring, {x: ring.domain.one() if coeff is None else coeff})

    @property
    def degree(self) -> int | None:
        for g in self.terms:
            return g.degree
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Chain") -> "Chain":
        if self.ring != other.ring:
            raise GraffitoError("chains over different rings")
        dom = self.ring.domain
        out = dict(self.terms)
        for g, v in other.terms.items():
            out[g] = dom.add(out.get(g, dom.zero()), v)
        return Chain(self.ring, out)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + other.scale(self.ring.domain.neg(self.ring.domain.one()))

    def __neg__(self) -> "Chain":
        return self.scale(self.ring.domain.neg(self.ring.domain.one()))

    def scale(self, c) -> "Chain":
        dom = self.ring.domain
        return Chain(self.ring, {g: dom.mul(c, v) for g, v in self.terms.items()})

    def __mul__(self, other: "Chain") -> "Chain":
        if self.ring != other.ring:
            raise GraffitoError("chains over different rings")
        dom = self.ring.domain
        out: dict[Graffito, object] = {}
        for g1, v1 in self.terms.items():
            for g2, v2 in other.terms.items():
                g = product(g1, g2)
                out[g] = dom.add(out.get(g, dom.zero()), dom.mul(v1, v2))
        return Chain(self.ring, out)

    def __eq__(self, other):
        return (isinstance(other, Chain) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def encode(self) -> str:
        if not self.terms:
            return "0"
        dom = self.ring.domain
        parts = []
        for g in sorted(self.terms, key=Graffito.encode):
            c = dom.format(self.terms[g])
            if any(ch in c[1:] for ch in "+-") or " " in c:
                c = f"({c})"
            parts.append(f"{c}*{g.encode()}")
        return " + ".join(parts)

    def __str__(self):
        return self.encode()

    def __repr__(self):
        return f"Chain({self.encode()})"


def zero_chain(ring: PointedRing) -> Chain:
    return Chain(ring, {})


def face(x: Graffito, i: int, ring: PointedRing) -> Chain:
    """Delete bar i (0-based): compose factors i and i+1 into one.

    Every loop that stops meeting a bar contributes one factor of the marked
    element a to the coefficient.  At an open end the composite may acquire a
    stub-to-stub connection; the cell quotient makes such a term zero.  The
    i = 0 deletion of a one-bar closed system is the merge to the empty
    system, the augmentation of an augmented complex.
    """
    p = x.degree
    if not 0 <= i <= p - 1:
        raise IndexError(f"face index {i} out of range for degree {p}")
    dom = ring.domain
    if p == 1:
        if x.left_open or x.right_open:
            raise IndexError("one-bar open systems have no face")
        _, loops = compose(x.factors[0], x.factors[1])
        coeff = ring.a_power(loops)
        return Chain(ring, {empty_system(x.two_n): coeff})
    merged, loops = compose(x.factors[i], x.factors[i + 1])
    if x.left_open and i == 0 and merged.has_ll_pair():
        return zero_chain(ring)
    if x.right_open and i == p - 1 and merged.has_rr_pair():
        return zero_chain(ring)
    factors = x.factors[:i] + (merged,) + x.factors[i + 2:]
    out = Graffito(x.two_n, x.left_open, x.right_open, factors)
    return Chain(ring, {out: ring.a_power(loops)})


def differential(c: Chain) -> Chain:
    """Alternating sum of bar deletions, the 0th deletion with positive sign."""
    ring = c.ring
    dom = ring.domain
    out: dict[Graffito, object] = {}
    for g, v in c.terms.items():
        if g.degree == 0:
            continue
        for i in range(g.degree):
            if g.degree == 1 and (g.left_open or g.right_open):
                continue
            f = face(g, i, ring)
            for h, w in f.terms.items():
                w = dom.mul(v, w)
                if i % 2:
                    w = dom.neg(w)
                out[h] = dom.add(out.get(h, dom.zero()), w)
    return Chain(ring, out)


def product(x: Graffito, y: Graffito) -> Graffito:
    """Juxtapose two systems; the facing cell states merge into one factor.

    The leaving state of x and the entering state of y sit together between
    two bars, so they combine (by the unique planar rejoining) into a single
    through-strand-free inner factor.  Degrees, weights and loop counts add;
    the divider count gains one for the new joint.
    """
    if x.is_empty_system:
        return y
    if y.is_empty_system:
        return x
    if x.two_n != y.two_n:
        raise GraffitoError("systems of different heights")
    if x.right_open or y.left_open:
        raise GraffitoError("facing ends must be closed to juxtapose")
    joint, loops = compose(x.factors[-1], y.factors[0])
    if loops:
        raise GraffitoError("juxtaposition cannot close loops")
    factors = x.factors[:-1] + (joint,) + y.factors[1:]
    return Graffito(x.two_n, x.left_open, y.right_open, factors)


def involution_tb(x: Graffito) -> Graffito:
    """Top-to-bottom reflection of every factor in place."""
    if x.is_empty_system:
        return x
    return Graffito(x.two_n, x.left_open, x.right_open,
                    tuple(f.reflect_tb() for f in x.factors))


def involution_lr(x: Graffito) -> Graffito:
    """Left-to-right reflection: reverse the factors and reflect each."""
    if x.is_empty_system:
        return x
    return Graffito(x.two_n, x.right_open, x.left_open,
                    tuple(f.reflect_lr() for f in reversed(x.factors)))


def chain_involution_tb(c: Chain) -> Chain:
    return Chain(c.ring, {involution_tb(g): v for g, v in c.terms.items()})


def chain_involution_lr(c: Chain) -> Chain:
    return Chain(c.ring, {involution_lr(g): v for g, v in c.terms.items()})


# ---------------------------------------------------------------------------
# Words and pivots (2n = 4)
# ---------------------------------------------------------------------------

def to_word(x: Graffito) -> tuple[Letter, ...]:
    """The letter on each bar: arcs arriving from the left, leaving right."""
    if x.two_n != 4:
        raise GraffitoError("letters are defined for 2n = 4")
    if x.is_empty_system:
        return ()
    p = x.degree
    letters = []
    for j in range(1, p + 1):
        prev = x.factors[j - 1]
        left = prev if j == 1 else slice_diagram(prev)[1].diagram
        nxt = x.factors[j]
        right = nxt if j == p else slice_diagram(nxt)[0].diagram
        letters.append(Letter(left, right))
    return tuple(letters)


def from_word(letters, two_n: int = 4) -> Graffito:
    """Rebuild the system whose bars carry the given letters."""
    letters = tuple(letters)
    if not letters:
        raise GraffitoError("a word has at least one letter")
    p = len(letters)
    for a, b in zip(letters, letters[1:]):
        if a.kr != b.kl:
            raise GraffitoError(
                f"stub counts disagree between consecutive letters ({a.kr} vs {b.kl})")
    factors = [letters[0].left]
    for j in range(p - 1):
        factors.append(unslice(LinkState(letters[j].right, LEFT_CELL),
                               LinkState(letters[j + 1].left, RIGHT_CELL)))
    factors.append(letters[-1].right)
    return Graffito(two_n, letters[0].kl == 2, letters[-1].kr == 2,
                    tuple(factors))


def _loop_ids(x: Graffito) -> list[dict[int, int]]:
    """For each bar, the loop id at each of its four nodes (1..4)."""
    p = x.degree
    parent: dict = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for k, f in enumerate(x.factors):
        for a, b in f.pairs:
            va = (k, a[1]) if a[0] == "L" else (k + 1, a[1])
            vb = (k, b[1]) if b[0] == "L" else (k + 1, b[1])
            union(va, vb)
    out = []
    for bar in range(1, p + 1):
        out.append({node: find((bar, node)) for node in range(1, x.two_n + 1)})
    return out


def pivot_sequence(x: Graffito) -> tuple[Letter, ...]:
    """The letters, in order, at bars met by two distinct loops.

    Defined for closed systems with no dividers; such a system with w loops
    has exactly w - 1 of these letters.
    """
    if x.left_open or x.right_open:
        raise GraffitoError("pivots are read off closed systems")
    if divider_count(x):
        raise GraffitoError("pivots are defined for divider-free systems")
    word = to_word(x)
    ids = _loop_ids(x)
    out = []
    for j, letter in enumerate(word):
        if len(set(ids[j].values())) >= 2:
            out.append(letter)
    return tuple(out)


def pivot_letters(max_degree: int = 4) -> tuple[Letter, ...]:
    """Letters met by two loops, collected from two-loop divider-free systems."""
    seen = set()
    for p in range(1, max_degree + 1):
        for x in enumerate_graffiti(p, weight=2, dividers=0):
            seen.update(pivot_sequence(x))
    return tuple(sorted(seen, key=Letter.encode))


# ---------------------------------------------------------------------------
# Complex assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexSpec:
    """Which loop complex to build, over which ring, with which filters.

    weight fixes the number of loops, dividers the divider count; the
    subquotient flag keeps only divider-preserving bar deletions (deletions
    that raise the count leave the subquotient and are dropped; none lower
    it).  Both filters need a = 0, where the differential cannot unpin loops.
    """

    two_n: int
    ring: PointedRing
    ends: EndSpec = CLOSED
    max_degree: int = 4
    weight: int | None = None
    dividers: int | None = None
    subquotient: bool = False

    def __post_init__(self):
        if self.two_n % 2 or self.two_n <= 0:
            raise GraffitoError("two_n must be a positive even integer")
        if (self.ends.left_open or self.ends.right_open) and self.two_n != 4:
            raise GraffitoError("open ends are only defined for 2n = 4")
        if self.subquotient != (self.dividers is not None):
            raise GraffitoError(
                "a divider filter and the subquotient flag go together")
        if (self.weight is not None or self.dividers is not None):
            if not self.ring.a_is_zero:
                raise GraffitoError("weight and divider filters need a = 0")
            if self.ends.augmented:
                raise GraffitoError("filtered complexes are not augmented")


def _slot_pools(two_n: int, ends: EndSpec):
    kl = 2 if ends.left_open else 0
    kr = 2 if ends.right_open else 0
    first = tuple(s.diagram for s in cell_basis(two_n, kl, RIGHT_CELL))
    inner = tuple(d for d in enumerate_diagrams(two_n, two_n)
                  if not d.is_identity())
    last = tuple(s.diagram for s in cell_basis(two_n, kr, LEFT_CELL))
    return first, inner, last


def enumerate_graffiti(degree: int, two_n: int = 4, ends: EndSpec | str = CLOSED,
                       weight: int | None = None, dividers: int | None = None
                       ) -> tuple[Graffito, ...]:
    """All degree-p basis systems passing the filters, canonical order."""
    if isinstance(ends, str):
        ends = EndSpec.from_code(ends)
    words = _enumerate_words(degree, two_n, ends, weight, dividers)
    first, inner, last = _slot_pools(two_n, ends)
    out = []
    for w in words:
        factors = ((first[w[0]],)
                   + tuple(inner[i] for i in w[1:-1])
                   + (last[w[-1]],))
        out.append(Graffito(two_n, ends.left_open, ends.right_open, factors))
    return tuple(out)


@lru_cache(maxsize=None)
def _machine(two_n: int, ends: EndSpec):
    """Slot pools plus the closed-composite transition tables, id-indexed.

    A word is (first_id, inner_id..., last_id).  The running state while
    scanning left to right is the composite of the closed-up prefix, an
    element of the (0, 2n) diagram list, plus the loops already closed.
    """
    first, inner, last = _slot_pools(two_n, ends)
    states = enumerate_diagrams(0, two_n)
    sid = {d: k for k, d in enumerate(states)}
    start = []
    for f in first:
        cf = close_up(LinkState(f, RIGHT_CELL)).diagram if ends.left_open else f
        start.append(sid[cf])
    closed_last = []
    for f in last:
        cf = close_up(LinkState(f, LEFT_CELL)).diagram if ends.right_open else f
        closed_last.append(cf)
    step = {}
    for k, s in enumerate(states):
        for j, d in enumerate(inner):
            res, loops = compose(s, d)
            step[(k, j)] = (sid[res], loops)
    finish = {}
    for k, s in enumerate(states):
        for j, d in enumerate(closed_last):
            _, loops = compose(s, d)
            finish[(k, j)] = loops
    is_div = tuple(d.through_count() == 0 for d in inner)
    enc_first = tuple(d.encode() for d in first)
    enc_inner = tuple(d.encode() for d in inner)
    enc_last = tuple(d.encode() for d in last)
    return (first, inner, last, start, step, finish, is_div,
            enc_first, enc_inner, enc_last)


def _word_encoding(w, enc_first, enc_inner, enc_last, ends_code):
    parts = [enc_first[w[0]]] + [enc_inner[i] for i in w[1:-1]] + [enc_last[w[-1]]]
    return f"G({ends_code})[" + " | ".join(parts) + "]"


def _raw_words(degree, two_n, ends, weight, dividers):
    """Depth-first enumeration of basis words, with on-the-fly filters."""
    if degree < 1:
        return []
    (first, inner, last, start, step, finish, is_div,
     _ef, _ei, _el) = _machine(two_n, ends)
    out = []
    n_inner = degree - 1

    def extend(prefix, state, loops, divs):
        depth = len(prefix) - 1
        if weight is not None and loops > weight:
            return
        if dividers is not None and divs > dividers:
            return
        if depth == n_inner:
            if dividers is not None and divs != dividers:
                return
            for j in range(len(last)):
                total = loops + finish[(state, j)]
                if weight is not None and total != weight:
                    continue
                out.append(prefix + (j,))
            return
        for j in range(len(inner)):
            ns, dl = step[(state, j)]
            extend(prefix + (j,), ns, loops + dl, divs + is_div[j])

    for f in range(len(first)):
        extend((f,), start[f], 0, 0)
    return out


def count_graffiti(degree: int, two_n: int = 4, ends: EndSpec | str = CLOSED,
                   weight: int | None = None, dividers: int | None = None) -> int:
    """Number of degree-p basis systems passing the filters (no objects built)."""
    if isinstance(ends, str):
        ends = EndSpec.from_code(ends)
    return len(_raw_words(degree, two_n, ends, weight, dividers))


def _enumerate_words(degree, two_n, ends, weight, dividers):
    (first, inner, last, start, step, finish, is_div,
     enc_first, enc_inner, enc_last) = _machine(two_n, ends)
    out = _raw_words(degree, two_n, ends, weight, dividers)
    code = ends.code
    out.sort(key=lambda w: _word_encoding(w, enc_first, enc_inner, enc_last, code))
    return out


def build_complex(spec: ComplexSpec) -> ChainComplexData:
    """Bases and boundary matrices of the requested complex, degrees 0..max.

    The basis in each degree is ordered by canonical encoding.  Bar deletions
    whose coefficient vanishes, whose target leaves an open-end cell module,
    or (in subquotient mode) whose target gains a divider contribute nothing.
    """
    ends = spec.ends
    ring = spec.ring
    dom = ring.domain
    (first, inner, last, start, step, finish, is_div,
     enc_first, enc_inner, enc_last) = _machine(spec.two_n, ends)
    n_first, n_inner_pool, n_last = len(first), len(inner), len(last)

    # merge tables in id space; None marks a cell-quotient kill
    inner_index = {d: j for j, d in enumerate(inner)}
    first_index = {d: j for j, d in enumerate(first)}
    last_index = {d: j for j, d in enumerate(last)}

    @lru_cache(maxsize=None)
    def merge_first(fi, ij):
        res, loops = compose(first[fi], inner[ij])
        if ends.left_open and res.has_ll_pair():
            return None
        return first_index[res], loops

    @lru_cache(maxsize=None)
    def merge_inner(i, j):
        res, loops = compose(inner[i], inner[j])
        return inner_index[res], loops

    @lru_cache(maxsize=None)
    def merge_last(ij, lj):
        res, loops = compose(inner[ij], last[lj])
        if ends.right_open and res.has_rr_pair():
            return None
        return last_index[res], loops

    @lru_cache(maxsize=None)
    def merge_degree_one(fi, lj):
        _, loops = compose(first[fi], last[lj])
        return loops

    basis: dict[int, tuple[str, ...]] = {}
    weights: dict[int, tuple[int, ...]] = {}
    words: dict[int, list[tuple[int, ...]]] = {}
    stats: dict[int, list[tuple[int, int]]] = {}
    if ends.augmented:
        basis[0] = (empty_system(spec.two_n).encode(),)
        weights[0] = (0,)
    else:
        basis[0], weights[0] = (), ()
    for p in range(1, spec.max_degree + 1):
        ws = _enumerate_words(p, spec.two_n, ends, spec.weight, spec.dividers)
        words[p] = ws
        basis[p] = tuple(
            _word_encoding(w, enc_first, enc_inner, enc_last, ends.code)
            for w in ws)
        st = []
        for w in ws:
            state, loops, divs = start[w[0]], 0, 0
            for j in w[1:-1]:
                state, dl = step[(state, j)]
                loops += dl
                divs += is_div[j]
            loops += finish[(state, w[-1])]
            st.append((loops, divs))
        stats[p] = st
        weights[p] = tuple(s[0] for s in st)

    def word_faces(w):
        """Nonzero bar deletions of an id-word: (index, new word, loops)."""
        p = len(w) - 1
        for i in range(p):
            if p == 1:
                yield i, None, merge_degree_one(w[0], w[1])
                continue
            if i == 0:
                m = merge_first(w[0], w[1])
                if m is None:
                    continue
                yield i, (m[0],) + w[2:], m[1]
            elif i == p - 1:
                m = merge_last(w[p - 1], w[p])
                if m is None:
                    continue
                yield i, w[:p - 1] + (m[0],), m[1]
            else:
                m = merge_inner(w[i], w[i + 1])
                yield i, w[:i] + (m[0],) + w[i + 2:], m[1]

    matrices: dict[int, SparseMatrix] = {}
    for p in range(1, spec.max_degree + 1):
        index = {w: k for k, w in enumerate(words.get(p - 1, []))}
        data: dict[tuple[int, int], object] = {}
        for col, w in enumerate(words[p]):
            for i, nw, loops in word_faces(w):
                coeff = ring.a_power(loops)
                if dom.is_zero(coeff):
                    continue
                if p == 1:
                    if not ends.augmented:
                        continue
                    row = 0
                else:
                    # a divider-raising deletion leaves the subquotient: its
                    # target was filtered out of the enumeration
                    row = index.get(nw)
                    if row is None:
                        continue
                if i % 2:
                    coeff = dom.neg(coeff)
                key = (row, col)
                prev = data.get(key, dom.zero())
                data[key] = dom.add(prev, coeff)
        matrices[p] = SparseMatrix.from_dict(
            len(basis[p - 1]), len(basis[p]), data, dom)

    label = f"loops(2n={spec.two_n}, ends={ends.code}"
    if ends.augmented:
        label += ", augmented"
    if spec.weight is not None:
        label += f", w={spec.weight}"
    if spec.dividers is not None:
        label += f", j={spec.dividers}"
    label += ")"
    return ChainComplexData(ring, spec.max_degree, basis, matrices,
                            weights=weights, description=label)


def chain_to_vector(c: Chain, data: ChainComplexData, degree: int) -> dict[int, object]:
    """Coordinates of a chain in the ordered basis of one degree."""
    idx = data.index_map(degree)
    out = {}
    for g, v in c.terms.items():
        if g.degree != degree:
            raise GraffitoError("chain degree disagrees with requested degree")
        key = g.encode()
        if key not in idx:
            raise GraffitoError(f"{key} is not in the basis of degree {degree}")
        out[idx[key]] = v
    return out


def vector_to_chain(vec: dict[int, object], data: ChainComplexData,
                    degree: int) -> Chain:
    enc = data.basis[degree]
    return Chain(data.ring, {parse_graffito(enc[i]): v for i, v in vec.items()})
