"""Ring-agnostic chain-complex linear algebra over exact domains.

Boundary data is held as sparse matrices whose entries live in one of the
coeff domains.  Integral homology goes through Smith normal form with a
unit-pivot sweep first (boundary matrices are overwhelmingly unimodular), so
only a small residual core ever sees the gcd-based reduction.  Field ranks
use sparse elimination with Markowitz pivoting.  Everything is exact.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .coeff import (INTEGERS, CoefficientDomain, DomainError, PointedRing, ZZ)


class LinearAlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable sparse matrix: entries sorted row-major, no zeros."""

    rows: int
    cols: int
    entries: tuple[tuple[int, int, object], ...]
    domain: CoefficientDomain = ZZ

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise LinearAlgebraError(f"entry ({r},{c}) out of range")
            if (r, c) in seen:
                raise LinearAlgebraError(f"duplicate entry at ({r},{c})")
            seen.add((r, c))
            if self.domain.is_zero(v):
                raise LinearAlgebraError(f"stored zero at ({r},{c})")
        if tuple(sorted(self.entries, key=lambda e: (e[0], e[1]))) != self.entries:
            raise LinearAlgebraError("entries not in row-major order")

    @classmethod
    def from_dict(cls, rows, cols, data: dict, domain=ZZ) -> "SparseMatrix":
        ents = tuple(sorted((r, c, v) for (r, c), v in data.items()
                            if not domain.is_zero(v)))
        return cls(rows, cols, ents, domain)

    def nnz(self) -> int:
        return len(self.entries)

    def row_dicts(self) -> dict[int, dict[int, object]]:
        out: dict[int, dict[int, object]] = {}
        for r, c, v in self.entries:
            out.setdefault(r, {})[c] = v
        return out

    def col_dicts(self) -> dict[int, dict[int, object]]:
        out: dict[int, dict[int, object]] = {}
        for r, c, v in self.entries:
            out.setdefault(c, {})[r] = v
        return out

    def apply(self, vec: dict[int, object], domain=None) -> dict[int, object]:
        """Matrix times a sparse column vector {index: value}."""
        dom = domain or self.domain
        out: dict[int, object] = {}
        cols = self.col_dicts()
        for j, x in vec.items():
            if j >= self.cols:
                raise LinearAlgebraError("vector index out of range")
            for r, v in cols.get(j, {}).items():
                out[r] = dom.add(out.get(r, dom.zero()), dom.mul(v, x))
        return {r: v for r, v in out.items() if not dom.is_zero(v)}

    def mul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise LinearAlgebraError("shape mismatch in matrix product")
        dom = self.domain
        mycols = self.col_dicts()
        acc: dict[tuple[int, int], object] = {}
        for r, c, v in other.entries:
            for rr, vv in mycols.get(r, {}).items():
                key = (rr, c)
                acc[key] = dom.add(acc.get(key, dom.zero()), dom.mul(vv, v))
        return SparseMatrix.from_dict(self.rows, other.cols, acc, dom)

    def map_domain(self, target: CoefficientDomain) -> "SparseMatrix":
        """Reinterpret integer entries in another domain (Z -> Q, F_p, ...)."""
        if self.domain.kind != INTEGERS:
            raise DomainError("map_domain starts from integer matrices")
        data = {}
        for r, c, v in self.entries:
            w = target.from_int(v)
            if not target.is_zero(w):
                data[(r, c)] = w
        return SparseMatrix.from_dict(self.rows, self.cols, data, target)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix.from_dict(
            self.cols, self.rows,
            {(c, r): v for r, c, v in self.entries}, self.domain)

    def to_triples(self) -> list[list]:
        return [[r, c, self.domain.format(v)] for r, c, v in self.entries]


def zero_matrix(rows: int, cols: int, domain=ZZ) -> SparseMatrix:
    return SparseMatrix(rows, cols, (), domain)


@dataclass
class ChainComplexData:
    """Per-degree ordered bases plus boundary matrices d_p : C_p -> C_{p-1}.

    basis[p] is the tuple of canonical basis-element encodings in degree p for
    0 <= p <= max_degree, matrices[p] the boundary leaving degree p, and
    weights[p] (optional) one loop-count label per basis element.
    """

    ring: PointedRing
    max_degree: int
    basis: dict[int, tuple[str, ...]]
    matrices: dict[int, SparseMatrix]
    weights: dict[int, tuple[int, ...]] | None = None
    description: str = ""

    def dim(self, p: int) -> int:
        return len(self.basis.get(p, ()))

    def boundary(self, p: int) -> SparseMatrix:
        if p in self.matrices:
            return self.matrices[p]
        return zero_matrix(self.dim(p - 1), self.dim(p), self.ring.domain)

    def index_map(self, p: int) -> dict[str, int]:
        return {enc: i for i, enc in enumerate(self.basis.get(p, ()))}

    def to_json(self) -> dict:
        return {
            "degrees": list(range(self.max_degree + 1)),
            "basis": {str(p): list(self.basis.get(p, ()))
                      for p in range(self.max_degree + 1)},
            "boundary": {str(p): self.boundary(p).to_triples()
                         for p in range(1, self.max_degree + 1)},
        }


@dataclass(frozen=True)
class DSquaredReport:
    ok: bool
    failures: tuple[tuple[int, int, int], ...] = ()

    def __str__(self):
        if self.ok:
            return "d^2 = 0"
        p, r, c = self.failures[0]
        return f"d^2 != 0 first at degree {p}, entry ({r},{c})"


def validate_d_squared(c: ChainComplexData) -> DSquaredReport:
    """Check d_{p-1} d_p = 0 for every composable pair of boundaries."""
    failures = []
    for p in range(2, c.max_degree + 1):
        a, b = c.boundary(p - 1), c.boundary(p)
        if a.cols != b.rows:
            raise LinearAlgebraError(
                f"boundary shapes disagree between degrees {p} and {p - 1}")
        prod = a.mul(b)
        for r, col, _ in prod.entries:
            failures.append((p, r, col))
    return DSquaredReport(not failures, tuple(failures))


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass
class SmithForm:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    When transforms are requested, U (rows x rows) and V (cols x cols) are
    unimodular with U A V = diag(invariants), and uinv/vinv their inverses.
    """

    invariants: tuple[int, ...]
    rank: int
    U: list[list[int]] | None = None
    V: list[list[int]] | None = None
    uinv: list[list[int]] | None = None
    vinv: list[list[int]] | None = None

    def __post_init__(self):
        for a, b in zip(self.invariants, self.invariants[1:]):
            if a <= 0 or b % a != 0:
                raise LinearAlgebraError("invariants violate the divisibility chain")


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class _SparseSNF:
    """Unit-pivot sweep; the residual core goes to the dense textbook pass."""

    def __init__(self, A: SparseMatrix):
        if A.domain.kind != INTEGERS:
            raise DomainError("Smith normal form needs integer entries")
        self.nrows, self.ncols = A.rows, A.cols
        self.R: dict[int, dict[int, int]] = A.row_dicts()
        self.C: dict[int, set[int]] = {}
        for r, row in self.R.items():
            for c in row:
                self.C.setdefault(c, set()).add(r)
        self.unit_count = 0

    def _push_candidates(self, heap, rows):
        for r in rows:
            row = self.R.get(r)
            if not row:
                continue
            rl = len(row)
            for c, v in row.items():
                if v in (1, -1):
                    cost = (rl - 1) * (len(self.C[c]) - 1)
                    heapq.heappush(heap, (cost, r, c))

    def unit_sweep(self):
        heap: list = []
        self._push_candidates(heap, list(self.R))
        while heap:
            cost, r0, c0 = heapq.heappop(heap)
            row0 = self.R.get(r0)
            if not row0 or c0 not in row0 or row0[c0] not in (1, -1):
                continue
            cur = (len(row0) - 1) * (len(self.C[c0]) - 1)
            if cur > cost:
                heapq.heappush(heap, (cur, r0, c0))
                continue
            v = row0[c0]
            touched = []
            for r in list(self.C[c0]):
                if r == r0:
                    continue
                q = self.R[r][c0] * v  # v in {1,-1} so q*v == entry
                row = self.R[r]
                for c, w in row0.items():
                    nv = row.get(c, 0) - q * w
                    if nv:
                        if c not in row:
                            self.C[c].add(r)
                        row[c] = nv
                    elif c in row:
                        del row[c]
                        self.C[c].discard(r)
                touched.append(r)
            # column c0 is now supported on r0 only; removing the pivot row
            # and column performs the (trivial) clearing column operations
            for c in row0:
                self.C[c].discard(r0)
                if not self.C[c]:
                    del self.C[c]
            del self.R[r0]
            self.unit_count += 1
            self._push_candidates(heap, touched)

    def residual(self) -> tuple[list[list[int]], int, int]:
        rows = sorted(r for r, row in self.R.items() if row)
        cols = sorted({c for r in rows for c in self.R[r]})
        cmap = {c: j for j, c in enumerate(cols)}
        dense = [[0] * len(cols) for _ in rows]
        for i, r in enumerate(rows):
            for c, v in self.R[r].items():
                dense[i][cmap[c]] = v
        return dense, len(rows), len(cols)


def _dense_snf_invariants(M: list[list[int]]) -> list[int]:
    """Textbook Smith reduction returning the nontrivial invariant chain."""
    m = [row[:] for row in M]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    invs = []
    k = 0
    while True:
        pr = pc = None
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pr, pc = v, i, j
        if pr is None:
            break
        m[k], m[pr] = m[pr], m[k]
        for row in m:
            row[k], row[pc] = row[pc], row[k]
        while True:
            for i in range(k + 1, nr):
                if m[i][k]:
                    q = m[i][k] // m[k][k]
                    for j in range(k, nc):
                        m[i][j] -= q * m[k][j]
                    if m[i][k]:  # remainder left: swap to shrink the pivot
                        m[k], m[i] = m[i], m[k]
            if any(m[i][k] for i in range(k + 1, nr)):
                continue
            for j in range(k + 1, nc):
                if m[k][j]:
                    q = m[k][j] // m[k][k]
                    for i in range(k, nr):
                        m[i][j] -= q * m[i][k]
                    if m[k][j]:
                        for i in range(k, nr):
                            m[i][k], m[i][j] = m[i][j], m[i][k]
            if any(m[k][j] for j in range(k + 1, nc)):
                continue
            bad = None
            for i in range(k + 1, nr):
                for j in range(k + 1, nc):
                    if m[i][j] % m[k][k]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            for j in range(k, nc):
                m[k][j] += m[bad][j]
        invs.append(abs(m[k][k]))
        k += 1
        if k >= nr or k >= nc:
            break
    return invs


def smith_normal_form(A: SparseMatrix, transforms: bool = False) -> SmithForm:
    """Invariant factors of an integer matrix; transforms on request.

    The sparse path handles the bulk of combinatorial boundary matrices via
    unit pivots; transforms use a dense elimination and are meant for the
    small complexes where representatives or integral solving are needed.
    """
    if transforms:
        return _dense_snf_with_transforms(A)
    work = _SparseSNF(A)
    work.unit_sweep()
    dense, nr, nc = work.residual()
    rest = _dense_snf_invariants(dense) if nr and nc else []
    invariants = tuple([1] * work.unit_count + rest)
    return SmithForm(invariants, len(invariants))


def _dense_snf_with_transforms(A: SparseMatrix) -> SmithForm:
    nr, nc = A.rows, A.cols
    m = [[0] * nc for _ in range(nr)]
    for r, c, v in A.entries:
        m[r][c] = v
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    uinv = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]
    vinv = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_op(i, j, q):  # row_i -= q * row_j
        for t in range(nc):
            m[i][t] -= q * m[j][t]
        for t in range(nr):
            U[i][t] -= q * U[j][t]
            uinv[t][j] += q * uinv[t][i]

    def col_op(i, j, q):  # col_i -= q * col_j
        for t in range(nr):
            m[t][i] -= q * m[t][j]
        for t in range(nc):
            V[t][i] -= q * V[t][j]
            vinv[j][t] += q * vinv[i][t]

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        U[i], U[j] = U[j], U[i]
        for t in range(nr):
            uinv[t][i], uinv[t][j] = uinv[t][j], uinv[t][i]

    def col_swap(i, j):
        for t in range(nr):
            m[t][i], m[t][j] = m[t][j], m[t][i]
        for t in range(nc):
            V[t][i], V[t][j] = V[t][j], V[t][i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def row_negate(i):
        for t in range(nc):
            m[i][t] = -m[i][t]
        for t in range(nr):
            U[i][t] = -U[i][t]
            uinv[t][i] = -uinv[t][i]

    invs = []
    k = 0
    while k < nr and k < nc:
        pr = pc = None
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pr, pc = v, i, j
        if pr is None:
            break
        row_swap(k, pr)
        col_swap(k, pc)
        while True:
            progress = False
            for i in range(k + 1, nr):
                if m[i][k]:
                    q = m[i][k] // m[k][k]
                    row_op(i, k, q)
                    if m[i][k]:
                        row_swap(k, i)
                        progress = True
            if progress or any(m[i][k] for i in range(k + 1, nr)):
                continue
            for j in range(k + 1, nc):
                if m[k][j]:
                    q = m[k][j] // m[k][k]
                    col_op(j, k, q)
                    if m[k][j]:
                        col_swap(k, j)
                        progress = True
            if progress or any(m[k][j] for j in range(k + 1, nc)):
                continue
            bad = None
            for i in range(k + 1, nr):
                if any(m[i][j] % m[k][k] for j in range(k + 1, nc)):
                    bad = i
                    break
            if bad is None:
                break
            row_op(k, bad, -1)  # add the offending row to the pivot row
        if m[k][k] < 0:
            row_negate(k)
        invs.append(m[k][k])
        k += 1
    return SmithForm(tuple(invs), len(invs), U, V, uinv, vinv)


def rank_over_field(A: SparseMatrix, fld: CoefficientDomain) -> int:
    """Exact rank by sparse elimination with Markowitz pivoting."""
    if not fld.is_field():
        raise DomainError(f"{fld!r} is not a field")
    if A.domain.kind == INTEGERS and fld.is_field():
        A = A.map_domain(fld)
    elif A.domain != fld:
        raise DomainError("matrix domain disagrees with requested field")
    R = A.row_dicts()
    C: dict[int, set[int]] = {}
    for r, row in R.items():
        for c in row:
            C.setdefault(c, set()).add(r)
    heap: list = []

    def push(rows):
        for r in rows:
            row = R.get(r)
            if not row:
                continue
            rl = len(row) - 1
            for c in row:
                heapq.heappush(heap, (rl * (len(C[c]) - 1), r, c))

    push(list(R))
    rank = 0
    while heap:
        cost, r0, c0 = heapq.heappop(heap)
        row0 = R.get(r0)
        if not row0 or c0 not in row0:
            continue
        col0 = C[c0]
        cur = (len(row0) - 1) * (len(col0) - 1)
        if cur > cost:
            heapq.heappush(heap, (cur, r0, c0))
            continue
        piv_inv = fld.inv(row0[c0])
        touched = []
        for r in list(col0):
            if r == r0:
                continue
            row = R[r]
            q = fld.mul(row[c0], piv_inv)
            for c, w in row0.items():
                nv = fld.sub(row.get(c, fld.zero()), fld.mul(q, w))
                if fld.is_zero(nv):
                    if c in row:
                        del row[c]
                        C[c].discard(r)
                else:
                    if c not in row:
                        C[c].add(r)
                    row[c] = nv
            touched.append(r)
        for c in row0:
            C[c].discard(r0)
            if not C[c]:
                del C[c]
        del R[r0]
        rank += 1
        push(touched)
    return rank


# ---------------------------------------------------------------------------
# Homology groups
# ---------------------------------------------------------------------------

@dataclass
class HomologyGroup:
    """Free rank, torsion invariants, and optional representative cycles."""

    degree: int
    free_rank: int
    torsion: tuple[int, ...]
    basis_size: int
    representatives: tuple[dict[int, int], ...] | None = None

    def to_json(self) -> dict:
        return {"degree": self.degree, "rank": self.free_rank,
                "torsion": list(self.torsion), "basis_size": self.basis_size}

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return f"H_{self.degree} = " + (" + ".join(parts) if parts else "0")


def homology(c: ChainComplexData, degrees, representatives: bool = False
             ) -> list[HomologyGroup]:
    """Homology groups at the requested degrees.

    Every requested degree p must satisfy p < max_degree so that both
    adjacent boundaries are trusted; the truncation edge is never reported.
    """
    degrees = list(degrees)
    for p in degrees:
        if p >= c.max_degree:
            raise LinearAlgebraError(
                f"degree {p} is at or beyond the truncation edge {c.max_degree}")
        if p < 0:
            raise LinearAlgebraError("negative degree")
    dom = c.ring.domain
    out = []
    if dom.kind == INTEGERS:
        snf_cache: dict[int, SmithForm] = {}

        def snf_of(p):
            if p not in snf_cache:
                snf_cache[p] = smith_normal_form(c.boundary(p))
            return snf_cache[p]

        for p in degrees:
            n_p = c.dim(p)
            r_low = snf_of(p).rank if p >= 1 else 0
            high = snf_of(p + 1)
            tors = tuple(d for d in high.invariants if d > 1)
            free = n_p - r_low - high.rank
            reps = _integral_representatives(c, p) if representatives else None
            out.append(HomologyGroup(p, free, tors, n_p, reps))
        return out
    if not dom.is_field():
        raise DomainError(
            "homology is computed over Z or a field; specialize first")
    rank_cache: dict[int, int] = {}

    def rank_of(p):
        if p not in rank_cache:
            rank_cache[p] = rank_over_field(c.boundary(p), dom)
        return rank_cache[p]

    for p in degrees:
        n_p = c.dim(p)
        r_low = rank_of(p) if p >= 1 else 0
        free = n_p - r_low - rank_of(p + 1)
        out.append(HomologyGroup(p, free, (), n_p))
    return out


def integer_kernel_basis(A: SparseMatrix) -> list[dict[int, int]]:
    """Basis of the integer kernel lattice (columns of V past the rank)."""
    sf = smith_normal_form(A, transforms=True)
    out = []
    for j in range(sf.rank, A.cols):
        vec = {i: sf.V[i][j] for i in range(A.cols) if sf.V[i][j]}
        out.append(vec)
    return out


def solve_integer(A: SparseMatrix, b: dict[int, int]) -> dict[int, int] | None:
    """One integral solution of A x = b, or None when none exists."""
    sf = smith_normal_form(A, transforms=True)
    y = [0] * A.rows
    for i in range(A.rows):
        y[i] = sum(sf.U[i][r] * v for r, v in b.items())
    x_t = [0] * A.cols
    for i in range(A.rows):
        if i < sf.rank:
            if y[i] % sf.invariants[i]:
                return None
            if i < A.cols:
                x_t[i] = y[i] // sf.invariants[i]
        elif y[i]:
            return None
    sol = {}
    for i in range(A.cols):
        s = sum(sf.V[i][j] * x_t[j] for j in range(min(sf.rank, A.cols)))
        if s:
            sol[i] = s
    return sol


def _solve_field(A: SparseMatrix, b: dict, fld: CoefficientDomain):
    """One field solution of A x = b, or None (dense elimination)."""
    if A.domain.kind == INTEGERS:
        A = A.map_domain(fld)
    nr, nc = A.rows, A.cols
    m = [[fld.zero()] * (nc + 1) for _ in range(nr)]
    for r, c, v in A.entries:
        m[r][c] = v
    for r, v in b.items():
        m[r][nc] = v if not isinstance(v, int) or fld.kind == INTEGERS else fld.from_int(v)
    pivots = []
    row = 0
    for col in range(nc):
        sel = None
        for i in range(row, nr):
            if not fld.is_zero(m[i][col]):
                sel = i
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = fld.inv(m[row][col])
        m[row] = [fld.mul(inv, x) for x in m[row]]
        for i in range(nr):
            if i != row and not fld.is_zero(m[i][col]):
                q = m[i][col]
                m[i] = [fld.sub(x, fld.mul(q, y)) for x, y in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == nr:
            break
    for i in range(row, nr):
        if not fld.is_zero(m[i][nc]):
            return None
    sol = {}
    for i, col in enumerate(pivots):
        if not fld.is_zero(m[i][nc]):
            sol[col] = m[i][nc]
    return sol


def is_cycle(c: ChainComplexData, vec: dict[int, object], p: int) -> bool:
    if p == 0:
        return True
    dom = c.ring.domain
    return not c.boundary(p).apply(vec, dom)


def is_boundary(c: ChainComplexData, vec: dict[int, object], p: int) -> bool:
    """Exact solvability of d_{p+1} w = vec in the coefficient ring."""
    if p + 1 > c.max_degree:
        raise LinearAlgebraError("degree out of trusted range for is_boundary")
    dom = c.ring.domain
    vec = {i: v for i, v in vec.items() if not dom.is_zero(v)}
    if not vec:
        return True
    A = c.boundary(p + 1)
    if dom.kind == INTEGERS:
        return solve_integer(A, vec) is not None
    if dom.is_field():
        return _solve_field(A, vec, dom) is not None
    raise DomainError("is_boundary needs Z or field coefficients")


def _integral_representatives(c: ChainComplexData, p: int):
    """Representative cycles for the free part and torsion part of H_p.

    Kernel coordinates come from the SNF of d_p; the boundary image is
    rewritten in those coordinates (integrally exact, since the SNF kernel
    basis spans the full kernel lattice) and a second SNF reads off cokernel
    generators.
    """
    dom = c.ring.domain
    if dom.kind != INTEGERS:
        raise DomainError("representatives are computed over Z")
    n_p = c.dim(p)
    if p >= 1:
        low = smith_normal_form(c.boundary(p), transforms=True)
        kernel_cols = list(range(low.rank, n_p))
        K = [[low.V[i][j] for j in kernel_cols] for i in range(n_p)]
        # coordinates of a kernel vector: rows rank.. of vinv applied to it
        def coords(vec):
            return [sum(low.vinv[j][i] * vec.get(i, 0) for i in vec)
                    for j in kernel_cols]
    else:
        kernel_cols = list(range(n_p))
        K = [[int(i == j) for j in range(n_p)] for i in range(n_p)]

        def coords(vec):
            return [vec.get(j, 0) for j in range(n_p)]
    kdim = len(kernel_cols)
    high = c.boundary(p + 1)
    bcols = high.col_dicts()
    data = {}
    for j in range(high.cols):
        col = bcols.get(j, {})
        if not col:
            continue
        for i, v in enumerate(coords(col)):
            if v:
                data[(i, j)] = v
    X = SparseMatrix.from_dict(kdim, high.cols, data, ZZ)
    xs = smith_normal_form(X, transforms=True)
    reps = []
    for i in range(xs.rank, kdim):  # free part only; torsion is reported as invariants
        gen_coords = [xs.uinv[t][i] for t in range(kdim)]
        vec = {}
        for row in range(n_p):
            s = sum(K[row][t] * gen_coords[t] for t in range(kdim))
            if s:
                vec[row] = s
        reps.append(vec)
    return tuple(reps)


# ---------------------------------------------------------------------------
# Weight decomposition and the word complex
# ---------------------------------------------------------------------------

def weight_decompose(c: ChainComplexData) -> list[tuple[int, ChainComplexData]]:
    """Split a loop-count-labelled complex into its weight summands.

    Requires a = 0 (the differential preserves the number of loops there);
    raises if any boundary entry crosses two weight blocks.
    """
    if not c.ring.a_is_zero:
        raise LinearAlgebraError("weight decomposition needs a = 0")
    if c.weights is None:
        raise LinearAlgebraError("complex carries no loop-count labels")
    all_w = sorted({w for p in c.basis for w in c.weights.get(p, ())})
    out = []
    for w in all_w:
        sel = {p: [i for i, wi in enumerate(c.weights.get(p, ())) if wi == w]
               for p in range(c.max_degree + 1)}
        remap = {p: {i: k for k, i in enumerate(sel[p])} for p in sel}
        basis = {p: tuple(c.basis.get(p, ())[i] for i in sel[p]) for p in sel}
        mats = {}
        for p in range(1, c.max_degree + 1):
            data = {}
            rmap, cmap = remap[p - 1], remap[p]
            for r, col, v in c.boundary(p).entries:
                rin, cin = r in rmap, col in cmap
                if rin != cin:
                    raise LinearAlgebraError(
                        f"boundary entry ({r},{col}) in degree {p} crosses weights")
                if cin:
                    data[(rmap[r], cmap[col])] = v
            mats[p] = SparseMatrix.from_dict(
                len(sel[p - 1]), len(sel[p]), data, c.ring.domain)
        out.append((w, ChainComplexData(
            c.ring, c.max_degree, basis, mats,
            weights={p: tuple(w for _ in sel[p]) for p in sel},
            description=f"{c.description}[weight {w}]")))
    return out


def build_word_complex(alphabet_size: int, max_degree: int,
                       ring: PointedRing | None = None) -> ChainComplexData:
    """Complex of nonempty words on a finite alphabet.

    Degree p is spanned by the words of length p; the boundary is the
    alternating sum of single-letter deletions, the first deletion with
    positive sign.  Its homology is one copy of the ring in degree 1.
    """
    if alphabet_size < 1:
        raise LinearAlgebraError("alphabet_size must be >= 1")
    ring = ring or PointedRing.make(ZZ, 0)
    dom = ring.domain
    basis: dict[int, tuple[str, ...]] = {0: ()}
    words: dict[int, list[tuple[int, ...]]] = {0: []}
    for p in range(1, max_degree + 1):
        cur = [(i,) for i in range(1, alphabet_size + 1)] if p == 1 else \
            [w + (i,) for w in words[p - 1] for i in range(1, alphabet_size + 1)]
        cur.sort()
        words[p] = cur
        basis[p] = tuple(".".join(map(str, w)) for w in cur)
    mats = {}
    one = dom.one()
    for p in range(2, max_degree + 1):
        index = {w: i for i, w in enumerate(words[p - 1])}
        data = {}
        for j, w in enumerate(words[p]):
            for i in range(p):
                tgt = index[w[:i] + w[i + 1:]]
                sign = one if i % 2 == 0 else dom.neg(one)
                key = (tgt, j)
                data[key] = dom.add(data.get(key, dom.zero()), sign)
        mats[p] = SparseMatrix.from_dict(
            len(words[p - 1]), len(words[p]), data, dom)
    if max_degree >= 1:
        mats[1] = zero_matrix(0, len(words[1]), dom)
    return ChainComplexData(ring, max_degree, basis, mats,
                            description=f"words on {alphabet_size} letters")
