import random
from fractions import Fraction

import pytest

from planarloops import (ChainComplexData, ComplexSpec, DomainError,
                         PointedRing, QQ, SparseMatrix, ZA, ZZ,
                         build_complex, build_word_complex, homology,
                         integer_kernel_basis, is_boundary, is_cycle,
                         minimal_model, prime_field, rank_over_field,
                         smith_normal_form, solve_integer, truncated_complex,
                         validate_d_squared, weight_decompose)
from planarloops.homology import LinearAlgebraError, zero_matrix
from planarloops.loops import CLOSED

Z0 = PointedRing.make(ZZ, 0)


def M(rows, cols, data):
    return SparseMatrix.from_dict(rows, cols, data, ZZ)


# -- independent dense oracles ------------------------------------------------

def dense_rank_q(rows, cols, entries):
    m = [[Fraction(0)] * cols for _ in range(rows)]
    for r, c, v in entries:
        m[r][c] = Fraction(v)
    rank = 0
    for col in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][col]:
                q = m[i][col]
                m[i] = [x - q * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def matmul_dense(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


# -- Smith normal form ---------------------------------------------------------

def test_snf_examples():
    assert smith_normal_form(M(1, 1, {(0, 0): 2})).invariants == (2,)
    assert smith_normal_form(
        M(2, 2, {(0, 0): 2, (0, 1): 4, (1, 0): 6, (1, 1): 8})).invariants == (2, 4)
    sf = smith_normal_form(zero_matrix(3, 4))
    assert sf.invariants == () and sf.rank == 0


def test_snf_transforms_certify():
    rng = random.Random(10)
    for _ in range(60):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        data = {(r, c): rng.randint(-9, 9) for r in range(rows) for c in range(cols)
                if rng.random() < 0.6}
        A = SparseMatrix.from_dict(rows, cols, data, ZZ)
        sf = smith_normal_form(A, transforms=True)
        dense = [[0] * cols for _ in range(rows)]
        for r, c, v in A.entries:
            dense[r][c] = v
        S = matmul_dense(matmul_dense(sf.U, dense), sf.V)
        for i in range(rows):
            for j in range(cols):
                want = sf.invariants[i] if i == j and i < len(sf.invariants) else 0
                assert S[i][j] == want
        # inverses really invert
        for P, Pi, n in ((sf.U, sf.uinv, rows), (sf.V, sf.vinv, cols)):
            I = matmul_dense(P, Pi)
            assert all(I[i][j] == (i == j) for i in range(n) for j in range(n))
        # invariants agree with the sparse (transform-free) path
        assert smith_normal_form(A).invariants == sf.invariants


def test_snf_invariant_under_unimodular_ops():
    rng = random.Random(11)
    for _ in range(40):
        rows, cols = rng.randint(2, 5), rng.randint(2, 5)
        data = {(r, c): rng.randint(-6, 6) for r in range(rows) for c in range(cols)
                if rng.random() < 0.7}
        A = SparseMatrix.from_dict(rows, cols, data, ZZ)
        base = smith_normal_form(A).invariants
        dense = [[0] * cols for _ in range(rows)]
        for r, c, v in A.entries:
            dense[r][c] = v
        for _ in range(10):
            if rng.random() < 0.5 and rows > 1:
                i, j = rng.sample(range(rows), 2)
                q = rng.randint(-3, 3)
                for t in range(cols):
                    dense[i][t] += q * dense[j][t]
            elif cols > 1:
                i, j = rng.sample(range(cols), 2)
                q = rng.randint(-3, 3)
                for t in range(rows):
                    dense[t][i] += q * dense[t][j]
        B = SparseMatrix.from_dict(
            rows, cols,
            {(r, c): dense[r][c] for r in range(rows) for c in range(cols)}, ZZ)
        assert smith_normal_form(B).invariants == base


def test_rank_over_field_examples():
    two = M(1, 1, {(0, 0): 2})
    assert rank_over_field(two, prime_field(2)) == 0
    assert rank_over_field(two, QQ) == 1
    eye = M(5, 5, {(i, i): 1 for i in range(5)})
    assert rank_over_field(eye, QQ) == 5
    with pytest.raises(DomainError):
        rank_over_field(eye, ZZ)


def test_rank_matches_snf_mod_p():
    rng = random.Random(12)
    for _ in range(50):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        data = {(r, c): rng.randint(-12, 12) for r in range(rows)
                for c in range(cols) if rng.random() < 0.6}
        A = SparseMatrix.from_dict(rows, cols, data, ZZ)
        invs = smith_normal_form(A).invariants
        for p in (2, 3, 5):
            expected = sum(1 for d in invs if d % p)
            assert rank_over_field(A, prime_field(p)) == expected
        assert rank_over_field(A, QQ) == len(invs)
        assert rank_over_field(A, QQ) == dense_rank_q(rows, cols, A.entries)


def test_solve_integer_and_kernel():
    A = M(2, 3, {(0, 0): 2, (0, 1): 4, (1, 2): 3})
    sol = solve_integer(A, {0: 6, 1: 3})
    assert sol is not None
    assert A.apply(sol) == {0: 6, 1: 3}
    assert solve_integer(A, {0: 1}) is None
    for k in integer_kernel_basis(A):
        assert A.apply(k) == {}


def test_validate_d_squared_catches_corruption():
    cx = build_word_complex(2, 3)
    assert validate_d_squared(cx).ok
    bad = dict(cx.matrices)
    m2 = bad[2]
    r0, c0, v0 = m2.entries[0]
    flipped = {(r, c): v for r, c, v in m2.entries}
    flipped[(r0, c0)] = -v0
    bad[2] = SparseMatrix.from_dict(m2.rows, m2.cols, flipped, ZZ)
    broken = ChainComplexData(cx.ring, cx.max_degree, cx.basis, bad)
    rep = validate_d_squared(broken)
    assert not rep.ok and rep.failures
    assert rep.failures[0][0] == 3  # located in the composite leaving degree 3


def test_homology_examples():
    wc = build_word_complex(2, 4)
    hs = homology(wc, range(1, 4))
    assert [(h.free_rank, h.torsion) for h in hs] == [(1, ()), (0, ()), (0, ())]
    mz = truncated_complex(minimal_model(4, PointedRing.make(QQ, 0)), 5)
    assert [h.free_rank for h in homology(mz, range(1, 5))] == [1, 0, 0, 1]


def test_homology_truncation_edge_is_refused():
    wc = build_word_complex(2, 4)
    with pytest.raises(LinearAlgebraError):
        homology(wc, [4])


def test_cycle_and_boundary_examples():
    mz = truncated_complex(minimal_model(4, Z0), 5)
    i3 = {e: i for i, e in enumerate(mz.basis[3])}
    v = {i3["x1.x1.x1"]: 2}
    assert is_cycle(mz, v, 3) and is_boundary(mz, v, 3)
    assert not is_boundary(mz, {i3["x1.x1.x1"]: 1}, 3)
    assert is_cycle(mz, {}, 3) and is_boundary(mz, {}, 3)
    mq = truncated_complex(minimal_model(4, PointedRing.make(QQ, 0)), 5)
    assert is_boundary(mq, {i3["x1.x1.x1"]: Fraction(1)}, 3)


def test_representatives_are_nonbounding_cycles():
    for cx in (truncated_complex(minimal_model(4, Z0), 5),
               build_word_complex(3, 4)):
        for h in homology(cx, range(1, cx.max_degree), representatives=True):
            assert len(h.representatives) == h.free_rank
            for rep in h.representatives:
                assert is_cycle(cx, rep, h.degree)
                assert not is_boundary(cx, rep, h.degree)


def test_weight_decompose():
    cx = build_complex(ComplexSpec(4, Z0, CLOSED, max_degree=3))
    parts = weight_decompose(cx)
    assert [w for w, _ in parts] == [1, 2, 3, 4, 5, 6]
    for p in range(4):
        assert sum(sub.dim(p) for _, sub in parts) == cx.dim(p)
    assert [sub.dim(1) for _, sub in parts[:2]] == [2, 2]
    assert all(sub.dim(1) == 0 for _, sub in parts[2:])
    # homology of the sum is the sum of homologies
    total = [0] * 3
    for _, sub in parts:
        for h in homology(sub, range(1, 3)):
            total[h.degree] += h.free_rank
    direct = {h.degree: h.free_rank for h in homology(cx, range(1, 3))}
    for p in (1, 2):
        assert total[p] == direct[p]
    with pytest.raises(LinearAlgebraError):
        weight_decompose(build_word_complex(2, 3))


def test_word_complex_structure():
    wc = build_word_complex(3, 4)
    assert [wc.dim(p) for p in range(5)] == [0, 3, 9, 27, 81]
    assert validate_d_squared(wc).ok
    lr = build_complex(ComplexSpec(4, Z0, CLOSED, max_degree=1))
    assert wc.to_json()["basis"]["1"] == ["1", "2", "3"]


def test_homology_json_schema():
    wc = build_word_complex(2, 3)
    h = homology(wc, [1])[0]
    js = h.to_json()
    assert set(js) == {"degree", "rank", "torsion", "basis_size"}


def test_universal_coefficients_on_model():
    # field dimensions against integral free rank + adjacent p-torsion
    z = truncated_complex(minimal_model(4, Z0), 5)
    integral = {h.degree: h for h in homology(z, range(1, 5))}
    for p in (2, 3, 5):
        ring = PointedRing.make(prime_field(p), 0)
        fp = truncated_complex(minimal_model(4, ring), 5)
        for h in homology(fp, range(1, 5)):
            here = integral[h.degree]
            below = integral.get(h.degree - 1)
            expect = here.free_rank \
                + sum(1 for t in here.torsion if t % p == 0) \
                + (sum(1 for t in below.torsion if t % p == 0) if below else 0)
            assert h.free_rank == expect
    q = truncated_complex(minimal_model(4, PointedRing.make(QQ, 0)), 5)
    for h in homology(q, range(1, 5)):
        assert h.free_rank == integral[h.degree].free_rank


def test_matrix_domain_errors():
    with pytest.raises(DomainError):
        smith_normal_form(SparseMatrix.from_dict(1, 1, {(0, 0): Fraction(1, 2)}, QQ))
    with pytest.raises(LinearAlgebraError):
        SparseMatrix(1, 1, ((0, 0, 0),), ZZ)
    with pytest.raises(LinearAlgebraError):
        SparseMatrix(1, 1, ((0, 2, 1),), ZZ)
