import random

import pytest

from zkmassey import BACKEND, GF, GF2, QQ
from zkmassey import _core_py
from zkmassey.linalg import SpanTracker, get_ops

from conftest import ALL_FIELDS, FIELD_IDS


def random_rows(ops, f, rng, nrows, ncols):
    def scalar():
        if f.kind == "gf2":
            return rng.randrange(2)
        if f.kind == "gfp":
            return rng.randrange(f.p)
        return f.from_int(rng.randint(-3, 3))

    return [ops.from_coeffs([scalar() for _ in range(ncols)]) for _ in range(nrows)]


def matvec(ops, f, rows, ncols, x):
    out = []
    for row in rows:
        acc = f.zero
        for j in range(ncols):
            acc = f.add(acc, f.mul(ops.get(row, j), ops.get(x, j)))
        out.append(acc)
    return out


def test_compiled_backend_is_active():
    # The build ships a compiled kernel; the suite should exercise it.
    assert BACKEND in ("compiled", "python")
    if BACKEND == "python":
        pytest.skip("compiled kernel not built in this environment")


def test_backend_parity_gf2():
    _core = pytest.importorskip("zkmassey._core")
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(0, 12)
        ncols = rng.randint(1, 20)
        rows = [rng.randrange(1 << ncols) for _ in range(n)]
        assert _core.rref_gf2(list(rows), ncols) == _core_py.rref_gf2(list(rows), ncols)


def test_backend_parity_mod():
    _core = pytest.importorskip("zkmassey._core")
    rng = random.Random(6)
    for p in (3, 5, 7, 31):
        for _ in range(80):
            n = rng.randint(1, 8)
            ncols = rng.randint(1, 10)
            rows = [[rng.randrange(p) for _ in range(ncols)] for _ in range(n)]
            got = _core.rref_mod([list(r) for r in rows], p)
            want = _core_py.rref_mod([list(r) for r in rows], p)
            assert (list(map(list, got[0])), list(got[1])) == (want[0], want[1])


@pytest.mark.parametrize("f", ALL_FIELDS, ids=FIELD_IDS)
def test_rref_idempotent_and_order_independent(f):
    # RREF is unique, so re-reducing or permuting the input rows changes nothing.
    ops = get_ops(f)
    rng = random.Random(7)
    for _ in range(60):
        nrows, ncols = rng.randint(1, 7), rng.randint(1, 7)
        rows = random_rows(ops, f, rng, nrows, ncols)
        red, pivots = ops.rref(rows, ncols)
        assert ops.rref(red, ncols) == (list(red), pivots)
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert ops.rref(shuffled, ncols) == (list(red), pivots)
        assert pivots == sorted(pivots)
        assert len(red) == len(pivots) <= min(nrows, ncols)


@pytest.mark.parametrize("f", ALL_FIELDS, ids=FIELD_IDS)
def test_kernel_basis(f):
    ops = get_ops(f)
    rng = random.Random(8)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        rows = random_rows(ops, f, rng, nrows, ncols)
        _, pivots = ops.rref(rows, ncols)
        kernel = ops.kernel_basis(rows, ncols)
        # rank-nullity, and every basis vector really is in the kernel
        assert len(pivots) + len(kernel) == ncols
        for vec in kernel:
            assert not ops.is_zero_row(vec)
            assert all(f.is_zero(b) for b in matvec(ops, f, rows, ncols, vec))


@pytest.mark.parametrize("f", ALL_FIELDS, ids=FIELD_IDS)
def test_solve(f):
    ops = get_ops(f)
    rng = random.Random(9)
    solvable = unsolvable = 0
    for _ in range(80):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        rows = random_rows(ops, f, rng, nrows, ncols)
        x = random_rows(ops, f, rng, 1, ncols)[0]
        rhs = matvec(ops, f, rows, ncols, x)
        sol = ops.solve(rows, ncols, rhs)
        assert sol is not None
        assert matvec(ops, f, rows, ncols, sol) == rhs
        solvable += 1
        # canonical solution: free coordinates are zero
        _, pivots = ops.rref(rows, ncols)
        for j in range(ncols):
            if j not in pivots:
                assert f.is_zero(ops.get(sol, j))
        # break solvability by appending the inconsistent row 0 = 1
        rows2 = rows + [ops.from_coeffs([f.zero] * ncols)]
        rhs2 = rhs + [f.one]
        if ops.solve(rows2, ncols, rhs2) is None:
            unsolvable += 1
    assert solvable == unsolvable == 80


@pytest.mark.parametrize("f", ALL_FIELDS, ids=FIELD_IDS)
def test_in_span_and_reduce(f):
    ops = get_ops(f)
    rng = random.Random(10)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(2, 7)
        rows = random_rows(ops, f, rng, nrows, ncols)
        red, pivots = ops.rref(rows, ncols)
        # random combinations of the rows are in the span
        combo = ops.from_coeffs([f.zero] * ncols)
        for row in rows:
            if rng.randrange(2):
                combo = ops.sub_scaled(combo, row, f.from_int(-rng.randint(1, 3)))
        assert ops.in_span(red, pivots, combo)
        assert ops.is_zero_row(ops.reduce(red, pivots, combo))
        # a unit vector on a non-pivot column is not, unless it reduces to zero
        free = [j for j in range(ncols) if j not in pivots]
        if free:
            unit = ops.from_items(ncols, [(free[0], f.one)])
            assert not ops.in_span(red, pivots, unit)


@pytest.mark.parametrize("f", ALL_FIELDS, ids=FIELD_IDS)
def test_span_tracker_matches_rref(f):
    ops = get_ops(f)
    rng = random.Random(11)
    for _ in range(30):
        ncols = rng.randint(1, 7)
        rows = random_rows(ops, f, rng, rng.randint(0, 8), ncols)
        tracker = SpanTracker(ops, ncols)
        rank = 0
        for i, row in enumerate(rows):
            prior, pivots = ops.rref(rows[: i + 1], ncols)
            grew = tracker.add(row)
            assert grew == (len(pivots) > rank)
            rank = len(pivots)
            assert tracker.rank == rank
        for row in rows:
            assert tracker.contains(row)
        red, pivots = ops.rref(rows, ncols)
        free = [j for j in range(ncols) if j not in pivots]
        if free:
            assert not tracker.contains(ops.from_items(ncols, [(free[0], f.one)]))


def test_gf2_row_round_trip():
    ops = get_ops(GF2)
    assert ops.from_coeffs((1, 0, 1, 1)) == 0b1101
    assert ops.to_coeffs(0b1101, 4) == (1, 0, 1, 1)
    assert ops.from_items(4, [(0, 1), (2, 1), (0, 1)]) == 0b100  # xor semantics


def test_dense_row_round_trip():
    for f in (GF(5), QQ):
        ops = get_ops(f)
        coeffs = tuple(f.from_int(n) for n in (1, 0, 3))
        row = ops.from_coeffs(coeffs)
        assert ops.to_coeffs(row, 3) == coeffs
        assert ops.get(row, 2) == f.from_int(3)
