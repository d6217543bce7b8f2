import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosetlab import _accel
from cosetlab.catalog import symmetric
from cosetlab.group import generate
from cosetlab.perm import Permutation

needs_numba = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")

S5 = symmetric(5)
gen_lists = st.lists(st.permutations(range(1, 6)).map(Permutation), max_size=3)


def test_env_flag_disables_jit(monkeypatch):
    monkeypatch.setenv("COSETLAB_DISABLE_JIT", "1")
    assert not _accel._jit_requested()
    monkeypatch.setenv("COSETLAB_DISABLE_JIT", "0")
    assert _accel._jit_requested()


def test_lookup_absent_rows():
    t = np.array([[0, 1, 2], [1, 0, 2], [2, 1, 0]], dtype=np.int32)
    rows = np.array([[2, 1, 0], [0, 2, 1], [0, 1, 2]], dtype=np.int32)
    assert _accel.lookup_np(t, rows).tolist() == [2, -1, 0]
    if _accel.HAVE_NUMBA:
        assert _accel.lookup_nb(t, rows).tolist() == [2, -1, 0]


def test_canonical_orders_lexicographically():
    rows = np.array([[2, 0, 1], [0, 2, 1], [2, 0, 1], [0, 1, 2]], dtype=np.int32)
    assert _accel.canonical(rows).tolist() == [[0, 1, 2], [0, 2, 1], [2, 0, 1]]


def test_inverse_rows():
    a = S5.table
    prod = _accel.compose_np(a, _accel.inverse(a))
    assert (prod == np.arange(5)).all()


@settings(max_examples=40, deadline=None)
@given(gen_lists, st.booleans())
def test_partition_matches_brute_force_min(gens, left):
    S = generate(gens, 5)
    t = S5.table
    label, reps = _accel.coset_partition_np(t, S.table, left)
    brute = _accel.min_label_np(t, t, S.table, left, np.arange(len(t)))
    assert (reps[label] == brute).all()


@needs_numba
@settings(max_examples=40, deadline=None)
@given(gen_lists, gen_lists, st.booleans())
def test_numba_matches_numpy(hg, kg, left):
    H, K = generate(hg, 5), generate(kg, 5)
    t = S5.table
    rows = _accel.compose_np(t, t[::-1].copy())
    assert np.array_equal(_accel.lookup_np(t, rows), _accel.lookup_nb(t, rows))
    assert np.array_equal(_accel.compose_np(t, rows), _accel.compose_nb(t, rows))
    w = np.arange(len(t), dtype=np.int64)
    assert np.array_equal(_accel.min_label_np(t, t, H.table, left, w),
                          _accel.min_label_nb(t, t, H.table, left, w))
    ln, rn = _accel.coset_partition_np(t, H.table, left)
    lj, rj = _accel.coset_partition_nb(t, H.table, left)
    assert np.array_equal(ln, lj) and np.array_equal(rn, rj)
    dn = _accel.double_coset_partition_np(t, ln, rn, K.table)
    dj = _accel.double_coset_partition_nb(t, lj, rj, K.table)
    assert all(np.array_equal(a, b) for a, b in zip(dn, dj))


def test_partition_rejects_non_subgroup():
    t = generate([Permutation([2, 3, 1])], 3).table
    bad = np.array([[1, 0, 2]], dtype=np.int32)
    with pytest.raises(ValueError):
        _accel.coset_partition_np(t, bad, True)
    if _accel.HAVE_NUMBA:
        with pytest.raises(ValueError):
            _accel.coset_partition_nb(t, bad, True)
