from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iasi.numeric_sets import APDescriptor, NotAPError, SetLabel, ap_of, deterministic_index, make_ap, sumset


def brute_sumset(A, B):
    out = []
    for a, b in product(A, B):
        if a + b not in out:
            out.append(a + b)
    return sorted(out)


labels = st.lists(st.integers(0, 60), min_size=1, max_size=8).map(SetLabel)


@pytest.mark.parametrize("args, expected", [
    ((2, 3, 3), [2, 5, 8]),
    ((7, 5, 1), [7]),
    ((0, 1, 4), [0, 1, 2, 3]),
])
def test_make_ap(args, expected):
    assert list(make_ap(*args)) == expected


@pytest.mark.parametrize("args", [(0, 1, 0), (0, 0, 3), (-1, 1, 2)])
def test_make_ap_rejects(args):
    with pytest.raises(ValueError):
        make_ap(*args)


def test_sumset_examples():
    assert list(sumset(SetLabel([1, 2]), SetLabel([3, 4]))) == [4, 5, 6]
    assert sumset(SetLabel([0]), make_ap(2, 3, 3)) == make_ap(2, 3, 3)
    A, B = SetLabel([1, 3, 5]), SetLabel([2, 6, 10])
    expected = brute_sumset(A, B)
    assert expected == [3, 5, 7, 9, 11, 13, 15]
    assert list(sumset(A, B)) == expected


def test_setlabel_invariants():
    with pytest.raises(ValueError):
        SetLabel([])
    with pytest.raises(ValueError):
        SetLabel([-1, 2])
    with pytest.raises(TypeError):
        SetLabel([1.5])
    assert SetLabel([3, 1, 3]) == (1, 3)
    with pytest.raises(ValueError):
        SetLabel.from_json([3, 1])
    assert SetLabel.from_json([1, 4]).to_json() == [1, 4]


def test_big_integers_do_not_wrap():
    big = 2**80
    assert list(sumset(SetLabel([big]), SetLabel([big, big + 1]))) == [2 * big, 2 * big + 1]


def test_ap_of_examples():
    assert ap_of(SetLabel([2, 5, 8, 11])) == APDescriptor(2, 3, 4)
    assert ap_of(SetLabel([1, 2, 4])) is None
    assert ap_of(SetLabel([3])) == APDescriptor(3, None, 1)
    assert ap_of(SetLabel([4, 9])) == APDescriptor(4, 5, 2)


def test_deterministic_index_examples():
    assert deterministic_index(SetLabel([0, 4, 8])) == 4
    assert deterministic_index(SetLabel([9])) is None
    with pytest.raises(NotAPError):
        deterministic_index(SetLabel([1, 2, 4]))


@given(labels, labels)
def test_sumset_matches_brute_force(A, B):
    assert list(sumset(A, B)) == brute_sumset(A, B)


@given(labels, labels)
def test_sumset_commutative_and_size_bounds(A, B):
    S = sumset(A, B)
    assert S == sumset(B, A)
    assert max(len(A), len(B)) <= len(S) <= len(A) * len(B)


@given(st.integers(0, 50), st.integers(1, 9), st.integers(2, 8))
def test_make_ap_round_trip(a, d, n):
    desc = ap_of(make_ap(a, d, n))
    assert desc == APDescriptor(a, d, n)
    assert desc.expand() == make_ap(a, d, n)


@given(labels)
def test_ap_of_expands_back(A):
    desc = ap_of(A)
    gaps = {y - x for x, y in zip(A, A[1:])}
    assert (desc is not None) == (len(gaps) <= 1)
    if desc is not None:
        assert desc.expand() == A


@given(st.data())
def test_ap_closure_law(data):
    a, b = data.draw(st.integers(0, 30)), data.draw(st.integers(0, 30))
    d = data.draw(st.integers(1, 6))
    n, m = data.draw(st.integers(1, 6)), data.draw(st.integers(1, 6))
    k = data.draw(st.integers(1, n))
    S = sumset(make_ap(a, d, n), make_ap(b, k * d, m))
    assert len(S) == n + k * (m - 1)
    desc = ap_of(S)
    assert desc is not None
    assert desc.diff == (d if len(S) > 1 else None)
