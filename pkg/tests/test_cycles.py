import math
import time
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from mockfourier import pair
from mockfourier.cycles import (
    ExtremeCycle,
    check_hadamard,
    find_extreme_cycles,
    hadamard_matrix,
    verify_cycle,
)
from mockfourier.errors import CongruentElements, MissingZero, NotUnitary, SizeMismatch
from mockfourier.expsum import m_B
from mockfourier.ifs import validate_system
from mockfourier.reference import JP_TABLE

from strategies import hadamard_pairs

JP = validate_system(4, [0, 2])


def points(cycles):
    return [tuple(c.points) for c in cycles]


@pytest.mark.parametrize("L", [(0, 1), (0, 17), (0, 3), (0, 15)])
def test_valid_jp_pairs(L):
    p = check_hadamard(JP, L)
    assert p.unitarity_defect <= 1e-10
    assert p.N == 2


def test_not_unitary_carries_defect():
    with pytest.raises(NotUnitary) as info:
        check_hadamard(JP, [0, 2])
    assert "defect" in str(info.value)


@pytest.mark.parametrize(
    "L, err",
    [((0, 1, 3), SizeMismatch), ((1, 3), MissingZero), ((0, 4), CongruentElements)],
)
def test_hadamard_errors(L, err):
    with pytest.raises(err):
        check_hadamard(JP, L)


def test_hadamard_matrix_oracle():
    # independent 2x2 construction: rows b=0,2 and columns l=0,1 -> [[1,1],[1,-1]]/sqrt2
    M = hadamard_matrix(4, [0, 2], [0, 1])
    assert np.allclose(M, np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)


def test_cycles_examples(jp15, ex38, jp1):
    assert points(find_extreme_cycles(jp15)) == [(0,), (1, 4), (5,)]
    assert points(find_extreme_cycles(ex38)) == [(0,), (1, 2)]
    assert points(find_extreme_cycles(jp1)) == [(0,)]


def test_cycle_digits_close_up(jp15):
    for c in find_extreme_cycles(jp15):
        for i, (x, l) in enumerate(zip(c.points, c.digits)):
            assert (x + l) / 4 == c.points[(i + 1) % c.period]


def _brute_force_cycles(R, B, L):
    # oracle: iterate every l-sequence map on the whole candidate lattice for a long time
    d = math.gcd(*B) or 1
    lo, hi = Fraction(min(L), R - 1), Fraction(max(L), R - 1)
    cands = [Fraction(k, d) for k in range(int(lo * d) - 1, int(hi * d) + 2) if lo <= Fraction(k, d) <= hi]
    found = set()
    for x in cands:
        succ = [(x + l) / R for l in L if ((x + l) / R * d).denominator == 1]
        if not succ:
            continue
        # follow the orbit
        orbit = [x]
        y = x
        for _ in range(len(cands) + 1):
            nxt = [(y + l) / R for l in L if ((y + l) / R * d).denominator == 1]
            if not nxt:
                break
            y = nxt[0]
            if y == x:
                found.add(frozenset(orbit))
                break
            orbit.append(y)
    return found


@pytest.mark.parametrize("p", sorted(JP_TABLE))
def test_cycles_against_brute_force(p):
    cyc = find_extreme_cycles(check_hadamard(JP, (0, p)))
    assert {frozenset(c.points) for c in cyc} == _brute_force_cycles(4, (0, 2), (0, p))


def test_full_table_is_fast():
    t0 = time.perf_counter()
    for p in JP_TABLE:
        find_extreme_cycles(check_hadamard(JP, (0, p)))
    assert time.perf_counter() - t0 < 1.0


def test_verify_cycle_examples(ex38):
    jp1 = pair(4, [0, 2], [0, 1])
    assert verify_cycle(jp1, ExtremeCycle((Fraction(0),), (0,)))
    assert verify_cycle(ex38, ExtremeCycle((Fraction(1), Fraction(2)), (5, 1)))
    # x = 1/2 has no successor on the lattice (1/2 + l)/4 with l in {0,1}
    bad = verify_cycle(jp1, ExtremeCycle((Fraction(1, 2),)))
    assert not bad and "no digit" in bad.reason
    assert not verify_cycle(jp1, ExtremeCycle((Fraction(1),)))


def test_verify_cycle_rejects_wrong_digits(ex38):
    assert not verify_cycle(ex38, ExtremeCycle((Fraction(1), Fraction(2)), (1, 5)))
    assert not verify_cycle(ex38, ExtremeCycle((Fraction(1), Fraction(2)), (7, 1)))


@settings(max_examples=40, deadline=None)
@given(p=hadamard_pairs)
def test_cycle_invariants(p):
    cycles = find_extreme_cycles(p)
    assert (Fraction(0),) in points(cycles)
    d = p.system.d
    mb = m_B(p.system)
    lo, hi = Fraction(min(p.L), p.R - 1), Fraction(max(p.L), p.R - 1)
    for c in cycles:
        assert verify_cycle(p, c)
        assert c.points[0] == min(c.points)
        for x in c.points:
            assert (x * d).denominator == 1
            assert lo <= x <= hi
            assert abs(abs(mb(x)) - 1) <= 1e-12


@settings(max_examples=25, deadline=None)
@given(p=hadamard_pairs)
def test_swapped_is_hadamard(p):
    q = p.swapped()
    assert q.B == tuple(sorted(p.L)) and q.L == p.B
