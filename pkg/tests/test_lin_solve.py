import random
from fractions import Fraction

import pytest

from gflquat.gfl_quat import gfl_quaternion, norm_coefficients
from gflquat.lin_solve import (
    PreconditionError,
    centralizer_family,
    commutant,
    literal_trace_family,
    nullspace,
    rank,
    same_span,
    solve_ax_xb,
)
from gflquat.quat import AlgebraParams, Quaternion
from gflquat.sequences import GFLParams, gfl, lucas

H11 = AlgebraParams(-1, -1)
H15 = AlgebraParams(-1, 5)


def test_nullspace_and_rank():
    m = [[1, 2, 0, 0], [2, 4, 0, 0], [0, 0, 1, -1], [0, 0, 0, 0]]
    ns = nullspace(m)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)
    assert rank(m) == 2
    assert rank([]) == 0


def test_commutant_examples():
    assert commutant(H15.one()).dimension == 4
    c = commutant(H15.basis()[1])
    assert c.dimension == 2
    assert same_span(c.elements, [H15.one(), H15.basis()[1]])
    G = gfl_quaternion(1, 1, 0, H15)
    c = commutant(G)
    assert c.dimension == 2 and same_span(c.elements, [*c.elements, G])


def test_commutant_elements_commute():
    a = AlgebraParams(2, 3).quaternion(1, 2, -3, Fraction(1, 2))
    for x in commutant(a).elements:
        assert x * a == a * x


def test_commutant_dimensions_random():
    rng = random.Random(3)
    for p in (3, 5, 13):
        H = AlgebraParams(-1, p)
        for _ in range(30):
            a = Quaternion(H, *(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4)))
            assert commutant(a).dimension == (4 if a.is_scalar() else 2)


def test_solve_a_equals_b_i():
    i = H11.basis()[1]
    fam = solve_ax_xb(i, i)
    assert fam.basis_a == 2 * i
    assert fam.basis_b == H11.one() * (-2 * H11.alpha)
    assert same_span([fam.basis_a, fam.basis_b], [i, H11.one()])


def test_solve_i_j():
    _, i, j, k = H11.basis()
    fam = solve_ax_xb(i, j)
    assert fam.basis_a == i + j
    assert fam.basis_b == 1 - k
    assert i * (i + j) == (i + j) * j == -1 + k
    assert i * (1 - k) == (1 - k) * j == i + j


def test_solve_rejects_conjugate():
    i = H11.basis()[1]
    with pytest.raises(PreconditionError, match="conj"):
        solve_ax_xb(i, -i)


def test_solve_preconditions():
    one, i, j, _ = H11.basis()
    with pytest.raises(PreconditionError, match="scalar"):
        solve_ax_xb(one, i)
    with pytest.raises(PreconditionError, match="nonzero"):
        solve_ax_xb(H15.quaternion(1, 2, 1, 0), H15.quaternion(1, 2, 1, 0))
    with pytest.raises(PreconditionError, match="similar"):
        solve_ax_xb(i, 2 * j)


def test_literal_trace_reading_fails_with_scalar_part():
    a, b = H11.quaternion(1, 1, 0, 0), H11.quaternion(1, 0, 1, 0)
    la, _ = literal_trace_family(a, b)
    assert a * la != la * b
    fam = solve_ax_xb(a, b)
    assert a * fam.basis_a == fam.basis_a * b


def test_solution_family_random_similar_pairs():
    rng = random.Random(11)
    done = 0
    while done < 50:
        H = AlgebraParams(-1, rng.choice([3, 5, 13]))
        a = Quaternion(H, *(rng.randint(-6, 6) for _ in range(4)))
        y = Quaternion(H, *(rng.randint(-6, 6) for _ in range(4)))
        if a.is_scalar() or a.norm() == 0 or y.norm() == 0:
            continue
        b = y.inverse() * a * y
        if a == b.conj():
            continue
        fam = solve_ax_xb(a, b)
        for _ in range(20):
            l1 = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
            l2 = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
            x = fam.instance(l1, l2)
            assert a * x == x * b
        done += 1


def test_centralizer_example_half_lambda():
    spec = GFLParams(1, 1, 0)
    fam = centralizer_family(spec, 5)
    G = gfl_quaternion(1, 1, 0, H15)
    x = fam.instance(Fraction(1, 2), 0)
    assert x == G.pure_part() == H15.quaternion(0, 1, 1, 2)
    assert x * G == G * x


def test_centralizer_scalar_instances():
    fam = centralizer_family(GFLParams(2, 3, 1), 5)
    for l2 in (1, -7, Fraction(2, 9)):
        x = fam.instance(0, l2)
        assert x.is_scalar()


def test_centralizer_span_equals_commutant():
    fam = centralizer_family(GFLParams(3, 13, 2), 13)
    G = gfl_quaternion(3, 13, 2, AlgebraParams(-1, 13))
    assert same_span([fam.basis_a, fam.basis_b], commutant(G).elements)


def test_centralizer_rejects_zero():
    with pytest.raises(PreconditionError):
        centralizer_family(GFLParams(4, 0, 0), 5)


def test_centralizer_meta_A_and_grouping():
    for n in range(1, 13):
        for p, q in [(13, 2), (17, -5), (5, 3), (29, 0)]:
            fam = centralizer_family(GFLParams(n, p, q), p)
            s = (-1) ** n
            assert fam.meta.A == Fraction(2 * p * p, 5) * s + 2 * q * q * s + 2 * p * q * s
            assert fam.basis_b.c1 == fam.basis_b.c2 == fam.basis_b.c3 == 0
            for l1, l2 in [(1, 0), (0, 1), (Fraction(-2, 3), Fraction(5, 11))]:
                x = fam.instance(l1, l2)
                assert fam.meta.stated_element(l1, l2) == x
                assert fam.meta.gamma_per_lambda1 == 2 * p and fam.meta.delta_per_lambda1 == 2 * q


def test_pure_part_norm_matches_grouped_expression():
    # n(G - g_n) = g_{2n}^{a - 2pq, b - q^2} - (p^2/5) l_{2n-2} - A
    for n in range(1, 15):
        p, q = 13, -4
        G = gfl_quaternion(n, p, q, AlgebraParams(-1, p))
        a, b = norm_coefficients(p, q)
        s = (-1) ** n
        A = Fraction(2 * p * p, 5) * s + 2 * q * q * s + 2 * p * q * s
        grouped = gfl(2 * n, a - 2 * p * q, b - q * q) - Fraction(p * p, 5) * lucas(2 * n - 2) - A
        assert G.pure_part().norm() == grouped
        assert G.norm() - G.c0 ** 2 == grouped
