import itertools

import pytest

from gflquat.gfl_quat import (
    DecompositionTerm,
    build,
    decomposition_sum,
    p5_relation_findings,
    invertibility_report,
    norm_closed_form_i,
    norm_closed_form_ii,
    norm_coefficients,
    norm_direct,
    remark31_residual,
    thm31_scalar_decomposition,
)
from gflquat.quat import AlgebraParams
from gflquat.sequences import GFLParams
from oracles import F, L, g_oracle, norm_oracle


H11 = AlgebraParams(-1, -1)


def test_build_examples():
    assert build(GFLParams(1, 1, 0), H11).value.coords == (0, 1, 1, 2)
    assert build(GFLParams(1, 0, 1), H11).value.coords == (1, 3, 4, 7)
    assert not build(GFLParams(7, 0, 0), H11).value


def test_build_rejects_n_zero():
    with pytest.raises(ValueError):
        build(GFLParams(0, 1, 1), H11)


def test_window_invariant():
    for n in range(1, 30):
        for p, q in [(1, 0), (0, 1), (3, -7), (-2, 5)]:
            c0, c1, c2, c3 = build(GFLParams(n, p, q), H11).value.coords
            assert c2 == c0 + c1 and c3 == c1 + c2


def test_remark32_zero_iff_pq_zero():
    for n in range(1, 41):
        for p in range(-3, 4):
            for q in range(-3, 4):
                assert (not build(GFLParams(n, p, q), H11).value) == (p == q == 0)


def test_norm_direct_examples():
    assert norm_direct(GFLParams(1, 1, 0), 1) == -4
    assert norm_direct(GFLParams(1, 0, 0), 5) == 0
    assert norm_direct(GFLParams(1, 5, -2), 5) == norm_oracle(1, 5, -2, 5) == -120


def test_closed_form_examples():
    assert norm_closed_form_i(1, 1, 0) == -4
    assert norm_closed_form_i(1, 5, 1) == -1785
    assert norm_closed_form_i(2, 13, 0) == -28223
    coeffs, value = norm_closed_form_ii(1, 1, 0)
    assert coeffs == (5, -3) and value == -4
    coeffs, value = norm_closed_form_ii(4, 0, 0)
    assert coeffs == (0, 0) and value == 0


def test_coefficient_sum_links_the_two_forms():
    for p in range(-6, 7):
        for q in range(-6, 7):
            a, b = norm_coefficients(p, q)
            assert a + b == p ** 3 + p ** 2 + 8 * p ** 2 * q + 15 * p * q ** 2 + 2 * p * q


@pytest.mark.parametrize("fn", [norm_closed_form_i, norm_closed_form_ii])
def test_closed_forms_reject_n_zero(fn):
    with pytest.raises(ValueError):
        fn(0, 1, 1)


def test_closed_forms_match_oracle_sample():
    for n in (1, 2, 7, 30):
        for p in (1, 4, 19):
            for q in (-15, -2, 0, 9):
                d = norm_oracle(n, p, q, p)
                assert norm_direct(GFLParams(n, p, q), p) == d
                assert norm_closed_form_i(n, p, q) == d
                assert norm_closed_form_ii(n, p, q)[1] == d


def test_decomposition_desk_example():
    terms = thm31_scalar_decomposition(2, 1, 1, 1, 1, 1)
    assert [t.value() for t in terms] == [5, 25, -5, -25, 125, -25]
    assert decomposition_sum(terms) == 100 == 25 * g_oracle(2, 1, 1) * g_oracle(1, 1, 1)


def test_decomposition_more_examples():
    assert decomposition_sum(thm31_scalar_decomposition(3, 1, 1, 0, 0, 1)) == 25 * F[2] * L[1] == 25
    terms = thm31_scalar_decomposition(2, 1, 0, 0, 7, -3)
    assert all(t.value() == 0 for t in terms)


def test_decomposition_terms_structure():
    terms = thm31_scalar_decomposition(5, 2, 1, 2, 3, 4)
    assert len(terms) == 6 and all(isinstance(t, DecompositionTerm) and t.index >= 1 for t in terms)


@pytest.mark.parametrize("n,m", [(1, 1), (3, 3), (2, 5), (4, 0)])
def test_decomposition_rejects(n, m):
    with pytest.raises(ValueError):
        thm31_scalar_decomposition(n, m, 1, 1, 1, 1)


def test_decomposition_against_direct_product():
    for n in range(2, 25):
        for m in range(1, n):
            for p, q, p2, q2 in itertools.product((-2, 0, 1, 5), repeat=4):
                terms = thm31_scalar_decomposition(n, m, p, q, p2, q2)
                assert decomposition_sum(terms) == 25 * g_oracle(n, p, q) * g_oracle(m, p2, q2)


def test_remark31():
    assert remark31_residual(1, 1, 1) == 0
    assert remark31_residual(5, 7, -4) == 0
    assert remark31_residual(9, 0, 0) == 0
    with pytest.raises(ValueError):
        remark31_residual(0, 1, 1)


def test_report_p5_nonnegative_q():
    rep = invertibility_report(5, range(1, 21), range(0, 21))
    assert all(e.norm < 0 for e in rep.entries)
    assert not rep.zeros and not rep.findings


def test_report_p13_multiples_of_three():
    rep = invertibility_report(13, [3, 6, 9], range(-10, 11))
    assert not rep.zeros and not rep.findings


def test_report_entries_match_oracle():
    rep = invertibility_report(17, range(1, 6), range(-3, 4))
    for e in rep.entries:
        assert e.norm == norm_oracle(e.n, 17, e.q, 17)
        assert e.is_zero == (e.norm == 0)
    # row-major by n then q
    assert [(e.n, e.q) for e in rep.entries] == [(n, q) for n in range(1, 6) for q in range(-3, 4)]


def test_report_flags_claimed_zero_at_1_minus2():
    rep = invertibility_report(5, [1], [-2])
    assert rep.entries[0].norm == -120
    (f,) = rep.findings
    assert f.claim == "P32_ii" and f.inputs == {"p": 5, "n": 1, "q": -2}
    assert f.observed == -120 and f.expected == 0


@pytest.mark.parametrize("bad", [3, 7, 9, 2, 21])
def test_report_rejects_bad_p(bad):
    with pytest.raises(ValueError):
        invertibility_report(bad, [1], [0])


def test_p5_relation_findings():
    found = p5_relation_findings([1, 2], range(-3, 2))
    coeff = {f.inputs["q"]: f for f in found if f.claim == "P32_eq35_coefficients"}
    # only q = 0 agrees: 15q^2 + 42q + 30 vs 5q^2 + 10q + 30
    assert sorted(coeff) == [-3, -2, -1, 1]
    assert coeff[-2].observed == [6, 15] and coeff[-2].expected == [30, 15]
    zero_set = [f for f in found if f.claim == "P32_eq35_zero_set"]
    assert [f.inputs for f in zero_set] == [{"p": 5, "n": 1, "q": -2}]
