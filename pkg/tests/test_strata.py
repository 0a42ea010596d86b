import random

import numpy as np
import pytest

from rorc import (
    Composition,
    ExactMatrix,
    decompose,
    defect_profile,
    in_nilradical,
    in_stratum,
    is_richardson,
    kappa,
    lambda_pairs,
    max_window_rank,
    minimal_movement,
    rank_defect,
    richardson_element,
    witness,
)
from rorc.diagrams import LineDiagram, complete_diagram
from rorc.strata import window_tables

RUNNING = Composition.of(7, 5, 2, 3, 5, 1, 2, 6, 5)


def test_in_nilradical():
    d = Composition.of(3, 1, 2, 4)
    assert in_nilradical(richardson_element(d), d)
    assert not in_nilradical(ExactMatrix.identity(10), d)
    bad = ExactMatrix.from_triples(10, [(3, 0, 1)])  # block (2,1)
    assert not in_nilradical(bad, d)
    with pytest.raises(ValueError):
        in_nilradical(ExactMatrix.identity(3), d)


def test_rank_defect_on_richardson_is_false():
    rng = random.Random(5)
    for _ in range(15):
        d = Composition(tuple(rng.randint(1, 4) for _ in range(rng.randint(2, 5))))
        x = richardson_element(d)
        for i in range(1, d.t):
            for j in range(i + 1, d.t + 1):
                for k in range(1, j - i + 1):
                    assert not rank_defect(x, d, i, j, k)
                assert not rank_defect(x, d, i, j, j - i + 1)  # beyond the span


def test_rank_defect_zeroed_superdiagonal():
    d = Composition.of(1, 1, 1, 1, 1)
    x = richardson_element(d)
    rows = [list(r) for r in x.rows]
    rows[0][1] = 0
    a = ExactMatrix(rows)
    assert rank_defect(a, d, 1, 2, 1)
    assert in_stratum(a, d, 1, 2)
    assert not in_stratum(a, d, 3, 4)


def test_in_stratum_2_1_2_zero_first_block():
    # zero block (1,2), generic blocks (1,3) and (2,3) over F_p
    d = Composition.of(2, 1, 2)
    rng = random.Random(7)
    rows = [[0] * 5 for _ in range(5)]
    for r in range(2):
        for c in (3, 4):
            rows[r][c] = rng.randint(1, 32002)
    rows[2][3] = rng.randint(1, 32002)
    rows[2][4] = rng.randint(1, 32002)
    a = ExactMatrix(rows, field="Fp:32003")
    assert in_stratum(a, d, 1, 3)


def test_kappa_definition_vs_worked_description_2_1_2():
    """Surfaces the relation between the two candidate descriptions of the
    single component for d=(2,1,2): the threshold definition {rk A < 3}
    strictly contains the squared-rank description {rk A^2 = 0} (checked
    exhaustively over F_2), and only the former matches the decomposition:
    E_13 + E_23 + E_34 has rank 2 < 3 but a nonzero square, is not of generic
    type, and lies in no other candidate stratum."""
    d = Composition.of(2, 1, 2)
    assert kappa(d, 1, 3) == 1
    positions = [
        (r, c) for r in range(5) for c in range(5)
        if (r < 2 and c >= 2) or (r == 2 and c >= 3)
    ]
    assert len(positions) == 8
    strict = 0
    for mask in range(2 ** 8):
        rows = [[0] * 5 for _ in range(5)]
        for bit, (r, c) in enumerate(positions):
            rows[r][c] = (mask >> bit) & 1
        a = ExactMatrix(rows, field="Fp:2")
        lhs = a.rank() < 3
        rhs = a.power(2).rank() == 0
        assert rhs <= lhs  # square-zero implies first-power defect
        strict += lhs and not rhs
    assert strict > 0  # the containment is strict; the sets do not coincide

    a = ExactMatrix.from_triples(5, [(0, 2, 1), (1, 2, 1), (2, 3, 1)])
    assert a.rank() == 2 and not a.power(2).is_zero()
    assert not is_richardson(a, d)
    assert in_stratum(a, d, 1, 3)
    assert not rank_defect(a, d, 1, 2, 1) and not rank_defect(a, d, 2, 3, 1)


def test_is_richardson():
    d = Composition.of(2, 2, 1)
    assert is_richardson(richardson_element(d), d)
    assert not is_richardson(ExactMatrix.zeros(5), d)
    assert is_richardson(ExactMatrix.zeros(3), Composition.of(3))


def test_is_richardson_generic_frequency():
    d = Composition.of(2, 2, 1)
    rng = np.random.default_rng(11)
    hits = 0
    trials = 400
    for _ in range(trials):
        rows = [[0] * 5 for _ in range(5)]
        for r in range(4):
            for c in range(2 if r < 2 else 4, 5):
                rows[r][c] = int(rng.integers(0, 32003))
        if is_richardson(ExactMatrix(rows, field="Fp:32003"), d):
            hits += 1
    assert hits / trials >= 0.99


def test_decompose_fixtures():
    dec = decompose(Composition.of(1, 1, 1, 1, 1))
    assert [s.pair for s in dec.strata] == [(1, 2), (2, 3), (3, 4), (4, 5)]
    assert all(s.codim == 1 for s in dec.strata)
    assert decompose(Composition.of(2, 1, 2)).strata[0].pair == (1, 3)
    assert len(decompose(Composition.of(2, 1, 2)).strata) == 1
    dec9 = decompose(RUNNING)
    assert [s.pair for s in dec9.strata] == [(1, 8), (2, 5), (3, 7), (5, 9)]
    assert dec9.lam == (9, 8, 6, 5, 5, 2, 1)


def test_stratum_spec_consistency():
    dec = decompose(RUNNING)
    for s in dec.strata:
        i, j = s.pair
        assert s.kappa == kappa(RUNNING, i, j)
        assert s.rank_threshold == max_window_rank(RUNNING, i, j, s.kappa)
        assert s.codim >= 1
        move = minimal_movement(RUNNING, i, j)
        assert s.mu == move.shape and s.tableau == move.tableau


def test_decomposition_json_schema():
    data = decompose(Composition.of(2, 1, 2)).to_json_dict()
    assert set(data) == {"d", "lambda", "components"}
    comp = data["components"][0]
    assert set(comp) == {"pair", "kappa", "rank_threshold", "codim", "mu", "tableau"}
    assert set(comp["tableau"]) == {"shape", "rows"}


def test_defect_profile():
    d = Composition.of(3, 1, 2, 4)
    assert defect_profile(richardson_element(d), d) == []
    d2 = Composition.of(1, 1)
    assert defect_profile(ExactMatrix.zeros(2), d2) == [(1, 2, 1)]
    d4 = Composition.of(1, 1, 2, 1)
    edges = complete_diagram(d4).edges - {(3, 5)}  # the height-1 edge cols 3->4
    a = LineDiagram(d4, edges).to_matrix()
    assert (2, 4, 2) in defect_profile(a, d4)


def test_defect_profile_empty_iff_richardson():
    rng = np.random.default_rng(13)
    d = Composition.of(2, 1, 2)
    for _ in range(60):
        rows = [[0] * 5 for _ in range(5)]
        for r in range(3):
            for c in range(2 if r < 2 else 3, 5):
                rows[r][c] = int(rng.integers(0, 3))
        a = ExactMatrix(rows, field="Fp:3")
        assert (defect_profile(a, d) == []) == is_richardson(a, d)


def test_witness_borel_case():
    d = Composition.of(1, 1, 1, 1, 1)
    w = witness(d, (1, 2))
    expected = ExactMatrix.from_triples(5, [(1, 2, 1), (2, 3, 1), (3, 4, 1)])
    assert w.rows == expected.rows
    for pair in lambda_pairs(d):
        got = witness(d, pair)
        hits = [pq for pq in sorted(lambda_pairs(d)) if in_stratum(got, d, *pq)]
        assert hits == [pair]


def test_witness_single_stratum():
    d = Composition.of(2, 1, 2)
    w = witness(d, (1, 3))
    assert in_stratum(w, d, 1, 3)


def test_witness_running_example_separates():
    lam = sorted(lambda_pairs(RUNNING))
    for pair in lam:
        w = witness(RUNNING, pair)
        assert in_nilradical(w, RUNNING)
        hits = [pq for pq in lam if in_stratum(w, RUNNING, *pq)]
        assert hits == [pair]


def test_witness_rejects_non_lambda_pair():
    with pytest.raises(ValueError):
        witness(Composition.of(2, 1, 2), (1, 2))


def test_window_tables_structure():
    tab = window_tables(Composition.of(2, 1, 2))
    assert tab.pairs == ((1, 2), (1, 3), (2, 3))
    assert list(tab.kappas) == [1, 1, 1]
    assert tab.thresholds[1, 0] == 3 and tab.thresholds[1, 1] == 1
    assert tab.full_index == 1
    assert list(tab.lam) == [False, True, False]
    assert tab.positions.shape == (8, 2)


def test_low_power_defect_does_not_force_threshold_defect():
    """Documented counterexample: a window defect at an exponent below the
    threshold does NOT imply the stratum membership (the claimed containment
    of the low-power strata in the threshold stratum is false).

    d=(1,3,2): A = E_12 + E_25 has window rank 2 < 3 at power 1, yet its
    square has rank 1, which is maximal at the threshold exponent 2."""
    d = Composition.of(1, 3, 2)
    assert kappa(d, 1, 3) == 2
    a = ExactMatrix.from_triples(6, [(0, 1, 1), (1, 4, 1)])
    assert in_nilradical(a, d)
    assert max_window_rank(d, 1, 3, 1) == 3
    assert max_window_rank(d, 1, 3, 2) == 1
    assert a.rank() == 2                      # defective at exponent 1
    assert a.power(2).rank() == 1             # maximal at the threshold
    assert rank_defect(a, d, 1, 3, 1)
    assert not in_stratum(a, d, 1, 3)
    # the main decomposition still covers it: (2,3) is a component stratum
    assert (1, 3) in lambda_pairs(d)
    assert in_stratum(a, d, 2, 3)
    assert (2, 3) in lambda_pairs(d)
