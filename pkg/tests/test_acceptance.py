"""The acceptance gate: one test per criterion, everything exact.

Every check is an exact identity in Fraction / NPoly / SurdSum arithmetic,
so every stated tolerance is zero; a criterion passes only if each of its
instances holds on the nose.  Run with `pytest -s` to see the summary lines.
"""

import pytest

from brauer import verify


def _report(rep):
    status = "PASS" if rep["ok"] else "FAIL"
    print(f"\n{status}  criterion {rep['name']:16s} ({rep['seconds']}s)  {rep['details']}")
    assert rep["ok"], rep


def test_criterion_1_presentation():
    # the defining relations, exact polynomial identities, n <= 6
    _report(verify.criterion_1_presentation(max_n=6))


def test_criterion_2_jucys_murphy():
    # commutativity, mixed relations, odd central power sums (i <= 5),
    # conditional-expectation recurrence (odd i <= 5, k <= 4), N symbolic
    _report(verify.criterion_2_jucys_murphy(max_n=4))


def test_criterion_3_representations():
    # all V(lam, n), n <= 5, N in {2,3,4,5,7,9}: relations, diagonal
    # eigenvalues, scalar central sum; exact surd arithmetic
    _report(verify.criterion_3_representations())


def test_criterion_4_rank1_traceN():
    # equal-endpoint sbar blocks: symmetric PSD rank 1, trace exactly N
    _report(verify.criterion_4_rank_trace())


def test_criterion_5_series():
    # Z(mu, u) against the diagram-side conditional expectation (i <= 6,
    # k <= 4, N in {3,5}); box-product form and path-product form to order
    # 10 at 5 rational N values
    _report(verify.criterion_5_series())


def test_criterion_6_tensor_oracle():
    # homomorphism property over the full N^n <= 4096 grid, centralizer
    # ranks versus path counts, Casimir agreement
    _report(verify.criterion_6_tensor(trials=100))


def test_criterion_7_separation():
    # eigenvalue tuples pairwise distinct when N odd or N >= 2n-1 (n <= 5),
    # plus an explicit even-N counterexample
    rep = verify.criterion_7_separation(max_n=5)
    assert rep["details"]["counterexample"] is not None
    _report(rep)


def test_criterion_8_affine():
    # associativity (200 triples), shift-homomorphism consistency,
    # desk-scale faithfulness, Hecke relation kill, W_k series cross-check
    _report(verify.criterion_8_affine())
