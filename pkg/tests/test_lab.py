from fractions import Fraction

import pytest

from ratsym import MonomialIdeal, Ring
from ratsym.errors import PreconditionError
from ratsym.lab import (
    FAIL,
    CheckReport,
    SuiteConfig,
    block_pair_corpus,
    check_ass_star_stabilization,
    check_binomial_rational,
    check_binomial_symbolic,
    check_containment,
    check_method_agreement,
    check_nonradical_root,
    check_root_characterization,
    check_saturation_identity,
    check_splitting_stability,
    check_symbolic_primary_decomposition,
    check_zariski_nagata,
    default_splitting_samples,
    run_suite,
)
from ratsym.parsing import parse_ideal

from . import oracles

F = Fraction
XYZ = Ring.of("x,y,z")
TRI = parse_ideal("x*y, y*z, z*x", XYZ)
PATH = parse_ideal("x*y, y*z", XYZ)


def test_containment_examples():
    assert check_containment(TRI, 1).passed
    assert check_containment(parse_ideal("x", Ring.of("x")), F(7, 3)).passed
    r = check_containment(PATH, F(3, 2))
    assert r.passed and r.details["big_height"] == 2


def test_symbolic_primary_decomposition_examples():
    r = check_symbolic_primary_decomposition(PATH, F(5, 2))
    assert r.passed and r.details["components"] == 2
    assert check_symbolic_primary_decomposition(TRI, 2).passed
    assert check_symbolic_primary_decomposition(parse_ideal("x, z", XYZ), F(4, 3)).passed
    with pytest.raises(PreconditionError):
        check_symbolic_primary_decomposition(parse_ideal("x*y^5, x^2*y^2, x^4*y", Ring.of("x,y")), 1)


def test_binomial_examples():
    X, Y = Ring.of("x"), Ring.of("y")
    assert check_binomial_rational(parse_ideal("x", X), parse_ideal("y", Y), F(3, 2)).passed
    assert check_binomial_rational(parse_ideal("x^2", X), parse_ideal("y^3", Y), 3).passed
    AB = Ring.of("a,b")
    assert check_binomial_rational(PATH, parse_ideal("a*b", AB), F(5, 2)).passed
    assert check_binomial_symbolic(TRI, parse_ideal("a*b", AB), 2).passed
    assert check_binomial_symbolic(parse_ideal("x, z", XYZ), parse_ideal("a", AB), F(4, 3)).passed
    assert check_binomial_symbolic(PATH, parse_ideal("a", AB), F(5, 2)).passed
    with pytest.raises(PreconditionError):
        check_binomial_rational(PATH, PATH, 1)


def test_ass_star_examples():
    r = check_ass_star_stabilization(parse_ideal("x", Ring.of("x")))
    assert r.passed and r.details["stabilized_at"] == 1 and r.details["primes"] == ["(x)"]
    r = check_ass_star_stabilization(TRI)
    assert r.passed and r.details["stabilized_at"] == 4
    assert r.details["primes"] == ["(x,y)", "(x,z)", "(y,z)", "(x,y,z)"]
    r = check_ass_star_stabilization(parse_ideal("x*y^5, x^2*y^2, x^4*y", Ring.of("x,y")))
    assert r.passed and r.details["e"] == 24 and r.details["primes"] == ["(x)", "(y)", "(x,y)"]


def test_ass_star_reports_late_growth():
    # with too small a k_max the last new prime is still appearing
    r = check_ass_star_stabilization(TRI, k_max=4)
    assert not r.passed and r.witness == "new prime (x,y,z) at k=4"


def test_splitting_examples():
    assert check_splitting_stability(PATH, [(0, 2, 1)]).passed
    assert check_splitting_stability(parse_ideal("x, z", XYZ)).passed
    assert check_splitting_stability(TRI, [(1, 3, 2)]).passed
    assert len(default_splitting_samples()) == 4 * (2 + 3 + 5)
    with pytest.raises(ValueError):
        check_splitting_stability(TRI, [(0, 2, 3)])


def test_consistency_checks():
    for u in (F(1, 2), F(5, 2)):
        assert check_method_agreement(PATH, u).passed
        assert check_saturation_identity(PATH, u).passed
        assert check_root_characterization(TRI, u).passed
        assert check_zariski_nagata(TRI, u).passed


def test_nonradical_harness():
    XY = Ring.of("x,y")
    r = check_nonradical_root(parse_ideal("x^2*y, y^3", XY), F(3, 2))
    assert r.passed and all(r.details["agree"].values())
    # (x^2, y^2) is primary and not closed, so the ordinary reading fails already at u = 1
    r = check_nonradical_root(parse_ideal("x^2, y^2", XY), 1)
    assert r.witness == "ordinary: x*y"
    assert r.details["agree"] == {"contraction": True, "ordinary": False, "closure": True}


def test_nonradical_closure_reading_fails():
    # xyz lies in every localized closure but not in the closure of I itself
    I = parse_ideal("x^3*y, x^2*z, x*y^2*z, y^2*z^2", XYZ)
    r = check_nonradical_root(I, 1)
    assert r.details["agree"] == {"contraction": True, "ordinary": False, "closure": False}
    ass = oracles.brute_ass(I.gens, 3)
    assert ass == {(0, 1), (0, 2), (1, 2)}

    def local_facets(P):
        return oracles.np_facets([tuple(g[i] if i in P else 0 for i in range(3)) for g in I.gens], 3)

    assert all(oracles.in_np(local_facets(P), tuple(1 if i in P else 0 for i in range(3))) for P in ass)
    assert not oracles.in_np(oracles.np_facets(I.gens, 3), (1, 1, 1))


def test_report_contract():
    with pytest.raises(ValueError):
        CheckReport("containment", {}, FAIL)
    r = check_containment(TRI, 1)
    d = r.to_dict()
    assert d["verdict"] == "pass" and d["witness"] is None
    assert d["instance"] == {"I": {"ring": ["x", "y", "z"], "generators": [[1, 1, 0], [1, 0, 1], [0, 1, 1]]}, "u": "1"}
    assert r.instance_hash() == check_containment(TRI, 1).instance_hash()
    assert r.line().startswith("PASS containment ")


def test_block_pairs_are_disjoint():
    for I, J in block_pair_corpus(20):
        assert not set(I.ring.variables) & set(J.ring.variables)
        assert I.is_squarefree() and J.is_squarefree()


def test_suite_is_deterministic_across_workers():
    cfg = SuiteConfig(count=6, nonsquarefree_count=3, pair_count=3)
    serial = run_suite(cfg)
    parallel = run_suite(SuiteConfig(count=6, nonsquarefree_count=3, pair_count=3, jobs=2))
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]
    assert all(r.passed for r in serial)
    keys = [(r.theorem_id, r.instance_hash()) for r in serial]
    assert keys == sorted(keys)


def test_zero_ideal_is_rejected():
    with pytest.raises(PreconditionError):
        check_method_agreement(MonomialIdeal.zero(XYZ), 1)
