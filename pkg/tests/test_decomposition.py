import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratsym import MonomialIdeal, MonomialPrime, Ring
from ratsym.decomposition import (
    associated_primes,
    big_height,
    grade_is_zero,
    height,
    irreducible_decomposition,
    minimal_primes,
    primary_components_min,
)
from ratsym.errors import PreconditionError
from ratsym.lab import CorpusConfig, monomial_corpus
from ratsym.monomial import intersect_all
from ratsym.parsing import parse_ideal

from .oracles import brute_ass

XY = Ring.of("x,y")
XYZ = Ring.of("x,y,z")


def primes(ring, *names):
    return [MonomialPrime.from_names(ring, s) for s in names]


def test_irreducible_examples():
    comps = irreducible_decomposition(parse_ideal("x*y", XY))
    assert [c.ideal() for c in comps] == [parse_ideal("x", XY), parse_ideal("y", XY)]
    comps = irreducible_decomposition(parse_ideal("x^2, x*y", XY))
    assert {c.ideal() for c in comps} == {parse_ideal("x", XY), parse_ideal("x^2, y", XY)}
    I = parse_ideal("x*y^5, x^2*y^2, x^4*y", XY)
    assert intersect_all((c.ideal() for c in irreducible_decomposition(I)), XY) == I


def test_associated_and_minimal_primes():
    assert associated_primes(parse_ideal("x*y, y*z", XYZ)) == primes(XYZ, "y", "xz")
    I = parse_ideal("x*y^5, x^2*y^2, x^4*y", XY)
    assert associated_primes(I) == primes(XY, "x", "y", "xy")
    assert minimal_primes(I) == primes(XY, "x", "y")
    tri = parse_ideal("x*y, y*z, z*x", XYZ)
    assert minimal_primes(tri) == primes(XYZ, "xy", "xz", "yz")


def test_heights():
    tri = parse_ideal("x*y, y*z, z*x", XYZ)
    assert big_height(tri) == 2 == height(tri)
    assert big_height(parse_ideal("x", XYZ)) == 1
    assert big_height(parse_ideal("x*y^5, x^2*y^2, x^4*y", XY)) == 2
    assert height(parse_ideal("x*y^5, x^2*y^2, x^4*y", XY)) == 1


def test_grade_is_zero():
    tri = parse_ideal("x*y, y*z, z*x", XYZ)
    assert grade_is_zero(MonomialPrime.from_names(XYZ, "xy"), tri)
    assert not grade_is_zero(MonomialPrime.from_names(XYZ, "xyz"), tri)
    assert grade_is_zero(MonomialPrime.from_names(XYZ, "y"), parse_ideal("x*y, y*z", XYZ))


def test_primary_components_min():
    d = primary_components_min(parse_ideal("x*y, y*z", XYZ))
    assert [(str(p), str(Q)) for p, Q in d.components] == [("(y)", "y"), ("(x,z)", "x, z")]
    tri = parse_ideal("x*y, y*z, z*x", XYZ)
    d = primary_components_min(tri)
    assert len(d.components) == 3 and d.intersection(XYZ) == tri
    assert all(Q == p.ideal() for p, Q in d.components)
    p = MonomialPrime.from_names(XYZ, "xz")
    assert [(q, Q) for q, Q in primary_components_min(p.ideal()).components] == [(p, p.ideal())]
    assert d.to_list()[0]["prime"] == ["x", "y"]


def test_embedded_prime_is_rejected():
    with pytest.raises(PreconditionError, match=r"\(x,y\)"):
        primary_components_min(parse_ideal("x*y^5, x^2*y^2, x^4*y", XY))


def test_degenerate_inputs():
    for I in (MonomialIdeal.zero(XY), MonomialIdeal.unit(XY)):
        with pytest.raises(PreconditionError):
            associated_primes(I)


def test_ass_matches_colon_oracle_on_corpus():
    corpus = monomial_corpus(CorpusConfig(count=150, n_max=4, gens_max=5, exp_max=4))
    for I in corpus:
        assert {p.indices for p in associated_primes(I)} == brute_ass(I.gens, I.ring.n), str(I)


vec = st.tuples(*[st.integers(0, 4)] * 3)


@settings(max_examples=80)
@given(st.lists(vec, min_size=1, max_size=5).filter(lambda gs: any(map(any, gs)) and all(map(any, gs))))
def test_decomposition_invariants(gens):
    I = MonomialIdeal(XYZ, tuple(gens))
    comps = [c.ideal() for c in irreducible_decomposition(I)]
    assert intersect_all(comps, XYZ) == I
    # irredundant: dropping any component enlarges the intersection
    for k in range(len(comps)):
        assert intersect_all(comps[:k] + comps[k + 1:], XYZ) != I
    ass = associated_primes(I)
    assert {p.indices for p in ass} == brute_ass(I.gens, 3)
    assert big_height(I) >= height(I)
    if I.is_squarefree():
        assert ass == minimal_primes(I)
