from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gradimp.errors import DomainError, FormatError, HedgeError
from gradimp.lattice import (ChainLattice, check_lattice_laws, format_config, parse_config,
                             validate_hedge, with_tables)

from helpers import CUSTOM_HEDGES


def test_lukasiewicz_product():
    L = ChainLattice(10)
    assert L.tnorm(8, 5) == 3


def test_unit_for_every_tnorm():
    for tnorm in ("lukasiewicz", "godel"):
        L = ChainLattice(7, tnorm)
        assert all(L.tnorm(a, L.top) == a for a in L.degrees)


def test_godel_product():
    assert ChainLattice(2, "godel").tnorm(1, 1) == 1


def test_residuum_values_from_the_table_example():
    L = ChainLattice(10)
    assert L.residuum(8, 7) == 9
    assert L.residuum(9, 7) == 8
    assert all(L.residuum(0, a) == 10 for a in L.degrees)


def test_godel_residuum():
    L = ChainLattice(4, "godel")
    assert L.residuum(3, 1) == 1
    assert L.residuum(1, 3) == 4


def test_hedges():
    glob = ChainLattice(10, hedge="globalization")
    assert glob.hedge_apply(9) == 0
    assert glob.hedge_apply(10) == 10
    assert ChainLattice(10).hedge_apply(9) == 9


def test_validate_hedge_examples():
    L = ChainLattice(2)
    assert validate_hedge(L, [0, 0, 2]) is None
    assert validate_hedge(L, [0, 1, 2]) is None
    v = validate_hedge(L, [0, 2, 2])
    assert v.axiom == "a* <= a" and v.witness == (1,)


def test_validate_hedge_length_mismatch():
    with pytest.raises(FormatError):
        validate_hedge(ChainLattice(2), [0, 2])


def test_validate_hedge_reports_each_axiom():
    L = ChainLattice(3)
    assert validate_hedge(L, [0, 1, 2, 2]).axiom == "1* = 1"
    # 1/3 -> 2/3 and 2/3 -> 1/3 violate idempotence but not the other axioms
    assert validate_hedge(L, [0, 0, 1, 3]).axiom in ("a** = a*", "(a->b)* <= a*->b*")


def test_custom_hedge_is_checked_eagerly():
    with pytest.raises(HedgeError):
        ChainLattice(2, hedge="custom", hedge_table=[0, 2, 2])
    L = ChainLattice(5, hedge="custom", hedge_table=CUSTOM_HEDGES[5])
    assert L.fixpoints() == (0, 2, 5)


def test_goguen_is_rejected():
    with pytest.raises(DomainError):
        ChainLattice(4, "goguen")


@pytest.mark.parametrize("n,tnorm", [(10, "lukasiewicz"), (2, "godel"), (3, "lukasiewicz")])
def test_laws_hold(n, tnorm):
    assert check_lattice_laws(ChainLattice(n, tnorm)) == []


def test_corrupted_residuum_is_caught():
    L = ChainLattice(4)
    res = [list(r) for r in L.res_table]
    res[3][1] = 3
    bad = with_tables(L, res_table=res)
    laws = {v.law: v.witness for v in check_lattice_laws(bad)}
    assert "adjointness" in laws
    a, b, c = laws["adjointness"]
    assert (bad.mul_table[a][b] <= c) != (a <= bad.res_table[b][c])


def test_non_monotone_star_is_caught():
    L = ChainLattice(3)
    bad = with_tables(L, star_table=[0, 1, 0, 3])
    names = {v.law for v in check_lattice_laws(bad)}
    assert "hedge is monotone" in names


def test_parse_degree_grid():
    L = ChainLattice(10)
    assert L.parse_degree("0.7") == 7
    assert L.parse_degree("7/10") == 7
    assert L.parse_degree(" 1 ") == 10
    with pytest.raises(FormatError):
        L.parse_degree("0.55")
    with pytest.raises(FormatError):
        L.parse_degree("1.5")
    with pytest.raises(FormatError):
        L.parse_degree("high")


def test_format_degree():
    L = ChainLattice(3)
    assert [L.format_degree(a) for a in L.degrees] == ["0", "1/3", "2/3", "1"]
    assert L.format_degree(1, decimal=True) == "1/3"
    assert ChainLattice(4).format_degree(1, decimal=True) == "0.25"


@given(st.integers(1, 40), st.data())
def test_format_parse_roundtrip(n, data):
    L = ChainLattice(n)
    a = data.draw(st.integers(0, n))
    assert L.parse_degree(L.format_degree(a)) == a
    assert L.parse_degree(L.format_degree(a, decimal=True)) == a
    assert L.value(a) == Fraction(a, n)


@given(st.integers(1, 20), st.sampled_from(["lukasiewicz", "godel"]), st.data())
def test_adjointness_random(n, tnorm, data):
    L = ChainLattice(n, tnorm)
    a, b, c = (data.draw(st.integers(0, n)) for _ in range(3))
    assert (L.tnorm(a, b) <= c) == (a <= L.residuum(b, c))


@pytest.mark.parametrize("tnorm", ["lukasiewicz", "godel"])
def test_adjointness_exhaustive_up_to_20(tnorm):
    for n in range(1, 21):
        L = ChainLattice(n, tnorm)
        for a in L.degrees:
            for b in L.degrees:
                m = L.tnorm(a, b)
                for c in L.degrees:
                    assert (m <= c) == (a <= L.residuum(b, c))


def test_config_roundtrip():
    L = parse_config("chain_size=5\ntnorm=godel\nhedge=custom\nhedge_table=0,0,0.4,0.4,0.4,1\n")
    assert L.n == 5 and L.tnorm_kind == "godel" and L.star_table == (0, 0, 2, 2, 2, 5)
    assert parse_config(format_config(L)) == L


@pytest.mark.parametrize("text", [
    "tnorm=godel",
    "chain_size=two",
    "chain_size=3\nhedge=custom",
    "chain_size=3\nhedge_table=0,0,0,1",
    "chain_size=3\nfoo=bar",
    "chain_size=3\ntnorm=goguen",
    "chain_size",
])
def test_config_errors(text):
    with pytest.raises(FormatError):
        parse_config(text)


def test_config_error_reports_line():
    with pytest.raises(FormatError, match="line 3"):
        parse_config("chain_size=3\n# comment\nhedge=bogus\n")


def test_config_with_invalid_custom_hedge():
    with pytest.raises(HedgeError):
        parse_config("chain_size=3\nhedge=custom\nhedge_table=0,1/3,1,1\n")
