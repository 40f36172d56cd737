import json
from fractions import Fraction

import pytest

import rbnc


def test_set_partitions():
    parts = rbnc.enumerate_partitions(4)
    assert len(parts) == 15
    assert str(parts[0]) == "1/2/3/4"
    assert rbnc.refines(rbnc.SetPartition("1/2/3"), rbnc.SetPartition("13/2"))
    assert rbnc.mobius(rbnc.SetPartition("1/2/3"), rbnc.SetPartition("123")) == 2
    assert rbnc.lambda_of(rbnc.SetPartition("13/2")) == [2, 1]


def test_small_expansions():
    assert rbnc.w_by_permutations(rbnc.path_digraph(2)).terms() == {"1/2": Fraction(1)}
    k2 = rbnc.w_by_permutations(rbnc.complete_digraph(2))
    assert k2.terms() == {"1/2": 1, "12": -1}
    assert k2.to_basis("e").terms() == {"12": 1}
    c3 = rbnc.w_tournament(rbnc.cycle_digraph(3))
    assert c3.terms() == {"1/2/3": 1, "123": 2}


def test_algorithms_agree():
    x = rbnc.random_digraph(5, 0.3, 17)
    p = rbnc.w_by_permutations(x)
    assert rbnc.w_by_definition(x).to_basis("p") == p
    assert rbnc.w_by_deletion_contraction(x).to_basis("p") == p


def test_commutative_and_json():
    x = rbnc.cycle_digraph(3)
    w = rbnc.w_by_permutations(x)
    assert rbnc.commutative_image(w.to_basis("m")) == rbnc.u_by_descents(x)
    assert rbnc.commutative_image(w).terms() == {(1, 1, 1): 1, (3,): 2}
    assert rbnc.NCSymElement.from_json(w.to_json()) == w
    assert json.loads(w.to_json())["basis"] == "p"


def test_digraph_operations():
    p2 = rbnc.path_digraph(2)
    assert rbnc.opposite(p2).edges() == [(1, 0)]
    assert rbnc.complement(p2).edges() == [(0, 0), (1, 0), (1, 1)]
    assert rbnc.product(rbnc.discrete_digraph(1), rbnc.discrete_digraph(1)) == p2
    assert rbnc.contract_last_edge(rbnc.path_digraph(3)) == p2
    assert rbnc.hamiltonian_path_count(rbnc.cycle_digraph(3)) == 3
    assert rbnc.parse_digraph(rbnc.format_digraph(p2)) == p2


def test_verify():
    reports = rbnc.check_identities(rbnc.cycle_digraph(3))
    assert [r["check"] for r in reports] == rbnc.check_names()
    assert all(r["status"] != "fail" for r in reports)


def test_errors():
    with pytest.raises(rbnc.SizeLimitError):
        rbnc.enumerate_partitions(13)
    with pytest.raises(rbnc.ParseError):
        rbnc.SetPartition("12/2")
    with pytest.raises(rbnc.Error):
        rbnc.w_tournament(rbnc.discrete_digraph(2))


def test_cli():
    code, out, err = rbnc.run_cli(["compute", "path:2"])
    assert (code, out, err) == (0, "p[1/2]  coeff 1\n", "")
    code, _, err = rbnc.run_cli(["compute", "discrete:9"])
    assert code == 2 and err.startswith("error:")
