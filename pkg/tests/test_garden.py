import json

import numpy as np
import pytest

from adinkras.adinkra import Dashing, ValiseAdinkra, dashing_at
from adinkras.chromotopology import bipartition, build_from_code
from adinkras.codes import DoublyEvenCode
from adinkras.garden import (GeneratorList, RowOrderedValiseAdinkra, SignedPermutationMatrix, adinkra_to_generators,
                             check_relations, generators_to_adinkra, same_row_ordered, unsign)
from adinkras.oracle import enumerate_generator_lists
from fixtures import GR44, drawn_adinkra, gr44

I2 = [[1, 0], [0, 1]]
SWAP = [[0, 1], [1, 0]]


def spm(a):
    return SignedPermutationMatrix.from_array(a)


def test_signed_permutation_parsing():
    m = spm(GR44[1])
    assert m.perm == (1, 0, 3, 2) and m.signs == (-1, 1, -1, 1)
    assert m.tolist() == GR44[1]
    with pytest.raises(ValueError, match="row 2"):
        spm([[1, 0], [1, 1]])
    with pytest.raises(ValueError, match="row 1"):
        spm([[2, 0], [0, 1]])
    with pytest.raises(ValueError, match="column 1"):
        spm([[1, 0], [1, 0]])


def test_relations_examples():
    assert check_relations(gr44()).ok
    report = check_relations([spm(I2), spm(I2)])
    assert not report.ok
    fail = report["(1,2) L_i L_j^T + L_j L_i^T"]
    assert not fail.passed and fail.witness["sum"] == [[2, 0], [0, 2]]
    # the unsigned pair anticommutes only once one entry is dashed
    assert not check_relations([spm(I2), spm(SWAP)]).ok
    assert check_relations([spm(I2), spm([[0, 1], [-1, 0]])]).ok


def test_relations_report_every_pair():
    report = check_relations(gr44())
    assert len(report.checks) == 2 * 4 * 4


def test_unsign():
    assert unsign(spm(GR44[1])).tolist() == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    p = spm(SWAP)
    assert unsign(p) == p
    assert unsign(-SignedPermutationMatrix.identity(3)) == SignedPermutationMatrix.identity(3)


def test_generator_list_json():
    gl = gr44()
    obj = json.loads(json.dumps(gl.to_json()))
    assert list(obj) == ["d", "n", "matrices"]
    assert GeneratorList.from_json(obj) == gl
    bad = dict(obj, matrices=[GR44[0], [[0, 0, 2, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]])
    with pytest.raises(ValueError, match="matrix 2: row 1"):
        GeneratorList.from_json(bad)
    with pytest.raises(ValueError):
        GeneratorList((spm(I2), SignedPermutationMatrix.identity(3)))


def test_drawn_adinkra_gives_the_matrices():
    gens = adinkra_to_generators(drawn_adinkra())
    assert [m.tolist() for m in gens] == GR44
    # black edge from the fourth top vertex 0000 reaches 0111, second on the bottom
    assert gens[0].entries[3, 1] == 1


def test_matrices_give_the_drawn_adinkra():
    b = generators_to_adinkra(gr44())
    g = b.adinkra.chromotopology
    assert (g.n, g.order, g.k) == (4, 8, 1)
    assert same_row_ordered(drawn_adinkra(), b)


def test_square_left_arc():
    g = build_from_code(DoublyEvenCode.trivial(2))
    dash = [0] * 4
    dash[0] = 1
    a = RowOrderedValiseAdinkra.from_labels(ValiseAdinkra(g, bipartition(g), Dashing(dash)), ["11", "00"], ["01", "10"])
    l1, l2 = adinkra_to_generators(a)
    assert unsign(l1).tolist() == I2 and unsign(l2).tolist() == SWAP
    assert sum(s == -1 for m in (l1, l2) for s in m.signs) == 1


def test_single_edge():
    g = build_from_code(DoublyEvenCode.trivial(1))
    a = RowOrderedValiseAdinkra(ValiseAdinkra(g, bipartition(g), Dashing.solid(g)), (0,), (1,))
    assert [m.tolist() for m in adinkra_to_generators(a)] == [[[1]]]
    b = generators_to_adinkra([spm([[1]])])
    assert b.adinkra.chromotopology.edges == ((0, 1, 1),) and b.adinkra.dashing.dash == (0,)


def test_round_trips_on_all_square_lists():
    lists = list(enumerate_generator_lists(2, 2))
    assert len(lists) == 16
    for gens in lists:
        a = generators_to_adinkra(gens)
        assert adinkra_to_generators(a) == gens
        assert same_row_ordered(generators_to_adinkra(adinkra_to_generators(a)), a)


def test_round_trip_from_adinkras():
    g = build_from_code(DoublyEvenCode.from_generators(4, ["1111"]))
    r = bipartition(g)
    for index in (0, 99, 255):
        a = RowOrderedValiseAdinkra(ValiseAdinkra(g, r, dashing_at(g, index)), tuple(r.level(0)), tuple(r.level(1)))
        assert same_row_ordered(generators_to_adinkra(adinkra_to_generators(a)), a)


def test_invalid_lists_rejected():
    with pytest.raises(ValueError):
        generators_to_adinkra([spm(I2), spm(I2)])
    # a valid but disconnected list: identity blocks in a 4x4 direct sum
    blocks = [np.kron(np.eye(2, dtype=int), np.array(m)) for m in ([[1, 0], [0, 1]], [[0, 1], [-1, 0]])]
    gl = GeneratorList(tuple(spm(b) for b in blocks))
    assert check_relations(gl).ok
    with pytest.raises(ValueError, match="disconnected"):
        generators_to_adinkra(gl)
