from fractions import Fraction

import pytest

crcodes = pytest.importorskip("crcodes")


def test_hamming_is_perfect_and_cr():
    h = crcodes.hamming_code(2, 3)
    assert (h.n, h.dimension, h.size) == (7, 4, 16)
    cl = crcodes.classify(h)
    assert cl["perfect"] and cl["completely_regular"]
    assert crcodes.is_completely_regular(h) == (True, "{7; 1}")


def test_code_from_generator_and_codewords():
    rep = crcodes.Code.from_generator([[1, 1, 1]])
    assert rep.codewords() == [[0, 0, 0], [1, 1, 1]]
    assert rep == crcodes.Code.from_codewords([[0, 0, 0], [1, 1, 1]])
    assert crcodes.Code.from_json(rep.to_json()) == rep


def test_golay_design_and_distribution():
    g = crcodes.binary_golay()
    d = crcodes.verify_design(g, 7, 4)
    assert d is not None and int(d["lambda"]) == 1
    A = crcodes.distance_distribution(g)
    assert A[7] == Fraction(253)
    assert crcodes.coset_graph_ia(g) == "{23, 22, 21; 1, 2, 3}"


def test_lloyd_bch():
    bch = crcodes.atlas.build("F.18", {"m": 2})
    beta = crcodes.packing_parameters(bch)
    assert beta == [1, 1, Fraction(1, 5), Fraction(1, 5)]
    ok, roots = crcodes.lloyd_roots(31, 2, [str(b) for b in beta])
    assert ok and roots == [12, 16, 20]
    assert crcodes.eigenvalue_test("{7; 1}", 7)["pass"]
    assert not crcodes.eigenvalue_test("{7; 2}", 7)["pass"]


def test_atlas_regress_and_errors():
    rep = crcodes.atlas.regress("S.1", threads=2)
    assert rep["entries"] and rep["failed"] == 0 and all(e["status"] == "pass" for e in rep["entries"])
    assert len(crcodes.atlas.manifest()["families"]) >= 60
    with pytest.raises(crcodes.CatalogError):
        crcodes.atlas.build("F.999")
    with pytest.raises(crcodes.ResourceError):
        crcodes.atlas.build("F.18", {"m": 5})
    with pytest.raises(ValueError):
        crcodes.hamming_code(6, 2)
