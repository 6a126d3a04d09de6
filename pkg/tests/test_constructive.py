import pytest

from properpath.coloring import EdgeColoring, is_proper_connected
from properpath.constructive import (
    color_cartesian,
    color_direct,
    color_direct_k2,
    color_iterated,
    color_lexicographic,
    color_strong,
    color_topology,
    decomposition_coloring,
    product_upper_bound,
)
from properpath.errors import InvalidParameter
from properpath.graph import (
    Graph,
    is_bipartite,
    make_complete,
    make_cycle,
    make_path,
)
from properpath.products import product
from properpath.solver import SearchConfig, pc_exact

from conftest import atlas

TRIANGLE_PENDANT = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
SMALL = atlas(2, 4)  # the 9 connected graphs on 2..4 vertices


def _optimal(G):
    cert = pc_exact(G)
    return int(cert.value), cert.certificate


def _verified(result):
    assert is_proper_connected(result.product.graph, result.coloring), result.case_tag
    assert result.coloring.palette_size <= result.claimed_palette
    return result


def test_cartesian_examples():
    K3 = make_complete(3)
    r = _verified(color_cartesian(make_path(2), K3, EdgeColoring.monochrome(K3)))
    assert r.claimed_palette == 2 and r.case_tag == "copy-H"
    r = _verified(color_cartesian(make_path(3), make_path(3), EdgeColoring.from_colors([1, 2])))
    assert r.claimed_palette == 3
    K2 = make_complete(2)
    r = _verified(color_cartesian(K2, K2, EdgeColoring.monochrome(K2)))
    assert r.product.graph.m == 4 and r.claimed_palette == 2


def test_cartesian_copy_g_orientation():
    K3 = make_complete(3)
    r = _verified(color_cartesian(K3, make_path(4), c_G=EdgeColoring.monochrome(K3)))
    assert r.case_tag == "copy-G" and r.claimed_palette == 2


def test_strong_examples():
    K2 = make_complete(2)
    mono = EdgeColoring.monochrome(K2)
    for n in (3, 4):
        assert _verified(color_strong(make_path(n), K2, mono)).claimed_palette == 2
    r = _verified(color_strong(K2, K2, mono))
    assert r.product.graph.is_complete() and pc_exact(r.product.graph).value == 1
    _verified(color_strong(make_cycle(4), K2, mono))


def test_lexicographic_examples():
    alt = EdgeColoring.from_colors([1, 2])
    P2, P3 = make_path(2), make_path(3)
    mono2 = EdgeColoring.monochrome(P2)
    r = _verified(color_lexicographic(P3, P3, alt, alt))
    assert (r.claimed_palette, r.case_tag) == (2, "pcG=pcH")
    r = _verified(color_lexicographic(P2, P2, mono2, mono2))
    assert (r.claimed_palette, r.case_tag) == (1, "both-complete")
    K3 = make_complete(3)
    r = _verified(color_lexicographic(K3, make_path(4), EdgeColoring.monochrome(K3), EdgeColoring.from_colors([1, 2, 1])))
    assert (r.claimed_palette, r.case_tag) == (2, "G-complete")
    r = _verified(color_lexicographic(make_path(4), K3, EdgeColoring.from_colors([1, 2, 1]), EdgeColoring.monochrome(K3)))
    assert r.claimed_palette == 2 and r.case_tag == "H-complete+swap"


def test_lexicographic_rejects_bad_case():
    P3 = make_path(3)
    with pytest.raises(InvalidParameter):
        color_lexicographic(P3, P3, EdgeColoring.from_colors([1, 2]), EdgeColoring.from_colors([1, 2]), pc_G=1, pc_H=1)


def test_direct_examples():
    C3, C4 = make_cycle(3), make_cycle(4)
    r = _verified(color_direct(C3, C4, EdgeColoring.from_colors([1, 2, 1, 2])))
    assert r.claimed_palette == 6
    K2 = make_complete(2)
    r = _verified(color_direct(make_cycle(5), K2, EdgeColoring.monochrome(K2)))
    assert r.claimed_palette == 3
    K3 = make_complete(3)
    assert _verified(color_direct(C3, K3, EdgeColoring.monochrome(K3))).claimed_palette == 3


def test_direct_k2_examples():
    r = _verified(color_direct_k2(make_cycle(3)))
    assert r.claimed_palette == 3 and pc_exact(r.product.graph).value == 2
    assert _verified(color_direct_k2(TRIANGLE_PENDANT)).claimed_palette == 4
    assert _verified(color_direct_k2(make_cycle(5))).claimed_palette == 3


def test_decomposition_coloring_palettes_disjoint():
    G = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2)])
    parts = decomposition_coloring(G)
    assert (parts.o, parts.b) == (3, 2)
    odd = {parts.colors[i] for i in range(3)}
    square = {parts.colors[i] for i in range(3, 7)}
    assert odd <= {1, 2, 3} and square <= {4, 5} and not odd & square


def test_construction_errors():
    K3, P3 = make_complete(3), make_path(3)
    with pytest.raises(InvalidParameter):
        color_cartesian(P3, P3, EdgeColoring.monochrome(P3))  # not proper-path
    with pytest.raises(InvalidParameter):
        color_cartesian(P3, P3)
    with pytest.raises(InvalidParameter):
        color_cartesian(Graph(1), K3, EdgeColoring.monochrome(K3))
    with pytest.raises(InvalidParameter):
        color_direct(make_cycle(4), K3, EdgeColoring.monochrome(K3))
    with pytest.raises(InvalidParameter):
        color_direct_k2(P3)


def test_universal_invariant_cartesian_strong_lex():
    for G in SMALL:
        pg, cg = _optimal(G)
        for H in SMALL:
            ph, ch = _optimal(H)
            for builder in (color_cartesian, color_strong):
                if ph <= pg:
                    r = _verified(builder(G, H, ch))
                else:
                    r = _verified(builder(G, H, c_G=cg))
                assert r.claimed_palette == min(pg, ph) + 1
            r = _verified(color_lexicographic(G, H, cg, ch))
            assert pc_exact(r.product.graph).value <= r.claimed_palette <= max(pg, ph)


def test_universal_invariant_direct():
    nonbip = [G for G in atlas(3, 5) if not is_bipartite(G).valid]
    for G in nonbip:
        parts = decomposition_coloring(G)
        for H in SMALL:
            _, ch = _optimal(H)
            _verified(color_direct(G, H, ch, parts))
        _verified(color_direct_k2(G, parts))


def test_direct_with_bipartite_h():
    # bipartite H: the product is still connected because G is not
    for G in (make_cycle(3), make_cycle(5), TRIANGLE_PENDANT):
        for H in (make_path(2), make_path(3), make_cycle(4)):
            _, ch = _optimal(H)
            _verified(color_direct(G, H, ch))


def test_claims_bound_exact_values():
    for G in SMALL[:6]:
        pg, cg = _optimal(G)
        for H in SMALL[:6]:
            ph, ch = _optimal(H)
            r = color_cartesian(G, H, ch) if ph <= pg else color_cartesian(G, H, c_G=cg)
            assert pc_exact(r.product.graph).value <= r.claimed_palette


def test_iterated_and_topology():
    r = _verified(color_topology("mesh", [3, 3, 2]))
    assert r.claimed_palette == 2 and r.product.graph.n == 18
    r = _verified(color_topology("hp", [3]))
    assert r.claimed_palette == 2
    r = _verified(color_topology("hp", [4]))
    assert r.claimed_palette == 2
    r = _verified(color_topology("lex-ghc", [2, 3]))
    assert r.claimed_palette == 1
    r = _verified(color_iterated([make_path(3), make_cycle(4), make_path(2)], "strong"))
    assert r.claimed_palette == 2
    with pytest.raises(InvalidParameter):
        color_iterated([make_cycle(3), make_path(2)], "direct")


@pytest.mark.parametrize("name, params", [
    ("grid", [3, 4]), ("mesh", [2, 3, 2]), ("lex-mesh", [3, 3]), ("torus", [3, 4]),
    ("lex-torus", [3, 3]), ("ghc", [2, 3]), ("lex-ghc", [3, 3]), ("hl", [3]), ("hl", [4]),
])
def test_topology_colorings_verify(name, params):
    _verified(color_topology(name, params))


def test_product_upper_bound():
    P3 = make_path(3)
    assert product_upper_bound(product(P3, P3, "cartesian")) == 3
    assert product_upper_bound(([P3, make_complete(3)], "lex")) == 2
    assert product_upper_bound(([make_cycle(3), make_cycle(4)], "direct")) == 6
    assert product_upper_bound({"factors": [make_cycle(5), make_complete(2)], "kind": "direct"}) == 3
    assert product_upper_bound(([make_cycle(4), make_path(2)], "direct")) == float("inf")
    # a budget that forbids exact search falls back to greedy factor palettes
    tight = SearchConfig(max_nodes=1)
    assert product_upper_bound(([make_path(5), make_path(5)], "cartesian"), tight) == 3
