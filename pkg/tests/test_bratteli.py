import pytest

from sadic_lab import presets
from sadic_lab.bratteli import (MaximalAtDepth, PathPrefix, WindowOfPoint, address_of,
                                build_diagram, equivariance_check, export_dot, minimal_path,
                                paths_into, psi_window, vershik_successor)
from sadic_lab.directive import DirectiveSequence
from sadic_lab.errors import InputError
from sadic_lab.morphism import Alphabet, identity, incidence_matrix, power


def fib():
    return DirectiveSequence.stationary(presets.fibonacci())


def test_fibonacci_diagram():
    B = build_diagram(fib(), 3)
    assert B.levels == (1, 2, 2, 2)
    assert B.edges[1] == ((0, 1), (0,))
    assert B.in_degree(2, 0) == 2


def test_five_to_three_shape():
    D = presets.five_to_three()
    B = build_diagram(D, 2)
    assert B.levels == (1, 3, 5)
    assert [B.in_degree(2, v) for v in range(5)] == [1, 4, 2, 3, 5]
    assert B.incidence(1).to_rows() == incidence_matrix(D.level_morphism(0)).transpose().to_rows()
    assert B.incidence(0).to_rows() == [[1], [1], [1]]


def test_incidence_is_transpose_for_all_levels():
    D = presets.pair_coded()
    B = build_diagram(D, 5)
    for n in range(1, 5):
        assert B.incidence(n) == incidence_matrix(D.level_morphism(n - 1)).transpose()


def test_successor_and_maximal():
    B = build_diagram(fib(), 4)
    p = PathPrefix(3, (0, 0, 0), (0, 0, 0, 0))
    q = vershik_successor(B, p)
    assert q.edge_orders == (1, 0, 0) and q.vertices == (1, 0, 0, 0)
    assert isinstance(vershik_successor(B, PathPrefix(1, (1,), (1, 0))), MaximalAtDepth)
    with pytest.raises(InputError):
        vershik_successor(B, PathPrefix(2, (0, 1), (0, 0, 0)))


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_successor_enumerates_cylinder(depth):
    for D in (fib(), presets.pair_coded()):
        B = build_diagram(D, depth + 1)
        for top in range(B.levels[-1]):
            walk, p = [], minimal_path(B, top, depth)
            while not isinstance(p, MaximalAtDepth):
                walk.append(p)
                p = vershik_successor(B, p)
            assert walk == paths_into(B, top, depth)
            assert len(set(walk)) == len(walk)


def test_minimal_path_window():
    D = fib()
    B = build_diagram(D, 6)
    p = minimal_path(B, 0, 5)
    w = psi_window(D, p)
    assert w.left_len == 0 and w.word() == power(presets.fibonacci(), 5).images[0]


def test_windows_nest():
    D = presets.pair_coded()
    B = build_diagram(D, 7)
    p = vershik_successor(B, vershik_successor(B, minimal_path(B, 1, 6)))
    outer = psi_window(D, p)
    for d in range(6):
        inner = psi_window(D, p.truncate(d))
        for i in range(-inner.left_len, inner.right_len):
            assert inner.at(i) == outer.at(i)


def test_equivariance_fibonacci_and_pair_coded():
    assert equivariance_check(fib(), minimal_path(build_diagram(fib(), 17), 0, 16), 1000)["ok"]
    D = presets.pair_coded()
    out = equivariance_check(D, minimal_path(build_diagram(D, 13), 0, 12), 1000)
    assert out["ok"] and out["steps"] == 1000 and not out["needs_deeper"]


def test_zero_steps():
    out = equivariance_check(fib(), minimal_path(build_diagram(fib(), 3), 0, 2), 0)
    assert out["ok"] and out["steps"] == 0


def test_short_path_reports_depth_need():
    out = equivariance_check(fib(), minimal_path(build_diagram(fib(), 3), 0, 2), 50)
    assert out["ok"] and out["needs_deeper"]


def test_address_round_trip():
    D = fib()
    B = build_diagram(D, 10)
    p = minimal_path(B, 0, 8)
    for _ in range(17):
        p = vershik_successor(B, p)
    w = psi_window(D, p)
    window = WindowOfPoint(w.left_len, w.right_len, w.word())
    assert address_of(D, window, 3) == [p.truncate(3)]


def test_fibonacci_addresses_are_single():
    D = fib()
    img = power(presets.fibonacci(), 3).images[0]
    window = WindowOfPoint(len(img) // 2, len(img) - len(img) // 2, img)
    addrs = address_of(D, window, 2)
    assert len(addrs) == 1


def test_pair_coded_two_level_zero_addresses():
    from sadic_lab.bratteli import level_addresses
    D = presets.pair_coded()
    img = power(presets.theta(), 3).images[0]
    window = WindowOfPoint(40, len(img) - 40, img)
    assert len(level_addresses(D, window, 1, None)) == 2


def test_identity_address():
    D = DirectiveSequence.stationary(identity(Alphabet(2)))
    # the identity language has no words of length two, so the window is one letter
    (p,) = address_of(D, WindowOfPoint(0, 1, (1,)), 2)
    assert p.vertices == (1, 1, 1) and p.edge_orders == (0, 0)


def test_dot_export():
    B1 = build_diagram(DirectiveSequence.stationary(identity(Alphabet(2))), 1)
    dot = export_dot(B1)
    assert dot.count("[label=") == 3 + 2
    dot = export_dot(build_diagram(fib(), 2))
    nodes = [line for line in dot.splitlines() if "->" not in line and "label" in line]
    edges = [line for line in dot.splitlines() if "->" in line]
    assert len(nodes) == 5 and len(edges) == 2 + 3
    assert dot == export_dot(build_diagram(fib(), 2))


def test_depth_guard():
    with pytest.raises(InputError):
        build_diagram(fib(), 0)
    with pytest.raises(InputError):
        build_diagram(presets.five_to_three(), 3)
