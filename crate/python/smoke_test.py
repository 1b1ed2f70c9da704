"""Quick end-to-end check of the Python extension.

Build and install it first:
    pip install ./crates/py --no-build-isolation    (or: maturin develop -m crates/py/Cargo.toml)
"""

import json

import minorforge_py as mf


def main():
    k8 = mf.Graph(8, [(u, v) for u in range(8) for v in range(u + 1, 8)])
    assert k8.edge_count() == 28
    assert mf.Graph.from_graph6(k8.graph6()) == k8

    bags = mf.find_model(k8, "k7v")
    assert bags is not None and len(bags) == 7
    assert all(b for b in bags)

    # K2,2,2,2 is the one eight-vertex exception: no K7v model, chromatic number 4
    k2222 = mf.Graph.named("k2222")
    assert mf.find_model(k2222, "k7v") is None
    assert mf.chromatic_number(k2222) == 4
    cert = json.loads(mf.model_certificate(k2222, "k7v"))
    assert cert["kind"] == "none-found"

    spindle = mf.Graph.named("spindle")
    assert spindle.edge_count() == 11
    assert mf.independence_number(spindle) == 2
    assert mf.clique_number(spindle) == 3
    colors = mf.find_coloring(spindle, 4)
    assert colors is not None and all(colors[u] != colors[v] for u, v in spindle.edges())
    assert mf.find_coloring(spindle, 3) is None

    octahedron = mf.Graph.named("kp:2,2,2")
    assert mf.is_k_connected(octahedron, 4)
    assert mf.vertex_connectivity(octahedron) == 4
    assert mf.is_internally_k_connected(octahedron, [0, 1, 2, 3], 4)
    assert mf.find_rooted_model(octahedron, "k4", [0, 1, 2, 3]) is not None

    c4 = mf.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert mf.two_disjoint_paths(c4, 0, 2, 1, 3) is None
    assert mf.two_disjoint_paths(c4, 0, 1, 2, 3) == ([0, 1], [2, 3])
    assert mf.has_subgraph(k8, "c5") is not None

    assert [len(mf.generate_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    relabeled = mf.Graph(5, [(4, 3), (3, 1), (1, 0)])
    path = mf.Graph(5, [(0, 1), (1, 2), (2, 3)])
    assert relabeled.canonical_form() == path.canonical_form()

    report = json.loads(mf.verify("extremal", 8, jobs=2))
    assert report["violations"] == []
    assert [e["tag"] for e in report["exceptions"]] == ["k2222"]
    assert mf.check_certificates(mf.model_certificate(k8, "k7v")) == 1

    try:
        mf.find_model(k8, "nonsense")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown pattern accepted")

    print(f"minorforge_py {mf.__version__}: smoke test ok ({len(mf.pattern_roster())} roster patterns)")


if __name__ == "__main__":
    main()
