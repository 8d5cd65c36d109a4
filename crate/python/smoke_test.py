"""Smoke test for the pyedgefan extension module.

Build and run from the repository root:

    cargo build --release -p edgefan-py
    cp target/release/libpyedgefan.so python/pyedgefan.so
    python3 python/smoke_test.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pyedgefan as ef


def main():
    c5 = ef.Graph.family("cycle:5")
    assert (c5.n, c5.m, c5.max_degree) == (5, 5, 2)
    assert c5.chromatic_index() == 3
    assert c5.is_critical()
    assert c5.is_overfull()
    assert ef.Graph.from_graph6(c5.graph6()).edges() == c5.edges()

    petersen = ef.Graph.family("petersen")
    assert petersen.chromatic_index() == 4
    assert not petersen.is_critical()

    fan, certified = ef.maximum_fan(c5, 0, 1)
    assert certified and fan.size == 3 and fan.is_maximal() and fan.is_elementary()
    assert fan.vertices()[0] == 0
    coloring = fan.coloring()
    assert coloring.uncolored() == (0, 1)
    again = ef.Coloring.from_dump(c5, coloring.dump())
    assert again.fingerprint() == coloring.fingerprint()
    assert again.fan(0).vertices() == fan.vertices()

    a, b = coloring.missing(0)[0], coloring.missing(1)[0]
    swapped = coloring.kempe_swap(0, a, b)
    assert swapped.kempe_swap(0, a, b).fingerprint() == coloring.fingerprint()

    pv = ef.Graph.family("petersen-v")
    light = pv.light_vertices()[0]
    small = [v for v in pv.neighbors(light) if pv.degree(v) < pv.max_degree][0]
    fan, certified = ef.maximum_fan(pv, light, small, center=light)
    assert certified and fan.size == 4

    try:
        ef.maximum_fan(ef.Graph.family("complete:4"), 0, 1)
    except ValueError as err:
        assert "critical" in str(err)
    else:
        raise AssertionError("K4 edge accepted as critical")

    try:
        ef.Graph.from_graph6("D~")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed graph6 accepted")

    corpus = ef.connected_graphs(5)
    assert len(corpus) == 21
    failures, summary, jsonl = ef.verify_corpus(corpus, "vf1,vf2,val,edgecount")
    assert failures == 0, summary
    records = [json.loads(line) for line in jsonl.splitlines()]
    assert any(r.get("verdict") == "pass" for r in records)

    print("pyedgefan smoke test ok")


if __name__ == "__main__":
    main()
