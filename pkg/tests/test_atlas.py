import json

import pytest

from gofknots.atlas import (
    CSV_HEADER,
    AtlasRecord,
    canonical_spaces,
    enumerate_atlas,
    export_csv,
    export_json,
    load_json,
    read_csv,
    stats,
    to_csv,
    to_jsonl,
)
from gofknots.errors import GofError
from gofknots.lens import LensSpace, normalize
from gofknots.verdict import AllIntegral


def test_enumerate_small():
    recs = enumerate_atlas(0)
    assert [r.space for r in recs] == [LensSpace(0, 1)]
    assert [k.knot.label for k in recs[0].knots] == ["C"]

    recs = enumerate_atlas(4)
    assert [str(r.space) for r in recs] == ["L(0,1)", "L(1,0)", "L(2,1)", "L(3,1)", "L(4,1)"]
    assert [len(r.knots) for r in recs] == [1, 2, 2, 2, 3]


def test_empty_slope_window():
    for rec in enumerate_atlas(6, slopes=range(0)):
        for k in rec.knots:
            assert k.verdicts == ()


def test_negative_max_alpha():
    with pytest.raises(GofError):
        enumerate_atlas(-1)


def test_canonical_spaces_are_canonical_and_complete():
    spaces = list(canonical_spaces(60))
    assert spaces == sorted(spaces)
    assert len(set(spaces)) == len(spaces)
    assert all(s.is_canonical for s in spaces)
    expected = {normalize(a, b) for a in range(2, 61) for b in range(1, a) if __import__("math").gcd(a, b) == 1}
    assert set(spaces) == expected | {LensSpace(0, 1), LensSpace(1, 0)}


def test_stats():
    st = stats(enumerate_atlas(4))
    assert st.counts == {0: 0, 1: 1, 2: 3, 3: 1}
    assert stats([]).counts == {0: 0, 1: 0, 2: 0, 3: 0}
    assert stats([]).lo_knot_count == 0
    recs = enumerate_atlas(12)
    one = [r.space for r in recs if len(r.knots) == 1]
    assert LensSpace(12, 5) in one
    assert sum(stats(recs).counts.values()) == len(recs)


def test_json_round_trip(tmp_path):
    recs = enumerate_atlas(9)
    path = tmp_path / "atlas.jsonl"
    export_json(recs, path)
    assert load_json(path) == recs
    text = path.read_bytes()
    assert text.endswith(b"\n") and b"\r" not in text
    first = json.loads(text.splitlines()[0])
    assert list(first) == ["space", "knots"]
    assert list(first["knots"][0]) == [
        "label", "params", "braid", "matrix", "trace", "ambient",
        "class", "all_integral_lo", "lo_families", "verdicts",
    ]


def test_single_record_round_trip():
    rec = enumerate_atlas(5)[-1]
    assert AtlasRecord.from_dict(json.loads(json.dumps(rec.to_dict()))) == rec


def test_csv(tmp_path):
    recs = enumerate_atlas(7)
    path = tmp_path / "atlas.csv"
    export_csv(recs, path)
    lines = path.read_text(encoding="utf-8").split("\n")
    assert lines[0] == "alpha,beta,label,p,q,braid,trace,class,all_integral_lo"
    assert lines[0].split(",") == CSV_HEADER
    rows = read_csv(path)
    d2 = [r for r in rows if r["label"] == "D2"]
    assert d2[0] == {
        "alpha": "5", "beta": "2", "label": "D2", "p": "1", "q": "1",
        "braid": "s1 s2^2 s1^-2 s2^-1", "trace": "7", "class": "hyperbolic", "all_integral_lo": "all-lo",
    }
    b1 = [r for r in rows if r["label"] == "B1"][0]
    assert b1["p"] == "" and b1["q"] == ""
    empty = [r for r in rows if r["alpha"] == "7" and r["beta"] == "2"]
    assert empty and empty[0]["label"] == ""
    assert {(r["alpha"], r["beta"]) for r in rows} == {(str(r.space.alpha), str(r.space.beta)) for r in recs}


def test_export_error_names_path(tmp_path):
    bad = tmp_path / "missing-dir" / "x.jsonl"
    with pytest.raises(OSError, match="missing-dir"):
        export_json(enumerate_atlas(1), bad)


def test_deterministic_and_parallel_order():
    a = to_jsonl(enumerate_atlas(40))
    b = to_jsonl(enumerate_atlas(40))
    c = to_jsonl(enumerate_atlas(40, workers=2))
    assert a == b == c
    assert to_csv(enumerate_atlas(40)) == to_csv(enumerate_atlas(40))


def test_large_sweep_round_trip(tmp_path):
    recs = enumerate_atlas(200)
    path = tmp_path / "atlas.jsonl"
    export_json(recs, path)
    assert load_json(path) == recs
    for rec in recs:
        for k in rec.knots:
            lo = k.all_integral_lo is AllIntegral.ALL_LO
            assert lo == (k.knot.label in ("A2", "B2", "D2"))
            assert lo == bool(k.lo_families)
