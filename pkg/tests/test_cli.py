"""The command-line surface and JSON serialization."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from positroids import (
    decorated_perm,
    from_document,
    le_diagrams,
    make_matroid,
    make_nc,
    necklace_of,
    plabic_of_le,
    to_document,
    uniform,
    weighted_nc,
)
from positroids.cli import main
from positroids.counting import decorated_permutations
from positroids.polytope import h_description


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_doc(tmp_path, obj, name="doc.json"):
    path = tmp_path / name
    path.write_text(json.dumps(to_document(obj)))
    return str(path)


class TestConvert:
    def test_perm_to_matroid(self, tmp_path, capsys, m0):
        path = write_doc(tmp_path, decorated_perm((2, 4, 1, 3)))
        code, out, _ = run_cli(capsys, "convert", path, "--to", "matroid")
        assert code == 0
        doc = json.loads(out)
        assert from_document(doc).bases == m0.bases

    def test_non_positroid_needs_envelope(self, tmp_path, capsys, crossing_sum):
        path = write_doc(tmp_path, crossing_sum)
        code, _, err = run_cli(capsys, "convert", path, "--to", "perm")
        assert code == 1 and "envelope" in err
        code, out, _ = run_cli(capsys, "convert", path, "--to", "matroid")
        assert code == 0  # matroid target never needs positroid-ness
        code, out, _ = run_cli(capsys, "convert", path, "--to", "necklace", "--envelope")
        assert code == 0
        neck = from_document(json.loads(out))
        assert neck == necklace_of(uniform(2, 4))

    def test_necklace_to_perm(self, tmp_path, capsys):
        free = make_matroid(3, [{1, 2, 3}])
        path = write_doc(tmp_path, necklace_of(free))
        code, out, _ = run_cli(capsys, "convert", path, "--to", "perm")
        assert code == 0
        doc = json.loads(out)
        assert doc["map"] == [1, 2, 3]
        assert set(doc["colors"].values()) == {"ccw"}

    def test_conversion_cycle(self, tmp_path, capsys, m0):
        doc = to_document(m0)
        for target in ["necklace", "perm", "le", "plabic", "matroid"]:
            path = tmp_path / "step.json"
            path.write_text(json.dumps(doc))
            code, out, _ = run_cli(capsys, "convert", str(path), "--to", target)
            assert code == 0
            doc = json.loads(out)
        assert from_document(doc).bases == m0.bases

    def test_parse_error_exit_two(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{nonsense")
        code, _, err = run_cli(capsys, "convert", str(path), "--to", "matroid")
        assert code == 2


class TestCheck:
    def test_exchange_failure(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"kind": "matroid", "n": 4, "bases": [[1, 2], [3, 4]]}))
        code, out, _ = run_cli(capsys, "check", str(path))
        assert code == 1
        report = json.loads(out)
        assert not report["ok"]
        assert "exchange" in report["checks"][0]["witness"]

    def test_crossing_partition(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps({"kind": "ncpartition", "n": 4, "blocks": [[1, 3], [2, 4]]})
        )
        code, out, _ = run_cli(capsys, "check", str(path))
        assert code == 1

    def test_pyramid_passes(self, tmp_path, capsys, m0):
        path = write_doc(tmp_path, m0)
        code, out, _ = run_cli(capsys, "check", path)
        assert code == 0
        report = json.loads(out)
        names = {c["name"]: c["ok"] for c in report["checks"]}
        assert names["exchange axiom"] and names["positroid"]


class TestDecompose:
    def test_two_segments(self, tmp_path, capsys):
        m = make_matroid(4, [{1, 3}, {1, 4}, {2, 3}, {2, 4}])
        path = write_doc(tmp_path, m)
        code, out, _ = run_cli(capsys, "decompose", path)
        assert code == 0
        doc = json.loads(out)
        assert doc["partition"]["blocks"] == [[1, 2], [3, 4]]
        assert doc["kreweras"]["blocks"] == [[1], [2, 4], [3]]
        assert doc["pi_star_agrees"] is True

    def test_pyramid(self, tmp_path, capsys, m0):
        path = write_doc(tmp_path, m0)
        code, out, _ = run_cli(capsys, "decompose", path)
        doc = json.loads(out)
        assert doc["partition"]["blocks"] == [[1, 2, 3, 4]]
        assert doc["kreweras"]["blocks"] == [[1], [2], [3], [4]]

    def test_coloop_loop(self, tmp_path, capsys):
        m = make_matroid(2, [{1}])
        path = write_doc(tmp_path, m)
        code, out, _ = run_cli(capsys, "decompose", path)
        doc = json.loads(out)
        assert doc["partition"]["blocks"] == [[1], [2]]


class TestPolytope:
    def test_hdescription(self, tmp_path, capsys, m0):
        path = write_doc(tmp_path, m0)
        code, out, _ = run_cli(capsys, "polytope", path)
        assert code == 0
        doc = json.loads(out)
        assert {"interval": [3, 4], "bound": 1} in doc["constraints"]

    def test_faces(self, tmp_path, capsys, m0):
        path = write_doc(tmp_path, m0)
        code, out, _ = run_cli(capsys, "polytope", path, "--faces")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["faces"]) == 20
        assert doc["embedding"] == {"injective": True, "order_preserving": True}
        top = max(doc["faces"], key=lambda f: len(f["vertices"]))
        assert top["label"]["blocks"] == [[1, 2, 3, 4]]
        assert top["label"]["weights"] == [2]

    def test_point(self, tmp_path, capsys):
        free = make_matroid(2, [{1, 2}])
        path = write_doc(tmp_path, free)
        code, out, _ = run_cli(capsys, "polytope", path)
        assert code == 0


class TestVerify:
    def test_counts_small(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "counts", "--bound", "4")
        assert code == 0
        doc = json.loads(out)
        assert doc["ok"] and doc["suite"] == "counts"

    def test_unknown_suite(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "nope")
        assert code == 1


# ---------------------------------------------------------------------------
# serialization round trips


def _all_small_objects():
    out = []
    for n in (1, 2, 3):
        out.extend(decorated_permutations(n))
    m0 = make_matroid(4, [{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}])
    out.append(m0)
    out.append(necklace_of(m0))
    out.extend(d for d in le_diagrams(2, 4))
    out.append(make_nc(4, [[1, 2], [3, 4]]))
    out.append(weighted_nc(4, [[1, 2], [3, 4]], [1, 1]))
    out.append(h_description(necklace_of(m0)))
    out.extend(plabic_of_le(d) for d in le_diagrams(1, 3))
    return out


@pytest.mark.parametrize("obj", _all_small_objects())
def test_round_trip(obj):
    doc = json.loads(json.dumps(to_document(obj)))
    back = from_document(doc)
    if doc["kind"] == "plabic":
        # geometry is not part of the wire format; compare canonical forms
        assert to_document(back) == doc
    else:
        assert back == obj


@given(st.data())
@settings(max_examples=50, deadline=None)
def test_perm_round_trip_property(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    targets = data.draw(st.permutations(list(range(1, n + 1))))
    colors = {
        j: data.draw(st.sampled_from(["cw", "ccw"]))
        for j in range(1, n + 1)
        if targets[j - 1] == j
    }
    p = decorated_perm(targets, colors)
    assert from_document(json.loads(json.dumps(to_document(p)))) == p
