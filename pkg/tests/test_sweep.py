import pytest

from eccbounds.bounds import BoundId
from eccbounds.graph import parse_graph6
from eccbounds.sweep import (
    StreamParseError,
    SweepConfig,
    SweepError,
    connected_labeled_graphs,
    read_graph6_stream,
    sweep,
)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_connected_counts(n, count):
    assert sum(1 for _ in connected_labeled_graphs(n)) == count


def test_enumeration_is_ascending():
    labels = [g.to_graph6() for g in connected_labeled_graphs(4)]
    assert labels == sorted(labels) and len(set(labels)) == 38


def test_enumeration_range():
    with pytest.raises(SweepError):
        list(connected_labeled_graphs(9))


def test_t13_stars_at_four():
    rep = sweep(SweepConfig(n_min=4, n_max=4, bounds=(BoundId.T13_L,)))
    t = rep.bound(BoundId.T13_L)
    assert t.equality_count == 4
    assert t.predicted_count == 4 and t.agreement_failures == 0


def test_t9_at_two():
    rep = sweep(SweepConfig(n_min=2, n_max=2, bounds=(BoundId.T9_L,)))
    t = rep.bound(BoundId.T9_L)
    assert t.equality_count == 1 and t.witnesses["equalities"] == ["A_"]


def test_n_max_five_example():
    rep = sweep(SweepConfig(n_min=2, n_max=5))
    assert rep.asserted_violations == 0 and rep.ok
    t = rep.bound(BoundId.T1ii_stated_U)
    assert t.violations >= 3
    assert {"K_4", "K_5"} <= set(t.named["violations"])
    assert any(name.startswith("K_3") for name in t.named["violations"])


def test_conservation():
    rep = sweep(SweepConfig(n_min=2, n_max=5))
    for t in rep.result.bounds.values():
        assert t.graphs_checked == t.holds + t.violations + t.inapplicable
        assert t.graphs_checked == rep.total_graphs


def test_determinism_across_workers():
    a = sweep(SweepConfig(n_min=2, n_max=6, worker_count=1))
    b = sweep(SweepConfig(n_min=2, n_max=6, worker_count=3))
    assert a.to_json(include_runtime=False) == b.to_json(include_runtime=False)
    assert a.to_csv() == b.to_csv()


def test_oracle_samples_and_agrees():
    rep = sweep(SweepConfig(n_min=2, n_max=6))
    assert rep.result.oracle_sampled > 100
    assert rep.result.oracle_mismatches == 0


def test_stream_single_k4(tmp_path):
    path = tmp_path / "k4.g6"
    path.write_text("C~\n")
    stream = read_graph6_stream(str(path))
    assert list(stream) == [parse_graph6("C~")]
    assert stream.skipped_disconnected == 0


def test_stream_empty(tmp_path):
    path = tmp_path / "empty.g6"
    path.write_text("")
    stream = read_graph6_stream(str(path))
    assert list(stream) == [] and stream.skipped_disconnected == 0


def test_stream_skips_disconnected(tmp_path, caplog):
    path = tmp_path / "d.g6"
    path.write_text("D??\n")
    stream = read_graph6_stream(str(path))
    assert list(stream) == [] and stream.skipped_disconnected == 1
    assert "disconnected" in caplog.text


def test_stream_parse_error_has_line_number(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("C~\nA_\nC!\n")
    with pytest.raises(StreamParseError) as info:
        list(read_graph6_stream(str(path)))
    assert info.value.lineno == 3


def test_stream_missing_file():
    with pytest.raises(SweepError):
        sweep(SweepConfig(source="/nonexistent/graphs.g6"))


def test_stream_sweep_matches_builtin(tmp_path):
    path = tmp_path / "all.g6"
    path.write_text("".join(g.to_graph6() + "\n" for n in range(2, 6) for g in connected_labeled_graphs(n)))
    a = sweep(SweepConfig(n_min=2, n_max=5)).to_dict(include_runtime=False)
    b = sweep(SweepConfig(source=str(path))).to_dict(include_runtime=False)
    assert a["bounds"] == b["bounds"] and a["identities"] == b["identities"]


@pytest.mark.parametrize(
    "cfg",
    [
        SweepConfig(n_min=1, n_max=3),
        SweepConfig(n_min=5, n_max=4),
        SweepConfig(n_max=8),
        SweepConfig(n_max=9, allow_large=True),
        SweepConfig(worker_count=0),
        SweepConfig(witness_cap=-1),
    ],
)
def test_invalid_config(cfg):
    with pytest.raises(SweepError):
        cfg.validate()


def test_witness_cap():
    rep = sweep(SweepConfig(n_min=2, n_max=5, witness_cap=2))
    t = rep.bound(BoundId.T1ii_stated_U)
    assert len(t.witnesses["violations"]) == 2
    assert t.witnesses["violations"] == sorted(t.witnesses["violations"])


def test_exclude_nordhaus_gaddum():
    rep = sweep(SweepConfig(n_min=4, n_max=4, include_nordhaus_gaddum=False))
    assert BoundId.T12_NG.value not in rep.to_dict()["bounds"]
