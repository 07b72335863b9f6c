import json

import numpy as np
import pytest

from permlab.campaign import (
    DEFAULT_SEED,
    REGISTRY,
    THEOREMS,
    CampaignConfig,
    ReportRecord,
    Space,
    config_from_values,
    load_config,
    parse_q_list,
    read_report,
    run_campaign,
    sample_tuple,
    write_report,
)
from permlab.gf import quad_ext_for
from permlab.theorems import SearchCapExceeded


def strip(rec):
    d = dict(rec.__dict__)
    d.pop("wall_time")
    d.pop("campaign_id")
    return d


def test_space_decode_encode_roundtrip():
    sp = Space((3, 4, 5), (0, 1, 0))
    idx = np.arange(sp.size)
    tuples = sp.decode(idx)
    assert tuples[0].tolist() == [0, 1, 0]
    assert tuples[-1].tolist() == [2, 4, 4]
    assert [sp.encode(t) for t in tuples] == list(range(sp.size))
    # lexicographic order
    assert sorted(map(tuple, tuples)) == list(map(tuple, tuples))


def test_sampling_is_counter_based():
    sp = Space((81, 81, 81, 81), (0, 0, 0, 0))
    a = [sample_tuple(sp, 7, k) for k in range(50)]
    assert sample_tuple(sp, 7, 33) == a[33]
    assert a != [sample_tuple(sp, 8, k) for k in range(50)]
    pool = [(1, 2, 3, 4)]
    drawn = [sample_tuple(sp, 7, k, pool) for k in range(2000)]
    # a quarter come from the pool, half of those with one coordinate moved
    near = sum(sum(a != b for a, b in zip(t, (1, 2, 3, 4))) <= 1 for t in drawn)
    exact = sum(t == (1, 2, 3, 4) for t in drawn)
    assert 400 < near < 600
    assert 150 < exact < 350


def test_thm13_acceptance_shape():
    recs = run_campaign(CampaignConfig("thm13", [2, 3, 4, 5]))
    assert [r.q for r in recs] == [2, 3, 4, 5]
    assert all(r.disagreements == 0 and r.counterexample is None for r in recs)
    assert [r.tested for r in recs] == [16, 81, 256, 625]


def test_thm14_q2_census():
    (rec,) = run_campaign(CampaignConfig("thm14", [2]))
    assert rec.tested == 16 and rec.disagreements == 0
    assert rec.oracle_positive == 6


def test_thm14_literal_counterexample_is_lowest_index():
    (rec,) = run_campaign(CampaignConfig("thm14", [3]))
    assert rec.disagreements == 10
    ce = rec.counterexample
    assert ce["tuple"] == {"a": 0, "b": 0, "c": 0, "d": 2}
    assert ce["predicate"] is False and ce["oracle"] is True
    (ok,) = run_campaign(CampaignConfig("thm14", [3], reading="zero_or_nonsquare"))
    assert ok.disagreements == 0


def test_prop43_q3():
    (rec,) = run_campaign(CampaignConfig("prop43", [3]))
    assert rec.tested == 36 and rec.oracle_positive == 0 and rec.disagreements == 0


@pytest.mark.parametrize("theorem", ["thm11", "thm12", "thm17", "lemma51chain"])
def test_quartic_campaigns_q2(theorem):
    (rec,) = run_campaign(CampaignConfig(theorem, [2]))
    assert rec.tested == 256 and rec.disagreements == 0


def test_lemma55_and_thm15_small():
    (rec,) = run_campaign(CampaignConfig("lemma55", [3]))
    assert rec.disagreements == 0 and rec.oracle_positive == 12
    (rec,) = run_campaign(CampaignConfig("thm15", [3]))
    assert rec.tested == 162 and rec.disagreements == 0


@pytest.mark.parametrize("cfg", [
    dict(theorem="thm14", q_list=[3]),
    dict(theorem="thm12", q_list=[9], mode="sample", samples=3000),
    dict(theorem="thm11", q_list=[3]),
])
def test_stripe_count_independence(cfg):
    base = [strip(r) for r in run_campaign(CampaignConfig(**cfg, jobs=1))]
    for jobs in (4, 16):
        assert [strip(r) for r in run_campaign(CampaignConfig(**cfg, jobs=jobs))] == base


def test_determinism_with_seed():
    cfg = dict(theorem="thm15", q_list=[27], mode="sample", samples=500, seed=11)
    a = run_campaign(CampaignConfig(**cfg))
    b = run_campaign(CampaignConfig(**cfg))
    assert [strip(r) for r in a] == [strip(r) for r in b]
    assert a[0].seed == 11


def test_cap_exceeded():
    with pytest.raises(SearchCapExceeded):
        run_campaign(CampaignConfig("thm11", [9], mode="sample", samples=5))
    (rec,) = run_campaign(CampaignConfig("thm11", [9], mode="sample", samples=5, search_cap=9))
    assert rec.tested == 5


def test_config_validation():
    with pytest.raises(ValueError, match="6"):
        CampaignConfig("thm13", [2, 6]).validate()
    with pytest.raises(ValueError):
        CampaignConfig("thm99", [2]).validate()
    with pytest.raises(ValueError):
        CampaignConfig("thm13", [2], mode="sample", samples=0).validate()
    with pytest.raises(ValueError):
        CampaignConfig("thm13", [2], jobs=0).validate()
    with pytest.raises(ValueError):
        CampaignConfig("thm13", [2], reading="a_squared").validate()
    assert set(THEOREMS) == set(REGISTRY)


def test_parse_q_list():
    assert parse_q_list("2..16") == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    assert parse_q_list("3, 9,27") == [3, 9, 27]
    with pytest.raises(ValueError, match="q=6"):
        parse_q_list("2,6")
    with pytest.raises(ValueError):
        parse_q_list("2,x")


def test_load_config(tmp_path):
    p = tmp_path / "c.cfg"
    p.write_text("# minimal\ntheorem = thm13\nq_list = 2..4\n")
    cfg = load_config(str(p))
    assert cfg.mode == "exhaustive" and cfg.jobs == 1 and cfg.q_list == [2, 3, 4]
    p.write_text("theorem = thm13\nq_list = 2,6\n")
    with pytest.raises(ValueError, match="q=6"):
        load_config(str(p))
    p.write_text("theorem = thm13\nq_list = 2\nmode = sample\nsamples = 10\n")
    assert load_config(str(p)).seed == DEFAULT_SEED
    p.write_text("theorem = thm13\nq_list = 2\ncolour = blue\n")
    with pytest.raises(ValueError, match="colour"):
        load_config(str(p))
    p.write_text("theorem = thm13\nq_list = 2\njobs = many\n")
    with pytest.raises(ValueError, match="jobs"):
        load_config(str(p))
    p.write_text("theorem = thm13\nq_list = 2\njobs = 2\n")
    assert load_config(str(p), {"jobs": "3"}).jobs == 3


def _record(**kw):
    base = dict(campaign_id="c1", theorem="thm13", q=2, mode="exhaustive", seed=None, tested=16,
                agreements=16, disagreements=0, oracle_positive=6, counterexample=None, wall_time=0.1)
    base.update(kw)
    return ReportRecord(**base)


def test_write_report(tmp_path):
    path = tmp_path / "r.jsonl"
    write_report([], str(path))
    assert not path.exists()
    rec = _record()
    write_report([rec], str(path))
    lines = path.read_text().splitlines()
    assert len(lines) == 1
    obj = json.loads(lines[0])
    assert list(obj) == list(rec.__dict__)
    assert ReportRecord(**obj) == rec
    bad = _record(disagreements=1, agreements=15,
                  counterexample={"tuple": {"a": 1}, "predicate": False, "oracle": True})
    write_report([bad], str(path))
    rows = read_report(str(path))
    assert rows[1]["counterexample"] == {"tuple": {"a": 1}, "predicate": False, "oracle": True}


def test_report_invariant_and_resume(tmp_path):
    out = str(tmp_path / "r.jsonl")
    recs = run_campaign(CampaignConfig("thm14", [2, 3], out=out))
    for r in recs:
        assert (r.disagreements == 0) == (r.counterexample is None)
    cid = recs[0].campaign_id
    again = run_campaign(CampaignConfig("thm14", [2, 3, 4], out=out, resume=cid))
    assert [r.q for r in again] == [4]
    rows = read_report(out)
    assert [r["q"] for r in rows] == [2, 3, 4]
    fresh = run_campaign(CampaignConfig("thm14", [2], out=out))
    assert fresh[0].campaign_id != cid


def test_unwritable_output(tmp_path):
    with pytest.raises(OSError):
        run_campaign(CampaignConfig("thm13", [2], out=str(tmp_path / "missing" / "r.jsonl")))


def test_registry_spaces():
    quad = quad_ext_for(3)
    assert REGISTRY["thm15"].space(quad).size == 3**4 * 2
    assert REGISTRY["prop43"].space(quad).size == 36
    with pytest.raises(ValueError):
        REGISTRY["thm15"].space(quad_ext_for(5))
