"""Verification campaigns: compare a theorem predicate with a brute-force oracle over a coefficient space.

Coefficient tuples are mixed-radix integers over element ids (first
coordinate most significant).  Exhaustive runs cut the index range into
blocks and give block i to stripe i mod jobs; sampled runs draw tuple k from
a hash of (seed, k), so any sample can be regenerated on its own.  Stripe
summaries merge by summing counts and keeping the counterexample with the
lowest tuple index, so results do not depend on the number of jobs.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import time
import uuid
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from . import batch
from .gf import FieldError, QuadExtCtx, prime_power, quad_ext_for
from .mureduce import lemma51_test, lemma52_test, quartic_form
from .permcheck import RationalFn, maps_onto, p1_points
from .poly import Poly
from .theorems import (
    THM12_READINGS,
    THM14_READINGS,
    ClassTag,
    PairMapCoeffs,
    QuarticCoeffs,
    Thm13Coeffs,
    check_cap,
    conjugacy_index,
    conjugate_coeffs,
    lemma55_normalize,
    predicted_class_for_cubic,
    thm11_predicate,
    thm12_predicate,
    thm13_predicate,
    thm14_predicate,
    thm15_predicate,
    thm17_classify,
    verify_class_witness,
)
from .theorems.quartic import _additive_clause

log = logging.getLogger(__name__)

DEFAULT_SEED = 20240917
BLOCK = 2048
THEOREMS = ("thm11", "thm12", "thm13", "thm14", "thm15", "thm17", "prop43", "lemma51chain", "lemma55")
# fraction of sampled tuples drawn near known positives, for theorems that provide them
ENRICH_FRACTION = 0.25


# --- configuration and records ---------------------------------------------------------

@dataclass
class CampaignConfig:
    theorem: str
    q_list: list[int]
    mode: str = "exhaustive"
    samples: int = 0
    seed: int = DEFAULT_SEED
    jobs: int = 1
    out: str | None = None
    search_cap: int | None = None
    reading: str = "literal"  # thm12 and thm14 only
    resume: str | None = None  # campaign id whose finished q values are skipped

    def validate(self) -> None:
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}; expected one of {', '.join(THEOREMS)}")
        if not self.q_list:
            raise ValueError("q_list is empty")
        for q in self.q_list:
            if prime_power(q) is None:
                raise ValueError(f"q={q} is not a prime power")
        if self.mode not in ("exhaustive", "sample"):
            raise ValueError(f"mode must be 'exhaustive' or 'sample', got {self.mode!r}")
        if self.mode == "sample" and self.samples < 1:
            raise ValueError("sample mode needs samples >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        allowed = {"thm12": THM12_READINGS, "thm14": THM14_READINGS}.get(self.theorem, ("literal",))
        if self.reading not in allowed:
            raise ValueError(f"reading {self.reading!r} not available for {self.theorem}; expected one of {allowed}")


@dataclass
class ReportRecord:
    campaign_id: str
    theorem: str
    q: int
    mode: str
    seed: int | None
    tested: int
    agreements: int
    disagreements: int
    oracle_positive: int
    counterexample: dict | None
    wall_time: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(", ", ": "))


# --- theorem registry ---------------------------------------------------------------------

@dataclass(frozen=True)
class Space:
    radices: tuple[int, ...]
    offsets: tuple[int, ...]

    @property
    def size(self) -> int:
        n = 1
        for r in self.radices:
            n *= r
        return n

    def decode(self, idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        out = np.empty((len(idx), len(self.radices)), dtype=np.int64)
        rest = idx.copy()
        for j in range(len(self.radices) - 1, -1, -1):
            r = self.radices[j]
            out[:, j] = rest % r + self.offsets[j]
            rest //= r
        return out

    def encode(self, tup: Sequence[int]) -> int:
        idx = 0
        for v, r, o in zip(tup, self.radices, self.offsets):
            idx = idx * r + (v - o)
        return idx


@dataclass(frozen=True)
class TheoremSpec:
    name: str
    space: Callable[[QuadExtCtx], Space]
    oracle: Callable[[QuadExtCtx, np.ndarray], np.ndarray]
    predicate: Callable[..., bool]
    pool: Callable[[QuadExtCtx], list] | None = None
    labels: tuple[str, ...] = ()


def _ext4(quad: QuadExtCtx) -> Space:
    n = quad.ext.order
    return Space((n, n, n, n), (0, 0, 0, 0))


def _quartic_exps(q: int) -> list[int]:
    return [3 * q, 2 * q + 1, q + 2, 3]


def _oracle_quartic_cm(quad, tuples):
    return batch.complete_mapping_rows(quad.ext, tuples, _quartic_exps(quad.q))


def _oracle_quartic_perm(quad, tuples):
    return batch.permutation_rows(quad.ext, tuples, _quartic_exps(quad.q))


def _pred_thm11(quad, t, cap=None, **_):
    return thm11_predicate(QuarticCoeffs(quad, *t), cap=cap).holds


def _pred_thm12(quad, t, reading="literal", **_):
    return thm12_predicate(QuarticCoeffs(quad, *t), reading=reading)


def _pred_thm13(quad, t, **_):
    return thm13_predicate(Thm13Coeffs(quad, *t))


def _oracle_thm13(quad, tuples):
    q = quad.q
    return batch.permutation_rows(quad.ext, tuples, [q, 1], lead_exp=q + 2)


def _base4(quad):
    q = quad.q
    return Space((q, q, q, q), (0, 0, 0, 0))


def _pred_thm14(quad, t, reading="literal", **_):
    return thm14_predicate(PairMapCoeffs(quad.base, *t), reading=reading)


def _oracle_thm14(quad, tuples):
    zeros = np.zeros((len(tuples), 1), dtype=np.int64)
    return batch.pair_map_rows(quad.base, np.hstack([tuples, zeros]))


def _space_thm15(quad):
    q = quad.q
    if q % 3:
        raise ValueError("thm15 needs 3 | q")
    return Space((q, q, q, q, q - 1), (0, 0, 0, 0, 1))


def _pred_thm15(quad, t, **_):
    return thm15_predicate(PairMapCoeffs(quad.base, *t))


def _oracle_thm15(quad, tuples):
    return batch.pair_map_rows(quad.base, tuples)


def _pred_thm17(quad, t, cap=None, **_):
    co = QuarticCoeffs(quad, *t)
    try:
        res = thm17_classify(co, cap=cap)
    except LookupError:
        return None  # unclassified permutation: never agrees
    if not verify_class_witness(co, res):
        return None
    return res.tag is not ClassTag.NOT_PERMUTATION


def _space_prop43(quad):
    q = quad.q
    if q % 3:
        raise ValueError("prop43 needs 3 | q")
    return Space((q - 1, q, q - 1, q), (1, 0, 1, 0))


def _pred_prop43(quad, t, **_):
    return False  # the claim: never a permutation


def _oracle_prop43(quad, tuples):
    return batch.permutation_rows(quad.base, tuples, [5, 3, 2, 1], lead_exp=9)


def _pred_chain(quad, t, **_):
    form = quartic_form(quad, *t)
    l51 = lemma51_test(form, quad)
    l52 = quad.q % 3 != 1 and lemma52_test(form, quad)
    return l51 if l51 == l52 else None


def _space_lemma55(quad):
    q = quad.q
    return Space((q - 1, q, q, q), (1, 0, 0, 0))  # (c3, c2, c1, c0), c3 != 0


def _cubic(quad, t) -> RationalFn:
    c3, c2, c1, c0 = t
    F = quad.base
    return RationalFn(Poly(F, [c0, c1, c2, c3]), Poly.const(F, 1))


def _pred_lemma55(quad, t, cap=None, **_):
    h = _cubic(quad, t)
    try:
        res = lemma55_normalize(h, cap=cap)
    except ValueError:
        return False  # not a permutation of P^1
    except LookupError:
        return None
    c3, c2, c1, c0 = t
    return res.cls == predicted_class_for_cubic(quad.base, [c0, c1, c2, c3])


def _oracle_lemma55(quad, tuples):
    # a polynomial fixes INF, so it permutes P^1 iff it permutes F_q
    return batch.permutation_rows(quad.base, tuples[:, [0, 1, 2]], [3, 2, 1])


@lru_cache(maxsize=16)
def _quartic_pool(quad: QuadExtCtx) -> list:
    """Known complete mappings: one conjugate per index entry plus the additive ones."""
    out = [conjugate_coeffs(quad, *w) for w in conjugacy_index(quad).values()]
    if quad.q % 3 == 0:
        n = quad.ext.order
        for a in range(n):
            for d in range(n):
                if _additive_clause(QuarticCoeffs(quad, a, 0, 0, d)):
                    out.append((a, 0, 0, d))
    return sorted(set(out))


REGISTRY: dict[str, TheoremSpec] = {
    "thm11": TheoremSpec("thm11", _ext4, _oracle_quartic_cm, _pred_thm11, _quartic_pool, ("a", "b", "c", "d")),
    "thm12": TheoremSpec("thm12", _ext4, _oracle_quartic_cm, _pred_thm12, _quartic_pool, ("a", "b", "c", "d")),
    "thm13": TheoremSpec(
        "thm13", lambda quad: Space((quad.ext.order,) * 2, (0, 0)), _oracle_thm13, _pred_thm13, None, ("b", "c")
    ),
    "thm14": TheoremSpec("thm14", _base4, _oracle_thm14, _pred_thm14, None, ("a", "b", "c", "d")),
    "thm15": TheoremSpec("thm15", _space_thm15, _oracle_thm15, _pred_thm15, None, ("a", "b", "c", "d", "e")),
    "thm17": TheoremSpec("thm17", _ext4, _oracle_quartic_perm, _pred_thm17, None, ("a", "b", "c", "d")),
    "prop43": TheoremSpec("prop43", _space_prop43, _oracle_prop43, _pred_prop43, None, ("a", "b", "c", "d")),
    "lemma51chain": TheoremSpec(
        "lemma51chain", _ext4, _oracle_quartic_perm, _pred_chain, None, ("a", "b", "c", "d")
    ),
    "lemma55": TheoremSpec("lemma55", _space_lemma55, _oracle_lemma55, _pred_lemma55, None, ("c3", "c2", "c1", "c0")),
}

CAPPED = {"thm11": "thm11", "thm17": "thm17", "lemma55": "lemma55"}


# --- sampling --------------------------------------------------------------------------------

def _hash_int(seed: int, k: int, salt: str = "") -> int:
    h = hashlib.blake2b(f"{seed}:{k}:{salt}".encode(), digest_size=16).digest()
    return int.from_bytes(h, "little")


def sample_tuple(space: Space, seed: int, k: int, pool: list | None = None) -> tuple[int, ...]:
    """Sample k of a seeded run; reproducible from (seed, k) alone."""
    h = _hash_int(seed, k)
    if pool and (h & 0xFFFF) < ENRICH_FRACTION * 0x10000:
        h2 = _hash_int(seed, k, "pool")
        base = list(pool[h2 % len(pool)])
        # half the time move one coordinate so negatives near the positives are covered too
        if (h2 >> 64) & 1:
            j = (h2 >> 65) % len(base)
            base[j] = space.offsets[j] + (h2 >> 72) % space.radices[j]
        return tuple(base)
    idx = (h >> 16) % space.size
    return tuple(int(v) for v in space.decode(np.array([idx]))[0])


# --- stripes ----------------------------------------------------------------------------------

@dataclass
class StripeResult:
    tested: int = 0
    agreements: int = 0
    disagreements: int = 0
    oracle_positive: int = 0
    first: tuple | None = None  # (tuple_index, tuple, predicate, oracle)

    def merge(self, other: "StripeResult") -> None:
        self.tested += other.tested
        self.agreements += other.agreements
        self.disagreements += other.disagreements
        self.oracle_positive += other.oracle_positive
        if other.first is not None and (self.first is None or other.first[0] < self.first[0]):
            self.first = other.first


def _check_block(spec: TheoremSpec, quad: QuadExtCtx, space: Space, tuples: np.ndarray, opts: dict) -> StripeResult:
    res = StripeResult()
    oracle = spec.oracle(quad, tuples)
    for row, orc in zip(tuples, oracle):
        t = tuple(int(v) for v in row)
        pred = spec.predicate(quad, t, **opts)
        orc = bool(orc)
        res.tested += 1
        res.oracle_positive += orc
        if pred is not None and pred == orc:
            res.agreements += 1
        else:
            res.disagreements += 1
            idx = space.encode(t)
            if res.first is None or idx < res.first[0]:
                res.first = (idx, t, pred, orc)
    return res


def run_stripe(theorem: str, q: int, mode: str, samples: int, seed: int, jobs: int, stripe: int, opts: dict) -> StripeResult:
    spec = REGISTRY[theorem]
    quad = quad_ext_for(q)
    space = spec.space(quad)
    pool = spec.pool(quad) if (spec.pool and mode == "sample") else None
    total = space.size if mode == "exhaustive" else samples
    out = StripeResult()
    for block in range(stripe, (total + BLOCK - 1) // BLOCK, jobs):
        lo, hi = block * BLOCK, min(total, (block + 1) * BLOCK)
        if mode == "exhaustive":
            tuples = space.decode(np.arange(lo, hi))
        else:
            tuples = np.array([sample_tuple(space, seed, k, pool) for k in range(lo, hi)], dtype=np.int64)
        out.merge(_check_block(spec, quad, space, tuples, opts))
    return out


def _run_stripe_packed(args):
    return run_stripe(*args)


def _counterexample(spec: TheoremSpec, first: tuple | None) -> dict | None:
    if first is None:
        return None
    _, t, pred, orc = first
    return {
        "tuple": dict(zip(spec.labels, t)),
        "predicate": pred,
        "oracle": orc,
    }


def new_campaign_id(cfg: CampaignConfig) -> str:
    return f"{cfg.theorem}-{time.strftime('%Y%m%dT%H%M%S', time.gmtime())}-{uuid.uuid4().hex[:8]}"


def run_campaign(cfg: CampaignConfig, campaign_id: str | None = None) -> list[ReportRecord]:
    """One record per q, appended to ``cfg.out`` when set."""
    cfg.validate()
    spec = REGISTRY[cfg.theorem]
    campaign_id = campaign_id or cfg.resume or new_campaign_id(cfg)
    done = _finished_q(cfg.out, campaign_id) if cfg.out else set()
    opts: dict = {}
    if cfg.theorem in CAPPED:
        opts["cap"] = cfg.search_cap
    if cfg.theorem in ("thm12", "thm14"):
        opts["reading"] = cfg.reading
    records = []
    for q in cfg.q_list:
        if q in done:
            log.info("skipping q=%d, already in %s for %s", q, cfg.out, campaign_id)
            continue
        if cfg.theorem in CAPPED:
            check_cap(CAPPED[cfg.theorem], q, cfg.search_cap)
        t0 = time.perf_counter()
        args = [(cfg.theorem, q, cfg.mode, cfg.samples, cfg.seed, cfg.jobs, s, opts) for s in range(cfg.jobs)]
        total = StripeResult()
        if cfg.jobs == 1:
            total.merge(run_stripe(*args[0]))
        else:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
                for part in ex.map(_run_stripe_packed, args):
                    total.merge(part)
        rec = ReportRecord(
            campaign_id=campaign_id,
            theorem=cfg.theorem,
            q=q,
            mode=cfg.mode,
            seed=cfg.seed if cfg.mode == "sample" else None,
            tested=total.tested,
            agreements=total.agreements,
            disagreements=total.disagreements,
            oracle_positive=total.oracle_positive,
            counterexample=_counterexample(spec, total.first),
            wall_time=round(time.perf_counter() - t0, 3),
        )
        records.append(rec)
        if cfg.out:
            write_report([rec], cfg.out)
    return records


# --- reports and config -----------------------------------------------------------------------

def write_report(records: Sequence[ReportRecord], path: str) -> None:
    """Append one JSON object per record; nothing is written for an empty list."""
    if not records:
        return
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")


def read_report(path: str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def _finished_q(path: str, campaign_id: str) -> set[int]:
    if not os.path.exists(path):
        return set()
    return {r["q"] for r in read_report(path) if r.get("campaign_id") == campaign_id}


CONFIG_KEYS = ("theorem", "q_list", "mode", "samples", "seed", "jobs", "out", "search_cap", "reading")


def parse_q_list(text: str) -> list[int]:
    """Comma-separated values and ranges: "2,3,4" or "2..16" (a range keeps only prime powers)."""
    out: list[int] = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if ".." in part:
            lo, hi = (int(x) for x in part.split("..", 1))
            out.extend(q for q in range(lo, hi + 1) if prime_power(q) is not None)
        else:
            try:
                q = int(part)
            except ValueError:
                raise ValueError(f"malformed q value {part!r}") from None
            if prime_power(q) is None:
                raise ValueError(f"q={q} is not a prime power")
            out.append(q)
    return out


def load_config(path: str, overrides: dict | None = None) -> CampaignConfig:
    """Read flat ``key = value`` lines (``#`` starts a comment); ``overrides`` win over the file."""
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, val = (s.strip() for s in line.split("=", 1))
            if key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = val
    for k, v in (overrides or {}).items():
        if v is not None:
            values[k] = v
    return config_from_values(values)


def config_from_values(values: dict) -> CampaignConfig:
    if "theorem" not in values or "q_list" not in values:
        raise ValueError("config needs theorem and q_list")

    def as_int(key: str, default):
        if key not in values or values[key] in (None, ""):
            return default
        v = values[key]
        try:
            return int(v)
        except (TypeError, ValueError):
            raise ValueError(f"{key}: malformed integer {v!r}") from None

    q_list = values["q_list"]
    if isinstance(q_list, str):
        q_list = parse_q_list(q_list)
    cfg = CampaignConfig(
        theorem=str(values["theorem"]),
        q_list=list(q_list),
        mode=str(values.get("mode") or "exhaustive"),
        samples=as_int("samples", 0),
        seed=as_int("seed", DEFAULT_SEED),
        jobs=as_int("jobs", 1),
        out=values.get("out") or None,
        search_cap=as_int("search_cap", None),
        reading=str(values.get("reading") or "literal"),
        resume=values.get("resume") or None,
    )
    cfg.validate()
    return cfg


__all__ = [
    "DEFAULT_SEED",
    "THEOREMS",
    "CampaignConfig",
    "ReportRecord",
    "Space",
    "REGISTRY",
    "StripeResult",
    "run_campaign",
    "run_stripe",
    "sample_tuple",
    "write_report",
    "read_report",
    "load_config",
    "config_from_values",
    "parse_q_list",
]
