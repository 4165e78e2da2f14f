"""Shared fixtures: the bundled example pipelines are expensive, so they are
computed once per session and their wall times recorded for the acceptance
budget checks."""

from __future__ import annotations

import time

import pytest

import filtra as F
from filtra.registry import EXAMPLE_IDS, build_example
from filtra.taskfile import parse_task


@pytest.fixture(scope="session")
def timings() -> dict:
    return {}


@pytest.fixture(scope="session")
def examples(timings):
    """id -> (entry, taskfile, filtration spec)."""
    out = {}
    for ex in EXAMPLE_IDS:
        entry = build_example(ex)
        tf = parse_task(entry.task_text)
        out[ex] = (entry, tf, tf.filtration())
    return out


@pytest.fixture(scope="session")
def upper_reports(examples, timings):
    """Upper-bound reports for the three verify-style examples."""
    out = {}
    for ex in ("3.2", "3.3", "4.2"):
        entry, tf, spec = examples[ex]
        t0 = time.perf_counter()
        out[ex] = F.verify_upper_bound(spec, tf.sequence())
        timings[f"upper {ex}"] = time.perf_counter() - t0
    return out


@pytest.fixture(scope="session")
def summaries_36(examples, timings):
    _, _, spec = examples["3.6"]
    t0 = time.perf_counter()
    pair = F.summaries_agree(spec)
    timings["hilbert 3.6"] = time.perf_counter() - t0
    return pair


def certified_random_sequence(spec, length, start_seed=1, max_tries=40):
    """Explicitly requested randomized superficial sequence with logged seeds."""
    from filtra.errors import NotSuperficialError
    from filtra.superficial import random_superficial_candidate

    seq, seeds, cur, seed = [], [], spec, start_seed
    while len(seq) < length:
        if seed - start_seed > max_tries:
            raise RuntimeError("could not certify a random superficial sequence")
        a = random_superficial_candidate(cur, seed)
        try:
            F.certify_superficial(cur, a)
        except NotSuperficialError:
            seed += 1
            continue
        seq.append(a)
        seeds.append(seed)
        cur = F.quotient_filtration(cur, [a])
        seed += 1
    return seq, seeds
