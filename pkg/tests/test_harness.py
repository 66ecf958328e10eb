import json
import math
import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coslab.errors import BoxTooSmall, PersistError
from coslab.harness import (
    SearchRecord,
    brute_force_Z,
    colex_rank,
    colex_subsets,
    colex_unrank,
    end_to_end,
    fit_constant,
    load,
    master_lhs,
    persist,
    random_structured,
    resume_search,
    structured_family,
    theorem_quantity,
    verify_master,
    verify_records,
)
from coslab.poly import CosinePoly

# minimum zero counts and minimizers, frozen from the sampling oracle
FROZEN = {(3, 8): (2, [(0, 1, 3)]), (4, 9): (2, [(0, 1, 3, 5)])}


def test_colex_order_matches_sort_by_reversed_tuple():
    subsets = list(colex_subsets(3, 7))
    expected = sorted(combinations(range(8), 3), key=lambda A: A[::-1])
    assert subsets == expected


@given(st.integers(1, 5), st.integers(0, 3000))
def test_rank_unrank_round_trip(k, r):
    assert colex_rank(colex_unrank(r, k)) == r


def test_colex_slices_concatenate():
    whole = list(colex_subsets(4, 10))
    parts = list(colex_subsets(4, 10, 0, 100)) + list(colex_subsets(4, 10, 100, 250)) + list(colex_subsets(4, 10, 250))
    assert parts == whole


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_minimum(key):
    res = brute_force_Z(*key)
    assert (res.min_Z, list(res.minimizers)) == FROZEN[key]
    assert len(res.records) == math.comb(key[1] + 1, key[0])


def test_worker_count_does_not_change_output():
    a = brute_force_Z(4, 11, jobs=1)
    b = brute_force_Z(4, 11, jobs=4)
    assert a == b


def test_restrict_reads_prefix():
    big = brute_force_Z(3, 9)
    small = big.restrict(8)
    assert small == brute_force_Z(3, 8)
    with pytest.raises(ValueError):
        small.restrict(9)


def test_box_too_small():
    with pytest.raises(BoxTooSmall):
        brute_force_Z(5, 3)


def test_verify_records_flags_tampering():
    res = brute_force_Z(3, 6)
    assert verify_records(res.records, fraction=1.0) == []
    r = res.records[5]
    bad = SearchRecord(r.A, r.N, r.Z + 2, r.d, r.box)
    assert verify_records([bad], fraction=1.0) == [bad]


def test_persist_and_load(tmp_path):
    path = tmp_path / "runs.jsonl"
    res = brute_force_Z(2, 5)
    assert persist(res.records, path) == len(res.records)
    assert load(path) == list(res.records)


def test_load_drops_torn_tail_and_reports_bad_lines(tmp_path):
    path = tmp_path / "runs.jsonl"
    res = brute_force_Z(2, 4)
    persist(res.records, path)
    with open(path, "a") as fh:
        fh.write('{"A": [0, 9], "N"')
    assert len(load(path)) == len(res.records)
    lines = path.read_text().split("\n")
    lines[2] = "not json"
    path.write_text("\n".join(lines))
    with pytest.raises(PersistError) as exc:
        load(path)
    assert ":3" in str(exc.value)
    assert len(load(path, lenient=True)) == len(res.records) - 1


def test_load_missing_file(tmp_path):
    with pytest.raises(PersistError):
        load(tmp_path / "absent.jsonl")


def test_resume_after_interruption(tmp_path):
    path = tmp_path / "runs.jsonl"
    full = brute_force_Z(3, 9)
    # simulate a crash: first 50 records plus half a line
    with open(path, "w") as fh:
        for r in full.records[:50]:
            fh.write(r.to_json() + "\n")
        fh.write(full.records[50].to_json()[:20])
    res = resume_search(3, 9, path)
    assert (res.min_Z, res.minimizers) == (full.min_Z, full.minimizers)
    recs = load(path)
    assert len(recs) == len(full.records)
    assert len({r.A for r in recs}) == len(recs)
    # resuming a finished run appends nothing
    resume_search(3, 9, path)
    assert len(load(path)) == len(full.records)


def test_record_json_fields():
    r = SearchRecord((0, 2), 2, 4, 2, 5, 1.5, 7)
    obj = json.loads(r.to_json())
    assert obj == {"A": [0, 2], "N": 2, "Z": 4, "d": 2, "box": 5, "timestamp": 1.5, "seed": 7}
    assert SearchRecord.from_dict(obj) == r


def test_master_lhs_and_theorem_quantity():
    assert master_lhs(2, 1, 1, 1) == pytest.approx(2 * math.log(2))
    assert master_lhs(3, 2, 2, 3) == pytest.approx(3 * 2 * 4 * math.log(6))
    assert theorem_quantity(10, 1) is None
    assert theorem_quantity(10**9, 1) > 0


def test_verify_master_on_family():
    fam = structured_family(5, seed=4, N_max=150)
    reps = [verify_master(sp.g, sp.partition, d=sp.d) for sp in fam]
    C = fit_constant(reps)
    assert all(r.holds(C) for r in reps)
    assert all(r.d >= 1 for r in reps)


def test_structured_family_is_reproducible():
    a = structured_family(4, seed=9, N_max=100)
    b = structured_family(4, seed=9, N_max=100)
    assert a == b
    for sp in a:
        sp.partition.check(sp.g.coeffs)
        assert set(int(c) for c in sp.g.coeffs) <= set(sp.S)


def test_end_to_end_unstructured_row():
    rng = random.Random(1)
    g = CosinePoly(tuple(rng.randint(-3, 3) for _ in range(150)))
    rep = end_to_end(g, 3)
    assert not rep.structured and math.isnan(rep.lhs)


def test_end_to_end_structured():
    sp = random_structured(random.Random(2), K_max=2, P_max=3, N_min=150, N_max=200)
    rep = end_to_end(sp.g, 6)
    assert rep.structured and rep.lhs > 0
