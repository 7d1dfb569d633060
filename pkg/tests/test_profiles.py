import pytest

from cubeplane.convex import edge_length
from cubeplane.profiles import (
    BUDGET,
    DRAFT_Q4_PROFILES,
    FILTERED,
    REALIZABLE,
    REFUTED,
    SearchBudgetExceeded,
    all_profiles,
    check_conjectures,
    enumerate_profiles,
    necessary_filters,
    realizable,
    realize_profile,
)


def _lengths_at(D, v):
    # independent recomputation of a vertex's edge lengths from positions
    out = []
    for w in (v ^ (1 << i) for i in range(D.d)):
        r = (D.pos[v] - D.pos[w]) % D.n
        out.append(min(r, D.n - r))
    return sorted(out)


def test_draft_list_shape():
    assert len(DRAFT_Q4_PROFILES) == 31
    assert all(list(p) == sorted(p) and len(p) == 4 for p in DRAFT_Q4_PROFILES)


@pytest.mark.parametrize(
    "profile,ok",
    [
        ((2, 2, 2, 2), False),  # no odd length
        ((1, 1, 2, 5), False),  # odd length twice with an even one
        ((2, 2, 4, 5), False),  # 2 twice forbids its double 4
        ((1, 2, 2, 6), True),
        ((4, 4, 6, 7), True),
    ],
)
def test_filters(profile, ok):
    assert (necessary_filters(profile, 4) is None) == ok


def test_filter_input_checks():
    with pytest.raises(ValueError):
        necessary_filters((1, 2, 3), 4)
    with pytest.raises(ValueError):
        necessary_filters((1, 2, 3, 9), 4)


def test_small_dimensions():
    assert realizable(enumerate_profiles(2)) == [(1, 1), (1, 2)]
    assert len(all_profiles(3)) == 20


def test_witness_has_requested_profile():
    for prof in [(4, 4, 6, 7), (4, 6, 7, 8), (1, 2, 2, 6)]:
        D, _ = realize_profile(prof, 4)
        assert D is not None
        assert all(_lengths_at(D, v) == list(prof) for v in D.order)


def test_unrealizable_profile_is_refuted():
    D, nodes = realize_profile((2, 2, 2, 2), 4)
    assert D is None and nodes > 0


def test_budget_is_reported_not_swallowed():
    with pytest.raises(SearchBudgetExceeded):
        realize_profile((1, 2, 3, 6), 4, node_budget=3)
    res = enumerate_profiles(3, node_budget=2)
    assert any(c.status == BUDGET for c in res)
    full = {c.profile: c.status for c in enumerate_profiles(3)}
    # a tiny budget may still refute quickly, but never contradict the full search
    assert all(full[c.profile] == c.status for c in res if c.status != BUDGET)


def test_limits():
    with pytest.raises(ValueError):
        realize_profile((1, 2, 3, 4, 5), 5)
    with pytest.raises(ValueError):
        enumerate_profiles(5)


def test_audit_d3_filters_are_sound():
    res = enumerate_profiles(3, audit=True)
    assert all(c.audit_status != REALIZABLE for c in res if c.status == FILTERED)
    assert all(c.audit_status is not None for c in res if c.status == FILTERED)


def test_other_vertex_orders_agree():
    # depth-first order of ids is also connected-prefix; verdicts must not change
    order = [0, 1, 3, 2, 6, 7, 5, 4]
    a = [(c.profile, c.status) for c in enumerate_profiles(3)]
    b = [(c.profile, c.status) for c in enumerate_profiles(3, vertex_order=order)]
    assert a == b


def test_q4_enumeration_and_report():
    res = enumerate_profiles(4)
    found = realizable(res)
    assert all(p in found for p in DRAFT_Q4_PROFILES)
    assert (4, 4, 6, 7) in found and (4, 6, 7, 8) in found
    rep = check_conjectures(res, 4)
    assert rep.repeated_odd == [] and rep.all_odd == [] and rep.bound_violations == []
    assert rep.missing_from_search == []
    assert sorted(rep.new_profiles) == sorted(p for p in found if p not in DRAFT_Q4_PROFILES)
    entry = next(c for c in res if c.profile == (4, 4, 6, 7)).to_dict(4)
    assert entry["status"] == REALIZABLE and entry["in_draft_list"] and len(entry["witness_order"]) == 16


def test_parallel_enumeration_matches_serial():
    a = [(c.profile, c.status) for c in enumerate_profiles(3)]
    b = [(c.profile, c.status) for c in enumerate_profiles(3, workers=2)]
    assert a == b
