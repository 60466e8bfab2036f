import itertools
import json

import pytest

import bicrit


def outcomes(jobs):
    """(Tmax, sum U) over every order, computed in plain Python."""
    seen = set()
    for perm in itertools.permutations(range(len(jobs))):
        t, tmax, late = 0, 0, 0
        for i in perm:
            p, d = jobs[i]
            t += p
            tmax = max(tmax, t - d)
            late += t > d
        seen.add((max(tmax, 0), late))
    return seen


def test_evaluate_small():
    inst = bicrit.make_instance([(2, 2), (3, 4), (2, 5)])
    ev = bicrit.evaluate(inst, [0, 1, 2])
    assert [int(c) for c in ev["completion"]] == [2, 5, 7]
    assert ev["num_tardy"] == 2


def test_big_integers_round_trip():
    big = 10**30
    inst = bicrit.make_instance([(big, big + 1), (1, 2)])
    assert inst.total_proc == big + 1
    assert inst.jobs[0][1] == big
    with pytest.raises(OverflowError):
        bicrit.make_instance([(2**126, 1), (2**126, 1)]).total_proc


@pytest.mark.parametrize("seed", range(5))
def test_solvers_match_enumeration(seed):
    import random

    rng = random.Random(seed)
    jobs = [(rng.randint(1, 6), rng.randint(1, 15)) for _ in range(6)]
    inst = bicrit.make_instance(jobs)
    all_pairs = outcomes(jobs)

    lex_tu = min(all_pairs)
    r = bicrit.solve_lex_tmax_then_u(inst)
    assert (r["tmax"], r["num_tardy"]) == (str(lex_tu[0]), lex_tu[1])

    lex_ut = min((u, t) for t, u in all_pairs)
    r = bicrit.solve_lex_u_then_tmax(inst)
    assert (r["num_tardy"], int(r["tmax"])) == lex_ut

    ell = lex_tu[0] + 2
    best = min(u for t, u in all_pairs if t <= ell)
    assert bicrit.solve_constraint(inst, ell)["num_tardy"] == best
    assert bicrit.decision_constraint(inst, ell, best)["answer"]
    assert not bicrit.decision_constraint(inst, ell, best - 1)["answer"] if best > 0 else True

    w = min(3 * t + u for t, u in all_pairs)
    assert int(bicrit.solve_weighted_sum(inst, 3, 1)["objective"][0]) == w


def test_strong_gadget():
    inst = bicrit.gen_strong([1, 1, 1], 1)
    assert len(inst) == 21
    assert inst.variant["k"] == "6"
    assert bicrit.check_strong_identities(inst)["identity_failures"] == []
    sweep = bicrit.sweep_strong(inst)
    assert sweep["best_tardy"] == 6
    report = bicrit.lemma_check(inst, samples=100, seed=3)
    assert report["mismatches"] == [] and report["feasibility_mismatches"] == []


def test_weak_gadget():
    inst = bicrit.gen_weak([1, 1, 2])
    assert len(inst) == 120
    assert bicrit.moore_hodgson(inst)[1] == 6
    assert bicrit.sweep_weak(inst)["achievable"]
    assert not bicrit.sweep_weak(bicrit.gen_weak([1, 1, 1, 7]))["achievable"]


def test_json_round_trip():
    inst = bicrit.gen_weak([1, 1, 2])
    text = inst.to_json()
    again = bicrit.Instance.from_json(text)
    assert again.to_json() == text
    assert json.loads(text)["jobs"][0]["p"] == inst.jobs[0][1].__str__()


def test_bad_inputs():
    with pytest.raises(ValueError):
        bicrit.Instance.from_json('{"jobs":[{"id":0,"p":1.5,"d":"2"}]}')
    with pytest.raises(ValueError):
        bicrit.gen_lex_gadget(bicrit.make_instance([(4, 5), (3, 6), (3, 9)]), 10)
    with pytest.raises(ValueError):
        bicrit.evaluate(bicrit.make_instance([(1, 1), (1, 1)]), [0, 0])


def test_source_solvers():
    assert bicrit.solve_partition([1, 1, 2]) is not None
    assert bicrit.solve_partition([1, 1, 1, 7]) is None
    assert bicrit.solve_three_partition([1, 2, 3, 2, 2, 2], 2) is not None
