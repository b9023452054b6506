import itertools
import random

import numpy as np
import pytest

from constacyclic.code import (
    CzPoint,
    build_code,
    build_v_circ,
    is_codeword,
    min_distance_bruteforce,
    point_orbit,
    syndrome,
    systematic_encode,
)
from constacyclic.decoder import (
    Status,
    choose_method,
    decode,
    decode_exhaustive,
    decode_frequency_domain,
    decode_time_domain,
    detect,
    dual_sets,
    locate,
    widened_candidates,
)
from constacyclic.exceptions import BudgetExceeded
from constacyclic.field import build_root_system
from constacyclic.ring import ArrayMN
from constacyclic.simulate import make_trial, random_error, trial_rng

DIRECT = {
    "time": decode_time_domain,
    "freq": decode_frequency_domain,
    "exhaustive": decode_exhaustive,
}


@pytest.fixture(scope="module")
def example1(f81):
    return ArrayMN.from_dict(f81, 4, 5, {(0, 1): 2})


@pytest.fixture(scope="module")
def example2(f81):
    return ArrayMN.from_dict(f81, 4, 5, {(0, 1): 2, (1, 1): 1})


@pytest.fixture(scope="module")
def all_codewords(code):
    """Every codeword as a row of a (3^12, 20) array, row-major cell order."""
    k = code.dimension
    idx = np.arange(3**k, dtype=np.int64)
    msgs = (idx[:, None] // 3 ** np.arange(k)[None, :]) % 3
    par = (msgs @ np.array(code.parity_map, dtype=np.int64).T) % 3
    words = np.zeros((len(idx), 20), dtype=np.int64)
    for c, (i, j) in enumerate(code.message_positions):
        words[:, i * 5 + j] = msgs[:, c]
    for c, (i, j) in enumerate(code.parity_positions):
        words[:, i * 5 + j] = par[:, c]
    return words


def test_detection(code, example1):
    assert detect(code, example1)
    assert not detect(code, systematic_encode(code, [1] * 12))
    rnd = random.Random(9)
    for _ in range(100):
        c, e = make_trial(code, 1, rnd)
        assert detect(code, c + e)


def test_locate_examples(code, example1, example2):
    rep = locate(code, example1)
    assert rep.detected
    assert (set(rep.row_candidates), set(rep.col_candidates)) == ({0}, {1})
    assert rep.candidates == ((0, 1),)
    rep = locate(code, example2)
    assert (set(rep.row_candidates), set(rep.col_candidates)) == ({0, 1}, {1})
    assert rep.candidates == ((0, 1), (1, 1))
    clean = locate(code, systematic_encode(code, [2] * 12))
    assert not clean.detected and clean.candidates == ()
    assert rep.t_max == 4


def test_time_domain_system_example1(code, roots, f81, example1):
    out = decode_time_domain(code, example1, [(0, 1)])
    b = roots.beta
    two = lambda x: f81.mul(2, x)  # noqa: E731
    column = [b, f81.pow(b, 3), two(f81.pow(b, 4)), two(f81.pow(b, 2)),
              f81.pow(b, 3), two(f81.pow(b, 4)), two(f81.pow(b, 2)), b]
    assert [a_j for (_, a_j) in code.points()] == column  # the coefficient of e_{0,1}
    assert out.system.status == "unique"
    assert out.system.solution == (2,)
    assert out.status is Status.CORRECTED and out.codeword.is_zero()


def test_time_domain_system_example2(code, example2):
    out = decode_time_domain(code, example2, [(0, 1), (1, 1)])
    s = out.system
    assert (s.rank, s.augmented_rank, s.unknowns) == (2, 2, 2)
    assert s.solution == (2, 1)
    assert out.codeword.is_zero() and out.error_pattern == example2


@pytest.mark.parametrize("method", ["time", "freq", "exhaustive"])
@pytest.mark.parametrize("which", ["example1", "example2"])
def test_examples_all_methods(code, method, which, request):
    r = request.getfixturevalue(which)
    rep = locate(code, r)
    direct = DIRECT[method](code, r, rep.candidates)
    assert direct.status is Status.CORRECTED
    assert direct.codeword.is_zero() and direct.error_pattern == r
    via_decode = decode(code, r, method)
    assert via_decode.status is Status.CORRECTED
    if method == "exhaustive" and which == "example2":
        # the widened search sees the whole board: r is one symbol from a weight-3 codeword
        assert via_decode.error_pattern.support() == [(2, 1)]
        assert via_decode.codeword.weight() == 3
    else:
        assert via_decode.codeword.is_zero()


def test_dual_set_sizes(code):
    sets = dual_sets(code, [(0, 1)])
    assert (sets.s_prime, sets.t_prime) == (12, 19)


def test_frequency_domain_with_no_candidates(code):
    c = systematic_encode(code, [1, 2, 0, 1, 1, 0, 2, 2, 1, 0, 0, 1])
    out = decode_frequency_domain(code, c, [])
    assert out.status is Status.CLEAN and out.codeword == c


def test_exhaustive_with_no_candidates(code):
    c = systematic_encode(code, [2] * 12)
    out = decode_exhaustive(code, c, [])
    assert out.status is Status.CLEAN and out.codeword == c


def test_duality_violation(code, example1):
    cands = [(i, j) for i in range(4) for j in range(4)]
    out = decode_frequency_domain(code, example1, cands)
    assert out.status is Status.FAILURE and out.failure_reason == "DualityViolated"


def test_non_base_solution_rejected(code, f81):
    r = ArrayMN.from_dict(f81, 4, 5, {(0, 1): f81.alpha})
    out = decode_time_domain(code, r, [(0, 1)])
    assert out.failure_reason == "NonBaseFieldSolution"
    assert decode_exhaustive(code, r, [(0, 1)]).failure_reason == "NonBaseFieldInput"


def test_inconsistent_system(code, example2):
    out = decode_time_domain(code, example2, [(0, 1)])
    assert out.status is Status.FAILURE and out.failure_reason == "Inconsistent"
    assert decode_exhaustive(code, example2, [(0, 1)]).failure_reason == "NoMatch"


def test_budget(code, example1):
    everything = [(i, j) for i in range(4) for j in range(5)]
    with pytest.raises(BudgetExceeded):
        decode_exhaustive(code, example1, everything, budget=1000, strategy="brute")
    with pytest.raises(BudgetExceeded):
        decode_exhaustive(code, example1, everything, budget=1000, strategy="coset")
    out = decode(code, example1, "exhaustive", budget=10)
    assert out.failure_reason == "BudgetExceeded"


def test_search_strategies_agree(code):
    rnd = random.Random(4)
    cells = [(i, j) for i in range(4) for j in range(5)]
    for _ in range(40):
        c, e = make_trial(code, rnd.randint(1, 3), rnd)
        cands = sorted(set(e.support()) | set(rnd.sample(cells, 6)))
        outs = [decode_exhaustive(code, c + e, cands, strategy=s) for s in ("brute", "coset", "weight")]
        assert len({(o.status, o.failure_reason, o.codeword) for o in outs}) == 1


def test_weight_distribution_starts_at_three(code, all_codewords):
    counts = np.bincount(np.count_nonzero(all_codewords, axis=1), minlength=21)
    assert counts[0] == 1 and counts[1:3].sum() == 0 and counts[3] > 0
    assert counts.sum() == 3**code.dimension
    assert min_distance_bruteforce(code) == 3


def test_tie_is_refused(code, f81, all_codewords):
    everything = [(i, j) for i in range(4) for j in range(5)]
    weights = np.count_nonzero(all_codewords, axis=1)
    for d in all_codewords[weights == 6][:50]:
        support = np.flatnonzero(d)[:3]
        flat = np.zeros(20, dtype=np.int64)
        flat[support] = d[support]
        # flat and flat - d both explain r with three errors
        if np.count_nonzero((all_codewords - flat) % 3, axis=1).min() == 3:
            break
    else:
        pytest.fail("no tied received word found")
    r = ArrayMN.from_dict(f81, 4, 5, {(int(k) // 5, int(k) % 5): int(flat[k]) for k in support})
    assert decode_exhaustive(code, r, everything).failure_reason == "AmbiguousMinWeight"


def test_weight_one_always_corrected(code):
    for trial in range(300):
        c, e = make_trial(code, 1, trial_rng(11, 1, trial))
        out = decode(code, c + e)
        assert out.status is Status.CORRECTED and out.codeword == c


def test_cancelled_column_recovered_by_widening(code):
    c, e = make_trial(code, 1, trial_rng(7, 1, 6))
    rep = locate(code, c + e)
    assert not set(e.support()) <= set(rep.candidates)
    assert set(e.support()) <= set(widened_candidates(code, rep))
    out = decode(code, c + e)
    assert out.codeword == c
    assert decode(code, c + e, widen=False).codeword != c


def test_methods_agree_on_random_trials(code):
    for trial in range(200):
        w = 1 + trial % 4
        c, e = make_trial(code, w, trial_rng(3, w, trial))
        r = c + e
        cands = locate(code, r).candidates
        words = [
            out.codeword
            for out in (fn(code, r, cands) for fn in DIRECT.values())
            if out.status is Status.CORRECTED
        ]
        assert all(wd == words[0] for wd in words)


def test_outcome_invariants(code):
    for trial in range(150):
        w = trial % 5
        c, e = make_trial(code, w, trial_rng(5, w, trial))
        r = c + e
        out = decode(code, r)
        if w == 0:
            assert out.status is Status.CLEAN and out.codeword is r
            continue
        if out.ok:
            assert is_codeword(code, out.codeword)
            assert out.codeword + out.error_pattern == r
            assert syndrome(code, out.error_pattern) == syndrome(code, r)
        contained = set(e.support()) <= set(out.locate.candidates)
        if contained and out.ok and out.codeword != c:
            # a miscorrection always has an explanation at most as heavy as the truth
            assert out.error_pattern.weight() <= e.weight()


def test_auto_prefers_frequency_for_low_rate_codes(f81):
    r = build_root_system(f81, 4, 5, 1, 1)
    _, reps = build_v_circ(r)
    keep = [rep for rep in reps if CzPoint(3, 4) not in point_orbit(r, rep)]
    rep_code = build_code(r, keep)
    assert choose_method(rep_code, [(0, 0), (0, 1)]) == "freq"
    rnd = random.Random(0)
    c = systematic_encode(rep_code, [2])
    e = random_error(rep_code, 3, rnd)
    out = decode(rep_code, c + e)
    assert out.codeword == c
    assert out.method_used.startswith("freq") or out.method_used.startswith("time")


def test_choose_method_default(code):
    assert choose_method(code, [(0, 1)]) == "time"
    assert choose_method(code, list(itertools.product(range(4), range(5)))) == "time"


def test_shape_mismatch(code, f81):
    with pytest.raises(ValueError):
        locate(code, ArrayMN.zeros(f81, 2, 2))
