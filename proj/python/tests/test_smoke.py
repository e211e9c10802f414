import pytest

import subelect

E = subelect.Election(3, [[0, 1, 2], [1, 0, 2], [2, 1, 0]])
F = subelect.Election(4, [[3, 0, 1, 2], [1, 3, 0, 2], [2, 3, 1, 0]])


def test_election_round_trip():
    text = subelect.write_election(E)
    assert text.startswith("# NUMBER ALTERNATIVES: 3\n")
    assert subelect.parse_election(text) == E
    assert E.num_candidates == 3 and E.num_voters == 3
    assert E.votes[2] == [2, 1, 0]


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="2:8"):
        subelect.parse_election("3\n1: 1,2,2\n")


def test_example_subelection():
    ok, w = subelect.solve(E, F, "subiso")
    assert ok
    assert w.value == 9
    assert w.sigma == [(0, 0), (1, 1), (2, 2)]
    assert subelect.verify_witness(E, F, w, "subiso")
    ok, w = subelect.solve(E, F, "iso")
    assert not ok and w is None


def test_given_matchings_and_brute_force():
    ok, w = subelect.solve(E, E, "max-common-voter", sigma=[(0, 0), (1, 1), (2, 2)], pi=[(0, 0), (1, 1), (2, 2)])
    assert ok and w.value == 3
    _, exact = subelect.solve(E, F, "max-common", brute_force=True)
    assert exact.value == 9
    big = subelect.sample("ic", 7, 5, seed=1)
    with pytest.raises(OverflowError):
        subelect.solve(big, big, "max-common", brute_force=True)


def test_sampling_is_seeded():
    a = subelect.sample("mallows(normphi=0.5)", 6, 20, seed=4)
    assert a == subelect.sample("mallows(normphi=0.5)", 6, 20, seed=4)
    assert a.num_voters == 20
    with pytest.raises(ValueError):
        subelect.sample("nope", 3, 3)


def test_mallows_calibration():
    phi = subelect.calibrate_mallows_phi(10, 0.5)
    assert subelect.expected_swaps(10, phi) == pytest.approx(0.5 * 10 * 9 / 4, abs=1e-8)


def test_experiments():
    mean, std = subelect.identical_votes_stat("id", 5, 10, 4)
    assert (mean, std) == (1.0, 0.0)
    cells = subelect.similarity_matrix("id,ic", 4, 8, 2, seed=1, jobs=2)
    assert cells[0][0] == (1.0, 0.0)
    assert cells[0][1] == cells[1][0]
    assert 1 / 8 <= cells[1][1][0] <= 1


def test_lp_text():
    text = subelect.lp_text(E, E)
    assert text.startswith("\\ Maximum common voter subelection: 3 x 3 voters, 3 candidates\n")
    assert text.rstrip().endswith("End")
