import pytest

import flashcodes


def test_version():
    assert flashcodes.__version__ == "0.1.0"


def test_worked_example_replays():
    assert flashcodes.worked_example()


def test_complete_graph_ceiling():
    assert flashcodes.max_r(4, 20) == 2
    assert flashcodes.ub_complete(4, 5, 20) == 5
    report = flashcodes.bounds(4, 5, 20)
    assert report["r"] == 2
    assert report["ub_complete"]["value"] == 5


def test_optimal_game_value():
    assert flashcodes.optimal_game_value(2, 2, 2) == 2
    for q in range(2, 6):
        assert flashcodes.optimal_game_value(1, q, 2) == q - 1


def test_simulate_is_reproducible():
    opts = dict(trials=3, seed=5, out="json")
    a = flashcodes.simulate("trajectory", "hypercube:k=4,l=2", 64, 8, **opts)
    b = flashcodes.simulate("trajectory", "hypercube:k=4,l=2", 64, 8, **opts)
    assert a == b
    assert all(trial["t"] >= 140 for trial in a["trials"])


def test_robust_eval_mean():
    report = flashcodes.robust_eval(64, 8, 4, trials=40, seed=1)
    assert report["t"]["mean"] > 380


def test_invalid_config_raises():
    code, _, err = flashcodes.run("bounds", n=4, q=5, L=1)
    assert code == 2 and err
    with pytest.raises(flashcodes.FlashcodesError):
        flashcodes.bounds(4, 5, 1)
    with pytest.raises(TypeError):
        flashcodes.run("bounds", bogus=1)
