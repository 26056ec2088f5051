"""
test_property_suite.py
Tohumlanmış değişmezlik testlerinin kendisi için testler
"""

import numpy as np
import pytest

from plane_curve import det2
from classifier import PlanePolyMap
from property_suite import (
    SUITES, PropertySuiteRunner, random_plane_map, random_quartic_curve, random_reparam,
    run_property_suites,
)


@pytest.fixture(scope="module")
def seeded_run():
    return run_property_suites(seed=1, trials=100)


def test_all_suites_pass(seeded_run):
    summary, records = seeded_run
    assert list(summary.index) == list(SUITES)
    assert (summary['trials'] == 100).all()
    assert (summary['passed'] == 100).all()
    assert summary['failed'].sum() == 0
    assert len(records) == 4 * 100


def test_runs_are_deterministic(seeded_run):
    _, records = seeded_run
    _, again = run_property_suites(seed=1, trials=100)
    assert records['detail'].tolist() == again['detail'].tolist()


def test_corrupted_constant_fails_normal_form_suite():
    summary, _ = run_property_suites(seed=1, trials=20, corrupt_constant=True)
    assert summary.loc['normal_form_T', 'failed'] > 0
    others = summary.drop(index='normal_form_T')
    assert others['failed'].sum() == 0


def test_identity_maps_single_trial():
    summary, _ = run_property_suites(seed=7, trials=1, identity_maps=True)
    assert summary['failed'].sum() == 0
    assert (summary['trials'] == 1).all()


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        run_property_suites(trials=0)


def test_runner_summary_columns():
    runner = PropertySuiteRunner(seed=3, trials=2)
    runner.run()
    summary = runner.summary()
    assert list(summary.columns) == ['passed', 'trials', 'failed']


class TestGenerators:
    def test_unimodular_quartic(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            c = random_quartic_curve(rng, 10, unimodular=True)
            assert abs(det2(c.coefficient(4), c.coefficient(5))) == 1
            assert all(c.x[k] == 0 and c.y[k] == 0 for k in range(4))

    def test_reparam_is_invertible(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            psi = random_reparam(rng, 8)
            assert psi[0] == 0 and psi[1] != 0

    def test_identity_transforms(self):
        rng = np.random.default_rng(5)
        assert random_plane_map(rng, identity=True) == PlanePolyMap.identity()
        assert random_reparam(rng, 6, identity=True).coeffs == (0, 1, 0, 0, 0, 0, 0)
