"""Session fixtures: warm the selected kernel backend once.

The first call into a jitted kernel pays compilation cost; doing that in
a fixture keeps timing-sensitive tests honest and test output clean.
"""

import numpy as np
import pytest

import diagsum as dg


@pytest.fixture(scope="session", autouse=True)
def warm_backend():
    model = dg.MatrixModel.bernoulli(np.full((2, 2), 0.5))
    dg.exact_distribution(model)
    dg.smoothness_bound(model)
    dg.concentration_bound(model, 0.5)
    cell = dg.AtomicDistribution.from_atoms([0.0, 0.7], [0.4, 0.6])
    amodel = dg.MatrixModel([[cell, cell], [cell, cell]])
    dg.exact_distribution(amodel)
    dg.concentration_bound(amodel, 0.5)
    dg.fixed_pairing_bound(amodel, [1, 0], t=0.0)
    dg.gnhaf(dg.HafnianTensor(np.ones((1, 2, 2), dtype=np.complex128)))
    dg.haf(np.ones((2, 2)))
    yield
