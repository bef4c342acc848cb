import numpy as np
import pytest


class StubRng:
    """Deterministic stand-in for numpy's Generator in bookkeeping tests.

    random(n) serves the next n queued uniforms (default 0.5), integers(k)
    serves queued picks (default 0).
    """

    def __init__(self, uniforms=(), picks=()):
        self.uniforms = list(uniforms)
        self.picks = list(picks)

    def random(self, n=None):
        count = 1 if n is None else n
        out = []
        for _ in range(count):
            out.append(self.uniforms.pop(0) if self.uniforms else 0.5)
        return np.array(out) if n is not None else out[0]

    def integers(self, high):
        return self.picks.pop(0) if self.picks else 0


@pytest.fixture
def stub_rng_factory():
    return StubRng
