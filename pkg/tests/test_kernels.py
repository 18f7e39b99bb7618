import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from crnwitness.realroots import _kernels_py as pure
from crnwitness.realroots import _backend

try:
    from crnwitness.realroots import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

needs_ext = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")

ints = st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=8).filter(lambda p: p[-1] != 0)


def test_backend_exposes_kernels():
    assert _backend.BACKEND in ("python", "cython")
    for name in ("primitive", "prem_pos", "sign_at", "variations", "variations_inf"):
        assert callable(getattr(_backend, name))


def test_pure_env_var_forces_fallback():
    out = subprocess.run(
        [sys.executable, "-c", "from crnwitness.realroots import _backend; print(_backend.BACKEND)"],
        env={**os.environ, "CRNWITNESS_PURE": "1"}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_pure_kernels_basics():
    assert pure.primitive([4, -6, 8]) == [2, -3, 4]
    assert pure.sign_at([-2, 0, 1], 3, 2) == 1  # 9/4 - 2 > 0
    assert pure.sign_at([-1, 1], 1, 1) == 0
    assert pure.variations_inf([[1, 1], [-1]], 1) == 1


@needs_ext
@given(ints)
def test_primitive_equivalent(p):
    assert compiled.primitive(p) == pure.primitive(p)


@needs_ext
@given(ints, ints)
def test_prem_pos_equivalent(a, b):
    assert compiled.prem_pos(a, b) == pure.prem_pos(a, b)


@needs_ext
@given(ints, st.integers(-50, 50), st.integers(1, 50))
def test_sign_at_equivalent(p, num, den):
    assert compiled.sign_at(p, num, den) == pure.sign_at(p, num, den)


@needs_ext
@given(st.lists(ints, min_size=1, max_size=5), st.integers(-50, 50), st.integers(1, 50), st.sampled_from([1, -1]))
def test_variations_equivalent(chain, num, den, d):
    assert compiled.variations(chain, num, den) == pure.variations(chain, num, den)
    assert compiled.variations_inf(chain, d) == pure.variations_inf(chain, d)
