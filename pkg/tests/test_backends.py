import json
import os
import subprocess
import sys

import numpy as np
import pytest

from inforcer import available_backends, evaluate_named, make_distribution, set_backend
from inforcer.backends import (
    ENV_VAR,
    HAS_NUMBA,
    NUMBA_KERNELS,
    NUMPY_KERNELS,
    active_kernels,
)

needs_numba = pytest.mark.skipif(not HAS_NUMBA, reason="numba not importable")


@pytest.fixture
def restore_backend():
    before = active_kernels().name
    yield
    set_backend(before)


def _kernel_inputs(rng, n):
    log2_w = rng.uniform(-20.0, 0.0, n)
    log2_p = rng.uniform(-40.0, 0.0, n)
    w = rng.dirichlet(np.ones(n))
    x = rng.uniform(-50.0, 50.0, n)
    a = rng.dirichlet(np.ones(n))
    b = rng.dirichlet(np.ones(max(2, n // 2)))
    t = rng.uniform(-600.0, 600.0, n)
    return log2_w, log2_p, w, x, a, b, t


class TestSelection:
    def test_numpy_always_available(self):
        assert "numpy" in available_backends()

    def test_set_backend_switches(self, restore_backend):
        assert set_backend("numpy").name == "numpy"
        assert active_kernels().name == "numpy"
        if HAS_NUMBA:
            assert set_backend("numba").name == "numba"
        assert set_backend("auto").name == ("numba" if HAS_NUMBA else "numpy")

    def test_unknown_backend_rejected(self):
        with pytest.raises(RuntimeError):
            set_backend("gpu")

    def test_env_var_controls_import(self, tmp_path):
        code = (
            "import inforcer.backends as b\n"
            "print(b.active_kernels().name)\n"
        )
        for name, expect in (("numpy", "numpy"), ("auto", "numba" if HAS_NUMBA else "numpy")):
            env = dict(os.environ, **{ENV_VAR: name})
            out = subprocess.run(
                [sys.executable, "-c", code], env=env, capture_output=True, text=True
            )
            assert out.returncode == 0, out.stderr
            assert out.stdout.strip() == expect

    def test_env_var_rejects_unknown_name(self):
        env = dict(os.environ, **{ENV_VAR: "cuda"})
        out = subprocess.run(
            [sys.executable, "-c", "import inforcer.backends"],
            env=env, capture_output=True, text=True,
        )
        assert out.returncode != 0
        assert "INFORCER_BACKEND" in out.stderr


@needs_numba
class TestKernelParity:
    """The jit kernels must agree with the numpy reference to rounding."""

    @pytest.mark.parametrize("n", [2, 7, 64, 1000])
    def test_weighted_log2_sumexp(self, rng, n):
        log2_w, log2_p, *_ = _kernel_inputs(rng, n)
        for r in (-30.0, -1.0, 0.5, 12.0):
            a = NUMPY_KERNELS.weighted_log2_sumexp(log2_w, log2_p, r)
            b = NUMBA_KERNELS.weighted_log2_sumexp(log2_w, log2_p, r)
            assert b == pytest.approx(a, rel=1e-13, abs=1e-13)

    @pytest.mark.parametrize("n", [2, 7, 64, 1000])
    def test_weighted_sum(self, rng, n):
        _, _, w, x, *_ = _kernel_inputs(rng, n)
        a = NUMPY_KERNELS.weighted_sum(w, x)
        b = NUMBA_KERNELS.weighted_sum(w, x)
        assert b == pytest.approx(a, rel=1e-13, abs=1e-13)

    @pytest.mark.parametrize("n", [2, 7, 64])
    def test_outer_flatten(self, rng, n):
        *_, a, b, _ = _kernel_inputs(rng, n)
        got = NUMBA_KERNELS.outer_flatten(a, b)
        want = NUMPY_KERNELS.outer_flatten(a, b)
        assert np.array_equal(got, want)

    @pytest.mark.parametrize("n", [2, 7, 64, 1000])
    def test_shifted_exp2_weights(self, rng, n):
        *_, t = _kernel_inputs(rng, n)
        got = NUMBA_KERNELS.shifted_exp2_weights(t)
        want = NUMPY_KERNELS.shifted_exp2_weights(t)
        assert np.allclose(got, want, rtol=1e-13, atol=1e-300)
        assert got.sum() == pytest.approx(1.0, abs=1e-12)


@needs_numba
class TestEndToEndAgreement:
    def test_measures_match_across_backends(self, rng, restore_backend):
        cases = []
        for _ in range(10):
            n = int(rng.integers(2, 10))
            p = 0.9 * rng.dirichlet(np.ones(n)) + 0.1 / n
            cases.append((make_distribution(p), float(rng.uniform(0.2, 0.9))))
        results = {}
        for backend in ("numpy", "numba"):
            set_backend(backend)
            results[backend] = [
                (
                    evaluate_named("shannon", p),
                    evaluate_named("renyi", p, alpha=2.5),
                    evaluate_named("tsallis", p, gamma=g),
                    evaluate_named("onicescu", p),
                )
                for p, g in cases
            ]
        for row_np, row_nb in zip(results["numpy"], results["numba"]):
            for a, b in zip(row_np, row_nb):
                assert b == pytest.approx(a, rel=1e-13, abs=1e-14)

    def test_cli_honors_env_var(self):
        env = dict(os.environ, **{ENV_VAR: "numpy"})
        out = subprocess.run(
            [
                sys.executable, "-m", "inforcer.cli",
                "compute", "--measure", "shannon", "--p", "0.5,0.5", "--format", "json",
            ],
            env=env, capture_output=True, text=True,
        )
        assert out.returncode == 0, out.stderr
        assert json.loads(out.stdout)["value"] == 1.0
