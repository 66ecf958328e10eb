import numpy as np
import pytest

from coslab import _kernels_py, kernels

compiled = pytest.importorskip("coslab._kernels")


def _inputs():
    rng = np.random.default_rng(4)
    return {
        "cos_sum": (rng.integers(-3, 4, 60).astype(float), np.linspace(0, 7, 301)),
        "cos_antiderivative": (rng.integers(-3, 4, 60).astype(float), np.linspace(0, 7, 301)),
        "si": (np.concatenate([np.linspace(-50, 50, 1001), [1e4, 3.3e5]]),),
        "window_sums": (np.sort(rng.choice(np.arange(1, 5000), 200, replace=False)).astype(float),
                        np.linspace(0, np.pi, 129)),
        "dirichlet_integral": (300, np.linspace(0, 0.5, 200)),
    }


@pytest.mark.parametrize("name", sorted(_inputs()))
def test_compiled_matches_fallback(name):
    args = _inputs()[name]
    a = getattr(compiled, name)(*args)
    b = getattr(_kernels_py, name)(*args)
    scale = max(1.0, float(np.max(np.abs(b))))
    assert np.max(np.abs(a - b)) <= 1e-12 * scale


def test_empty_coefficients():
    ts = np.linspace(0, 1, 5)
    assert np.all(compiled.cos_sum(np.array([]), ts) == 0)
    assert np.all(_kernels_py.cos_antiderivative(np.array([]), ts) == 0)


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "python")


def test_cos_sum_direct():
    a = np.array([0.5, -1.0, 2.0])
    ts = np.array([0.0, 1.0, 2.5])
    direct = a[0] + a[1] * np.cos(ts) + a[2] * np.cos(2 * ts)
    assert np.allclose(kernels.cos_sum(a, ts), direct, atol=1e-14)
