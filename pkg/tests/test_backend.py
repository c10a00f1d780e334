"""Tests for kernel lane selection and compiled/pure-Python agreement."""

import os
import subprocess
import sys

import pytest
from numpy.testing import assert_allclose

import frozenplanet as fp
from frozenplanet._gauss import gauss_level


def test_compiled_lane_is_built():
    # The package ships the extension; the fallback is a contingency, not
    # the expected install state.
    assert fp.has_compiled()


def test_kernel_name_roundtrip():
    original = fp.kernel_name()
    try:
        assert fp.use_kernel("python") == "python"
        assert fp.kernel_name() == "python"
        assert fp.use_kernel("compiled") == "compiled"
        assert fp.kernel_name() == "compiled"
        # aliases
        assert fp.use_kernel("pure") == "python"
        assert fp.use_kernel("cython") == "compiled"
    finally:
        fp.use_kernel(original)


def test_use_kernel_rejects_unknown():
    with pytest.raises(ValueError):
        fp.use_kernel("fortran")


def test_raw_kernels_agree():
    level = gauss_level(64)
    from frozenplanet import _kernels, _kernels_py

    for a in (0.0, -1e-3, -1.0, -400.0):
        c_half, c_three = _kernels.ratio_pair(a, level.s2, level.ws, level.wss)
        p_half, p_three = _kernels_py.ratio_pair(a, level.s2, level.ws, level.wss)
        assert_allclose(c_half, p_half, rtol=5e-15)
        assert_allclose(c_three, p_three, rtol=5e-15)
        t_c = _kernels.time_partial(a, 0.7, level.u, level.w)
        t_p = _kernels_py.time_partial(a, 0.7, level.u, level.w)
        assert_allclose(t_c, t_p, rtol=5e-15)


def test_lanes_agree_end_to_end():
    original = fp.kernel_name()
    try:
        fp.use_kernel("compiled")
        f_c = fp.big_f(fp.gamma_of_mu(2.0), 1.6)
        sol_c = fp.solve_orbit(2.0)
        fp.use_kernel("python")
        f_p = fp.big_f(fp.gamma_of_mu(2.0), 1.6)
        sol_p = fp.solve_orbit(2.0)
    finally:
        fp.use_kernel(original)
    assert_allclose(f_c, f_p, rtol=1e-12)
    assert_allclose(sol_c.qbar1, sol_p.qbar1, rtol=1e-12)
    assert_allclose(sol_c.eta, sol_p.eta, rtol=1e-12)


def _kernel_name_in_subprocess(env_value):
    env = dict(os.environ)
    env["FROZEN_PLANET_KERNEL"] = env_value
    proc = subprocess.run(
        [sys.executable, "-c", "import frozenplanet; print(frozenplanet.kernel_name())"],
        capture_output=True,
        text=True,
        env=env,
    )
    return proc


def test_env_forces_python_lane():
    proc = _kernel_name_in_subprocess("python")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "python"


def test_env_forces_compiled_lane():
    proc = _kernel_name_in_subprocess("compiled")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "compiled"


def test_env_rejects_unknown_lane():
    proc = _kernel_name_in_subprocess("turbo")
    assert proc.returncode != 0
