# tests/conftest.py
import os
import sys
import pathlib
import pytest
import subprocess
import numpy as np

from utils.classes import ProgramConstants, Tolerance, VPolytope
from polytope_kernel.convex_hull import convex_hull


def pytest_addoption(parser):
    parser.addoption(
        "--full", action="store_true", default=False,
        help="Run full/slow tests (or set env FULL_CI=1)."
    )

def pytest_configure(config):
    config.addinivalue_line("markers", "slow: marks tests as slow")

@pytest.fixture(scope="session")
def project_root():
    return pathlib.Path(__file__).resolve().parents[1]

@pytest.fixture(scope="session")
def fixtures_dir(project_root):
    return project_root / ProgramConstants().Files.FIXTURES_DIR

@pytest.fixture
def runpy(project_root, monkeypatch, tmp_path):
    """
    Helper to run: python -m main <command> ...
    Returns (rc, stdout, stderr).
    """
    def _run(*args, env=None, timeout=90):
        # Make source importable without installing a wheel
        cur = os.environ.copy()
        cur["PYTHONPATH"] = f"{project_root}:{cur.get('PYTHONPATH','')}"
        cur.pop("WRENCHPOLY_TOL", None)
        if env:
            cur.update(env)
        cmd = [sys.executable, "-m", "main"]
        cmd += [str(a) for a in args]
        proc = subprocess.run(
            cmd, cwd=tmp_path, env=cur,
            stdout=subprocess.PIPE, stderr=subprocess.PIPE,
            text=True, timeout=timeout
        )
        return proc.returncode, proc.stdout, proc.stderr
    return _run

@pytest.fixture(scope="session")
def is_full(request):
    return bool(os.environ.get("FULL_CI")) or request.config.getoption("--full")

@pytest.fixture(scope="session")
def tol():
    return Tolerance()

@pytest.fixture(scope="session")
def make_cube(tol):
    """Builds the V-form of the box [-half, half]^dim shifted by center."""
    def _cube(dim, half=1.0, center=None):
        corners = np.array(np.meshgrid(*[[-half, half]] * dim, indexing="ij")).reshape(dim, -1).T
        if center is not None:
            corners = corners + np.asarray(center, dtype=float)
        return convex_hull(corners, tol)
    return _cube

@pytest.fixture(scope="session")
def same_vertex_sets():
    """True if every point of a has a point of b within atol and vice versa."""
    def _match(a, b, atol=1e-7):
        a = np.asarray(a.vertices if isinstance(a, VPolytope) else a, dtype=float)
        b = np.asarray(b.vertices if isinstance(b, VPolytope) else b, dtype=float)
        if a.shape[0] == 0 or b.shape[0] == 0:
            return a.shape[0] == b.shape[0]
        distances = np.max(np.abs(a[:, None, :] - b[None, :, :]), axis=2)
        return bool(np.all(distances.min(axis=1) <= atol) and np.all(distances.min(axis=0) <= atol))
    return _match

@pytest.fixture(scope="session")
def support_values():
    """Support function of a point set along every row of directions."""
    def _support(points, directions):
        points = np.asarray(points.vertices if isinstance(points, VPolytope) else points, dtype=float)
        return np.max(np.asarray(directions, dtype=float) @ points.T, axis=1)
    return _support

@pytest.fixture(scope="session")
def random_directions():
    """Unit directions, uniform on the sphere."""
    def _directions(n, dim, seed=0):
        rng = np.random.default_rng(seed)
        d = rng.normal(size=(n, dim))
        return d / np.linalg.norm(d, axis=1)[:, None]
    return _directions
