import pytest
from augtree.config import get_settings
from augtree.core.oracle import MatrixOracle
from augtree.core.tree import Tree


@pytest.fixture
def app_settings():
    return get_settings()


@pytest.fixture
def debug_checks(monkeypatch, app_settings):
    monkeypatch.setattr(app_settings, "debug_checks", True)
    return app_settings


@pytest.fixture
def reference_structures(monkeypatch, app_settings):
    monkeypatch.setattr(app_settings, "reference_structures", True)
    return app_settings


@pytest.fixture
def unit_path():
    """0-1-2-3-4，单位代价"""
    return Tree(5, [(i, i + 1, 1) for i in range(4)])


@pytest.fixture
def violating_oracle():
    return MatrixOracle([[0, 1, 10], [1, 0, 1], [10, 1, 0]])


@pytest.fixture
def doat_file(tmp_path):
    """生成实例文件的工厂"""
    from augtree.core.generators import gen_random
    from augtree.core.io import save_instance

    def make(n: int = 10, k: int = 2, seed: int = 7, name: str = "inst.doat"):
        path = tmp_path / name
        save_instance(gen_random(n, k, seed), path)
        return path

    return make
