import os
import sys

import pytest


def _load_core():
    module_dir = os.environ.get("BERGMAN_LAB_MODULE_DIR")
    if module_dir and module_dir not in sys.path:
        sys.path.insert(0, module_dir)
    try:
        import _core  # noqa: F401

        return sys.modules["_core"]
    except ImportError:
        try:
            import bergman_lab

            return bergman_lab
        except ImportError:
            return None


@pytest.fixture(scope="session")
def core():
    module = _load_core()
    if module is None:
        pytest.skip("bergman_lab extension module is not built")
    return module


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("BERGMAN_LAB_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("BERGMAN_LAB_CLI does not point at the built binary")
    return path
