import pytest

import bisetkit.cache as cache


@pytest.fixture(scope="session", autouse=True)
def _cache_to_tmp(tmp_path_factory):
    """Keep lattice cache files out of the working tree during tests."""
    cache.set_cache_dir(str(tmp_path_factory.mktemp("lattice-cache")))
    yield
    cache.set_cache_dir(None)
