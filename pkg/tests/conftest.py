from __future__ import annotations

import functools

import pytest

from comax.catalog import default_catalog
from comax.dsl import build_ring


@functools.lru_cache(maxsize=None)
def ring(spec: str):
    """Rings are immutable and memoise their derived data, so tests share one instance per spec."""
    return build_ring(spec)


@functools.lru_cache(maxsize=None)
def catalog_rings():
    return tuple((str(spec), ring(str(spec))) for spec in default_catalog())


@pytest.fixture(scope="session")
def catalog():
    return catalog_rings()


@pytest.fixture(scope="session")
def small_catalog():
    return tuple((s, R) for s, R in catalog_rings() if R.size <= 64)
