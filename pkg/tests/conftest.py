from functools import lru_cache

import pytest

from orbivcd.enumeration import build_subgroup_dag
from orbivcd.models import AmbientNode, EnumOptions, Signature


@lru_cache(maxsize=None)
def cached_dag(g: int, max_order: int | None = None):
    return build_subgroup_dag(g, EnumOptions(max_order=max_order))


@pytest.fixture(scope="session")
def dag():
    """Memoised subgroup DAG builder: dag(g, max_order=None)."""
    return cached_dag


@pytest.fixture
def sig():
    return Signature.from_string


@pytest.fixture
def node():
    def make(g: int, order: int, text: str) -> AmbientNode:
        return AmbientNode(g, order, Signature.from_string(text))

    return make
