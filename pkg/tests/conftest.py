"""Shared fixtures; the heavy symmetric-product builds are session-scoped."""

from __future__ import annotations

import pytest

from orbifrob import cocycles as cocy
from orbifrob import frobenius as frob
from orbifrob import symprod as sp_mod
from orbifrob.groups import symmetric_group


@pytest.fixture(scope="session")
def ground():
    return frob.ground_field()


@pytest.fixture(scope="session")
def qx2():
    return frob.dual_numbers()


@pytest.fixture(scope="session")
def surface():
    return frob.surface_model()


_SP_CACHE: dict = {}


def sp_instance(base, n) -> sp_mod.SymmetricProductAlgebra:
    """Cached symmetric products keyed by (base name, n); realize() lazily."""
    key = (base.name, n)
    if key not in _SP_CACHE:
        _SP_CACHE[key] = sp_mod.SymmetricProductAlgebra(base, n)
    return _SP_CACHE[key]


@pytest.fixture(scope="session")
def sp_factory():
    return sp_instance


@pytest.fixture(scope="session")
def s3_ring():
    return cocy.twisted_group_ring(symmetric_group(3))
