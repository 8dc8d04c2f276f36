import pytest

from adelattice.chevalley import ChevalleyAlgebra
from adelattice.roots import (
    e8_affine_configuration,
    enumerate_en_roots,
    standard_root_system,
)


@pytest.fixture(scope="session")
def e8_roots():
    return enumerate_en_roots(8)


@pytest.fixture(scope="session")
def e8_algebra(e8_roots):
    return ChevalleyAlgebra(e8_roots)


@pytest.fixture(scope="session")
def e8_affine_cfg():
    return e8_affine_configuration()


@pytest.fixture(scope="session")
def a2_algebra():
    return ChevalleyAlgebra(standard_root_system("A2"))


@pytest.fixture(scope="session")
def d4_algebra():
    return ChevalleyAlgebra(standard_root_system("D4"))
