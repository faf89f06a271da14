import pytest

from coverslide import builtin_group, cycle_basis, make_cover


@pytest.fixture(scope="session")
def klein_group():
    return builtin_group("elementary_abelian", 2, 2)


@pytest.fixture(scope="session")
def mod2_cover(klein_group):
    """The 4-fold cover of the 2-petal rose killing mod-2 homology:
    q(a1) = (1,0), q(a2) = (0,1)."""
    return make_cover(klein_group, (1, 2))


@pytest.fixture(scope="session")
def mod2_basis(mod2_cover):
    return cycle_basis(mod2_cover)


@pytest.fixture(scope="session")
def klein_n3_cover(klein_group):
    return make_cover(klein_group, (1, 2, 0))


@pytest.fixture(scope="session")
def klein_n3_basis(klein_n3_cover):
    return cycle_basis(klein_n3_cover)


@pytest.fixture(scope="session")
def trivial_n3_cover():
    return make_cover(builtin_group("cyclic", 1), (0, 0, 0))


@pytest.fixture(scope="session")
def cyclic3_cover():
    """cyclic(3) with images (1, 1, 0): petal 3 maps to the identity, so its
    three lifts are loop edges."""
    return make_cover(builtin_group("cyclic", 3), (1, 1, 0))
