import pytest

from skewarm import (
    identity_endomorphism,
    make_direct_product,
    make_galois_field,
    make_trivial_extension,
    make_zmod,
    regular_bimodule,
    table_endomorphism,
    frobenius,
)


@pytest.fixture(scope="session")
def z2():
    return make_zmod(2)


@pytest.fixture(scope="session")
def z4():
    return make_zmod(4)


@pytest.fixture(scope="session")
def z2xz2(z2):
    return make_direct_product(z2, z2)


@pytest.fixture(scope="session")
def swap(z2xz2):
    return table_endomorphism(
        z2xz2, [(i % 2) * 2 + i // 2 for i in range(4)], "swap"
    )


@pytest.fixture(scope="session")
def t_z4(z4):
    """T(Z4, Z4): the 16-element trivial extension, pairs flattened row-major."""
    return make_trivial_extension(z4, regular_bimodule(z4))


@pytest.fixture(scope="session")
def negate_second(t_z4):
    return table_endomorphism(
        t_z4, [(i // 4) * 4 + ((-(i % 4)) % 4) for i in range(16)], "negate-second"
    )


@pytest.fixture(scope="session")
def gf4():
    return make_galois_field(2, 2)


@pytest.fixture(scope="session")
def gf4_frob(gf4):
    return frobenius(gf4)


@pytest.fixture(scope="session")
def z4_id(z4):
    return identity_endomorphism(z4)
