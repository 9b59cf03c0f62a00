import pytest

from heckespecht import Cyclotomic, PrimeField, prime_extension_auto


@pytest.fixture(scope="session")
def cyclo3():
    return Cyclotomic(3)


@pytest.fixture(scope="session")
def cyclo4():
    return Cyclotomic(4)


@pytest.fixture(scope="session")
def f7q2():
    return PrimeField(7, 2)


@pytest.fixture(scope="session")
def f97q3():
    # large prime with q of large order: behaves like a generic q
    return PrimeField(97, 3)


@pytest.fixture(scope="session")
def ext23():
    return prime_extension_auto(2, 3)
