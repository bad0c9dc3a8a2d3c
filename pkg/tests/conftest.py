import pytest

from cayley_spectra.young import enumerate_partitions


def all_partitions_upto(n_max):
    for n in range(n_max + 1):
        for lam in enumerate_partitions(n):
            yield n, lam


@pytest.fixture(scope="session")
def partitions_upto_8():
    return list(all_partitions_upto(8))
