import pytest

from wecken.kervaire import halvability, halvable, ki_vanishes_identically, kervaire_status, strong_kervaire
from wecken.tables import Generator, WhiteheadProduct
from wecken.verdict import DomainError, Truth


@pytest.mark.parametrize(
    "n, want",
    [(32, Truth.YES), (16, Truth.YES), (64, Truth.YES), (128, Truth.OPEN), (256, Truth.NO), (20, Truth.NO), (8, Truth.NO)],
)
def test_strong_kervaire(n, want):
    assert strong_kervaire(n).value is want
    assert kervaire_status(n).strong_ki_one_exists.value is want


def test_odd_rejected():
    with pytest.raises(DomainError):
        strong_kervaire(17)


@pytest.mark.parametrize(
    "p, want",
    [
        (WhiteheadProduct(Generator.IOTA, 15), Truth.YES),
        (WhiteheadProduct(Generator.IOTA, 127), Truth.OPEN),
        (WhiteheadProduct(Generator.ETA, 5), Truth.NO),
        (WhiteheadProduct(Generator.ETA_SQ, 9), Truth.YES),
        (WhiteheadProduct(Generator.NU, 13), Truth.OPEN),
        (WhiteheadProduct(Generator.NU_SQ, 9), Truth.OPEN),
        (WhiteheadProduct(Generator.SIGMA, 13), Truth.OPEN),
    ],
)
def test_halvable(p, want):
    assert halvable(p).value is want


def test_div4():
    h = halvability(WhiteheadProduct(Generator.ETA_SQ, 13))
    assert h.divisible_by_4 is True and h.halvable.value is Truth.YES


def test_counts_to_4096():
    yes = [n for n in range(2, 4097, 2) if strong_kervaire(n).value is Truth.YES]
    assert yes == [16, 32, 64]


@pytest.mark.parametrize("n, want", [(2, True), (4, False), (128, False), (256, True), (12, True)])
def test_ki_identically_zero(n, want):
    assert ki_vanishes_identically(n) is want
