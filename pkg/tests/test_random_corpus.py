import random

from homlie.algebra import check_morphism, is_perfect, validate
from homlie.extensions import is_central
from homlie.random_algebras import (
    abelian_sequence_modules,
    algebra_corpus,
    central_extensions,
    fixture_algebras,
    module_corpus,
    perfect_corpus,
    random_invertible,
    random_unimodular,
    yau_family,
)


def test_corpus_is_seeded_and_valid():
    a = algebra_corpus(seed=1, size=30)
    b = algebra_corpus(seed=1, size=30)
    assert [L for _, L in a] == [L for _, L in b]
    assert len(a) >= 30
    kinds = {name.split(":")[0] for name, _ in a}
    assert {"yau", "skew", "central-twist"} <= kinds
    assert all(validate(L).ok and L.dim <= 4 for _, L in a)


def test_yau_family_is_valid():
    for _, L in yau_family(random.Random(0)):
        assert validate(L).ok


def test_modules_are_valid():
    rng = random.Random(2)
    algebras = [L for _, L in algebra_corpus(seed=2, size=30)]
    for L in algebras:
        for M in module_corpus(L, rng):
            assert M.check(L).ok and M.dim <= 2
    seq = abelian_sequence_modules(algebras)
    assert seq
    for L, M, e in seq:
        assert M.check(L).ok and e.base == L


def test_perfect_corpus_and_extensions():
    rng = random.Random(3)
    for _, L in perfect_corpus(count=6):
        assert validate(L).ok and is_perfect(L)
        for _, e in central_extensions(L, rng):
            assert is_central(e) and check_morphism(e.proj).ok


def test_basis_change_matrices_are_invertible():
    rng = random.Random(4)
    for n in range(1, 5):
        assert random_invertible(rng, n).det() != 0
        assert random_unimodular(rng, n).det() in (1, -1)


def test_fixture_algebras_validate():
    assert all(validate(L).ok for L in fixture_algebras().values())
