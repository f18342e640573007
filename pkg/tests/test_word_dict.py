import random

import pytest

from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.dictionary.entities.word_dict import WordDict
from choicedict.domain.memory.entities.bit_store import BitStore
from choicedict.domain.memory.entities.fill_policy import FillPolicy
from choicedict.infrastructure.oracle.naive_set import NaiveSet


def _word_dict(m, b=128, fill=None, offset=3):
    store = BitStore.create(offset + m + 5, fill or FillPolicy.ones())
    return WordDict.init(store, offset, m, b), store


class TestWordDict:
    def test_init_clears_garbage(self):
        wd, _ = _word_dict(7)
        assert [wd.contains(ell) for ell in range(1, 8)] == [False] * 7
        assert wd.choice() == 0

    def test_init_leaves_neighbours(self):
        _, store = _word_dict(7)
        assert store.read_bits(0, 3) == 0b111
        assert store.read_bits(10, 5) == 0b11111

    def test_init_access_count_is_small(self):
        store = BitStore.create(300, FillPolicy.random(2))
        store.reset_counter()
        WordDict.init(store, 1, 255, 128)
        assert store.read_counter() <= BitStore.access_ceiling(0, 2, 128, 64)

    def test_insert_delete_contains(self):
        wd, _ = _word_dict(10)
        wd.insert(3)
        assert wd.contains(3)
        wd.delete(3)
        assert not wd.contains(3)

    def test_choice_is_smallest(self):
        wd, _ = _word_dict(20)
        wd.insert(5)
        assert wd.choice() == 5
        wd.insert(9)
        wd.insert(3)
        assert wd.choice() == 3

    def test_iterate(self):
        wd, _ = _word_dict(10)
        for ell in (2, 5, 6):
            wd.insert(ell)
        assert list(wd) == [2, 5, 6]
        element, cursor = wd.iterate(5)
        assert (element, cursor) == (6, 6)
        assert wd.is_exhausted(6)
        assert not wd.is_exhausted(5)

    def test_iterate_empty(self):
        wd, _ = _word_dict(10)
        assert wd.iterate(0) == (0, 10)
        assert list(wd) == []

    def test_iterate_across_chunks(self):
        wd, _ = _word_dict(255)
        for ell in (1, 128, 129, 255):
            wd.insert(ell)
        assert list(wd) == [1, 128, 129, 255]

    def test_universe_too_large(self):
        store = BitStore.create(512)
        with pytest.raises(InvalidArgumentError):
            WordDict.init(store, 0, 256, 128)

    def test_out_of_range(self):
        wd, _ = _word_dict(4)
        with pytest.raises(InvalidArgumentError):
            wd.insert(5)
        with pytest.raises(InvalidArgumentError):
            wd.contains(0)

    @pytest.mark.parametrize("m", [1, 2, 17, 63, 64, 65, 127, 200, 255])
    def test_matches_naive_set(self, m):
        rng = random.Random(m)
        wd, _ = _word_dict(m, fill=FillPolicy.random(m))
        oracle = NaiveSet(m)
        for _ in range(3000):
            ell = rng.randint(1, m)
            action = rng.random()
            if action < 0.4:
                wd.insert(ell)
                oracle.insert(ell)
            elif action < 0.8:
                wd.delete(ell)
                oracle.delete(ell)
            else:
                assert wd.contains(ell) == oracle.contains(ell)
            choice = wd.choice()
            assert (choice == 0) == (oracle.choice() == 0)
            if choice:
                assert oracle.contains(choice)
        assert list(wd) == oracle.elements()
