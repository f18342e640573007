import random

import pytest

from choicedict.application.harness.use_cases.differential_run_use_case import segment_values
from choicedict.core.config.dictionary_config import BPolicy, DictionaryConfig, Mode
from choicedict.core.errors import DecodeError, InvalidArgumentError
from choicedict.domain.dictionary.entities.choice_dict import ChoiceDict
from choicedict.domain.dictionary.entities.layout import DictionaryLayout
from choicedict.domain.memory.entities.bit_store import BitStore
from choicedict.domain.memory.entities.fill_policy import FillPolicy
from choicedict.infrastructure.oracle.adversarial_memory import fake_matching_fill
from choicedict.infrastructure.oracle.invariant_checker import check_seg_dict
from choicedict.infrastructure.oracle.naive_set import NaiveSet

from .conftest import FILLS

SELF_CONTAINED = DictionaryConfig.from_mode(Mode.SELF_CONTAINED)
PLAIN = DictionaryConfig.from_mode(Mode.PLAIN)


def _drive(
    cd: ChoiceDict,
    oracle: NaiveSet,
    rng: random.Random,
    steps: int,
    check_every: int = 0,
    compare_every: int = 100,
) -> int:
    """Operações aleatórias em ``cd`` e no oráculo; devolve quantas foram executadas."""
    n = cd.n
    members: list[int] = []
    for step in range(steps):
        roll = rng.random()
        if roll < 0.45:
            ell = rng.randint(1, n)
            cd.insert(ell)
            oracle.insert(ell)
            members.append(ell)
        elif roll < 0.8:
            ell = rng.choice(members) if members and rng.random() < 0.7 else rng.randint(1, n)
            cd.delete(ell)
            oracle.delete(ell)
        else:
            ell = rng.randint(1, n)
            assert cd.contains(ell) == oracle.contains(ell)
        chosen = cd.choice()
        assert (chosen == 0) == (len(oracle) == 0)
        if chosen:
            assert oracle.contains(chosen)
        if check_every and cd.d1 is not None and step % check_every == 0:
            assert check_seg_dict(cd.d1, segment_values(oracle, cd)) == []
        if step % compare_every == 0:
            assert sorted(cd.elements()) == oracle.elements()
    assert sorted(cd) == oracle.elements()
    return steps


def _garbage_fills(n: int, config: DictionaryConfig) -> list[FillPolicy]:
    return FILLS + [fake_matching_fill(DictionaryLayout.plan(n, config), seed=n)]


class TestFootprint:
    def test_thousand_elements(self):
        cd = ChoiceDict.create(1000)
        assert (cd.layout.b, cd.layout.n_cells, cd.layout.tail_bits) == (128, 3, 232)
        assert cd.footprint_bits() == 1001
        assert cd.store.capacity_bits == 1001

    def test_thousand_elements_self_contained(self):
        assert ChoiceDict.create(1000, SELF_CONTAINED).footprint_bits() == 1020

    def test_thousand_elements_plain(self):
        assert ChoiceDict.create(1000, PLAIN).footprint_bits() == 1000 + 64

    def test_degenerate_layout_keeps_flag_bit(self):
        cd = ChoiceDict.create(5)
        assert cd.d1 is None
        assert cd.footprint_bits() == 6
        assert ChoiceDict.create(1).footprint_bits() == 2

    def test_no_tail(self):
        cd = ChoiceDict.create(512)
        assert cd.d2 is None
        assert cd.layout.n_cells == 2
        assert cd.footprint_bits() == 513

    def test_dense_sweep(self):
        for n in range(1, 10_001):
            assert DictionaryLayout.plan(n, DictionaryConfig()).total_bits == n + 1
            assert DictionaryLayout.plan(n, SELF_CONTAINED).total_bits == n + 2 * n.bit_length()
            assert DictionaryLayout.plan(n, PLAIN).total_bits == n + 64

    @pytest.mark.parametrize("n", [1, 7, 255, 256, 257, 4096, 10**6])
    def test_footprint_matches_config_formula(self, n):
        for config in (DictionaryConfig(), SELF_CONTAINED, PLAIN):
            cd = ChoiceDict.create(n, config)
            assert cd.footprint_bits() == config.expected_footprint(n)

    def test_rejects_b_policy_too_narrow(self):
        config = DictionaryConfig(word_width=8, b_policy=BPolicy.HALF_W)
        with pytest.raises(InvalidArgumentError):
            ChoiceDict.create(100, config)

    def test_rejects_empty_universe(self):
        with pytest.raises(InvalidArgumentError):
            ChoiceDict.create(0)

    def test_rejects_store_of_wrong_size(self):
        with pytest.raises(InvalidArgumentError):
            ChoiceDict.create(1000, store=BitStore.create(1000))


class TestSetOperations:
    @pytest.mark.parametrize("config", [DictionaryConfig(), SELF_CONTAINED, PLAIN], ids=["hidden", "self", "plain"])
    def test_empty_over_garbage(self, config):
        for fill in _garbage_fills(1000, config):
            cd = ChoiceDict.create(1000, config, fill)
            assert not any(cd.contains(ell) for ell in range(1, 1001))
            assert cd.choice() == 0
            assert cd.elements() == []

    def test_insert_delete_contains(self):
        cd = ChoiceDict.create(1000, fill=FillPolicy.ones())
        cd.insert(7)
        assert cd.contains(7)
        cd.delete(7)
        assert not cd.contains(7)

    def test_insert_is_idempotent(self):
        cd = ChoiceDict.create(1000, fill=FillPolicy.random(3))
        cd.insert(300)
        cd.insert(300)
        assert cd.elements() == [300]
        cd.delete(300)
        assert cd.elements() == []
        assert cd.d1.barrier() == 3

    def test_out_of_range(self):
        cd = ChoiceDict.create(10)
        with pytest.raises(InvalidArgumentError):
            cd.insert(11)
        with pytest.raises(InvalidArgumentError):
            cd.contains(0)
        assert 11 not in cd

    def test_dunder_contains(self):
        cd = ChoiceDict.create(1000)
        cd.insert(999)
        assert 999 in cd
        assert "999" not in cd


class TestChoice:
    def test_empty(self):
        assert ChoiceDict.create(1000).choice() == 0

    def test_singleton(self):
        cd = ChoiceDict.create(1000, fill=FillPolicy.random(8))
        cd.insert(42)
        assert cd.choice() == 42

    def test_smallest_of_segment(self):
        cd = ChoiceDict.create(1000)
        cd.insert(9)
        cd.insert(3)
        assert cd.choice() == 3

    def test_upper_half_of_segment(self):
        cd = ChoiceDict.create(1000)
        cd.insert(2 * 128 + 200)
        assert cd.choice() == 456

    def test_segments_before_tail(self):
        cd = ChoiceDict.create(1000)
        cd.insert(999)
        cd.insert(300)
        assert cd.choice() == 300
        cd.delete(300)
        assert cd.choice() == 999

    def test_degenerate_layout(self):
        cd = ChoiceDict.create(5, fill=FillPolicy.ones())
        assert cd.choice() == 0
        cd.insert(4)
        assert cd.choice() == 4


class TestDifferential:
    @pytest.mark.parametrize(
        "n,config",
        [
            (1, DictionaryConfig()),
            (37, DictionaryConfig(word_width=8)),
            (200, DictionaryConfig(word_width=8)),
            (200, DictionaryConfig(word_width=16, b_policy=BPolicy.W)),
            (1000, DictionaryConfig()),
            (1000, SELF_CONTAINED),
            (1000, DictionaryConfig.from_mode(Mode.SELF_CONTAINED, endianness="little")),
            (1000, PLAIN),
            (3000, DictionaryConfig(b_policy=BPolicy.HALF_W)),
        ],
    )
    def test_matches_naive_set(self, n, config):
        for fill in _garbage_fills(n, config):
            cd = ChoiceDict.create(n, config, fill)
            _drive(cd, NaiveSet(n), random.Random(n), 1200, check_every=50)


SWEEP_FILLS = [FillPolicy.zeros(), FillPolicy.ones(), FillPolicy.random(5)]


@pytest.mark.slow
class TestDifferentialAtScale:
    @pytest.mark.parametrize("fill", SWEEP_FILLS, ids=lambda f: f.describe())
    def test_every_universe_up_to_200(self, fill):
        config = DictionaryConfig(word_width=8)
        total = 0
        for n in range(1, 201):
            cd = ChoiceDict.create(n, config, fill)
            total += _drive(cd, NaiveSet(n), random.Random(n), 1700, check_every=1)
        assert total >= 340_000

    @pytest.mark.parametrize(
        "config",
        [
            DictionaryConfig(),
            SELF_CONTAINED,
            DictionaryConfig.from_mode(Mode.SELF_CONTAINED, endianness="little"),
        ],
        ids=["hidden", "self-contained-big", "self-contained-little"],
    )
    @pytest.mark.parametrize("fill", SWEEP_FILLS, ids=lambda f: f.describe())
    def test_hundred_thousand_elements(self, config, fill):
        n = 10**5
        cd = ChoiceDict.create(n, config, fill)
        _drive(cd, NaiveSet(n), random.Random(11), 200_000, check_every=2000, compare_every=20_000)
        if config.self_contained:
            assert ChoiceDict.from_bytes(cd.to_bytes(), config).elements() == cd.elements()


class TestSerialization:
    def _populated(self, config: DictionaryConfig) -> ChoiceDict:
        cd = ChoiceDict.create(1000, config, FillPolicy.random(21))
        for ell in (1, 257, 300, 768, 999):
            cd.insert(ell)
        return cd

    @pytest.mark.parametrize("endianness", ["big", "little"])
    def test_self_contained_round_trip(self, endianness):
        config = DictionaryConfig.from_mode(Mode.SELF_CONTAINED, endianness=endianness)
        data = self._populated(config).to_bytes()
        assert len(data) == 128
        loaded = ChoiceDict.from_bytes(data, config)
        assert loaded.n == 1000
        assert sorted(loaded) == [1, 257, 300, 768, 999]
        loaded.delete(300)
        loaded.insert(2)
        assert sorted(loaded) == [1, 2, 257, 768, 999]

    def test_external_round_trip_needs_n(self):
        config = DictionaryConfig()
        data = self._populated(config).to_bytes()
        with pytest.raises(InvalidArgumentError):
            ChoiceDict.from_bytes(data, config)
        assert sorted(ChoiceDict.from_bytes(data, config, n=1000)) == [1, 257, 300, 768, 999]

    def test_self_contained_rejects_other_n(self):
        data = self._populated(SELF_CONTAINED).to_bytes()
        with pytest.raises(InvalidArgumentError):
            ChoiceDict.from_bytes(data, SELF_CONTAINED, n=999)

    def test_self_contained_rejects_zero_header(self):
        with pytest.raises(DecodeError):
            ChoiceDict.from_bytes(bytes(128), SELF_CONTAINED)

    def test_contains_after_load_within_ceiling(self):
        data = self._populated(SELF_CONTAINED).to_bytes()
        loaded = ChoiceDict.from_bytes(data, SELF_CONTAINED)
        loaded.store.reset_counter()
        assert loaded.contains(768)
        assert loaded.store.read_counter() <= loaded.access_ceiling("contains")


class TestAccessCeiling:
    @pytest.mark.parametrize("config", [DictionaryConfig(), PLAIN, SELF_CONTAINED], ids=["hidden", "plain", "self"])
    def test_operations_within_ceiling(self, config):
        n = 5000
        cd = ChoiceDict.create(n, config, FillPolicy.random(13))
        store = cd.store
        rng = random.Random(13)
        for _ in range(400):
            ell = rng.randint(1, n)
            operation = rng.choice(["insert", "delete", "contains", "choice"])
            store.reset_counter()
            if operation == "choice":
                cd.choice()
            else:
                getattr(cd, operation)(ell)
            assert store.read_counter() <= cd.access_ceiling(operation)

    def test_init_within_ceiling(self):
        store = BitStore.create(DictionaryConfig().expected_footprint(10**5), FillPolicy.ones())
        store.reset_counter()
        cd = ChoiceDict.create(10**5, store=store)
        assert store.read_counter() <= cd.access_ceiling("init")

    def test_operations_listed(self):
        assert set(ChoiceDict.operations()) >= {"init", "insert", "delete", "contains", "choice", "iter_next"}
