import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pushall.coloring import (
    NotTotal,
    _push_moves,
    col_of,
    conf_of,
    forbidden_pattern_check,
    is_valid_coloring,
    push_to_configuration,
    sorting_word,
)
from pushall.machine import (
    StackConfiguration,
    apply_word,
    find_unsortable_pattern,
    is_pushall_word,
    is_valid_word,
    pop_out,
)
from pushall.oracle import brute_colorings, reachable_total_configurations

from conftest import perm_strategy, perms_up_to


def all_colorings(n):
    return ("".join(bits) for bits in itertools.product("RG", repeat=n))


class TestConfOfColOf:
    def test_conf_of_examples(self):
        assert conf_of((2, 1), "GG") == StackConfiguration((2, 1), ())
        assert conf_of((1, 2), "RG") == StackConfiguration((2,), (1,))
        assert conf_of((2, 4, 3, 1), "GGRR") == StackConfiguration((4, 2), (3, 1))

    def test_col_of_examples(self):
        assert col_of(StackConfiguration((2, 1), (3,)), (1, 2, 3)) == "GGR"
        assert col_of(StackConfiguration((), (1, 2)), (2, 1)) == "RR"
        with pytest.raises(NotTotal):
            col_of(StackConfiguration((1,), (1,)), (1, 2))
        with pytest.raises(NotTotal):
            col_of(StackConfiguration((1,), ()), (1, 2))

    @given(perm_strategy(7))
    @settings(max_examples=80)
    def test_col_of_conf_of_roundtrip(self, p):
        for coloring in all_colorings(len(p)):
            assert col_of(conf_of(p, coloring), p) == coloring


class TestPush:
    def test_examples(self):
        word = push_to_configuration((2, 3, 1), "GGG")
        assert word == "rrllrl"
        out, trace = apply_word((2, 3, 1), word)
        assert trace[-1] == StackConfiguration((3, 2, 1), ())
        assert push_to_configuration((2, 1, 3), "GGG") is None
        assert push_to_configuration((1,), "R") == "r"

    def test_reaches_target_configuration(self, small_perms):
        for p in small_perms:
            if len(p) > 4:
                continue
            for coloring in all_colorings(len(p)):
                word = push_to_configuration(p, coloring)
                if word is None:
                    continue
                _, trace = apply_word(p, word)
                assert trace[-1] == conf_of(p, coloring)

    @given(perm_strategy(8))
    @settings(max_examples=60)
    def test_step_bound(self, p):
        """The push loop performs at most 2n + 1 steps."""
        for coloring in itertools.islice(all_colorings(len(p)), 8):
            _, steps = _push_moves(p, coloring)
            assert steps <= 2 * len(p) + 1

    def test_mid_run_structure(self):
        """After each push-phase move: V is decreasing, holds no red point,
        and H never has a red point above a green one."""
        for p in perms_up_to(5):
            for coloring in all_colorings(len(p)):
                word = push_to_configuration(p, coloring)
                if word is None:
                    continue
                color_of_value = {v: coloring[i] for i, v in enumerate(p)}
                _, trace = apply_word(p, word)
                for config in trace:
                    assert list(config.v) == sorted(config.v, reverse=True)
                    assert all(color_of_value[x] == "G" for x in config.v)
                    greens_started = False
                    for x in config.h:
                        if color_of_value[x] == "G":
                            greens_started = True
                        elif greens_started:
                            pytest.fail(f"red above green in {config} for {p}")


class TestValidity:
    def test_identity_two(self):
        assert all(is_valid_coloring((1, 2), c) for c in all_colorings(2))

    def test_examples(self):
        assert not is_valid_coloring((2, 1, 3), "GGG")
        assert not is_valid_coloring((1, 3, 2), "RRR")

    def test_matches_push_then_pop(self, small_perms):
        for p in small_perms:
            for coloring in all_colorings(len(p)):
                direct = is_valid_coloring(p, coloring)
                word = push_to_configuration(p, coloring)
                two_phase = word is not None and (
                    pop_out(conf_of(p, coloring), len(p)) is not None
                )
                assert direct == two_phase, (p, coloring)

    def test_matches_forbidden_patterns(self, small_perms):
        for p in small_perms:
            for coloring in all_colorings(len(p)):
                assert is_valid_coloring(p, coloring) == (
                    forbidden_pattern_check(p, coloring) is None
                ), (p, coloring)


class TestForbiddenPatterns:
    def test_r132(self):
        w = forbidden_pattern_check((1, 3, 2), "RRR")
        assert w.kind == "R-132" and w.values == (1, 3, 2)

    def test_g1_rx_g2(self):
        w = forbidden_pattern_check((1, 3, 2), "GRG")
        assert w.kind == "G1-Rx-G2"
        assert w.positions == (1, 2, 3)

    def test_none(self):
        assert forbidden_pattern_check((2, 1), "RG") is None

    def test_g213(self):
        assert forbidden_pattern_check((2, 1, 3), "GGG").kind == "G-213"

    def test_g_between_r12(self):
        # red ascent (1, 3) at positions 1, 2 with the green value 2 between
        assert forbidden_pattern_check((1, 3, 2), "RRG").kind == "G-between-R12"


class TestBijection:
    def test_colorings_match_reachable_clean_configurations(self):
        """Valid colorings correspond exactly to the reachable total
        configurations without obstruction, and col_of inverts conf_of."""
        for p in perms_up_to(6):
            valid = brute_colorings(p)
            configs = {
                config
                for config in reachable_total_configurations(p)
                if find_unsortable_pattern(config) is None
            }
            assert {conf_of(p, c) for c in valid} == configs
            for c in valid:
                assert col_of(conf_of(p, c), p) == c


class TestSortingWord:
    def test_examples(self):
        word = sorting_word((2, 4, 3, 1), "GGRR")
        assert word is not None and len(word) == 12
        assert is_valid_word((2, 4, 3, 1), word)
        assert is_pushall_word(word)
        assert sorting_word((1,), "G") == "rlm"
        assert sorting_word((2, 1, 3), "GGG") is None

    def test_sound_for_every_valid_coloring(self):
        for p in perms_up_to(6):
            for coloring in brute_colorings(p):
                word = sorting_word(p, coloring)
                assert word is not None and len(word) == 3 * len(p)
                assert is_valid_word(p, word)
                assert is_pushall_word(word)

    def test_trace_avoids_obstructions(self):
        """Every configuration along a valid word's trace is clean."""
        for p in perms_up_to(5):
            for coloring in brute_colorings(p):
                word = sorting_word(p, coloring)
                _, trace = apply_word(p, word)
                assert all(
                    find_unsortable_pattern(config) is None for config in trace
                )

    def test_trace_hygiene_for_all_valid_words_tiny(self):
        """Exhaustively over every valid stack word for n <= 3 (not only
        the words this library constructs)."""
        for p in perms_up_to(3, min_n=1):
            n = len(p)
            for word in _all_stack_words(n):
                if not is_valid_word(p, word):
                    continue
                _, trace = apply_word(p, word)
                assert all(
                    find_unsortable_pattern(config) is None for config in trace
                )


def _all_stack_words(n):
    def extend(word, r, l, m):
        if len(word) == 3 * n:
            yield "".join(word)
            return
        if r < n:
            word.append("r")
            yield from extend(word, r + 1, l, m)
            word.pop()
        if l < r:
            word.append("l")
            yield from extend(word, r, l + 1, m)
            word.pop()
        if m < l:
            word.append("m")
            yield from extend(word, r, l, m + 1)
            word.pop()

    yield from extend([], 0, 0, 0)
