import pytest

from motzkinrow import (
    ArgumentError,
    BlockedError,
    SiteError,
    control_points,
    insert_pair,
    merge_adjacent,
    motzkin,
    psi,
    rank,
    remove_pair,
    shift_close,
    shift_open,
    split_block,
    swap_across_zero,
    unrank,
    xi,
    zeta,
)

XI_PREFIX = [1, 2, 5, 13, 34, 90, 240, 645, 1745, 4750, 13001, 35762, 98815,
             274158]
ZETA_ADJACENT_PREFIX = [4, 10, 25, 64, 166, 436, 1157, 3098, 8360, 22714,
                        62086, 170614]
# psi has no closed form; the first eight terms below match the published
# data, and psi(10) = 9086 is the exhaustively enumerated rank difference
# rank("()0(00000000)") - rank("((0)00000000)") = 36872 - 27786 (the
# previously reported 9084 fails that recomputation).
PSI_PREFIX = [4, 10, 25, 65, 171, 456, 1227, 3328, 9086]


def test_xi_values():
    assert [xi(k) for k in range(1, 15)] == XI_PREFIX
    assert xi(5) == 34
    assert xi(14) == 274158
    with pytest.raises(ArgumentError):
        xi(0)


def test_zeta_values():
    assert zeta(4, 7) == 149
    assert zeta(4, 5) == 25
    assert zeta(5, 6) == 64
    assert zeta(5, 7) == 154
    assert [zeta(k, k + 1) for k in range(2, 14)] == ZETA_ADJACENT_PREFIX
    with pytest.raises(ArgumentError):
        zeta(5, 5)
    with pytest.raises(ArgumentError):
        zeta(1, 4)


def test_psi_values():
    assert [psi(k) for k in range(2, 11)] == PSI_PREFIX
    assert psi(2) == 4
    assert psi(6) == 171
    assert psi(7) == 456
    with pytest.raises(ArgumentError):
        psi(1)


def test_psi_is_site_independent_at_large_k():
    # the measured drop must not depend on the host word
    k = 12
    hosts = [
        "()0(" + "0" * (k - 2) + ")",
        "(0)0(" + "0" * (k - 2) + ")",
        "()0(" + "0" * (k - 4) + "())",
        "(())0(" + "0" * (k - 2) + ")",
    ]
    drops = set()
    for h in hosts:
        rep = swap_across_zero(h, k)
        drops.add(-rep.verified_delta)
    assert drops == {psi(12)}


def test_psi_cache_is_thread_safe():
    from concurrent.futures import ThreadPoolExecutor

    import motzkinrow.nav as nav

    with nav._psi_lock:
        nav._psi_cache.clear()
    with ThreadPoolExecutor(max_workers=6) as pool:
        values = list(pool.map(psi, [8] * 12))
    assert set(values) == {psi(8)}


def test_shift_open_examples():
    rep = shift_open("(00)", 4, 1)
    assert rep.after.text == "(000)" and rep.predicted_delta == 5
    rep = shift_open("()()()", 6, 2)
    assert rep.after.text == "(00)()()" and rep.predicted_delta == 106
    rep = shift_open("()(000)0", 6, -2)
    assert rep.after.text == "()00(0)0" and rep.predicted_delta == -17
    rep = shift_open("(0())0", 6, -1)
    assert rep.after.text == "(())0" and rep.predicted_delta == -12


def test_shift_open_report_contents():
    rep = shift_open("(0000)", 6, 1)
    assert rep.before.text == "(0000)" and rep.after.text == "(00000)"
    assert rep.predicted_delta == rep.verified_delta == 30
    assert rep.agrees
    assert rep.site == (7, 6)


def test_shift_open_shrinks_range_when_leading_bracket_moves_right():
    rep = shift_open("(0)", 3, -1)
    assert rep.after.text == "()"
    assert rep.verified_delta == -1


def test_shift_open_rejects_bad_sites():
    with pytest.raises(SiteError):
        shift_open("((0))", 4, 1)  # inner bracket
    with pytest.raises(SiteError):
        shift_open("(00)", 3, 1)  # a zero, not a bracket
    with pytest.raises(BlockedError):
        shift_open("()0()", 2, 2)  # path hits the ')' at position 4
    with pytest.raises(BlockedError):
        shift_open("(0)", 3, -2)  # would cross the closing bracket
    with pytest.raises(ArgumentError):
        shift_open("(00)", 4, -4)  # target below position 1


def test_shift_open_noop():
    rep = shift_open("(00)", 4, 0)
    assert rep.after == rep.before and rep.verified_delta == 0


def test_shift_close_examples():
    rep = shift_close("(0)0000", 5, "left")
    assert rep.after.text == "()00000" and rep.predicted_delta == 34
    rep = shift_close("(00)(())", 5, "left")
    assert rep.after.text == "(0)0(())" and rep.verified_delta == 34
    rep = shift_close("(()0)(0)0", 5, "left")
    assert rep.after.text == "(())0(0)0" and rep.verified_delta == 34
    rep = shift_close("()00000", 6, "right")
    assert rep.after.text == "(0)0000" and rep.predicted_delta == -34


def test_shift_close_keeps_the_range():
    for word, k, direction in [("(0)0", 2, "left"), ("(0)0", 2, "right")]:
        rep = shift_close(word, k, direction)
        assert len(rep.after) == len(word)


def test_shift_close_rejects_bad_sites():
    with pytest.raises(SiteError):
        shift_close("((0))", 2, "left")  # inner closing bracket
    with pytest.raises(BlockedError):
        shift_close("()0", 2, "left")  # '(' sits at position 3
    with pytest.raises(BlockedError):
        shift_close("()()", 3, "right")  # '(' sits at position 2
    with pytest.raises(ArgumentError):
        shift_close("()", 1, "right")  # nowhere to go
    with pytest.raises(ArgumentError):
        shift_close("(0)0", 2, "sideways")


def test_remove_insert_pair_examples():
    rep = remove_pair("()00(())", 4, 7)
    assert rep.after.text == "(0000())" and rep.predicted_delta == -149
    rep = insert_pair("(0000())", 4, 7)
    assert rep.after.text == "()00(())" and rep.predicted_delta == 149
    # adjacent blocks, empty gap
    rep = remove_pair("()()", 2, 3)
    assert rep.after.text == "(00)" and rep.verified_delta == -4


def test_remove_insert_pair_errors():
    with pytest.raises(ArgumentError):
        remove_pair("()()", 3, 3)
    with pytest.raises(ArgumentError):
        insert_pair("(0000())", 1, 3)
    with pytest.raises(SiteError):
        remove_pair("()0(0)0()", 2, 8)  # gap carries a whole block
    with pytest.raises(SiteError):
        insert_pair("((00))", 3, 4)  # zeros buried at depth 2
    with pytest.raises(SiteError):
        insert_pair("()00()", 3, 4)  # zeros outside every block
    with pytest.raises(SiteError):
        insert_pair("(0)000", 2, 3)  # zeros right of the block


def test_remove_insert_inverse(row):
    from motzkinrow import outer_blocks

    for w in row(7):
        blocks = outer_blocks(w)
        for left, right in zip(blocks, blocks[1:]):
            l, k = left.close_pos, right.open_pos
            removed = remove_pair(w, k, l)
            back = insert_pair(removed.after, k, l)
            assert back.after == w
            assert removed.verified_delta + back.verified_delta == 0


def test_merge_and_split_examples():
    rep = merge_adjacent("(0)()00", 4)
    assert rep.after.text == "(0())00"
    assert rep.predicted_delta == rep.verified_delta == -9
    rep = split_block("(0())00", 4)
    assert rep.after.text == "(0)()00"
    assert rep.predicted_delta == rep.verified_delta == 9
    for n in range(7, 11):
        rep = merge_adjacent("(0)()" + "0" * (n - 5), n - 3)
        assert rep.verified_delta == -motzkin(n - 3)
        assert rep.agrees


def test_merge_split_errors():
    with pytest.raises(SiteError):
        merge_adjacent("(0)0()", 2)  # blocks not touching
    with pytest.raises(SiteError):
        split_block("(())", 1)  # positions 2, 1 are not an adjacent pair
    with pytest.raises(SiteError):
        split_block("((()))", 3)  # pair buried at depth 2
    with pytest.raises(SiteError):
        split_block("()0", 2)  # pair is a whole outer block


def test_split_block_directly_inside():
    rep = split_block("(())", 2)
    assert rep.after.text == "()()"
    assert rep.predicted_delta == rep.verified_delta == 2


def test_swap_across_zero_examples():
    rep = swap_across_zero("()0()00", 4)
    assert rep.after.text == "((0))00"
    assert rep.predicted_delta == rep.verified_delta == -25
    rep = swap_across_zero(unrank(1958), 7)
    assert rep.after == unrank(1502)
    assert rep.verified_delta == -456 and rep.agrees


def test_swap_across_zero_errors():
    with pytest.raises(SiteError):
        swap_across_zero("()00()0", 2)  # gap is two zeros wide
    with pytest.raises(SiteError):
        swap_across_zero("()()", 1)  # no zero between the blocks


def test_landmark_chain_to_nested_block():
    # climb from the pair-inside-block landmark to the nested-block one
    s1 = split_block("(0())00", 4)
    s2 = shift_close(s1.after, 5, "left")
    s3 = swap_across_zero(s2.after, 4)
    assert (s1.after.text, s2.after.text, s3.after.text) == (
        "(0)()00", "()0()00", "((0))00"
    )
    total = s1.verified_delta + s2.verified_delta + s3.verified_delta
    assert total == rank("((0))00") - rank("(0())00") == 18


def test_control_points_published_anchors():
    points = {name: (w.text, ix) for name, w, ix in control_points(7)}
    assert points["pair_inside_block"] == ("(0())00", 70)
    assert points["small_block"] == ("(0)0000", 72)
    assert points["nested_block"] == ("((0))00", 88)
    points9 = {name: (w.text, ix) for name, w, ix in control_points(9)}
    assert points9["leading_pair"] == ("()0000000", 708)


def test_control_points_rank_equality_and_order():
    for n in range(5, 13):
        points = control_points(n)
        assert [name for name, _, _ in points] == [
            "min", "pair_inside_block", "small_block", "small_block_pairs",
            "nested_block", "leading_pair", "max",
        ]
        indexes = [ix for _, _, ix in points]
        assert indexes == sorted(indexes)
        for _, word, ix in points:
            assert rank(word) == ix
    with pytest.raises(ArgumentError):
        control_points(4)


def test_shift_then_unshift_round_trip(row):
    from motzkinrow import outer_blocks

    for w in row(7):
        for b in outer_blocks(w):
            k = b.open_pos
            if w.symbol_at(k + 1).char == "0":
                there = shift_open(w, k, 1)
                back = shift_open(there.after, k + 1, -1)
                assert back.after == w
                assert there.verified_delta + back.verified_delta == 0
