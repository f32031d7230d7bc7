"""Command line surface for the row.

Words are written with the characters '0', '(' and ')'; since brackets
need shell quoting, --translit switches the word alphabet to o/l/r
(o = 0, l = '(', r = ')') for quote-free scripting.  Positions given on
the command line are 1-based and counted from the RIGHT end of the word.

Exit codes: 0 success, 1 domain error (bad site, crossing words, ...),
2 usage error, 3 an audit found a counterexample.
"""

import argparse
import sys

from . import config
from .blockops import add, decompose_sum, sub
from .errors import MotzkinError
from .nav import (
    control_points,
    insert_pair,
    merge_adjacent,
    psi,
    remove_pair,
    shift_close,
    shift_open,
    split_block,
    swap_across_zero,
    xi,
    zeta,
)
from .rowindex import (
    compare,
    predecessor,
    range_max,
    range_min,
    rank,
    successor,
    unrank,
)
from .verify import audit, regenerate_addendum, report_lines, report_text, sequence
from .word import as_word

_FROM_TRANSLIT = str.maketrans("olr", "0()")
_TO_TRANSLIT = str.maketrans("0()", "olr")


def _decode(ns, text):
    return text.translate(_FROM_TRANSLIT) if ns.translit else text


def _encode(ns, word):
    text = str(word)
    return text.translate(_TO_TRANSLIT) if ns.translit else text


def _emit(*lines):
    for line in lines:
        print(line)


def _cmd_rank(ns):
    _emit(rank(_decode(ns, ns.word)))
    return 0


def _cmd_unrank(ns):
    _emit(_encode(ns, unrank(ns.index)))
    return 0


def _cmd_next(ns):
    _emit(_encode(ns, successor(_decode(ns, ns.word))))
    return 0


def _cmd_prev(ns):
    _emit(_encode(ns, predecessor(_decode(ns, ns.word))))
    return 0


def _cmd_cmp(ns):
    order = compare(_decode(ns, ns.left), _decode(ns, ns.right))
    _emit({-1: "less", 0: "equal", 1: "greater"}[order])
    return 0


def _cmd_add(ns):
    x = as_word(_decode(ns, ns.left))
    y = as_word(_decode(ns, ns.right))
    z = add(x, y)
    if ns.format == "lines":
        _emit(f"result={_encode(ns, z)} left={rank(x)} right={rank(y)} "
              f"total={rank(z)}")
    else:
        _emit(_encode(ns, z),
              f"indexes: {rank(x)} + {rank(y)} = {rank(z)}")
    return 0


def _cmd_sub(ns):
    x = as_word(_decode(ns, ns.left))
    y = as_word(_decode(ns, ns.right))
    z = sub(x, y)
    if ns.format == "lines":
        _emit(f"result={_encode(ns, z)} left={rank(x)} right={rank(y)} "
              f"total={rank(z)}")
    else:
        _emit(_encode(ns, z),
              f"indexes: {rank(x)} - {rank(y)} = {rank(z)}")
    return 0


def _cmd_decompose(ns):
    parts, total = decompose_sum(_decode(ns, ns.word))
    if ns.format == "lines":
        for p in parts:
            _emit(f"part={_encode(ns, p)} index={rank(p)}")
        _emit(f"total={total}")
    else:
        for p in parts:
            _emit(f"{_encode(ns, p)}  index {rank(p)}")
        _emit(f"index sum: {total}")
    return 0


def _emit_report(ns, rep):
    if ns.format == "lines":
        _emit(f"before={_encode(ns, rep.before)} after={_encode(ns, rep.after)} "
              f"predicted={rep.predicted_delta} verified={rep.verified_delta} "
              f"site={','.join(map(str, rep.site))}")
    else:
        _emit(f"before:    {_encode(ns, rep.before)}  index {rank(rep.before)}",
              f"after:     {_encode(ns, rep.after)}  index {rank(rep.after)}",
              f"predicted: {rep.predicted_delta:+d}",
              f"verified:  {rep.verified_delta:+d}",
              f"site:      positions {', '.join(map(str, rep.site))}")
        if not rep.agrees:
            print("note: predicted and verified deltas disagree", file=sys.stderr)
    return 0


def _cmd_shift_open(ns):
    return _emit_report(ns, shift_open(_decode(ns, ns.word), ns.position, ns.offset))


def _cmd_shift_close(ns):
    return _emit_report(ns, shift_close(_decode(ns, ns.word), ns.position,
                                        ns.direction))


def _cmd_remove_pair(ns):
    return _emit_report(ns, remove_pair(_decode(ns, ns.word), ns.open_pos,
                                        ns.close_pos))


def _cmd_insert_pair(ns):
    return _emit_report(ns, insert_pair(_decode(ns, ns.word), ns.open_pos,
                                        ns.close_pos))


def _cmd_merge(ns):
    return _emit_report(ns, merge_adjacent(_decode(ns, ns.word), ns.position))


def _cmd_split(ns):
    return _emit_report(ns, split_block(_decode(ns, ns.word), ns.position))


def _cmd_swap(ns):
    return _emit_report(ns, swap_across_zero(_decode(ns, ns.word), ns.position))


def _cmd_xi(ns):
    _emit(xi(ns.k))
    return 0


def _cmd_zeta(ns):
    _emit(zeta(ns.k, ns.l))
    return 0


def _cmd_psi(ns):
    _emit(psi(ns.k))
    return 0


def _cmd_range(ns):
    lo, lo_index = range_min(ns.length)
    hi, hi_index = range_max(ns.length)
    if ns.format == "lines":
        _emit(f"min={_encode(ns, lo)} index={lo_index}",
              f"max={_encode(ns, hi)} index={hi_index}")
    else:
        _emit(f"min: {_encode(ns, lo)}  index {lo_index}",
              f"max: {_encode(ns, hi)}  index {hi_index}")
    return 0


def _cmd_control_points(ns):
    for name, word, index in control_points(ns.length):
        if ns.format == "lines":
            _emit(f"name={name} word={_encode(ns, word)} index={index}")
        else:
            _emit(f"{name:<18} {_encode(ns, word)}  index {index}")
    return 0


def _cmd_seq(ns):
    values = sequence(ns.name, ns.count)
    if ns.format == "lines":
        for v in values:
            _emit(f"value={v}")
    else:
        _emit(", ".join(map(str, values)))
    return 0


def _cmd_audit(ns):
    rep = audit(ns.check, ns.max_range, ns.workers)
    _emit(report_lines(rep) if ns.format == "lines" else report_text(rep))
    return 3 if rep.counterexamples else 0


def _cmd_addendum(ns):
    sys.stdout.write(regenerate_addendum(ns.max_range))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="motzkinrow",
        description="Exact arithmetic and navigation on the ordered row of "
                    "Motzkin words.",
        epilog="Positions are 1-based and counted from the right end of the "
               "word, like digit positions in an integer.",
    )
    parser.add_argument("--format", choices=("plain", "lines"), default="plain",
                        help="plain text or machine-readable key=value lines")
    parser.add_argument("--translit", action="store_true",
                        help="read and write words as o/l/r instead of 0/(/)")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def cmd(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        return p

    p = cmd("rank", _cmd_rank, "index of a word")
    p.add_argument("word")
    p = cmd("unrank", _cmd_unrank, "word at an index")
    p.add_argument("index", type=int)
    p = cmd("next", _cmd_next, "successor word")
    p.add_argument("word")
    p = cmd("prev", _cmd_prev, "predecessor word")
    p.add_argument("word")
    p = cmd("cmp", _cmd_cmp, "order two words")
    p.add_argument("left")
    p.add_argument("right")
    p = cmd("add", _cmd_add, "overlay two noncrossing words")
    p.add_argument("left")
    p.add_argument("right")
    p = cmd("sub", _cmd_sub, "erase an included word's blocks")
    p.add_argument("left")
    p.add_argument("right")
    p = cmd("decompose", _cmd_decompose, "extended blocks and their index sum")
    p.add_argument("word")
    p = cmd("shift-open", _cmd_shift_open,
            "drift an outer block's opening bracket across zeros")
    p.add_argument("word")
    p.add_argument("position", type=int)
    p.add_argument("offset", type=int,
                   help="positions to move: positive = left, negative = right")
    p = cmd("shift-close", _cmd_shift_close,
            "swap an outer block's closing bracket with the adjacent zero")
    p.add_argument("word")
    p.add_argument("position", type=int)
    p.add_argument("direction", choices=("left", "right"))
    p = cmd("remove-pair", _cmd_remove_pair,
            "erase the touching brackets of two neighboring blocks")
    p.add_argument("word")
    p.add_argument("open_pos", type=int, help="opening bracket position (k)")
    p.add_argument("close_pos", type=int, help="closing bracket position (l > k)")
    p = cmd("insert-pair", _cmd_insert_pair,
            "split a block by writing a bracket pair into its zero zone")
    p.add_argument("word")
    p.add_argument("open_pos", type=int, help="new opening bracket position (k)")
    p.add_argument("close_pos", type=int, help="new closing bracket position (l > k)")
    p = cmd("merge", _cmd_merge, "merge two touching blocks")
    p.add_argument("word")
    p.add_argument("position", type=int, help="opening bracket of the right block")
    p = cmd("split", _cmd_split, "split a block at an inner adjacent pair")
    p.add_argument("word")
    p.add_argument("position", type=int, help="closing symbol of the inner pair")
    p = cmd("swap", _cmd_swap, "fuse two blocks separated by a single zero")
    p.add_argument("word")
    p.add_argument("position", type=int, help="opening bracket of the right block")
    p = cmd("xi", _cmd_xi, "close-bracket drift delta at position k")
    p.add_argument("k", type=int)
    p = cmd("zeta", _cmd_zeta, "bracket-pair removal delta at positions k, l")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p = cmd("psi", _cmd_psi, "zero-gap swap delta at position k (measured)")
    p.add_argument("k", type=int)
    p = cmd("range", _cmd_range, "smallest and largest word of a length")
    p.add_argument("length", type=int)
    p = cmd("control-points", _cmd_control_points,
            "the seven landmark words of a range")
    p.add_argument("length", type=int)
    p = cmd("seq", _cmd_seq, "regenerate a named integer sequence")
    p.add_argument("name",
                   choices=("motzkin", "unique", "xi", "zeta_adjacent", "psi"))
    p.add_argument("count", type=int)
    p = cmd("audit", _cmd_audit, "run an exhaustive check, exit 3 on counterexample")
    p.add_argument("check")
    p.add_argument("--max-range", type=int, default=config.audit_scope(),
                   help="largest range to sweep (default %(default)s)")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel worker processes for range sweeps")
    p = cmd("addendum", _cmd_addendum, "emit the corrected row listing")
    p.add_argument("--max-range", type=int, default=9,
                   help="largest range to list (default %(default)s)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except MotzkinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
