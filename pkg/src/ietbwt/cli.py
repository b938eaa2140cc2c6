"""Command line front end.

Exit codes: 0 on success, 1 for domain errors (bad input, undefined
operations), 2 when an iteration cap is exhausted, 64 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alphabet import Perm
from .coding import (
    cylinders,
    diet_language,
    language,
    language_of_periodic,
    left_return_words,
    right_return_words,
    trajectory,
)
from .errors import CapExceeded, DomainError
from .exact import parse_value
from .extgraph import classify_language, extension_graph
from .iet import Iet, diet_spec, diet_action, diet_lyndon_multiset, diet_to_iet, iet_from_json
from .induction import induce_to_cylinder
from .verify import (
    verify_induction_consistency,
    verify_perfect_clustering_symmetric,
    verify_return_clustering,
)
from .words import (
    bwt,
    ebwt,
    infer_clustering_permutation,
    is_lyndon,
    is_pi_clustering,
    lyndon_representative,
    parikh,
    primitive_root,
)


class _Parser(argparse.ArgumentParser):
    """Usage problems exit with a dedicated code instead of argparse's 2,
    which this tool reserves for exhausted caps."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, "%s: error: %s\n" % (self.prog, message))


def _add_iet_args(sub):
    sub.add_argument("--iet", metavar="PATH", help="JSON description, - for stdin")
    sub.add_argument(
        "--lengths",
        metavar="SPEC",
        help="comma separated letter=value pairs, e.g. a=1/6,b=-1/4+1/4*sqrt(5)",
    )
    sub.add_argument("--row", metavar="ROW", help="image order, one letter per slot")
    sub.add_argument("--origin", metavar="VALUE", help="left end of the domain")
    sub.add_argument(
        "--diet",
        metavar="SPEC",
        help="discrete spec as counts/row, e.g. 4,2,1/cba",
    )


def _add_format(sub, dot=False):
    choices = ["text", "json", "dot"] if dot else ["text", "json"]
    sub.add_argument("--format", choices=choices, default="text")


def _parse_diet_spec(text):
    try:
        counts, row = text.split("/")
        composition = tuple(int(p) for p in counts.split(","))
    except ValueError as exc:
        raise DomainError("bad discrete spec %r, expected counts/row" % text) from exc
    return diet_spec(composition, row)


def _load_iet(args) -> Iet:
    if args.diet is not None:
        return diet_to_iet(_parse_diet_spec(args.diet))
    if args.iet is not None:
        if args.iet == "-":
            raw = sys.stdin.read()
        else:
            try:
                with open(args.iet, "r", encoding="utf-8") as fh:
                    raw = fh.read()
            except OSError as exc:
                raise DomainError("cannot read %s: %s" % (args.iet, exc)) from exc
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise DomainError("invalid JSON in %s: %s" % (args.iet, exc)) from exc
        return iet_from_json(obj)
    if args.lengths is None or args.row is None:
        raise DomainError("describe the map with --iet, --diet, or --lengths and --row")
    lengths = {}
    letters = []
    for part in args.lengths.split(","):
        if "=" not in part:
            raise DomainError("bad lengths entry %r" % part)
        letter, value = part.split("=", 1)
        letter = letter.strip()
        letters.append(letter)
        lengths[letter] = parse_value(value)
    origin = parse_value(args.origin) if args.origin else None
    return Iet(letters, lengths, args.row, origin=origin)


def _load_language(args):
    if getattr(args, "periodic", None):
        return language_of_periodic(args.periodic, args.depth)
    if args.diet is not None:
        return diet_language(_parse_diet_spec(args.diet), args.depth)
    return language(_load_iet(args), args.depth)


def _emit(args, data, lines):
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _iv(interval):
    return [str(interval[0]), str(interval[1])]


# -- subcommands ---------------------------------------------------------


def cmd_info(args):
    t = _load_iet(args)
    probe = t.keane_probe(args.probe)
    data = {
        "alphabet": str(t.alphabet),
        "permutation": t.perm.one_line(),
        "domain": _iv(t.domain()),
        "lengths": {x: str(t.lengths[x]) for x in t.alphabet},
        "translations": {x: str(t.translation(x)) for x in t.alphabet},
        "discontinuities": [str(v) for v in t.discontinuities()],
        "inverse_discontinuities": [str(v) for v in t.discontinuities_inverse()],
        "zero_connections": [str(v) for v in t.zero_connections()],
        "regions": [_iv(r) for r in t.regions()],
        "invariant_blocks": ["".join(b) for b in t.invariant_blocks()],
        "connection": None
        if probe is None
        else {"start": str(probe.start), "end": str(probe.end), "steps": probe.steps},
    }
    lines = [
        "alphabet: %s" % data["alphabet"],
        "permutation: %s" % data["permutation"],
        "domain: [%s, %s)" % tuple(data["domain"]),
        "lengths: " + " ".join("%s=%s" % (x, data["lengths"][x]) for x in t.alphabet),
        "translations: "
        + " ".join("%s=%s" % (x, data["translations"][x]) for x in t.alphabet),
        "zero connections: " + (" ".join(data["zero_connections"]) or "none"),
        "invariant blocks: " + (" ".join(data["invariant_blocks"]) or "none"),
        "connection: "
        + (
            "none found"
            if probe is None
            else "%s -> %s after %d" % (probe.start, probe.end, probe.steps)
        ),
    ]
    _emit(args, data, lines)
    return 0


def cmd_eval(args):
    t = _load_iet(args)
    x = parse_value(args.point)
    y = t.apply_n(x, args.steps)
    _emit(args, {"point": str(y)}, [str(y)])
    return 0


def cmd_orbit(args):
    t = _load_iet(args)
    x = parse_value(args.point)
    word = trajectory(t, x, args.steps)
    points = [x]
    for _ in range(args.steps - 1):
        points.append(t.apply(points[-1]))
    data = {"word": word, "points": [str(p) for p in points]}
    lines = [word] + [str(p) for p in points]
    _emit(args, data, lines)
    return 0


def cmd_language(args):
    lang = _load_language(args)
    data = {
        str(n): list(lang.words_of_length(n)) for n in range(1, args.depth + 1)
    }
    lines = [
        "%d: %s" % (n, " ".join(lang.words_of_length(n)))
        for n in range(1, args.depth + 1)
    ]
    _emit(args, data, lines)
    return 0


def cmd_cylinders(args):
    t = _load_iet(args)
    table = cylinders(t, args.depth)
    data = {}
    lines = []
    for w in table.words():
        if not w:
            continue
        iv = table.interval(w)
        data[w] = _iv(iv)
        lines.append("%s: [%s, %s)" % (w, iv[0], iv[1]))
    _emit(args, data, lines)
    return 0


def cmd_returns(args):
    t = _load_iet(args)
    lang = language(t, args.max_len + len(args.word))
    left, complete = left_return_words(lang, args.word, args.max_len)
    right, _ = right_return_words(lang, args.word, args.max_len)
    data = {
        "word": args.word,
        "left": sorted(left),
        "right": sorted(right),
        "complete": complete,
    }
    lines = [
        "left: " + " ".join(sorted(left)),
        "right: " + " ".join(sorted(right)),
        "complete: %s" % complete,
    ]
    _emit(args, data, lines)
    return 0


def cmd_induce(args):
    t = _load_iet(args)
    chain = induce_to_cylinder(t, args.word, max_steps=args.max_steps)
    data = chain.to_json()
    lines = ["steps: " + " ".join(chain.kinds() or ("none",))]
    lines.append(
        "final: %s / %s on [%s, %s)"
        % (
            str(chain.final.alphabet),
            chain.final.perm.one_line(),
            chain.final.domain()[0],
            chain.final.domain()[1],
        )
    )
    for x in chain.final.alphabet:
        lines.append("return %s -> %s" % (x, chain.morphism(x)))
    _emit(args, data, lines)
    return 0


def cmd_bwt(args):
    res = bwt(args.word, args.order)
    data = {
        "input": args.word,
        "order": "".join(res.order),
        "output": res.output,
        "runs": ["%s:%d" % r for r in res.runs],
        "rotations": list(res.rotations),
    }
    _emit(args, data, [res.output])
    return 0


def cmd_ebwt(args):
    res = ebwt(args.words, args.order)
    data = {
        "input": list(args.words),
        "order": "".join(res.order),
        "output": res.output,
        "conjugates": list(res.rotations),
    }
    _emit(args, data, [res.output])
    return 0


def cmd_cluster(args):
    order = tuple(args.order) if args.order else None
    if args.perm:
        base = tuple(args.order) if args.order else tuple(sorted(set(args.word)))
        perm = Perm.from_one_line(base, args.perm)
        verdict = is_pi_clustering(args.word, perm)
        data = {
            "word": args.word,
            "permutation": args.perm,
            "clustering": verdict,
        }
        _emit(args, data, ["clustering" if verdict else "not clustering"])
        return 0
    res = bwt(args.word, order)
    perm = infer_clustering_permutation(args.word, order)
    completions = ()
    if args.all and perm is not None:
        completions = infer_clustering_permutation(args.word, order, all_completions=True)
    data = {
        "word": args.word,
        "output": res.output,
        "clustering": perm is not None,
        "permutation": None if perm is None else perm.one_line(),
        "completions": [p.one_line() for p in completions],
    }
    lines = [
        "clustering: %s" % (perm is not None),
        "permutation: %s" % (None if perm is None else perm.one_line()),
    ]
    if completions:
        lines.append("completions: " + " ".join(p.one_line() for p in completions))
    _emit(args, data, lines)
    return 0


def cmd_lyndon(args):
    word = args.word
    data = {
        "word": word,
        "representative": lyndon_representative(word, args.order),
        "root": primitive_root(word),
        "is_lyndon": is_lyndon(word, args.order),
        "parikh": parikh(word),
    }
    _emit(args, data, [data["representative"]])
    return 0


def cmd_diet(args):
    spec = _parse_diet_spec(args.spec)
    mapping, cycles = diet_action(spec)
    data = {
        "word": spec.word(),
        "mapping": list(mapping),
        "cycles": [list(c) for c in cycles],
        "lyndon": list(diet_lyndon_multiset(spec)),
        "parikh": list(spec.composition),
    }
    lines = [
        "word: %s" % data["word"],
        "cycles: " + " ".join("(%s)" % ",".join(str(i) for i in c) for c in cycles),
        "lyndon: " + " ".join(data["lyndon"]),
    ]
    _emit(args, data, lines)
    return 0


def cmd_extgraph(args):
    lang = _load_language(args)
    g = extension_graph(lang, args.word)
    if args.format == "dot":
        lines = ["graph extensions {"]
        for a in g.left:
            lines.append('  "L:%s";' % a)
        for b in g.right:
            lines.append('  "R:%s";' % b)
        for a, b in g.edges:
            lines.append('  "L:%s" -- "R:%s";' % (a, b))
        lines.append("}")
        print("\n".join(lines))
        return 0
    data = g.to_json()
    data["bispecial"] = g.is_bispecial()
    data["tree"] = g.is_tree()
    data["forest"] = g.is_forest()
    lines = [
        "left: " + " ".join(g.left),
        "right: " + " ".join(g.right),
        "edges: " + " ".join("%s%s" % e for e in g.edges),
    ]
    _emit(args, data, lines)
    return 0


def cmd_classify(args):
    lang = _load_language(args)
    report = classify_language(
        lang, tuple(args.left), tuple(args.right), args.max_len
    )
    data = report.to_json()
    lines = [
        "dendric: %s" % report.dendric,
        "alsinic: %s" % report.alsinic,
        "ordered alsinic: %s" % report.ordered_alsinic,
    ]
    if report.first_incompatible is not None:
        lines.append("first incompatible: %r" % report.first_incompatible)
    _emit(args, data, lines)
    return 0


def cmd_verify(args):
    t = _load_iet(args)
    if args.check == "returns":
        report = verify_return_clustering(t, args.word_len, args.return_len)
    elif args.check == "symmetric":
        report = verify_perfect_clustering_symmetric(t, args.word_len, args.return_len)
    else:
        report = verify_induction_consistency(t, args.word_len, args.return_len)
    data = report.to_json()
    lines = [
        "checked: %d" % len(report.checks),
        "ok: %s" % report.ok,
    ]
    if not report.ok:
        lines.append("failures: " + " ".join(report.failures()))
    _emit(args, data, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ietbwt", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("info", help="geometry and combinatorics of a map")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument("--probe", type=int, default=64, help="connection search depth")
    sub.set_defaults(func=cmd_info)

    sub = subs.add_parser("eval", help="apply the map to a point")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument("--point", required=True)
    sub.add_argument("--steps", type=int, default=1)
    sub.set_defaults(func=cmd_eval)

    sub = subs.add_parser("orbit", help="coding and points of an orbit")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument("--point", required=True)
    sub.add_argument("--steps", type=int, default=10)
    sub.set_defaults(func=cmd_orbit)

    sub = subs.add_parser("language", help="factors of the coding language")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument("--periodic", metavar="WORD", help="use the closure of a word")
    sub.add_argument("--depth", type=int, default=4)
    sub.set_defaults(func=cmd_language)

    sub = subs.add_parser("cylinders", help="intervals coded by each word")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument("--depth", type=int, default=2)
    sub.set_defaults(func=cmd_cylinders)

    sub = subs.add_parser("returns", help="return words of a factor")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument("--word", required=True)
    sub.add_argument("--max-len", type=int, default=10)
    sub.set_defaults(func=cmd_returns)

    sub = subs.add_parser("induce", help="induce onto the cylinder of a word")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument("--word", required=True)
    sub.add_argument("--max-steps", type=int, default=200)
    sub.set_defaults(func=cmd_induce)

    sub = subs.add_parser("bwt", help="transform of a single word")
    _add_format(sub)
    sub.add_argument("word")
    sub.add_argument("--order")
    sub.set_defaults(func=cmd_bwt)

    sub = subs.add_parser("ebwt", help="transform of a multiset of words")
    _add_format(sub)
    sub.add_argument("words", nargs="+")
    sub.add_argument("--order")
    sub.set_defaults(func=cmd_ebwt)

    sub = subs.add_parser("cluster", help="clustering verdict for a word")
    _add_format(sub)
    sub.add_argument("word")
    sub.add_argument("--order")
    sub.add_argument("--perm", help="candidate permutation as a one line row")
    sub.add_argument("--all", action="store_true", help="list all completions")
    sub.set_defaults(func=cmd_cluster)

    sub = subs.add_parser("lyndon", help="rotation facts about a word")
    _add_format(sub)
    sub.add_argument("word")
    sub.add_argument("--order")
    sub.set_defaults(func=cmd_lyndon)

    sub = subs.add_parser("diet", help="discrete exchange facts")
    _add_format(sub)
    sub.add_argument("spec", help="counts/row, e.g. 4,2,1/cba")
    sub.set_defaults(func=cmd_diet)

    sub = subs.add_parser("extgraph", help="extension graph of a factor")
    _add_iet_args(sub)
    _add_format(sub, dot=True)
    sub.add_argument("--periodic", metavar="WORD")
    sub.add_argument("--depth", type=int, default=8)
    sub.add_argument("--word", required=True)
    sub.set_defaults(func=cmd_extgraph)

    sub = subs.add_parser("classify", help="tree, forest, and order checks")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument("--periodic", metavar="WORD")
    sub.add_argument("--depth", type=int, default=8)
    sub.add_argument("--left", required=True, help="left vertex order")
    sub.add_argument("--right", required=True, help="right vertex order")
    sub.add_argument("--max-len", type=int, default=None)
    sub.set_defaults(func=cmd_classify)

    sub = subs.add_parser("verify", help="library-wide consistency reports")
    _add_iet_args(sub)
    _add_format(sub)
    sub.add_argument(
        "--check",
        choices=["returns", "symmetric", "induction"],
        default="returns",
    )
    sub.add_argument("--word-len", type=int, default=2)
    sub.add_argument("--return-len", type=int, default=10)
    sub.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
