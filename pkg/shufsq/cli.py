# shufsq/cli.py
"""
Command-line front end.

Data goes to stdout (or ``--out``); logs and progress go to stderr.
Exit status: 0 found / success, 1 not found / incomplete, 2 input error.
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler

from shufsq import __version__
from shufsq.codes import (
    circle_graph,
    euler_number,
    euler_number_best,
    euler_number_up_to_rotation,
    euler_shuffle_scan,
    gauss_digraph,
)
from shufsq.covering import cover_matrix_text, dihedral_scan
from shufsq.cyclic import anti_square_scan, cyclic_decompose, s_of, shift_to_shuffle_square
from shufsq.errors import CheckpointError, ScanInterrupted, ShuffleError
from shufsq.formats import (
    count_table_human,
    count_table_records,
    cover_solution_text,
    dumps_record,
    records_text,
    render_table,
    to_gml,
    witness_record,
)
from shufsq.models import GroupKind
from shufsq.reproduce import PaperTables
from shufsq.shuffle import is_gamma_shuffle_square, is_shuffle_square
from shufsq.words import parse_permutation, parse_word
from shufsq.worker_pool import ScanOptions, default_workers

logger = logging.getLogger("shufsq")

EXIT_FOUND = 0
EXIT_NOT_FOUND = 1
EXIT_ERROR = 2

FORMATS = ("human", "csv", "records")
TABLES = ("table1", "table3", "table5", "appendixA", "covering-k")
SCANS = ("anti-square", "dihedral", "euler")

# Largest --length/--max-length and --k each table or scan accepts.
MAX_LENGTHS = {"table1": 32, "table5": 20, "appendixA": 32, "anti-square": 32, "dihedral": 16}
MAX_K = {"covering-k": 5, "cover": 5, "dihedral": 4, "euler": 6}


@dataclass
class RunConfig:
    """Everything a subcommand needs, validated before dispatch."""
    command: str
    word: Optional[str] = None
    gamma: Optional[str] = None
    name: Optional[str] = None
    length: Optional[int] = None
    max_length: Optional[int] = None
    k: Optional[int] = None
    group: str = GroupKind.DIHEDRAL.value
    graph: str = "digraph"
    gml: bool = False
    fmt: str = "human"
    workers: int = 1
    checkpoint: Optional[Path] = None
    checkpoint_every: Optional[int] = None
    chunk_size: Optional[int] = None
    stop_after: Optional[int] = None
    progress: bool = False
    out: Optional[Path] = None
    verbosity: int = 0

    def validate(self):
        if self.workers < 1:
            raise ValueError(f"--workers must be at least 1, got {self.workers}.")
        if self.fmt not in FORMATS:
            raise ValueError(f"Unknown format {self.fmt!r}.")
        for flag, value in (("--length", self.length), ("--max-length", self.max_length)):
            if value is not None and (value < 2 or value % 2):
                raise ValueError(f"{flag} must be even and at least 2, got {value}.")
        if self.k is not None and self.k < 1:
            raise ValueError(f"--k must be at least 1, got {self.k}.")
        target = self.name or self.command
        for flag, value in (("--length", self.length), ("--max-length", self.max_length)):
            if value is not None and value > MAX_LENGTHS.get(target, value):
                raise ValueError(f"Unsupported bound: {flag} {value} exceeds {MAX_LENGTHS[target]} for {target}.")
        if self.k is not None and self.k > MAX_K.get(target, self.k):
            raise ValueError(f"Unsupported bound: --k {self.k} exceeds {MAX_K[target]} for {target}.")
        if self.command in ("check", "decompose", "shift", "s-of", "codes") and not self.word:
            raise ValueError(f"{self.command} needs a word.")

    def scan_options(self) -> ScanOptions:
        options = ScanOptions(
            workers=self.workers,
            checkpoint=self.checkpoint,
            checkpoint_every=self.checkpoint_every,
            stop_after=self.stop_after,
            progress=self.progress,
        )
        if self.chunk_size:
            options.chunk_size = self.chunk_size
        return options


# --- Argument parsing ---


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="human")
    common.add_argument("--workers", type=int, default=None, help="worker processes (default: $SHUFSQ_WORKERS or 1)")
    common.add_argument("--out", type=Path, default=None, help="write data here instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("-q", "--quiet", action="count", default=0)

    parser = argparse.ArgumentParser(prog="shufsq", description="Shuffle squares and their relatives.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="decide whether a word is a shuffle (gamma-)square")
    check.add_argument("word")
    check.add_argument("--gamma", help="permutation in one-line notation, e.g. 213")

    for name, text in (("decompose", "cyclic shuffle gamma-square witness of an even binary word"),
                       ("shift", "cyclic shift turning a word with <= 4 ones into a shuffle square"),
                       ("s-of", "number of cyclic shifts that are shuffle squares")):
        sub.add_parser(name, parents=[common], help=text).add_argument("word")

    table = sub.add_parser("table", parents=[common], help="reproduce a published table")
    table.add_argument("name", choices=TABLES)
    table.add_argument("--max-length", type=int, default=None)
    table.add_argument("--length", type=int, default=None)
    table.add_argument("--k", type=int, default=None)
    table.add_argument("--progress", action="store_true")

    scan = sub.add_parser("scan", parents=[common], help="long-running scans")
    scan.add_argument("kind", choices=SCANS)
    scan.add_argument("--length", type=int, default=None)
    scan.add_argument("--max-length", type=int, default=None)
    scan.add_argument("--k", type=int, default=None)
    scan.add_argument("--group", choices=[kind.value for kind in GroupKind], default=GroupKind.DIHEDRAL.value)
    scan.add_argument("--checkpoint", type=Path, default=None)
    scan.add_argument("--checkpoint-every", type=int, default=None)
    scan.add_argument("--chunk-size", type=int, default=None)
    scan.add_argument("--stop-after", type=int, default=None, help="stop (and checkpoint) after this many representatives")
    scan.add_argument("--progress", action="store_true")

    cover = sub.add_parser("cover", parents=[common], help="minimum covering set of permutations")
    cover.add_argument("--k", type=int, default=3)

    codes = sub.add_parser("codes", parents=[common], help="digraph and chord diagram of a word")
    codes.add_argument("word")
    codes.add_argument("--graph", choices=("digraph", "chords"), default="digraph")
    codes.add_argument("--gml", action="store_true", help="emit GML instead of an edge list")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    values = vars(args)
    config = RunConfig(
        command=args.command,
        word=values.get("word"),
        gamma=values.get("gamma"),
        name=values.get("name") or values.get("kind"),
        length=values.get("length"),
        max_length=values.get("max_length"),
        k=values.get("k"),
        group=values.get("group") or GroupKind.DIHEDRAL.value,
        graph=values.get("graph") or "digraph",
        gml=bool(values.get("gml")),
        fmt=args.fmt,
        workers=args.workers if args.workers is not None else default_workers(),
        checkpoint=values.get("checkpoint"),
        checkpoint_every=values.get("checkpoint_every"),
        chunk_size=values.get("chunk_size"),
        stop_after=values.get("stop_after"),
        progress=bool(values.get("progress")),
        out=args.out,
        verbosity=args.verbose - args.quiet,
    )
    config.validate()
    return config


def setup_logging(verbosity: int):
    level = logging.DEBUG if verbosity > 0 else logging.WARNING if verbosity < 0 else logging.INFO
    handler = RichHandler(console=Console(stderr=True), show_path=False, show_time=False)
    root = logging.getLogger("shufsq")
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False


def emit(config: RunConfig, text: str):
    if config.out is not None:
        config.out.parent.mkdir(parents=True, exist_ok=True)
        config.out.write_text(text)
        logger.info(f"✅ Wrote {config.out}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


# --- Single-word commands ---


def cmd_check(config: RunConfig) -> int:
    word = parse_word(config.word)
    if config.gamma:
        witness = is_gamma_shuffle_square(word, parse_permutation(config.gamma))
        kind = f"shuffle {config.gamma}-square"
    else:
        witness = is_shuffle_square(word)
        kind = "shuffle square"

    if config.fmt == "records":
        emit(config, dumps_record(witness_record(word, witness)) + "\n")
    elif config.fmt == "csv":
        fields = [str(word), "yes" if witness else "no", "", "", ""]
        if witness:
            record = witness.to_record()
            fields[2:] = [" ".join(map(str, record["first"])), " ".join(map(str, record["second"])), record["gamma"]]
        emit(config, "word,found,first,second,gamma\n" + ",".join(fields) + "\n")
    elif witness is None:
        emit(config, f"{word}: not a {kind}\n")
    else:
        emit(config, _witness_lines(word, witness, kind))
    return EXIT_FOUND if witness is not None else EXIT_NOT_FOUND


def _witness_lines(word, witness, kind: str) -> str:
    return (
        f"{word}: {kind}\n"
        f"  first  {list(witness.first_positions)} -> {witness.first(word)}\n"
        f"  second {list(witness.second_positions)} -> {witness.second(word)}\n"
        f"  gamma  {witness.gamma.one_line()}\n"
    )


def cmd_decompose(config: RunConfig) -> int:
    word = parse_word(config.word)
    witness = cyclic_decompose(word)
    if config.fmt == "records":
        emit(config, dumps_record(witness_record(word, witness)) + "\n")
    else:
        emit(config, _witness_lines(word, witness, f"cyclic shuffle {witness.gamma.one_line()}-square"))
    return EXIT_FOUND


def cmd_shift(config: RunConfig) -> int:
    word = parse_word(config.word)
    result = shift_to_shuffle_square(word)
    if config.fmt == "records":
        emit(config, dumps_record({"word": str(word), "shift": result.shift,
                                   "shifted": str(result.word), "fallback": result.fallback}) + "\n")
    elif config.fmt == "csv":
        emit(config, f"word,shift,shifted,fallback\n{word},{result.shift},{result.word},{int(result.fallback)}\n")
    else:
        note = " (exhaustive fallback)" if result.fallback else ""
        emit(config, f"{word}: shift {result.shift} gives {result.word}{note}\n")
    return EXIT_FOUND


def cmd_s_of(config: RunConfig) -> int:
    word = parse_word(config.word)
    value = s_of(word)
    if config.fmt == "records":
        emit(config, dumps_record({"word": str(word), "s": value}) + "\n")
    elif config.fmt == "csv":
        emit(config, f"word,s\n{word},{value}\n")
    else:
        emit(config, f"s({word}) = {value}\n")
    return EXIT_FOUND


# --- Tables ---


def _neighbourhood_output(config: RunConfig, k: int, tables: PaperTables) -> str:
    instance = tables.cover_instance(k)
    if config.fmt == "csv":
        return cover_matrix_text(instance).replace(" ", ",")
    rows = [(str(word), [gamma.one_line() for gamma in instance.neighbors(i)]) for i, word in enumerate(instance.words)]
    if config.fmt == "records":
        return records_text({"word": word, "neighbors": perms} for word, perms in rows)
    return "".join(f"{word}: {', '.join(perms)}\n" for word, perms in rows)


def _reports_output(config: RunConfig, reports) -> str:
    if config.fmt == "records":
        return records_text(
            {"length": r.length, "s_min": r.s_min, "classes": r.class_count,
             "representatives": [str(w) for w in r.representatives]}
            for r in reports
        )
    if config.fmt == "csv":
        return "length,s_min,classes\n" + "".join(f"{r.length},{r.s_min},{r.class_count}\n" for r in reports)
    return render_table("s_2n and |S_2n|", ["2n", "s_2n", "|S_2n|"],
                        [(r.length, r.s_min, r.class_count) for r in reports])


def cmd_table(config: RunConfig) -> int:
    tables = PaperTables(config.workers, config.progress)
    name = config.name
    if name == "table1":
        emit(config, _reports_output(config, tables.anti_squares(config.max_length or 16)))
    elif name == "table3":
        emit(config, _neighbourhood_output(config, 3, tables))
    elif name == "covering-k":
        emit(config, _neighbourhood_output(config, config.k or 3, tables))
    elif name == "table5":
        table = tables.shuffle_square_counts(config.max_length or 12)
        if config.fmt == "csv":
            emit(config, table.to_csv())
        elif config.fmt == "records":
            emit(config, records_text(count_table_records(table)))
        else:
            emit(config, count_table_human(table))
    elif name == "appendixA":
        match = tables.appendix(config.length or 24)
        emit(config, match.report.to_text())
        for word in match.missing:
            logger.warning(f"⚠️ Listed anti-square {word} has no matching class.")
        for word in match.unexpected:
            logger.warning(f"⚠️ Class {word} is not in the published list.")
        return EXIT_FOUND if match.matches else EXIT_NOT_FOUND
    return EXIT_FOUND


# --- Scans ---


def cmd_scan(config: RunConfig) -> int:
    if config.name == "anti-square":
        report = anti_square_scan(config.length or config.max_length or 24, config.scan_options())
        if config.fmt == "records":
            emit(config, _reports_output(config, [report]))
        else:
            emit(config, report.to_text())
        return EXIT_FOUND

    if config.name == "dihedral":
        violations = dihedral_scan(config.k or 3, config.max_length or 8, GroupKind(config.group), config.workers)
        if config.fmt == "records":
            emit(config, records_text({"word": str(word), "group": config.group} for word in violations))
        else:
            emit(config, "".join(f"{word}\n" for word in violations))
        logger.info(f"{len(violations)} words are not {config.group} shuffle gamma-squares.")
        return EXIT_FOUND if not violations else EXIT_NOT_FOUND

    scan = euler_shuffle_scan(config.k or 3, config.workers)
    rows = [
        (str(r.word), r.euler_number, r.best_number, r.rotation_number, "yes" if r.is_shuffle_square else "no")
        for r in scan.rows
    ]
    if config.fmt == "records":
        emit(config, records_text(
            {"word": w, "euler": e, "best": b, "rotation": c, "shuffle_square": s == "yes"} for w, e, b, c, s in rows
        ))
    elif config.fmt == "csv":
        emit(config, "word,euler,best,rotation,shuffle_square\n" + "".join(",".join(map(str, row)) + "\n" for row in rows))
    else:
        emit(config, render_table(
            f"Euler numbers of C_{scan.k}", ["word", "euler", "BEST", "up to rotation", "shuffle square"], rows
        ))
    logger.info(
        f"{len(scan.with_euler_number(1))} words with Euler number 1, {len(scan.violations)} violations "
        f"({len(scan.rotation_violations)} up to rotation)."
    )
    return EXIT_FOUND if not scan.disagreements else EXIT_NOT_FOUND


# --- Covering sets and codes ---


def cmd_cover(config: RunConfig) -> int:
    result = PaperTables(config.workers).covering(config.k or 3)
    solution = result.solution
    if config.fmt == "records":
        emit(config, dumps_record({"k": config.k or 3, "size": solution.size, "optimal": solution.optimal,
                                   "chosen": [gamma.one_line() for gamma in solution.chosen]}) + "\n")
    elif config.fmt == "csv":
        emit(config, "permutation,cycles\n" + "".join(f"{g.one_line()},{g.cycle_notation()}\n" for g in solution.chosen))
    else:
        emit(config, f"minimum covering set of size {solution.size} (optimal)\n" + cover_solution_text(solution))
    return EXIT_FOUND


def cmd_codes(config: RunConfig) -> int:
    word = parse_word(config.word)
    structure = gauss_digraph(word) if config.graph == "digraph" else circle_graph(word)
    if config.gml:
        emit(config, to_gml(structure))
    elif config.fmt == "records" and config.graph == "digraph":
        emit(config, dumps_record({"word": str(word), "euler": euler_number(word),
                                   "best": euler_number_best(word),
                                   "rotation": euler_number_up_to_rotation(word),
                                   "arcs": structure.to_edge_list().splitlines()}) + "\n")
    elif config.fmt == "records":
        emit(config, dumps_record({"word": str(word), "edges": structure.to_edge_list().splitlines()}) + "\n")
    else:
        text = structure.to_edge_list()
        if config.graph == "digraph":
            text += f"# euler number {euler_number(word)}\n"
        emit(config, text)
    return EXIT_FOUND


COMMANDS = {
    "check": cmd_check,
    "decompose": cmd_decompose,
    "shift": cmd_shift,
    "s-of": cmd_s_of,
    "table": cmd_table,
    "scan": cmd_scan,
    "cover": cmd_cover,
    "codes": cmd_codes,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_FOUND
    except ValueError as e:
        Console(stderr=True).print(f"❌ {e}")
        return EXIT_ERROR

    setup_logging(config.verbosity)
    try:
        return COMMANDS[config.command](config)
    except CheckpointError as e:
        logger.error(f"❌ {e} Restart required: delete the checkpoint and run again.")
        return EXIT_ERROR
    except ScanInterrupted as e:
        logger.warning(f"⏸️ {e}")
        return EXIT_NOT_FOUND
    except (ShuffleError, ValueError) as e:
        logger.error(f"❌ {e}")
        return EXIT_ERROR
