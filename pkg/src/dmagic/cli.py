"""Command line interface.

Every subcommand answers the same underlying question about some graph: does
an orientation with a magic labeling exist?  Exit codes are uniform across
subcommands: 0 means yes (or the requested artifact was produced), 1 means a
proven no (or a certificate that fails verification), 2 means undecided, bad
input, or a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import tempfile
from pathlib import Path
from time import perf_counter
from typing import List, Optional, Sequence

from .constructors import (
    STATUS_MAGIC,
    STATUS_NOT_MAGIC,
    construct_complete,
    construct_empty,
    decide_kmokn,
    kmokn_graph,
)
from .graphs import (
    FormatError,
    UndirectedGraph,
    complete,
    complete_multipartite,
    cycle,
    empty_graph,
    graph_to_text,
    parse_graph,
    path,
    prism,
)
from .obstructions import KERNEL_CAP, parity_feasibility, theorem1_check
from .search import (
    SearchConfig,
    VERDICT_EXHAUSTED,
    VERDICT_WITNESS,
    decide_existence,
)
from .verifier import (
    NotALabelingError,
    Violation,
    bind_certificate,
    certificate_to_text,
    parse_certificate,
    verify,
)
from .zero_sum import zero_sum_partition

__version__ = "0.1.0"

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNDECIDED = 2


def _write_text(target: Optional[str], text: str) -> None:
    """Write to stdout, or atomically to a file (temp file plus rename)."""
    if target is None or target == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(target)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".dmagic.")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_graph(path_str: str) -> UndirectedGraph:
    return parse_graph(Path(path_str).read_text())


def _require(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"--{name} is required for --family {args.family}")


def _cmd_graph(args: argparse.Namespace) -> int:
    if args.family == "multipartite":
        _require(args, "sizes")
        graph = complete_multipartite(args.sizes)
    elif args.family == "kmokn":
        _require(args, "m", "n")
        graph = kmokn_graph(args.m, args.n)
    else:
        _require(args, "n")
        maker = {"complete": complete, "empty": empty_graph,
                 "path": path, "cycle": cycle, "prism": prism}[args.family]
        graph = maker(args.n)
    _write_text(args.output, graph_to_text(graph))
    return EXIT_YES


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "complete":
        if args.n % 2 == 0:
            print(f"not-magic: no labeling exists for the even complete graph on {args.n} vertices",
                  file=sys.stderr)
            return EXIT_NO
        cert = construct_complete(args.n)
        stem = f"complete-{args.n}"
    elif args.family == "empty":
        cert = construct_empty(args.n)
        stem = f"empty-{args.n}"
    else:
        _require(args, "m")
        decision = decide_kmokn(args.m, args.n)
        if decision.status == STATUS_NOT_MAGIC:
            print(f"not-magic {decision.obstruction}", file=sys.stderr)
            return EXIT_NO
        if decision.status != STATUS_MAGIC:
            print("search-required: no closed-form construction covers this cell; try the search command",
                  file=sys.stderr)
            return EXIT_UNDECIDED
        cert = decision.certificate
        stem = f"kmokn-{args.m}-{args.n}"
    _write_text(args.graph_out or f"{stem}.graph", graph_to_text(cert.graph))
    _write_text(args.cert_out or f"{stem}.cert", certificate_to_text(cert))
    print(f"magic mu={cert.mu.value}")
    return EXIT_YES


def _cmd_verify(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    parsed = parse_certificate(Path(args.certificate).read_text())
    orientation, labeling, claimed_mu = bind_certificate(parsed, graph)
    result = verify(graph, orientation, labeling)
    if isinstance(result, Violation):
        print(f"violation vertex={result.vertex} weight={result.weight.value} "
              f"expected={result.expected.value}")
        return EXIT_NO
    if result.mu != claimed_mu:
        print(f"violation claimed mu={claimed_mu.value} but weights are {result.mu.value}")
        return EXIT_NO
    print(f"magic mu={result.mu.value}")
    return EXIT_YES


def _cmd_decide(args: argparse.Namespace) -> int:
    decision = decide_kmokn(args.m, args.n)
    if decision.status == STATUS_MAGIC:
        print(f"magic {decision.method} mu={decision.certificate.mu.value}")
        return EXIT_YES
    if decision.status == STATUS_NOT_MAGIC:
        print(f"not-magic {decision.obstruction}")
        return EXIT_NO
    print("search-required")
    return EXIT_UNDECIDED


def _cmd_search(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    config = SearchConfig(
        node_budget=args.nodes,
        time_budget=args.seconds,
        workers=args.threads,
        fix_first_arc=args.fix_first_arc,
        unit_scaling=args.unit_scaling,
        parity_prune=args.parity_prune,
        parity_list_cap=args.parity_list_cap,
        seed=args.seed,
    )
    outcome = decide_existence(graph, config)
    stats = outcome.stats
    tail = f"nodes={stats.nodes} time_ms={stats.elapsed * 1000:.1f}"
    if outcome.verdict == VERDICT_WITNESS:
        print(f"witness mu={outcome.certificate.mu.value} {tail}")
        text = certificate_to_text(outcome.certificate)
        if args.output:
            _write_text(args.output, text)
        else:
            sys.stdout.write(text)
        return EXIT_YES
    if outcome.verdict == VERDICT_EXHAUSTED:
        print(f"exhausted-no-solution {tail}")
        return EXIT_NO
    print(f"inconclusive {tail}")
    return EXIT_UNDECIDED


def _cmd_obstruct(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    cert = theorem1_check(graph)
    if cert is not None:
        print(f"not-magic theorem1 r={cert.details['r']} order={cert.details['order']}")
        return EXIT_NO
    space = parity_feasibility(graph, kernel_cap=args.kernel_cap)
    if space is not None and space.certifies_nonexistence:
        print("not-magic parity-infeasible")
        return EXIT_NO
    print("inconclusive")
    return EXIT_UNDECIDED


def _cmd_partition(args: argparse.Namespace) -> int:
    partition = zero_sum_partition(args.size, args.sizes)
    lines = [" ".join(str(x) for x in part) for part in partition.parts]
    _write_text(args.output, "\n".join(lines) + "\n")
    return EXIT_YES


def _cmd_table(args: argparse.Namespace) -> int:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["family", "m", "n", "order", "status", "mu", "method", "nodes", "time_ms"])
    cert_dir = args.cert_dir
    if cert_dir:
        os.makedirs(cert_dir, exist_ok=True)
    for m in range(1, args.max_m + 1):
        for n in range(1, args.max_n + 1):
            started = perf_counter()
            decision = decide_kmokn(m, n)
            order = m * n
            nodes: object = ""
            mu: object = ""
            cert = None
            if decision.status == STATUS_MAGIC:
                status = "magic"
                method = decision.method
                cert = decision.certificate
                mu = cert.mu.value
            elif decision.status == STATUS_NOT_MAGIC:
                status = "not-magic"
                method = decision.obstruction
                if method == "theorem2":
                    # theorem1 does not apply when m = 0 mod 4; the checkable
                    # obstruction for those cells is the parity system
                    space = parity_feasibility(complete(m))
                    if space is not None and space.certifies_nonexistence:
                        method = "parity"
            elif order <= args.search_limit:
                outcome = decide_existence(kmokn_graph(m, n), SearchConfig())
                method = "search"
                nodes = outcome.stats.nodes
                if outcome.verdict == VERDICT_WITNESS:
                    status = "magic"
                    cert = outcome.certificate
                    mu = cert.mu.value
                elif outcome.verdict == VERDICT_EXHAUSTED:
                    status = "not-magic"
                else:
                    status = "unknown"
            else:
                status = "unknown"
                method = ""
            elapsed_ms = (perf_counter() - started) * 1000
            writer.writerow(["kmokn", m, n, order, status, mu, method, nodes, f"{elapsed_ms:.1f}"])
            if cert is not None and cert_dir:
                stem = os.path.join(cert_dir, f"kmokn-{m}-{n}")
                _write_text(stem + ".graph", graph_to_text(cert.graph))
                _write_text(stem + ".cert", certificate_to_text(cert))
    _write_text(args.output, buffer.getvalue())
    return EXIT_YES


def _int_list(text: str) -> List[int]:
    try:
        return [int(piece) for piece in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_output_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", metavar="FILE", default=None,
                        help="write to FILE atomically instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmagic",
        description="Orientable distance magic labelings over Z_n: construct, verify, decide, search.",
    )
    parser.add_argument("--version", action="version", version=f"dmagic {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_graph = sub.add_parser("graph", help="write a named graph in the text format")
    p_graph.add_argument("--family", required=True,
                         choices=["complete", "empty", "path", "cycle", "prism",
                                  "kmokn", "multipartite"])
    p_graph.add_argument("--n", type=int, default=None)
    p_graph.add_argument("--m", type=int, default=None,
                         help="outer count for --family kmokn")
    p_graph.add_argument("--sizes", type=_int_list, default=None, metavar="A,B,...",
                         help="block sizes for --family multipartite")
    _add_output_option(p_graph)
    p_graph.set_defaults(handler=_cmd_graph)

    p_construct = sub.add_parser("construct", help="build a verified certificate by formula")
    p_construct.add_argument("--family", required=True,
                             choices=["complete", "empty", "kmokn"])
    p_construct.add_argument("--n", type=int, required=True)
    p_construct.add_argument("--m", type=int, default=None,
                             help="outer count for --family kmokn")
    p_construct.add_argument("--graph-out", metavar="FILE", default=None,
                             help="graph file (default <family>-<params>.graph)")
    p_construct.add_argument("--cert-out", metavar="FILE", default=None,
                             help="certificate file (default <family>-<params>.cert)")
    p_construct.set_defaults(handler=_cmd_construct)

    p_verify = sub.add_parser("verify", help="check a certificate file against a graph file")
    p_verify.add_argument("--graph", required=True, metavar="FILE")
    p_verify.add_argument("--cert", dest="certificate", required=True, metavar="FILE")
    p_verify.set_defaults(handler=_cmd_verify)

    p_decide = sub.add_parser("decide", help="classify one cell of the blown-up clique family")
    p_decide.add_argument("--family", required=True, choices=["kmokn"])
    p_decide.add_argument("--m", type=int, required=True)
    p_decide.add_argument("--n", type=int, required=True)
    p_decide.set_defaults(handler=_cmd_decide)

    p_search = sub.add_parser("search", help="exhaustive search on an arbitrary graph file")
    p_search.add_argument("--graph", required=True, metavar="FILE")
    _add_output_option(p_search)
    p_search.add_argument("--nodes", type=int, default=None, metavar="B",
                          help="stop as inconclusive after B search nodes")
    p_search.add_argument("--seconds", type=float, default=None, metavar="S",
                          help="stop as inconclusive after S seconds")
    p_search.add_argument("--threads", type=int, default=1, metavar="T",
                          help="parallel workers over the root label split")
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--no-reduce", dest="fix_first_arc", action="store_false",
                          help="disable the first-arc symmetry reduction")
    p_search.add_argument("--unit-scaling", action="store_true")
    p_search.add_argument("--no-parity-prune", dest="parity_prune", action="store_false")
    p_search.add_argument("--parity-list-cap", type=int, default=4096)
    p_search.set_defaults(handler=_cmd_search)

    p_obstruct = sub.add_parser("obstruct", help="look for a nonexistence certificate")
    p_obstruct.add_argument("--graph", required=True, metavar="FILE")
    p_obstruct.add_argument("--kernel-cap", type=int, default=KERNEL_CAP)
    p_obstruct.set_defaults(handler=_cmd_obstruct)

    p_partition = sub.add_parser("partition", help="zero-sum partition of the symmetric set for even N")
    p_partition.add_argument("--N", dest="size", type=int, required=True,
                             help="even total size of the symmetric set")
    p_partition.add_argument("--sizes", type=_int_list, required=True, metavar="A,B,...")
    _add_output_option(p_partition)
    p_partition.set_defaults(handler=_cmd_partition)

    p_table = sub.add_parser("table", help="CSV classification of the family grid")
    p_table.add_argument("--max-m", type=int, default=8)
    p_table.add_argument("--max-n", type=int, default=8)
    p_table.add_argument("--search-limit", type=int, default=8,
                         help="run the search oracle on undecided cells up to this order")
    p_table.add_argument("--cert-dir", default=None,
                         help="write graph and certificate files for every magic cell")
    _add_output_option(p_table)
    p_table.set_defaults(handler=_cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (FormatError, NotALabelingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
