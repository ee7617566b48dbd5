"""
Командная строка: info | analyze | verify | export.

    powerplanar info "SD(5,4,2)"
    powerplanar analyze Z7 --proper --format json
    powerplanar verify planar-P lemma-K9p3 --budget-1planar 100000
    powerplanar export D12 --format dot --out d12.dot

Код возврата: 0 - нет fail, 1 - есть fail, 2 - ошибка ввода.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import argparse
import json
import logging
import sys

from powerplanar.catalog import SWEEP_MAX_ORDER, Budgets, default_catalog, read_catalog
from powerplanar.coloring import MAX_COLORING_VERTICES, coloring
from powerplanar.descriptors import build_group
from powerplanar.graphs import Graph, build_power_graph, export_dot, graph_from_named, graph_to_json
from powerplanar.groups import Group, cyclic_subgroup_counts, omega, order_counts
from powerplanar.logs import close_run_logger, create_run_logger
from powerplanar.oneplanar import is_1_planar
from powerplanar.planarity import is_almost_planar, is_maximal_planar, is_outerplanar, is_planar, ring_analysis
from powerplanar.surfaces import INCONCLUSIVE, NO, YES, SurfaceResult, crosscap, genus
from powerplanar.verifier import CLAIMS, REPORT_VERSION, Sweep, certificate_record, get_claim

log = logging.getLogger(__name__)

FORMATS = ("text", "json", "dot")


# =========================
# Конфигурация запуска
# =========================

@dataclass(frozen=True)
class RunConfig:
    command: str
    descriptor: str | None = None
    catalog: Path | None = None
    proper: bool = False
    named: bool = False
    budgets: Budgets = field(default_factory=Budgets)
    fmt: str = "text"
    out: Path | None = None
    claims: tuple[str, ...] = ()
    log_dir: Path | None = None
    sweep_max_order: int = SWEEP_MAX_ORDER
    use_obstructions: bool = True

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}, expected one of {FORMATS}")
        if self.command in ("info", "export") and self.descriptor is None:
            raise ValueError(f"{self.command} needs a descriptor")
        if self.command == "analyze" and (self.descriptor is None) == (self.catalog is None):
            raise ValueError("analyze needs exactly one of a descriptor or --catalog")
        if self.sweep_max_order < 1:
            raise ValueError(f"--sweep-max-order must be positive, got {self.sweep_max_order}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powerplanar", description="Planarity of (proper) power graphs of finite groups")
    parser.add_argument("--log-dir", type=Path, default=None, help="write run_<timestamp>.log here")
    sub = parser.add_subparsers(dest="command", required=True)

    def budgets(p: argparse.ArgumentParser) -> None:
        defaults = Budgets()
        p.add_argument("--budget-genus", type=int, default=defaults.genus)
        p.add_argument("--budget-crosscap", type=int, default=defaults.crosscap)
        p.add_argument("--budget-1planar", type=int, default=defaults.one_planar)
        p.add_argument("--budget-cycles", type=int, default=defaults.cycles)

    info = sub.add_parser("info", help="order, element orders and cyclic subgroups of a group")
    info.add_argument("descriptor")
    info.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    analyze = sub.add_parser("analyze", help="full property battery for P(G) or P*(G)")
    analyze.add_argument("descriptor", nargs="?")
    analyze.add_argument("--catalog", type=Path)
    analyze.add_argument("--proper", action="store_true", help="use the proper power graph P*(G)")
    analyze.add_argument("--named", action="store_true", help="descriptor names a graph (K5, dot(K5,K5), ...)")
    analyze.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    analyze.add_argument("--out", type=Path)
    analyze.add_argument("--no-obstructions", action="store_true")
    budgets(analyze)

    verify = sub.add_parser("verify", help="replay classification results over the catalog")
    verify.add_argument("claims", nargs="*", help=f"claim ids (default: all): {', '.join(CLAIMS)}")
    verify.add_argument("--catalog", type=Path, help="extra groups (JSON lines) added to the built-in catalog")
    verify.add_argument("--sweep-max-order", type=int, default=SWEEP_MAX_ORDER)
    verify.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    verify.add_argument("--out", type=Path)
    verify.add_argument("--no-obstructions", action="store_true")
    budgets(verify)

    export = sub.add_parser("export", help="write P(G) or P*(G) as DOT or JSON")
    export.add_argument("descriptor")
    export.add_argument("--proper", action="store_true")
    export.add_argument("--named", action="store_true")
    export.add_argument("--format", dest="fmt", choices=("dot", "json"), default="dot")
    export.add_argument("--out", type=Path)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    budgets = Budgets()
    if hasattr(args, "budget_genus"):
        budgets = Budgets(args.budget_genus, args.budget_crosscap, args.budget_1planar, args.budget_cycles)
    return RunConfig(
        command=args.command,
        descriptor=getattr(args, "descriptor", None),
        catalog=getattr(args, "catalog", None),
        proper=getattr(args, "proper", False),
        named=getattr(args, "named", False),
        budgets=budgets,
        fmt=args.fmt,
        out=getattr(args, "out", None),
        claims=tuple(getattr(args, "claims", ()) or ()),
        log_dir=args.log_dir,
        sweep_max_order=getattr(args, "sweep_max_order", SWEEP_MAX_ORDER),
        use_obstructions=not getattr(args, "no_obstructions", False),
    )


# =========================
# Записи анализа
# =========================

@dataclass(frozen=True)
class AnalysisRecord:
    """results: свойство -> значение; "inconclusive" там, где бюджет исчерпан."""
    subject: str
    graph: str
    omega: str
    results: dict
    certificates: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        return {"v": REPORT_VERSION, "subject": self.subject, "graph": self.graph, "omega": self.omega,
                "results": self.results, "certificates": self.certificates}

    def to_text(self) -> list[str]:
        lines = [f"{self.graph}({self.subject})  omega={self.omega}"]
        lines += [f"  {key:<13} {value}" for key, value in self.results.items()]
        return lines


def _yes_no(flag: bool | None) -> str:
    if flag is None:
        return INCONCLUSIVE
    return YES if flag else NO


def _surface_verdict(result: SurfaceResult) -> str:
    """Вердикт "ровно 1" по результату рода или непланарного рода."""
    if result.exact:
        return _yes_no(result.value == 1)
    return NO if result.value >= 2 else INCONCLUSIVE


def _surface_value(result: SurfaceResult) -> str:
    return str(result.value) if result.exact else f">={result.value}"


def analyze_graph(subject: str, graph_name: str, graph: Graph, omega_text: str, config: RunConfig) -> AnalysisRecord:
    budgets = config.budgets
    planar, planar_cert = is_planar(graph)
    ring = ring_analysis(graph, budgets.cycles)
    one = is_1_planar(graph, budgets.one_planar, use_obstructions=config.use_obstructions)
    g = genus(graph, budgets.genus)
    c = crosscap(graph, budgets.crosscap)
    results: dict = {
        "planar": _yes_no(planar),
        "outerplanar": _yes_no(is_outerplanar(graph)),
        "ring": _yes_no(ring.is_ring),
        "1-planar": one.verdict,
        "almost planar": _yes_no(is_almost_planar(graph)),
        "maximal planar": _yes_no(is_maximal_planar(graph)),
        "genus": _surface_value(g),
        "crosscap": _surface_value(c),
        "toroidal": _surface_verdict(g),
        "projective": _surface_verdict(c),
    }
    if graph.n <= MAX_COLORING_VERTICES:
        colors = coloring(graph)
        results["chi"] = colors.chromatic
        results["chi_s"] = colors.star_chromatic
    else:
        results["chi"] = results["chi_s"] = INCONCLUSIVE
    certificates = {
        "planar": certificate_record(planar_cert),
        "1-planar": certificate_record(one.drawing),
        "genus": certificate_record(g),
        "crosscap": certificate_record(c),
    }
    log.info("analyzed %s(%s): genus %s, crosscap %s", graph_name, subject, results["genus"], results["crosscap"])
    return AnalysisRecord(subject, graph_name, omega_text, results, certificates)


def _subject_graph(config: RunConfig, group: Group | None = None) -> tuple[str, str, Graph, str]:
    """(субъект, имя графа, граф, ω) для группы или именованного графа."""
    if group is None and config.named:
        assert config.descriptor is not None
        return config.descriptor, "graph", graph_from_named(config.descriptor), "-"
    if group is None:
        assert config.descriptor is not None
        group = build_group(config.descriptor)
    name = "P*" if config.proper else "P"
    return group.label, name, build_power_graph(group, config.proper), str(omega(group))


# =========================
# Команды
# =========================

def _emit(lines: list[str], config: RunConfig, output_func: Callable[[str], None]) -> None:
    if config.out is not None:
        config.out.write_text("\n".join(lines) + "\n", encoding="utf-8")
        output_func(f"written {config.out}")
        return
    for line in lines:
        output_func(line)


def cmd_info(config: RunConfig, output_func: Callable[[str], None]) -> int:
    assert config.descriptor is not None
    group = build_group(config.descriptor)
    record = {
        "v": REPORT_VERSION,
        "group": group.label,
        "order": group.order,
        "omega": list(omega(group)),
        "elements_of_order": {str(k): v for k, v in order_counts(group).items()},
        "cyclic_subgroups_of_order": {str(k): v for k, v in cyclic_subgroup_counts(group).items()},
    }
    if config.fmt == "json":
        output_func(json.dumps(record, sort_keys=True))
        return 0
    output_func(f"{group.label}: order {group.order}, omega {omega(group)}")
    for k, count in cyclic_subgroup_counts(group).items():
        output_func(f"  order {k}: {order_counts(group)[k]} elements, {count} cyclic subgroups")
    return 0


def cmd_analyze(config: RunConfig, output_func: Callable[[str], None]) -> int:
    if config.catalog is not None:
        subjects = [_subject_graph(config, g) for g in read_catalog(config.catalog.read_bytes())]
    else:
        subjects = [_subject_graph(config)]
    subjects.sort(key=lambda s: s[0])

    if config.fmt == "dot":
        lines = [export_dot(graph, name="G").decode("utf-8") for _, _, graph, _ in subjects]
        _emit(lines, config, output_func)
        return 0

    lines = []
    for subject, graph_name, graph, omega_text in subjects:
        record = analyze_graph(subject, graph_name, graph, omega_text, config)
        if config.fmt == "json":
            lines.append(json.dumps(record.to_record(), sort_keys=True, ensure_ascii=False))
        else:
            lines += record.to_text()
    _emit(lines, config, output_func)
    return 0


def cmd_verify(config: RunConfig, output_func: Callable[[str], None]) -> int:
    claims = config.claims or tuple(CLAIMS)
    for claim_id in claims:
        get_claim(claim_id)

    catalog = default_catalog(config.sweep_max_order)
    if config.catalog is not None:
        catalog += read_catalog(config.catalog.read_bytes())
    sweep = Sweep(tuple(catalog), config.budgets, config.sweep_max_order, config.use_obstructions)

    lines = []
    failed = False
    inconclusive = 0
    for claim_id in claims:
        report = get_claim(claim_id).check(sweep)
        failed = failed or report.failed
        inconclusive += report.counts[INCONCLUSIVE]
        lines += [report.to_json()] if config.fmt == "json" else report.to_text()
    if inconclusive:
        log.warning("%d inconclusive verdicts (budget exhausted)", inconclusive)
        if config.fmt == "text":
            lines.append(f"WARNING: {inconclusive} inconclusive verdicts (budget exhausted)")
    _emit(lines, config, output_func)
    return 1 if failed else 0


def cmd_export(config: RunConfig, output_func: Callable[[str], None]) -> int:
    subject, graph_name, graph, _ = _subject_graph(config)
    data = export_dot(graph, name="G") if config.fmt == "dot" else graph_to_json(graph)
    if config.out is not None:
        config.out.write_bytes(data)
        output_func(f"written {config.out}")
    else:
        output_func(data.decode("utf-8").rstrip("\n"))
    log.info("exported %s(%s) as %s", graph_name, subject, config.fmt)
    return 0


COMMANDS: dict[str, Callable[[RunConfig, Callable[[str], None]], int]] = {
    "info": cmd_info,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "export": cmd_export,
}


def _stderr(message: str) -> None:
    print(message, file=sys.stderr)


# =========================
#  __main__
# =========================

def main(
        argv: Sequence[str] | None = None,
        output_func: Callable[[str], None] = print,
        error_func: Callable[[str], None] = _stderr,
) -> int:
    args = build_parser().parse_args(argv)
    logger = create_run_logger(args.log_dir)
    try:
        config = config_from_args(args)
        logger.info("command %s", config.command)
        status = COMMANDS[config.command](config, output_func)
        logger.info("exit status %d", status)
        return status
    except (ValueError, OSError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        error_func(f"error: {exc}")
        return 2
    finally:
        close_run_logger(logger)


if __name__ == "__main__":
    sys.exit(main())
