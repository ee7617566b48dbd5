"""
Проверка теорем о степенных графах на каталоге групп и на графах-образцах.

Каждое утверждение (Claim) - процедура, выдающая TheoremReport с вердиктом
pass / fail / inconclusive по каждому субъекту (группе или графу).

Правила
-------
- "Только если" проверяется на каталоге групп порядка <= sweep_max_order;
  отчёт называет этот перебранный мир.
- Группы из списков теорем строятся по описанию всегда, даже выше порядка перебора.
- Принадлежность списку: по описанию, иначе по отпечатку (порядок, ω, число
  элементов и циклических подгрупп каждого порядка) с предупреждением в логе.
- inconclusive никогда не превращается в pass или fail; fail всегда несёт witness.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

import json
import logging

from powerplanar.catalog import SWEEP_MAX_ORDER, Budgets
from powerplanar.coloring import MAX_COLORING_VERTICES, SolverLimitError, coloring
from powerplanar.descriptors import build_group, normalize_descriptor
from powerplanar.graphs import (
    Graph,
    NodeBudget,
    SearchBudgetExceeded,
    automorphisms,
    blocks,
    build_power_graph,
    graph_from_named,
    induced_subgraph,
    k9_minus_k6_plus,
    max_clique,
)
from powerplanar.groups import Group, cyclic_subgroups, fingerprint, omega
from powerplanar.oneplanar import (
    OnePlanarDrawing,
    OnePlanarResult,
    is_1_planar,
    known_obstruction,
    validate_1planar_drawing,
)
from powerplanar.planarity import (
    Embedding,
    embedding_surface,
    is_almost_planar,
    almost_planar_edge,
    is_maximal_planar,
    is_outerplanar,
    is_planar,
    ring_analysis,
    verify_planar_certificate,
)
from powerplanar.subdivisions import PatternHit, contains_subgraph
from powerplanar.surfaces import (
    INCONCLUSIVE,
    NO,
    YES,
    BlockSum,
    Bounds,
    Decision,
    Formula,
    SurfaceResult,
    genus,
    is_projective,
    is_toroidal,
    search_embedding,
)

log = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
REPORT_VERSION = 1

ALMOST_P_LIST = ("Z5", "Z6", "D10", "D12", "SD(3,4,2)", "SD(5,4,2)")
TOROIDAL_P_LIST = ("Z5", "Z6", "Z7", "D10", "D12", "D14", "SD(3,4,2)", "SD(5,4,2)", "SD(7,3,2)")
TOROIDAL_PSTAR_LIST = ("Z7", "Z8", "D14", "D16", "Q16", "QD16", "SD(7,3,2)")
PROJECTIVE_P_LIST = ("Z5", "Z6", "D10", "D12", "SD(3,4,2)", "SD(5,4,2)")
PROJECTIVE_PSTAR_LIST = ("Z7", "D14", "SD(7,3,2)", "SD(7,6,3)")

# графы для границы по рёбрам и для аддитивности рода по блокам
EDGE_BOUND_FIXTURES = ("K5", "K6", "K7", "fig2gadget5", "fig2gadget6", "dot(K5,K5)", "dot(fig2gadget6,K5)")
BLOCK_FIXTURES = ("dot(K5,K5)", "dot(K5,K3,3)", "union(K5,K3,3)", "dot(fig2gadget6,C4)", "dot(K6,K5)")
# блоки рода <= 1 и до 8 вершин склеиваются во вложение целого графа
GLUE_MAX_VERTICES = 8


class UnknownClaimError(ValueError):
    def __init__(self, claim_id: str) -> None:
        super().__init__(f"unknown claim {claim_id!r}, available: {', '.join(CLAIMS)}")
        self.claim_id = claim_id


# =========================
# Отчёты
# =========================

@dataclass(frozen=True)
class SubjectVerdict:
    """budget - исчерпанный лимит (только для inconclusive)."""
    subject: str
    status: str
    evidence: dict = field(default_factory=dict)
    budget: int | None = None

    def __post_init__(self) -> None:
        if self.status == FAIL and "witness" not in self.evidence:
            raise ValueError(f"fail verdict for {self.subject} has no witness")
        if self.status == INCONCLUSIVE and self.budget is None:
            raise ValueError(f"inconclusive verdict for {self.subject} has no budget")

    def to_record(self) -> dict:
        record = {"subject": self.subject, "status": self.status, "evidence": self.evidence}
        if self.budget is not None:
            record["budget"] = self.budget
        return record


@dataclass(frozen=True)
class TheoremReport:
    claim: str
    statement: str
    universe: str
    verdicts: tuple[SubjectVerdict, ...]

    @property
    def counts(self) -> dict[str, int]:
        result = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for v in self.verdicts:
            result[v.status] += 1
        return result

    @property
    def failed(self) -> bool:
        return self.counts[FAIL] > 0

    def to_record(self) -> dict:
        return {
            "v": REPORT_VERSION,
            "claim": self.claim,
            "statement": self.statement,
            "universe": self.universe,
            "counts": self.counts,
            "verdicts": [v.to_record() for v in self.verdicts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, ensure_ascii=False)

    def to_text(self) -> list[str]:
        c = self.counts
        lines = [
            f"{self.claim}: {c[PASS]} pass, {c[FAIL]} fail, {c[INCONCLUSIVE]} inconclusive",
            f"  {self.statement}",
            f"  universe: {self.universe}",
        ]
        for v in self.verdicts:
            if v.status == PASS:
                continue
            detail = v.evidence.get("reason", "")
            budget = f" (budget {v.budget})" if v.budget is not None else ""
            stretch = " [stretch]" if v.evidence.get("stretch") else ""
            lines.append(f"  {v.status.upper()} {v.subject}{stretch}: {detail}{budget}")
        return lines


# =========================
# Свидетельства в JSON-виде
# =========================

def certificate_record(cert: object) -> object:
    if cert is None:
        return None
    if isinstance(cert, Embedding):
        record: dict = {"rotation": [list(r) for r in cert.rotation]}
        if cert.negative is not None:
            record["negative"] = sorted(list(e) for e in cert.negative)
        return record
    if isinstance(cert, PatternHit):
        return {"pattern": cert.pattern, "branch": list(cert.branch), "paths": [list(p) for p in cert.paths]}
    if isinstance(cert, OnePlanarDrawing):
        return {"crossings": [[list(e), list(f)] for e, f in cert.crossing_pairs]}
    if isinstance(cert, Formula):
        return {"formula": cert.family, "value": cert.value}
    if isinstance(cert, Bounds):
        return {"lower": cert.lower, "upper": cert.upper, "reason": cert.reason}
    if isinstance(cert, BlockSum):
        return {"blocks": [
            {"vertices": sorted(members), "kind": r.kind, "value": r.value} for members, r in cert.parts
        ]}
    if isinstance(cert, SurfaceResult):
        return {"kind": cert.kind, "value": cert.value, "certificate": certificate_record(cert.certificate)}
    raise TypeError(f"no record form for {type(cert).__name__}")


# =========================
# Перебираемый мир
# =========================

@dataclass(frozen=True)
class Sweep:
    catalog: tuple[Group, ...]
    budgets: Budgets = field(default_factory=Budgets)
    sweep_max_order: int = SWEEP_MAX_ORDER
    use_obstructions: bool = True

    @property
    def groups(self) -> tuple[Group, ...]:
        return tuple(g for g in self.catalog if g.order <= self.sweep_max_order)

    def universe(self, listed: tuple[str, ...] = ()) -> str:
        text = f"{len(self.groups)} catalog groups of order <= {self.sweep_max_order}"
        extra = [d for d in listed if not any(_same_descriptor(g, d) for g in self.groups)]
        if extra:
            text += " + listed " + ", ".join(extra)
        return text

    def with_listed(self, listed: tuple[str, ...]) -> list[Group]:
        """Группы перебора плюс группы списка, которых в переборе нет."""
        subjects = list(self.groups)
        for d in listed:
            if not any(_same_descriptor(g, d) for g in subjects):
                subjects.append(_listed_group(d))
        return sorted(subjects, key=lambda g: (g.order, g.label))


def _same_descriptor(g: Group, descriptor: str) -> bool:
    return g.descriptor is not None and normalize_descriptor(g.descriptor) == normalize_descriptor(descriptor)


@lru_cache(maxsize=None)
def _listed_group(descriptor: str) -> Group:
    return build_group(descriptor)


@lru_cache(maxsize=None)
def _listed_fingerprint(descriptor: str) -> tuple:
    return fingerprint(_listed_group(descriptor))


def member(g: Group, listed: tuple[str, ...]) -> bool:
    for d in listed:
        if _same_descriptor(g, d):
            return True
    if not any(_listed_group(d).order == g.order for d in listed):
        return False
    own = fingerprint(g)
    for d in listed:
        if _listed_fingerprint(d) == own:
            log.warning("%s is taken as %s by fingerprint (order, omega, order and cyclic subgroup counts)",
                        g.label, d)
            return True
    return False


@lru_cache(maxsize=None)
def _power(g: Group, proper: bool) -> Graph:
    return build_power_graph(g, proper)


def _omega_within(g: Group, bound: int) -> bool:
    return omega(g).issubset(range(1, bound + 1))


def is_cyclic(g: Group) -> bool:
    return max(g.orders) == g.order


def order6_intersections_small(g: Group) -> bool:
    """Любые две циклические подгруппы порядка 6 имеют не больше двух общих элементов."""
    sixes = [c.members for c in cyclic_subgroups(g) if c.order == 6]
    return all(len(a & b) <= 2 for a, b in combinations(sixes, 2))


def three_z6_configuration(g: Group) -> bool:
    """Три циклические подгруппы порядка 6 с общей нетривиальной подгруппой."""
    sixes = [c.members for c in cyclic_subgroups(g) if c.order == 6]
    for a, b, c in combinations(sixes, 3):
        if len(a & b & c) >= 2:
            return True
    return False


def _verdict(
        subject: str, expected: bool, observed: bool | None, evidence: dict, *,
        witness: object = None, budget: int | None = None,
) -> SubjectVerdict:
    evidence = dict(evidence, expected=expected, observed=observed)
    if observed is None:
        return SubjectVerdict(subject, INCONCLUSIVE, evidence, budget)
    if observed == expected:
        return SubjectVerdict(subject, PASS, evidence)
    return SubjectVerdict(subject, FAIL, dict(evidence, witness=witness))


def _merge(subject: str, parts: list[SubjectVerdict]) -> SubjectVerdict:
    """Один вердикт из нескольких проверок: fail важнее inconclusive, тот важнее pass."""
    evidence = {p.subject: p.evidence for p in parts}
    for status in (FAIL, INCONCLUSIVE):
        hit = [p for p in parts if p.status == status]
        if hit:
            if status == FAIL:
                evidence["witness"] = {p.subject: p.evidence["witness"] for p in hit}
                evidence["reason"] = "; ".join(f"{p.subject} disagrees" for p in hit)
                return SubjectVerdict(subject, FAIL, evidence)
            return SubjectVerdict(subject, INCONCLUSIVE, evidence, max(p.budget or 0 for p in hit))
    return SubjectVerdict(subject, PASS, evidence)


def _report(claim_id: str, universe: str, verdicts: Iterable[SubjectVerdict]) -> TheoremReport:
    report = TheoremReport(claim_id, CLAIMS[claim_id].statement, universe, tuple(verdicts))
    c = report.counts
    log.info("%s: %d pass, %d fail, %d inconclusive", claim_id, c[PASS], c[FAIL], c[INCONCLUSIVE])
    return report


def _decision_verdict(subject: str, expected: bool, decision: Decision | OnePlanarResult,
                      budget: int, evidence: dict) -> SubjectVerdict:
    evidence = dict(evidence, reason=decision.reason)
    observed = None if decision.verdict == INCONCLUSIVE else decision.verdict == YES
    witness: object = None
    if isinstance(decision, Decision):
        witness = {"reason": decision.reason, "result": certificate_record(decision.result),
                   "obstructions": list(decision.obstructions)}
    else:
        witness = {"reason": decision.reason, "drawing": certificate_record(decision.drawing)}
    return _verdict(subject, expected, observed, evidence, witness=witness, budget=budget)


# =========================
# Планарность
# =========================

def verify_planar_p(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for g in sweep.groups:
        graph = _power(g, False)
        ok, cert = is_planar(graph)
        evidence = {"omega": str(omega(g))}
        if not verify_planar_certificate(graph, cert):
            verdicts.append(SubjectVerdict(g.label, FAIL, dict(
                evidence, reason="planarity certificate does not verify", witness=certificate_record(cert))))
            continue
        verdicts.append(_verdict(g.label, _omega_within(g, 4), ok, evidence, witness=certificate_record(cert)))
    return _report("planar-P", sweep.universe(), verdicts)


def verify_properplanar_equiv(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for g in sweep.groups:
        graph = _power(g, True)
        ok, cert = is_planar(graph)
        clique, _ = max_clique(graph)
        k33 = contains_subgraph(graph, "K33")
        predicates = {
            "planar": ok,
            "K5-free": clique < 5,
            "K6-free": clique < 6,
            "K33-free": k33 is None,
            "omega<=6": _omega_within(g, 6),
        }
        agree = len(set(predicates.values())) == 1
        evidence = {"omega": str(omega(g)), "predicates": predicates}
        witness = {"predicates": predicates, "planarity": certificate_record(cert),
                   "K33": certificate_record(k33)}
        verdicts.append(_verdict(g.label, True, agree, evidence, witness=witness))
    return _report("properplanar-equiv", sweep.universe(), verdicts)


# =========================
# Кольцевые и внешнепланарные
# =========================

def _ring(sweep: Sweep, g: Group, proper: bool) -> tuple[bool | None, dict]:
    analysis = ring_analysis(_power(g, proper), sweep.budgets.cycles)
    info = {
        "rank": analysis.cycle_rank, "frank": analysis.free_rank, "pcp": analysis.pcp,
        "K4-subdivision": analysis.has_K4_subdivision, "complete": analysis.complete,
    }
    by_rank, by_pcp = analysis.ring_by_rank, analysis.ring_by_pcp
    if by_rank is not None and by_pcp is not None and by_rank != by_pcp:
        info["disagreement"] = True
    return analysis.is_ring, info


def verify_ring(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for g in sweep.groups:
        parts = []
        for proper, bound in ((False, 3), (True, 4)):
            name = "P*" if proper else "P"
            observed, info = _ring(sweep, g, proper)
            if info.get("disagreement"):
                parts.append(SubjectVerdict(name, FAIL, dict(
                    info, reason="rank test and PCP test disagree", witness=info)))
                continue
            parts.append(_verdict(name, _omega_within(g, bound), observed, info,
                                  witness=info, budget=sweep.budgets.cycles))
        merged = _merge(g.label, parts)
        merged.evidence["omega"] = str(omega(g))
        verdicts.append(merged)
    return _report("ring", sweep.universe(), verdicts)


def verify_outerplanar(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for g in sweep.groups:
        parts = []
        for proper in (False, True):
            name = "P*" if proper else "P"
            ring, info = _ring(sweep, g, proper)
            outer = is_outerplanar(_power(g, proper))
            parts.append(_verdict(name, outer, ring, dict(info, outerplanar=outer),
                                  witness=info, budget=sweep.budgets.cycles))
        verdicts.append(_merge(g.label, parts))
    return _report("outerplanar", sweep.universe(), verdicts)


# =========================
# 1-планарность
# =========================

def _check_drawing(graph: Graph, result: OnePlanarResult) -> dict:
    """Проверки yes-сертификата: рисунок валиден и e <= 4v - 8."""
    drawing = result.drawing
    assert drawing is not None
    return {
        "crossings": drawing.crossings,
        "drawing_valid": validate_1planar_drawing(graph, drawing),
        "edge_bound": graph.n < 3 or graph.m <= 4 * graph.n - 8,
    }


def _one_planar_verdict(subject: str, graph: Graph, expected: bool, result: OnePlanarResult,
                        budget: int, evidence: dict) -> SubjectVerdict:
    if result.verdict == YES:
        checks = _check_drawing(graph, result)
        evidence = dict(evidence, **checks)
        if not (checks["drawing_valid"] and checks["edge_bound"]):
            return SubjectVerdict(subject, FAIL, dict(
                evidence, reason="1-planar certificate does not verify",
                witness=certificate_record(result.drawing)))
    return _decision_verdict(subject, expected, result, budget, evidence)


def verify_edge_bound(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for name in EDGE_BOUND_FIXTURES:
        graph = graph_from_named(name)
        result = is_1_planar(graph, sweep.budgets.one_planar, use_obstructions=sweep.use_obstructions)
        evidence = {"v": graph.n, "e": graph.m, "reason": result.reason}
        if result.verdict == INCONCLUSIVE:
            verdicts.append(SubjectVerdict(name, INCONCLUSIVE, evidence, sweep.budgets.one_planar))
        elif result.verdict == NO:
            verdicts.append(SubjectVerdict(name, PASS, dict(evidence, verdict=NO)))
        else:
            verdicts.append(_one_planar_verdict(name, graph, True, result, sweep.budgets.one_planar, evidence))
    return _report("fabrici-madaras", f"fixtures: {', '.join(EDGE_BOUND_FIXTURES)}", verdicts)


def verify_k7(sweep: Sweep) -> TheoremReport:
    graph = Graph.complete(7)
    result = is_1_planar(graph, sweep.budgets.one_planar)
    evidence = {"v": 7, "e": 21, "obstructions": list(result.obstructions)}
    verdict = _decision_verdict("K7", False, result, sweep.budgets.one_planar, evidence)
    return _report("k7-not-1planar", "fixture K7", [verdict])


def verify_lemma(sweep: Sweep) -> TheoremReport:
    graph = k9_minus_k6_plus(3)
    budget = sweep.budgets.lemma_one_planar
    result = is_1_planar(graph, budget, use_obstructions=False)
    evidence = {
        "nodes": result.budget_spent,
        "screen": known_obstruction(graph),
    }
    verdict = _one_planar_verdict("K9mK6p3", graph, False, result, budget, evidence)
    return _report("lemma-K9p3", "fixture K9mK6p3, exhaustive search without the obstruction screen", [verdict])


def _edge_orbit_representatives(graph: Graph) -> list[tuple[int, int]]:
    autos = automorphisms(graph)
    if autos is None:
        return graph.sorted_edges()
    reps = set()
    for u, v in graph.sorted_edges():
        reps.add(min(tuple(sorted((a[u], a[v]))) for a in autos))
    return sorted(reps)


def verify_minimal_non_1planar(sweep: Sweep) -> TheoremReport:
    """Граф K9mK6p2 не 1-планарен, а после удаления любого ребра - 1-планарен."""
    graph = k9_minus_k6_plus(2)
    base = is_1_planar(graph, sweep.budgets.lemma_one_planar, use_obstructions=False)
    parts = [_one_planar_verdict("K9mK6p2", graph, False, base, sweep.budgets.lemma_one_planar,
                                 {"nodes": base.budget_spent})]
    for u, v in _edge_orbit_representatives(graph):
        reduced = graph.with_edges(removed=[(u, v)])
        name = f"K9mK6p2 - {graph.labels[u]}{graph.labels[v]}"
        result = is_1_planar(reduced, sweep.budgets.one_planar, use_obstructions=False)
        parts.append(_one_planar_verdict(name, reduced, True, result, sweep.budgets.one_planar,
                                         {"nodes": result.budget_spent}))
    verdict = _merge("K9mK6p2", parts)
    if verdict.status == INCONCLUSIVE:
        verdict.evidence["stretch"] = True
    return _report("prop-K9p2", "fixture K9mK6p2 and its single-edge deletions up to automorphism", [verdict])


def verify_1planar_p(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for g in sweep.groups:
        graph = _power(g, False)
        expected = _omega_within(g, 6) and order6_intersections_small(g)
        result = is_1_planar(graph, sweep.budgets.one_planar, use_obstructions=sweep.use_obstructions)
        evidence = {"omega": str(omega(g)), "order6_intersections_small": order6_intersections_small(g)}
        verdicts.append(_one_planar_verdict(g.label, graph, expected, result, sweep.budgets.one_planar, evidence))
    return _report("1planar-P", sweep.universe(), verdicts)


def verify_1planar_pstar(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for g in sweep.groups:
        graph = _power(g, True)
        result = is_1_planar(graph, sweep.budgets.one_planar, use_obstructions=sweep.use_obstructions)
        verdicts.append(_one_planar_verdict(
            g.label, graph, _omega_within(g, 7), result, sweep.budgets.one_planar, {"omega": str(omega(g))}))
    return _report("1planar-Pstar", sweep.universe(), verdicts)


# =========================
# Почти планарные и максимально планарные
# =========================

def verify_almost_p(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for g in sweep.with_listed(ALMOST_P_LIST):
        graph = _power(g, False)
        expected = _omega_within(g, 4) or member(g, ALMOST_P_LIST)
        observed = is_almost_planar(graph)
        edge = almost_planar_edge(graph)
        witness = {"edge": list(edge) if edge else None, "planarity": certificate_record(is_planar(graph)[1])}
        verdicts.append(_verdict(g.label, expected, observed, {"omega": str(omega(g))}, witness=witness))
    return _report("almost-P", sweep.universe(ALMOST_P_LIST), verdicts)


def verify_almost_pstar(sweep: Sweep) -> TheoremReport:
    verdicts = []
    for g in sweep.groups:
        graph = _power(g, True)
        observed = is_almost_planar(graph)
        witness = {"planarity": certificate_record(is_planar(graph)[1])}
        verdicts.append(_verdict(g.label, _omega_within(g, 6), observed, {"omega": str(omega(g))}, witness=witness))
    return _report("almost-Pstar", sweep.universe(), verdicts)


def _maximal(sweep: Sweep, proper: bool, max_order: int, claim_id: str) -> TheoremReport:
    verdicts = []
    for g in sweep.groups:
        graph = _power(g, proper)
        expected = is_cyclic(g) and g.order <= max_order
        observed = is_maximal_planar(graph)
        witness = {"n": graph.n, "m": graph.m, "cyclic": is_cyclic(g)}
        verdicts.append(_verdict(g.label, expected, observed, {"omega": str(omega(g))}, witness=witness))
    return _report(claim_id, sweep.universe(), verdicts)


def verify_maxplanar_p(sweep: Sweep) -> TheoremReport:
    return _maximal(sweep, False, 4, "maxplanar-P")


def verify_maxplanar_pstar(sweep: Sweep) -> TheoremReport:
    return _maximal(sweep, True, 5, "maxplanar-Pstar")


# =========================
# Род: аддитивность, тороидальность, проективность
# =========================

def _block_embedding(block: Graph, value: int, budget: int) -> Embedding | None:
    if value == 0:
        ok, cert = is_planar(block)
        return cert if ok else None
    if value > 1 or block.n > GLUE_MAX_VERTICES:
        return None
    try:
        return search_embedding(block, 2 * value, signed=False, budget=NodeBudget(budget))
    except SearchBudgetExceeded:
        return None


def glue_block_embeddings(graph: Graph, parts: list[tuple[list[int], Embedding]]) -> Embedding:
    """Вращения блоков в вершине-разделителе записываются подряд; эйлеровы роды складываются."""
    rotation: list[list[int]] = [[] for _ in range(graph.n)]
    for members, emb in parts:
        for local, order in enumerate(emb.rotation):
            rotation[members[local]].extend(members[w] for w in order)
    return Embedding(tuple(tuple(r) for r in rotation))


def check_block_additivity(graph: Graph, budgets: Budgets) -> tuple[bool | None, dict]:
    """
    Род по блокам против суммы родов блоков, посчитанных независимо, и, если
    блоки малы, против вложения целого графа, склеенного из вложений блоков.
    """
    whole = genus(graph, budgets.genus)
    parts = []
    total = 0
    exact = whole.exact
    for members in blocks(graph).blocks:
        ordered = sorted(members)
        block = induced_subgraph(graph, ordered)
        result = genus(block, budgets.genus, decompose=False)
        exact = exact and result.exact
        total += result.value
        parts.append((ordered, block, result))
    evidence = {"genus": whole.value, "block_sum": total, "blocks": [len(p[0]) for p in parts]}
    if not exact:
        return None, evidence

    embeddings = []
    for ordered, block, result in parts:
        emb = _block_embedding(block, result.value, budgets.genus)
        if emb is None:
            break
        embeddings.append((ordered, emb))
    else:
        kind, glued = embedding_surface(graph, glue_block_embeddings(graph, embeddings))
        evidence["glued_genus"] = glued
        return whole.value == total == glued and kind == "orientable", evidence
    return whole.value == total, evidence


def verify_block_additivity(sweep: Sweep) -> TheoremReport:
    verdicts = []
    subjects: list[tuple[str, Graph]] = [(name, graph_from_named(name)) for name in BLOCK_FIXTURES]
    for g in sweep.with_listed(TOROIDAL_P_LIST):
        if member(g, TOROIDAL_P_LIST):
            subjects.append((f"P({g.label})", _power(g, False)))
    for name, graph in subjects:
        observed, evidence = check_block_additivity(graph, sweep.budgets)
        verdicts.append(_verdict(name, True, observed, evidence, witness=evidence, budget=sweep.budgets.genus))
    return _report("blocks-additivity", f"fixtures {', '.join(BLOCK_FIXTURES)} + toroidal P(G) list", verdicts)


def surface_claim(
        sweep: Sweep, claim_id: str, listed: tuple[str, ...], proper: bool,
        decide: Callable[[Graph, int], Decision], budget: int,
) -> TheoremReport:
    """Список групп против decide; ответ, собранный по блокам, сверяется ещё и с аддитивностью рода."""
    verdicts = []
    for g in sweep.with_listed(listed):
        graph = _power(g, proper)
        expected = member(g, listed)
        decision = decide(graph, budget)
        evidence = {"omega": str(omega(g)), "listed": expected}
        verdict = _decision_verdict(g.label, expected, decision, budget, evidence)
        result = decision.result
        if result is not None and result.exact and isinstance(result.certificate, BlockSum):
            additive, details = check_block_additivity(graph, sweep.budgets)
            verdict.evidence["block_additivity"] = dict(details, observed=additive)
            if additive is False:
                verdict = SubjectVerdict(g.label, FAIL, dict(
                    verdict.evidence, reason="genus is not additive over blocks", witness=details))
        if verdict.status == INCONCLUSIVE and not expected and three_z6_configuration(g):
            verdict.evidence["stretch"] = True
        verdicts.append(verdict)
    return _report(claim_id, sweep.universe(listed), verdicts)


def verify_toroidal_p(sweep: Sweep) -> TheoremReport:
    return surface_claim(sweep, "toroidal-P", TOROIDAL_P_LIST, False, is_toroidal, sweep.budgets.genus)


def verify_toroidal_pstar(sweep: Sweep) -> TheoremReport:
    return surface_claim(sweep, "toroidal-Pstar", TOROIDAL_PSTAR_LIST, True, is_toroidal, sweep.budgets.genus)


def verify_projective_p(sweep: Sweep) -> TheoremReport:
    return surface_claim(sweep, "projective-P", PROJECTIVE_P_LIST, False, is_projective, sweep.budgets.crosscap)


def verify_projective_pstar(sweep: Sweep) -> TheoremReport:
    return surface_claim(
        sweep, "projective-Pstar", PROJECTIVE_PSTAR_LIST, True, is_projective, sweep.budgets.crosscap)


# =========================
# Звёздная раскраска
# =========================

def verify_star_chromatic(sweep: Sweep) -> TheoremReport:
    """χ = χ_s для P*(G) с ω ⊆ {1..6}; для планарного P(G) равенство только записывается."""
    verdicts = []
    for g in sweep.groups:
        if not _omega_within(g, 6):
            continue
        graph = _power(g, True)
        evidence: dict = {"omega": str(omega(g))}
        try:
            result = coloring(graph)
        except SolverLimitError as exc:
            verdicts.append(SubjectVerdict(g.label, INCONCLUSIVE, dict(evidence, reason=str(exc)),
                                           MAX_COLORING_VERTICES))
            continue
        evidence.update(chi=result.chromatic, chi_s=result.star_chromatic)
        if _omega_within(g, 4) and g.order <= MAX_COLORING_VERTICES:
            full = coloring(_power(g, False))
            evidence["P_equal"] = full.chromatic == full.star_chromatic
        witness = {"chromatic": list(result.chromatic_witness), "star": list(result.star_witness)}
        verdicts.append(_verdict(g.label, True, result.chromatic == result.star_chromatic, evidence,
                                 witness=witness))
    return _report("star-chromatic", sweep.universe() + ", omega within {1..6}", verdicts)


# =========================
# Реестр
# =========================

@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    scope: str
    check: Callable[[Sweep], TheoremReport]


CLAIMS: dict[str, Claim] = {c.id: c for c in (
    Claim("planar-P", "P(G) is planar iff omega(G) within {1,2,3,4}", "catalog", verify_planar_p),
    Claim("properplanar-equiv",
          "P*(G) planar <=> K5-free <=> K6-free <=> K33-free <=> omega(G) within {1..6}",
          "catalog", verify_properplanar_equiv),
    Claim("ring", "P(G) (resp. P*(G)) is a ring graph iff omega(G) within {1,2,3} (resp. {1,2,3,4})",
          "catalog", verify_ring),
    Claim("outerplanar", "P(G) (resp. P*(G)) is outerplanar iff it is a ring graph", "catalog", verify_outerplanar),
    Claim("fabrici-madaras", "a 1-planar graph with v >= 3 vertices has at most 4v-8 edges",
          "fixtures", verify_edge_bound),
    Claim("k7-not-1planar", "K7 is not 1-planar", "fixtures", verify_k7),
    Claim("lemma-K9p3", "K9 minus K6 plus three disjoint edges is not 1-planar", "fixtures", verify_lemma),
    Claim("prop-K9p2", "K9 minus K6 plus two disjoint edges is minimal non-1-planar",
          "fixtures", verify_minimal_non_1planar),
    Claim("1planar-P",
          "P(G) is 1-planar iff omega(G) within {1..6} and two cyclic subgroups of order 6 share at most two elements",
          "catalog", verify_1planar_p),
    Claim("1planar-Pstar", "P*(G) is 1-planar iff omega(G) within {1..7}", "catalog", verify_1planar_pstar),
    Claim("almost-P", "P(G) is almost planar iff omega(G) within {1,2,3,4} or G is one of " + ", ".join(ALMOST_P_LIST),
          "catalog", verify_almost_p),
    Claim("almost-Pstar", "P*(G) is almost planar iff omega(G) within {1..6}", "catalog", verify_almost_pstar),
    Claim("maxplanar-P", "P(G) is maximal planar iff G is cyclic of order at most 4", "catalog", verify_maxplanar_p),
    Claim("maxplanar-Pstar", "P*(G) is maximal planar iff G is cyclic of order at most 5",
          "catalog", verify_maxplanar_pstar),
    Claim("blocks-additivity", "the genus of a graph is the sum of the genera of its blocks",
          "fixtures", verify_block_additivity),
    Claim("toroidal-P", "P(G) is toroidal iff G is one of " + ", ".join(TOROIDAL_P_LIST),
          "catalog", verify_toroidal_p),
    Claim("toroidal-Pstar", "P*(G) is toroidal iff G is one of " + ", ".join(TOROIDAL_PSTAR_LIST),
          "catalog", verify_toroidal_pstar),
    Claim("projective-P", "P(G) is projective iff G is one of " + ", ".join(PROJECTIVE_P_LIST),
          "catalog", verify_projective_p),
    Claim("projective-Pstar", "P*(G) is projective iff G is one of " + ", ".join(PROJECTIVE_PSTAR_LIST),
          "catalog", verify_projective_pstar),
    Claim("star-chromatic", "chi(P*(G)) = chi_s(P*(G)) whenever P*(G) is planar", "catalog", verify_star_chromatic),
)}

# классификационный результат -> утверждение, которое его проверяет
COVERAGE: dict[str, str] = {
    "planar power graphs": "planar-P",
    "planar proper power graphs": "properplanar-equiv",
    "chromatic and star chromatic numbers of planar power graphs": "star-chromatic",
    "ring power graphs": "ring",
    "outerplanar power graphs": "outerplanar",
    "edge bound for 1-planar graphs": "fabrici-madaras",
    "K7 is not 1-planar": "k7-not-1planar",
    "K9 minus K6 plus three disjoint edges": "lemma-K9p3",
    "K9 minus K6 plus two disjoint edges": "prop-K9p2",
    "1-planar power graphs": "1planar-P",
    "1-planar proper power graphs": "1planar-Pstar",
    "almost planar power graphs": "almost-P",
    "almost planar proper power graphs": "almost-Pstar",
    "maximal planar power graphs": "maxplanar-P",
    "maximal planar proper power graphs": "maxplanar-Pstar",
    "genus of a graph from its blocks": "blocks-additivity",
    "toroidal power graphs": "toroidal-P",
    "toroidal proper power graphs": "toroidal-Pstar",
    "projective power graphs": "projective-P",
    "projective proper power graphs": "projective-Pstar",
}


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id) from None


def verify(claim_ids: Iterable[str], sweep: Sweep) -> list[TheoremReport]:
    """Отчёты в порядке claim_ids; неизвестный id отвергается до начала работы."""
    claims = [get_claim(c) for c in claim_ids]
    return [claim.check(sweep) for claim in claims]
