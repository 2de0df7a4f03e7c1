"""
验证驱动

在确定性语料库上把每条闭式定理和暴力 BFS 结果逐一对照：
- 随机连通图（种子固定，n 在 [2, max_n] 均匀取值，边概率在 (0.1, 0.9) 均匀取值）
- 命名图族（路径、圈、星、完全图、完全二部图）直到 family_max；
  n + m 超过 family_max 的 K_{n,m} 只对照闭式
- 语料中直径至少为 2 的小图两两 join

各实例在线程池中并发检查；结果按实例编号合并，报告与执行顺序无关。
印刷版 TSZ 公式的差异作为勘误记录，而不算作失败。
"""

import asyncio
import json
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from tabulate import tabulate

from .constants import (
    DEFAULT_COUNT,
    DEFAULT_FAMILY_MAX,
    DEFAULT_MAX_N,
    DEFAULT_SEED,
    EDGE_PROBABILITY_RANGE,
    JOIN_OPERAND_MAX_N,
    MAX_RESAMPLE_ATTEMPTS,
)
from .constructions import (
    Family,
    GeneratorSpec,
    generate,
    join,
    mycielskian,
    mycielskian_layout,
    path,
    predicted_mycielskian_diameter,
)
from .edgelist import format_edge_list
from .graph import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    degree,
    diameter,
    distance_distribution,
    induced_subgraph,
    is_connected,
)
from .hosoya import (
    diameter2_mycielskian_hosoya_from_graph,
    hosoya,
    join_hosoya_from_graphs,
    kbip_mycielskian_hosoya,
    mycielskian_hosoya_from_graph,
    path_hosoya,
    path_mycielskian_hosoya,
    star_mycielskian_hosoya,
)
from .indices import (
    ERRATA,
    TSZ_DERIVED,
    TSZ_PRINTED,
    betweenness_centrality,
    betweenness_from_wiener,
    closeness,
    closeness_by_vertices,
    harary,
    harary_by_pairs,
    hyper_wiener,
    hyper_wiener_by_pairs,
    mycielskian_index_closed_forms,
    nth_wiener,
    path_mycielskian_betweenness,
    path_mycielskian_closeness,
    path_mycielskian_wiener,
    report_from_hosoya,
    star_mycielskian_betweenness,
    star_mycielskian_closeness,
    star_path_closeness_difference,
    tsz,
    tsz_by_pairs,
    wiener,
    wiener_by_pairs,
)
from .polynomial import render_rational

log = logging.getLogger(__name__)


# 报告中检查项的固定顺序
CHECK_ORDER = (
    "distance_distribution",
    "mycielskian_size",
    "mycielskian_structure",
    "main_theorem",
    "diameter_law",
    "mycielskian_degree_bound",
    "diameter2_lemma",
    "join_closed_form",
    "star_mycielskian_hosoya",
    "kbip_mycielskian_hosoya",
    "path_hosoya",
    "path_mycielskian_hosoya",
    "path_mycielskian_wiener",
    "path_mycielskian_closeness",
    "path_mycielskian_betweenness",
    "star_mycielskian_closeness",
    "star_mycielskian_betweenness",
    "star_path_closeness_difference",
    "index_closed_forms",
    "nth_wiener_vanishes",
    "tsz_erratum",
    "index_definitional_identities",
    "closeness_vertex_sum",
    "wiener_betweenness",
)


# ============================================================
# 数据结构
# ============================================================

@dataclass(frozen=True)
class VerifyConfig:
    seed: int = DEFAULT_SEED
    count: int = DEFAULT_COUNT
    max_n: int = DEFAULT_MAX_N
    family_max: int = DEFAULT_FAMILY_MAX
    workers: Optional[int] = None


@dataclass(frozen=True)
class CorpusItem:
    """语料实例；spec 为命名族或 join 的规格，随机图为 None

    closed_form_only 的实例只对照其图族闭式，不跑完整检查。
    """
    instance_id: int
    label: str
    graph: Graph
    spec: object = None
    closed_form_only: bool = False


@dataclass(frozen=True)
class Outcome:
    check: str
    instance_id: int
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ErratumObservation:
    formula_id: str
    instance_id: int
    inputs: tuple
    printed_value: int
    oracle_value: Fraction


@dataclass(frozen=True)
class Counterexample:
    instance_id: int
    label: str
    detail: str
    edge_list: str


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: int = 0
    counterexample: Optional[Counterexample] = None


@dataclass(frozen=True)
class ErratumFinding:
    formula_id: str
    printed_formula: str
    derived_formula: str
    counterexample_input: tuple
    label: str
    printed_value: int
    oracle_value: Fraction


@dataclass
class VerifyReport:
    corpus_description: str
    checks: list = field(default_factory=list)
    erratum_findings: list = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(c.failures for c in self.checks)

    def first_counterexample(self) -> Optional[Counterexample]:
        for check in self.checks:
            if check.counterexample is not None:
                return check.counterexample
        return None

    def to_json(self) -> dict:
        return {
            "corpus": self.corpus_description,
            "checks": [
                {
                    "name": c.name,
                    "instances": c.instances,
                    "failures": c.failures,
                    "counterexample": None if c.counterexample is None else {
                        "instance": c.counterexample.instance_id,
                        "label": c.counterexample.label,
                        "detail": c.counterexample.detail,
                        "edge_list": c.counterexample.edge_list,
                    },
                }
                for c in self.checks
            ],
            "erratum_findings": [
                {
                    "formula": e.formula_id,
                    "printed": e.printed_formula,
                    "derived": e.derived_formula,
                    "input": dict(zip(("n", "m", "a2", "a3"), e.counterexample_input)),
                    "label": e.label,
                    "printed_value": e.printed_value,
                    "oracle_value": render_rational(e.oracle_value),
                }
                for e in self.erratum_findings
            ],
            "passed": not self.failed,
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def render_text(self) -> str:
        lines = [f"Corpus: {self.corpus_description}", ""]
        body = []
        for c in self.checks:
            first = "-" if c.counterexample is None else f"#{c.counterexample.instance_id} {c.counterexample.label}"
            body.append([c.name, c.instances, c.failures, first])
        lines.append(tabulate(body, ["Check", "Instances", "Failures", "First counterexample"]))
        lines.append("")
        if self.erratum_findings:
            body = [
                [e.formula_id, e.printed_formula, e.derived_formula,
                 "n={}, m={}, a2={}, a3={}".format(*e.counterexample_input),
                 e.printed_value, render_rational(e.oracle_value)]
                for e in self.erratum_findings
            ]
            lines.append(tabulate(body, ["Erratum", "Printed", "Derived", "Input", "Printed value", "Oracle"]))
        else:
            lines.append("Erratum findings: none")
        lines.append("")
        lines.append("RESULT: " + ("FAIL" if self.failed else "PASS"))
        return "\n".join(lines)


# ============================================================
# 语料库
# ============================================================

def random_connected_graph(rng: random.Random, n: int) -> tuple[Graph, float]:
    """
    Erdős–Rényi 式随机连通图

    边概率 p 每次采样都重新抽取；超过重采样上限后降低 n。
    """
    low, high = EDGE_PROBABILITY_RANGE
    while True:
        for _ in range(MAX_RESAMPLE_ATTEMPTS):
            p = rng.uniform(low, high)
            edges = frozenset(
                (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p
            )
            graph = Graph(n, edges)
            if is_connected(graph):
                return graph, p
        log.warning(f"No connected sample after {MAX_RESAMPLE_ATTEMPTS} attempts at n={n}; lowering n")
        n = max(2, n - 1)


def family_specs(family_max: int) -> list[GeneratorSpec]:
    """命名族规格，路径 path:1 排在最前"""
    specs = [GeneratorSpec(Family.PATH, (n,)) for n in range(1, family_max + 1)]
    specs += [GeneratorSpec(Family.CYCLE, (n,)) for n in range(3, family_max + 1)]
    specs += [GeneratorSpec(Family.STAR, (n,)) for n in range(1, family_max + 1)]
    specs += [GeneratorSpec(Family.COMPLETE, (n,)) for n in range(1, family_max + 1)]
    # K_{n,m}: 2 <= n <= m，n + m <= family_max
    specs += [
        GeneratorSpec(Family.COMPLETE_BIPARTITE, (n, m))
        for n in range(2, family_max // 2 + 1)
        for m in range(n, family_max + 1 - n)
    ]
    return specs


def kbip_closed_form_specs(family_max: int) -> list[GeneratorSpec]:
    """family_specs 之外的 K_{n,m}，2 <= n <= m <= family_max，只检查闭式"""
    return [
        GeneratorSpec(Family.COMPLETE_BIPARTITE, (n, m))
        for n in range(2, family_max + 1)
        for m in range(n, family_max + 1)
        if n + m > family_max
    ]


def build_corpus(config: VerifyConfig) -> list[CorpusItem]:
    items: list[CorpusItem] = []

    def add(label: str, graph: Graph, spec: object = None, closed_form_only: bool = False) -> None:
        items.append(CorpusItem(len(items), label, graph, spec, closed_form_only))

    for spec in family_specs(config.family_max):
        add(str(spec), generate(spec), spec)
    for spec in kbip_closed_form_specs(config.family_max):
        add(str(spec), generate(spec), spec, closed_form_only=True)
    family_end = len(items)

    rng = random.Random(config.seed)
    for k in range(config.count):
        n = rng.randint(2, max(2, config.max_n))
        graph, p = random_connected_graph(rng, n)
        add(f"random#{k} (n={graph.vertex_count}, p={p:.3f})", graph)

    # join 操作数: 直径至少为 2 的小图
    operands = [
        item for item in items
        if not item.closed_form_only
        and item.graph.vertex_count <= JOIN_OPERAND_MAX_N and diameter(item.graph) not in (0, 1, UNREACHABLE)
    ]
    for left, right in zip(operands, operands[1:]):
        add(f"join({left.label} + {right.label})", join(left.graph, right.graph), (left, right))

    log.info(
        f"Corpus built: {family_end} family graphs, {config.count} random graphs, "
        f"{len(items) - family_end - config.count} joins"
    )
    return items


def describe_corpus(config: VerifyConfig, items: list[CorpusItem]) -> str:
    joins = sum(1 for item in items if isinstance(item.spec, tuple))
    closed_only = sum(1 for item in items if item.closed_form_only)
    return (
        f"seed={config.seed}, random={config.count} (n in [2, {config.max_n}]), "
        f"families up to {config.family_max} (+{closed_only} K_n,m closed-form only), "
        f"joins={joins}, instances={len(items)}"
    )


# ============================================================
# 单实例检查
# ============================================================

def check_instance(item: CorpusItem) -> tuple[list[Outcome], list[ErratumObservation]]:
    """对一个语料实例运行所有适用检查"""
    outcomes: list[Outcome] = []
    errata: list[ErratumObservation] = []

    def expect(check: str, condition: bool, detail: Callable[[], str] = lambda: "") -> None:
        outcomes.append(Outcome(check, item.instance_id, bool(condition), "" if condition else detail()))

    G = item.graph
    if item.closed_form_only:
        _check_family(item, G, None, expect)
        return outcomes, errata

    n, m = G.vertex_count, G.edge_count
    H = hosoya(G)
    dist = distance_distribution(G)
    connected = is_connected(G)
    expect(
        "distance_distribution",
        dist.count(1) == m and (dist.unreachable_pairs == 0) == connected,
        lambda: f"a1={dist.count(1)}, m={m}, unreachable={dist.unreachable_pairs}",
    )

    if connected and n >= 2:
        M = mycielskian(G)
        HM = hosoya(M)
        _check_mycielskian(item, G, M, HM, expect, errata)
        _check_indices_on_graph(G, H, expect)

    _check_family(item, G, H, expect)
    log.debug(f"[{item.label}] {len(outcomes)} checks")
    return outcomes, errata


def _check_mycielskian(item, G, M, HM, expect, errata) -> None:
    n, m = G.vertex_count, G.edge_count
    expect(
        "mycielskian_size",
        M.vertex_count == 2 * n + 1 and M.edge_count == 3 * m + n,
        lambda: f"|V|={M.vertex_count}, |E|={M.edge_count}",
    )
    expect("mycielskian_structure", *_mycielskian_structure(G, M))

    coeffs = mycielskian_hosoya_from_graph(G)
    expect("main_theorem", coeffs.polynomial() == HM, lambda: f"closed form {coeffs.polynomial()} vs BFS {HM}")

    predicted = predicted_mycielskian_diameter(G)
    actual = diameter(M)
    expect("diameter_law", actual == predicted, lambda: f"predicted {predicted}, BFS {actual}")
    expect("mycielskian_degree_bound", HM.degree <= 4, lambda: f"degree {HM.degree}")

    d = diameter(G)
    if d <= 2:
        lemma = diameter2_mycielskian_hosoya_from_graph(G)
        expect("diameter2_lemma", lemma == HM, lambda: f"lemma {lemma} vs BFS {HM}")

    stats = coeffs.source_stats
    closed = mycielskian_index_closed_forms(stats.n, stats.m, stats.a2, stats.a3)
    oracle = report_from_hosoya(HM)
    oracle_betweenness = betweenness_from_wiener(oracle.wiener, M.vertex_count)
    mismatched = [
        name for name, a, b in (
            ("wiener", closed.wiener, oracle.wiener),
            ("hyper_wiener", closed.hyper_wiener, oracle.hyper_wiener),
            ("tsz", closed.tsz, oracle.tsz),
            ("harary", closed.harary, oracle.harary),
            ("closeness", closed.closeness, oracle.closeness),
            ("betweenness_centrality", closed.betweenness_centrality, oracle_betweenness),
            ("nth_wiener", closed.nth_wiener, oracle.nth_wiener),
        )
        if a != b
    ]
    expect("index_closed_forms", not mismatched, lambda: f"mismatched: {', '.join(mismatched)}")

    expect(
        "nth_wiener_vanishes",
        all(nth_wiener(HM, k) == 0 for k in range(5, 9)),
        lambda: f"H(mu(G)) = {HM}",
    )

    inputs = (stats.n, stats.m, stats.a2, stats.a3)
    printed = TSZ_PRINTED.evaluate(*inputs)
    derived = TSZ_DERIVED.evaluate(*inputs)
    expect(
        "tsz_erratum",
        derived == oracle.tsz and printed != oracle.tsz,
        lambda: f"printed {printed}, derived {derived}, oracle {render_rational(oracle.tsz)}",
    )
    if printed != oracle.tsz:
        errata.append(ErratumObservation("tsz_mycielskian", item.instance_id, inputs, printed, oracle.tsz))


def _mycielskian_structure(G: Graph, M: Graph) -> tuple[bool, Callable[[], str]]:
    """度数律、诱导子图以及主定理证明中的距离断言"""
    n = G.vertex_count
    layout = mycielskian_layout(n)

    if induced_subgraph(M, layout.v_vertices) != G:
        return False, lambda: "v-vertices do not induce G"
    if degree(M, layout.w) != n:
        return False, lambda: f"deg(w)={degree(M, layout.w)} != n={n}"
    for i in layout.v_vertices:
        dg = degree(G, i)
        if degree(M, layout.v(i)) != 2 * dg or degree(M, layout.u(i)) != dg + 1:
            return False, lambda i=i: f"degree law fails at vertex {i}"

    dG = all_pairs_distances(G)
    dM = all_pairs_distances(M)
    w = layout.w
    for i in layout.v_vertices:
        if dM[w - 1][layout.u(i) - 1] != 1:
            return False, lambda i=i: f"d(w, u_{i}) != 1"
        if dM[layout.u(i) - 1][layout.v(i) - 1] != 2:
            return False, lambda i=i: f"d(u_{i}, v_{i}) != 2"
        if dM[w - 1][layout.v(i) - 1] != 2:
            return False, lambda i=i: f"d(w, v_{i}) != 2"
        for j in range(i + 1, n + 1):
            if dM[layout.u(i) - 1][layout.u(j) - 1] != 2:
                return False, lambda i=i, j=j: f"d(u_{i}, u_{j}) != 2"
            expected = min(dG[i - 1][j - 1], 4)
            if dM[i - 1][j - 1] != expected:
                return False, lambda i=i, j=j: f"d(v_{i}, v_{j}) != min(d_G, 4)"
    return True, lambda: ""


def _check_indices_on_graph(G: Graph, H, expect) -> None:
    n = G.vertex_count
    mismatched = [
        name for name, a, b in (
            ("wiener", wiener(H), wiener_by_pairs(G)),
            ("hyper_wiener", hyper_wiener(H), hyper_wiener_by_pairs(G)),
            ("tsz", tsz(H), tsz_by_pairs(G)),
            ("harary", harary(H), harary_by_pairs(G)),
        )
        if a != b
    ]
    expect("index_definitional_identities", not mismatched, lambda: f"mismatched: {', '.join(mismatched)}")

    by_polynomial = closeness(H)
    by_vertices = closeness_by_vertices(G)
    expect(
        "closeness_vertex_sum",
        by_polynomial == by_vertices,
        lambda: f"2H(1/2)={render_rational(by_polynomial)}, sum C(i)={render_rational(by_vertices)}",
    )

    brandes = betweenness_centrality(G)
    relation = betweenness_from_wiener(wiener(H), n)
    expect(
        "wiener_betweenness",
        brandes == relation,
        lambda: f"path counting {render_rational(brandes)}, W/n-(n-1)/2 {render_rational(relation)}",
    )


def _check_family(item: CorpusItem, G: Graph, H, expect) -> None:
    spec = item.spec
    if isinstance(spec, tuple):
        left, right = spec
        join_poly, mycielskian_poly = join_hosoya_from_graphs(left.graph, right.graph)
        actual_join = H
        actual_mycielskian = hosoya(mycielskian(G))
        expect(
            "join_closed_form",
            join_poly == actual_join and mycielskian_poly == actual_mycielskian and diameter(G) <= 2,
            lambda: f"closed ({join_poly}, {mycielskian_poly}) vs BFS ({actual_join}, {actual_mycielskian}), "
                    f"diameter {diameter(G)}",
        )
        return
    if not isinstance(spec, GeneratorSpec):
        return

    if spec.family is Family.PATH:
        (k,) = spec.params
        expect("path_hosoya", path_hosoya(k) == H, lambda: f"closed {path_hosoya(k)} vs BFS {H}")
        if k >= 2:
            M = mycielskian(G)
            HM = hosoya(M)
            closed = path_mycielskian_hosoya(k)
            expect("path_mycielskian_hosoya", closed == HM, lambda: f"closed {closed} vs BFS {HM}")
            expect(
                "path_mycielskian_wiener",
                wiener(HM) == path_mycielskian_wiener(k),
                lambda: f"W={wiener(HM)}, formula {path_mycielskian_wiener(k)}",
            )
            expect(
                "path_mycielskian_closeness",
                closeness(HM) == path_mycielskian_closeness(k),
                lambda: f"C={render_rational(closeness(HM))}",
            )
            brandes = betweenness_centrality(M)
            expect(
                "path_mycielskian_betweenness",
                brandes == path_mycielskian_betweenness(k),
                lambda: f"B={render_rational(brandes)}",
            )

    elif spec.family is Family.STAR:
        (k,) = spec.params
        if k >= 2:
            M = mycielskian(G)
            HM = hosoya(M)
            closed = star_mycielskian_hosoya(k)
            expect("star_mycielskian_hosoya", closed == HM, lambda: f"closed {closed} vs BFS {HM}")
            expect(
                "star_mycielskian_closeness",
                closeness(HM) == star_mycielskian_closeness(k),
                lambda: f"C={render_rational(closeness(HM))}",
            )
            brandes = betweenness_centrality(M)
            expect(
                "star_mycielskian_betweenness",
                brandes == star_mycielskian_betweenness(k),
                lambda: f"B={render_rational(brandes)}",
            )
            difference = closeness(HM) - closeness(hosoya(mycielskian(path(k))))
            expect(
                "star_path_closeness_difference",
                difference == star_path_closeness_difference(k)
                and difference >= 0
                and (difference == 0) == (k == 2),
                lambda: f"difference {render_rational(difference)}",
            )

    elif spec.family is Family.COMPLETE_BIPARTITE:
        a, b = spec.params
        if a >= 2 and b >= 2:
            closed = kbip_mycielskian_hosoya(a, b)
            HM = hosoya(mycielskian(G))
            expect("kbip_mycielskian_hosoya", closed == HM, lambda: f"closed {closed} vs BFS {HM}")


# ============================================================
# 汇总
# ============================================================

def assemble_report(
    description: str,
    items: list[CorpusItem],
    results: list[tuple[list[Outcome], list[ErratumObservation]]],
) -> VerifyReport:
    """按检查项和实例编号合并，与完成顺序无关"""
    by_id = {item.instance_id: item for item in items}
    checks = {name: CheckResult(name) for name in CHECK_ORDER}

    outcomes = sorted(
        (o for batch, _ in results for o in batch),
        key=lambda o: (CHECK_ORDER.index(o.check), o.instance_id),
    )
    for o in outcomes:
        result = checks[o.check]
        result.instances += 1
        if not o.passed:
            result.failures += 1
            if result.counterexample is None:
                item = by_id[o.instance_id]
                result.counterexample = Counterexample(
                    o.instance_id, item.label, o.detail,
                    format_edge_list(item.graph, comment=item.label),
                )

    findings = []
    observations = sorted((e for _, batch in results for e in batch), key=lambda e: e.instance_id)
    seen = set()
    for e in observations:
        if e.formula_id in seen:
            continue
        seen.add(e.formula_id)
        printed, derived = ERRATA[e.formula_id]
        findings.append(ErratumFinding(
            e.formula_id, str(printed), str(derived),
            e.inputs, by_id[e.instance_id].label, e.printed_value, e.oracle_value,
        ))

    return VerifyReport(description, [checks[name] for name in CHECK_ORDER], findings)


async def run_verification(config: VerifyConfig) -> VerifyReport:
    """构建语料库，并发检查各实例，汇总报告"""
    items = build_corpus(config)
    description = describe_corpus(config, items)
    log.info(f"Verifying {len(items)} instances")

    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        results = await asyncio.gather(
            *(loop.run_in_executor(pool, check_instance, item) for item in items)
        )

    report = assemble_report(description, items, list(results))
    log.info(f"Verification {'failed' if report.failed else 'passed'}")
    return report


def verify(config: VerifyConfig) -> VerifyReport:
    return asyncio.run(run_verification(config))
