"""Exhaustive verification, deficiency-targeted search and timing."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .classify import (
    clique_corona_class,
    coarse_class,
    corona_ke_with_pm,
    corona_ke_with_unique_pm,
    kappa_direct,
    lemma3_predicate,
    thm7_is_corona_ke,
    thm8_is_corona_1ke,
    uniform_corona_1ke,
)
from .corona import (
    CoronaSpec,
    build_corona,
    component_facts,
    f_set,
    fast_alpha,
    fast_kappa,
    fast_mu,
)
from .graph import (
    EMPTY,
    Graph,
    SizeLimitError,
    apex_join,
    complete,
    disjoint_union,
    edgeless,
    is_bipartite,
    is_complete,
    is_connected,
    path,
)
from .graph6 import format_token
from .independence import MAX_DIRECT_VERTICES, independence_number
from .iso import MAX_CANONICAL_VERTICES, MAX_DEDUP_VERTICES, canonical_form, enumerate_graphs
from .matching import has_perfect_matching, has_unique_perfect_matching, matching_number

MAX_EXHAUSTIVE_SPECS = 100_000


def default_catalog() -> list[Graph]:
    """K0, K1, K2, 2K1, K3, P3, K1+K2 and 3K1."""
    return [
        EMPTY,
        complete(1),
        complete(2),
        edgeless(2),
        complete(3),
        path(3),
        disjoint_union(complete(1), complete(2)),
        edgeless(3),
    ]


def heads(max_h: int) -> Iterator[Graph]:
    """Non-empty heads up to isomorphism, by order then canonical key."""
    for h in range(1, max_h + 1):
        yield from enumerate_graphs(h, dedup=True)


def corpus_size(max_h: int, catalog_size: int) -> int:
    return sum(len(list(enumerate_graphs(h, dedup=True))) * catalog_size**h for h in range(1, max_h + 1))


def exhaustive_corpus(max_h: int, catalog: Sequence[Graph]) -> Iterator[CoronaSpec]:
    for head in heads(max_h):
        for family in itertools.product(catalog, repeat=head.n):
            yield CoronaSpec(head, family)


def sampled_corpus(max_h: int, catalog: Sequence[Graph], count: int, seed: int) -> Iterator[CoronaSpec]:
    rng = random.Random(seed)
    by_order: dict[int, list[Graph]] = {}
    for _ in range(count):
        h = rng.randint(1, max_h)
        if h <= MAX_DEDUP_VERTICES:
            if h not in by_order:
                by_order[h] = list(enumerate_graphs(h, dedup=True))
            head = rng.choice(by_order[h])
        else:
            head = Graph.from_edges(h, [(i, j) for j in range(h) for i in range(j) if rng.random() < 0.5])
        yield CoronaSpec(head, tuple(rng.choice(catalog) for _ in range(h)))


@dataclass
class Counterexample:
    check: str
    subject: CoronaSpec | Graph
    expected: object
    actual: object

    def line(self) -> str:
        if isinstance(self.subject, CoronaSpec):
            tokens = " ".join(self.subject.tokens())
        else:
            tokens = format_token(self.subject)
        return f"{self.check}: {tokens} expected={self.expected} got={self.actual}"


@dataclass
class VerificationReport:
    description: str
    checks: dict[str, int] = field(default_factory=dict)
    failures: dict[str, int] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)
    specs: int = 0
    skipped: int = 0

    @property
    def total_checks(self) -> int:
        return sum(self.checks.values())

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def degenerate(self) -> bool:
        return self.total_checks == 0

    def record(self, name: str, subject: CoronaSpec | Graph, expected: object, actual: object) -> None:
        self.checks[name] = self.checks.get(name, 0) + 1
        if expected != actual:
            self.failures[name] = self.failures.get(name, 0) + 1
            self.counterexamples.append(Counterexample(name, subject, expected, actual))

    def merge(self, other: VerificationReport) -> None:
        for name, count in other.checks.items():
            self.checks[name] = self.checks.get(name, 0) + count
        for name, count in other.failures.items():
            self.failures[name] = self.failures.get(name, 0) + count
        self.counterexamples.extend(other.counterexamples)
        self.specs += other.specs
        self.skipped += other.skipped

    def to_text(self) -> str:
        lines = [f"corpus: {self.description}", f"specs: {self.specs}"]
        if self.skipped:
            lines.append(f"skipped (corona above direct bound): {self.skipped}")
        for name in sorted(self.checks):
            lines.append(f"{name}: {self.checks[name] - self.failures.get(name, 0)}/{self.checks[name]} passed")
        if self.degenerate:
            lines.append("degenerate: no checks were run")
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        lines.extend("  " + c.line() for c in self.counterexamples)
        return "\n".join(lines) + "\n"


def check_spec(spec: CoronaSpec, report: VerificationReport) -> None:
    """Every formula and classifier evaluated against the built corona."""
    report.specs += 1
    corona = build_corona(spec).graph
    if corona.n > MAX_DIRECT_VERTICES:
        report.skipped += 1
        return
    alpha = independence_number(corona)
    mu = matching_number(corona)
    kappa = corona.n - alpha - mu
    f = f_set(spec)

    report.record("alpha_formula", spec, alpha, fast_alpha(spec))
    report.record("mu_formula", spec, mu, fast_mu(spec))
    apex_sum = sum(matching_number(apex_join(x)) for x in spec.family)
    report.record(
        "apex_identity", spec, apex_sum, sum(component_facts(x).mu for x in spec.family) + spec.head.n - len(f)
    )
    try:
        f_set(spec, check=True)
        report.record("f_set_definition", spec, True, True)
    except AssertionError as exc:
        report.record("f_set_definition", spec, True, str(exc))
    report.record("kappa_bounds", spec, True, 0 <= kappa <= mu)
    report.record("connectivity", spec, is_connected(spec.head), is_connected(corona))
    report.record(
        "bipartite", spec, is_bipartite(corona), is_bipartite(spec.head) and all(x.m == 0 for x in spec.family)
    )
    report.record("theorem7", spec, kappa == 0, thm7_is_corona_ke(spec)[0])
    report.record("theorem8", spec, kappa == 1, thm8_is_corona_1ke(spec)[0])
    has_pm = has_perfect_matching(corona)
    report.record("ke_with_pm", spec, kappa == 0 and has_pm, corona_ke_with_pm(spec))
    report.record(
        "ke_with_unique_pm",
        spec,
        kappa == 0 and has_pm and has_unique_perfect_matching(corona),
        corona_ke_with_unique_pm(spec, confirm=False),
    )
    family = spec.family
    if family and all(x == family[0] for x in family):
        report.record("uniform_1ke", spec, kappa == 1, uniform_corona_1ke(spec.head, family[0]))
        if family[0].n >= 1 and is_complete(family[0]):
            report.record("clique_class", spec, coarse_class(kappa), clique_corona_class(spec.head, family[0].n))


def verify_theorems(
    max_h: int,
    catalog: Sequence[Graph],
    sample: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Run every corpus check over heads with ``1 <= n(H) <= max_h``.

    The full cross product is used unless ``sample`` is given, in which case
    that many specs are drawn with the seeded generator.
    """
    catalog = list(catalog)
    names = " ".join(format_token(x) for x in catalog)
    if sample is None:
        size = corpus_size(max_h, len(catalog)) if catalog else 0
        if size > MAX_EXHAUSTIVE_SPECS:
            raise SizeLimitError(
                f"exhaustive corpus has {size} specs (limit {MAX_EXHAUSTIVE_SPECS}); use sampling"
            )
        specs: Iterator[CoronaSpec] = exhaustive_corpus(max_h, catalog) if catalog else iter(())
        description = f"exhaustive, 1 <= n(H) <= {max_h}, catalog [{names}]"
    else:
        specs = sampled_corpus(max_h, catalog, sample, seed) if catalog else iter(())
        description = f"sampled {sample} specs, seed {seed}, 1 <= n(H) <= {max_h}, catalog [{names}]"
    report = VerificationReport(description)
    for spec in specs:
        check_spec(spec, report)
    return report


def verify_lemma3(max_n: int = 5) -> VerificationReport:
    """``mu >= n - 1`` singles out K0, K1 and K2 among all graphs up to ``max_n``."""
    report = VerificationReport(f"lemma 3, all graphs n <= {max_n} up to isomorphism")
    allowed = {canonical_form(g) for g in (EMPTY, complete(1), complete(2))}
    for n in range(max_n + 1):
        for g in enumerate_graphs(n, dedup=True):
            report.specs += 1
            report.record("lemma3", g, canonical_form(g) in allowed, lemma3_predicate(g))
    return report


@dataclass(frozen=True)
class SearchHit:
    spec: CoronaSpec
    kappa: int
    key: bytes | None

    def line(self) -> str:
        key = self.key.decode("ascii") if self.key is not None else "-"
        return f"{key} {self.kappa} {' '.join(self.spec.tokens())}"


def iter_search(k: int, max_h: int, catalog: Sequence[Graph], dedup: bool = True) -> Iterator[SearchHit]:
    if k < 0:
        raise ValueError("kappa must be non-negative")
    seen: set[bytes] = set()
    for spec in exhaustive_corpus(max_h, list(catalog)):
        if fast_kappa(spec) != k:
            continue
        key = None
        if spec.order <= MAX_CANONICAL_VERTICES:
            key = canonical_form(build_corona(spec).graph)
            if dedup:
                if key in seen:
                    continue
                seen.add(key)
        yield SearchHit(spec, k, key)


def search_kappa(
    k: int, max_h: int, catalog: Sequence[Graph], limit: int | None = None, dedup: bool = True
) -> list[SearchHit]:
    """First ``limit`` coronas with deficiency ``k``, in corpus order.

    Coronas small enough to canonicalise are deduplicated by isomorphism
    class; larger ones are reported once per spec.
    """
    return list(itertools.islice(iter_search(k, max_h, catalog, dedup), limit))


@dataclass(frozen=True)
class BenchRow:
    size: int
    vertices: int
    fast_seconds: float
    fast_kappa: int
    direct_seconds: float | None
    direct_kappa: int | None

    @property
    def agree(self) -> bool | None:
        return None if self.direct_kappa is None else self.direct_kappa == self.fast_kappa


def bench_theorem_vs_direct(sizes: Sequence[int], limit: int = MAX_DIRECT_VERTICES) -> list[BenchRow]:
    """Time the closed form against the exact solver on ``P_s o K2``."""
    rows = []
    for s in sizes:
        spec = CoronaSpec(path(s), (complete(2),) * s)
        start = time.perf_counter()
        fast = fast_kappa(spec)
        fast_time = time.perf_counter() - start
        direct_time = direct = None
        if spec.order <= limit:
            corona = build_corona(spec).graph
            start = time.perf_counter()
            direct = kappa_direct(corona, limit)
            direct_time = time.perf_counter() - start
        rows.append(BenchRow(s, spec.order, fast_time, fast, direct_time, direct))
    return rows


def format_bench(rows: Sequence[BenchRow]) -> str:
    lines = [f"{'size':>5} {'vertices':>8} {'kappa':>5} {'fast_s':>10} {'direct_s':>10} {'agree':>5}"]
    for r in rows:
        direct = f"{r.direct_seconds:10.6f}" if r.direct_seconds is not None else f"{'skipped':>10}"
        agree = "-" if r.agree is None else "yes" if r.agree else "NO"
        lines.append(f"{r.size:>5} {r.vertices:>8} {r.fast_kappa:>5} {r.fast_seconds:10.6f} {direct} {agree:>5}")
    return "\n".join(lines) + "\n"
