"""Koenig deficiency and theorem-based classification of coronas.

The theorem classifiers look only at the head and at each satellite on its
own.  For families without ``K0`` members they are literally the subset and
matching conditions of the characterisation; ``K0`` members (bare head
vertices) are handled through :func:`coronake.corona.head_deficiency`,
which reduces to ``|F| - mu(H[F])`` when nothing is bare.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .corona import (
    ComponentFacts,
    CoronaSpec,
    build_corona,
    component_facts,
    f_set,
    fast_kappa,
    has_unique_apm,
    has_unique_pm,
    head_deficiency,
    head_on,
)
from .graph import Graph
from .independence import MAX_DIRECT_VERTICES, independence_number, maximum_independent_set
from .matching import Matching, has_perfect_matching, matching_number, maximum_matching

KE = "KE"
ONE_KE = "1KE"
OTHER = "other"


class Witness(NamedTuple):
    """First reason a theorem condition fails.  ``index`` is the offending
    family position, or None when the failure is about the head."""

    index: int | None
    reason: str

    def __str__(self) -> str:
        if self.index is None:
            return self.reason
        return f"X[{self.index}]: {self.reason}"


def ke_label(kappa: int) -> str:
    if kappa == 0:
        return KE
    return f"{kappa}KE"


def kappa_direct(g: Graph, limit: int = MAX_DIRECT_VERTICES) -> int:
    return g.n - independence_number(g, limit) - matching_number(g)


def is_k_ke(g: Graph, k: int) -> bool:
    return kappa_direct(g) == k


def lemma3_predicate(g: Graph) -> bool:
    """``mu(g) >= n(g) - 1``; the upper bound ``mu <= n/2`` always holds."""
    return matching_number(g) >= g.n - 1


def shape_name(g: Graph) -> str:
    if g.n == 0:
        return "K0"
    if g.m == 0:
        return "K1" if g.n == 1 else f"{g.n}K1"
    if g.n == 2:
        return "K2"
    return f"a graph with {g.n} vertices and {g.m} edges"


def _facts(spec: CoronaSpec) -> list[ComponentFacts]:
    return [component_facts(x) for x in spec.family]


def _first_not_ke(facts: list[ComponentFacts]) -> Witness | None:
    for i, f in enumerate(facts):
        if not f.is_ke:
            return Witness(i, f"not Koenig-Egervary (kappa={f.kappa})")
    return None


def _exactly_one_1ke(facts: list[ComponentFacts]) -> Witness | None:
    seen = None
    for i, f in enumerate(facts):
        if f.kappa > 1:
            return Witness(i, f"kappa={f.kappa} exceeds 1")
        if f.kappa == 1:
            if seen is not None:
                return Witness(i, f"second 1-Koenig-Egervary member after X[{seen}]")
            seen = i
    if seen is None:
        return Witness(None, "no 1-Koenig-Egervary member; the corona is Koenig-Egervary")
    return None


def thm7_is_corona_ke(spec: CoronaSpec) -> tuple[bool, Witness | None]:
    """The corona is KE iff every satellite is KE and has no perfect matching."""
    facts = _facts(spec)
    bare = spec.bare
    for i, f in enumerate(facts):
        if not f.is_ke:
            return False, Witness(i, f"not Koenig-Egervary (kappa={f.kappa})")
        if not bare and f.has_pm:
            return False, Witness(i, "has a perfect matching")
    if bare:
        d = head_deficiency(spec)
        if d:
            return False, Witness(None, f"head deficiency {d} with bare head vertices {sorted(bare)}")
    return True, None


def thm8_is_corona_1ke(spec: CoronaSpec) -> tuple[bool, str | None, Witness | None]:
    """Returns ``(is_1ke, case_tag, witness)``.

    Without bare vertices the case follows the shape of ``H[F]``: ``"i"`` for
    K0 (one satellite 1-KE, the rest KE), ``"ii"`` for K1 and ``"iii"`` for K2
    (all satellites KE).  Any other shape fails with the shape as witness.
    With bare vertices the cases are ``"i-bare"`` and ``"ii-bare"``, keyed on
    the head deficiency being 0 or 1.
    """
    facts = _facts(spec)
    if spec.bare:
        d = head_deficiency(spec)
        if d == 0:
            witness = _exactly_one_1ke(facts)
            return witness is None, "i-bare", witness
        if d == 1:
            witness = _first_not_ke(facts)
            return witness is None, "ii-bare", witness
        return False, None, Witness(None, f"head deficiency {d} exceeds 1")

    f = sorted(f_set(spec))
    if not f:
        witness = _exactly_one_1ke(facts)
        return witness is None, "i", witness
    if len(f) == 1:
        tag = "ii"
    elif len(f) == 2 and spec.head.has_edge(f[0], f[1]):
        tag = "iii"
    else:
        return False, None, Witness(None, f"H[F] is {shape_name(head_on(spec, f))}")
    witness = _first_not_ke(facts)
    return witness is None, tag, witness


def _pm_structure(spec: CoronaSpec) -> tuple[frozenset[int], Graph]:
    f = f_set(spec)
    return f, head_on(spec, f)


def corona_ke_with_pm(spec: CoronaSpec) -> bool:
    """KE with a perfect matching iff every satellite is KE with an almost
    perfect matching."""
    facts = _facts(spec)
    if not spec.bare:
        return all(f.is_ke and f.has_apm for f in facts)
    # bare heads must be matched inside H[F]; satellites outside F through their apex
    f, head_f = _pm_structure(spec)
    return (
        all(x.is_ke for x in facts)
        and head_deficiency(spec) == 0
        and all(x.has_apm for i, x in enumerate(facts) if i not in f)
        and has_perfect_matching(head_f)
    )


def corona_ke_with_unique_pm(spec: CoronaSpec, confirm: bool = True) -> bool:
    """KE with a unique perfect matching iff every satellite is KE with a
    unique almost perfect matching.

    With ``confirm`` a positive answer is re-checked on the built corona and
    a mismatch raises ``AssertionError``.
    """
    facts = _facts(spec)
    if not spec.bare:
        result = all(f.is_ke and has_unique_apm(x) for f, x in zip(facts, spec.family))
    else:
        f, head_f = _pm_structure(spec)
        result = (
            corona_ke_with_pm(spec)
            and has_unique_pm(head_f)
            and all(
                has_unique_pm(x) if i in f else has_unique_apm(x)
                for i, x in enumerate(spec.family)
                if x.n
            )
        )
    if result and confirm:
        built = build_corona(spec).graph
        if not has_unique_pm(built):
            raise AssertionError("corona was predicted to have a unique perfect matching but does not")
    return result


def uniform_corona_1ke(head: Graph, x: Graph) -> bool:
    """``H o X`` is 1-KE iff H = K1 and X is either 1-KE without a perfect
    matching or KE with one, or H = K2 and X is KE with a perfect matching.
    Larger heads never qualify."""
    if x.n == 0:
        # no satellites: the corona is the head itself
        return kappa_direct(head) == 1
    facts = component_facts(x)
    if head.n == 1:
        return (facts.is_1ke and not facts.has_pm) or (facts.is_ke and facts.has_pm)
    if head.n == 2:
        return head.m == 1 and facts.is_ke and facts.has_pm
    return False


def clique_corona_class(head: Graph, n: int) -> str:
    """Class of ``H o K_n``: KE iff n = 1, 1-KE only for K1 o K2, K1 o K3 and
    K2 o K2."""
    if n < 1:
        raise ValueError(f"clique size must be at least 1, got {n}")
    if head.n == 0 or n == 1:
        return KE
    if (head.n == 1 and n in (2, 3)) or (head.n == 2 and head.m == 1 and n == 2):
        return ONE_KE
    return OTHER


def coarse_class(kappa: int) -> str:
    return KE if kappa == 0 else ONE_KE if kappa == 1 else OTHER


@dataclass(frozen=True)
class ClassificationReport:
    kappa: int
    ke_class: str
    method: str
    case_tag: str | None = None
    witness: Witness | None = None
    components: tuple[ComponentFacts, ...] = ()
    matching: Matching | None = None
    independent_set: frozenset[int] | None = None

    def lines(self) -> list[str]:
        out = [
            f"ke_class={self.ke_class}",
            f"kappa={self.kappa}",
            f"method={self.method}",
            f"case_tag={self.case_tag or '-'}",
            f"witness={self.witness if self.witness else '-'}",
        ]
        if self.matching is not None:
            out.append("matching=" + " ".join(f"{u}-{v}" for u, v in sorted(self.matching.edges)))
        if self.independent_set is not None:
            out.append("independent_set=" + " ".join(map(str, sorted(self.independent_set))))
        return out


def classify_corona(spec: CoronaSpec, method: str = "theorem", certificates: bool = False) -> ClassificationReport:
    """Classify by theorem (never builds the corona) or directly.

    The theorem route tries the KE characterisation, then the 1-KE one, and
    otherwise reports the deficiency from the closed forms.
    """
    components = tuple(_facts(spec))
    if method == "theorem":
        ke, witness = thm7_is_corona_ke(spec)
        if ke:
            kappa, used, tag = 0, "theorem-7", None
        else:
            one, tag, witness8 = thm8_is_corona_1ke(spec)
            if one:
                kappa, used, witness = 1, "theorem-8", None
            else:
                kappa, used, witness = fast_kappa(spec), "fast-formula", witness8
    elif method == "direct":
        kappa = kappa_direct(build_corona(spec).graph)
        used, tag, witness = "direct", None, None
    else:
        raise ValueError(f"unknown method {method!r}; expected 'theorem' or 'direct'")

    matching = independent = None
    if certificates:
        built = build_corona(spec).graph
        matching = maximum_matching(built)
        if built.n <= MAX_DIRECT_VERTICES:
            independent = maximum_independent_set(built)
    return ClassificationReport(
        kappa=kappa,
        ke_class=ke_label(kappa),
        method=used,
        case_tag=tag,
        witness=witness,
        components=components,
        matching=matching,
        independent_set=independent,
    )
