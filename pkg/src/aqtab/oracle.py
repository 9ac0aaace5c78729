"""Exhaustive desk-scale verification sweeps.

Sweeps re-derive the library's formula-level claims from independent
paths: overlap formula against the geometric definition, the window
condition against brute-force feasibility, positional dominance against
built tableaux.

The lambda grids fix lambda_1 = 0 (classification is translation
invariant) and range over gap vectors in [-span, span]^(r-1).  For the
nice-grid audit the full box is huge, but every audited predicate
depends on lambda only through the clamped gaps max(0, gap_i): negative
gaps contribute no shared values, and the remaining inequalities are
monotone in raw gap sums, so the box splits into clamp-equivalence
classes whose verdict is decided at the representative with all
non-positive gaps set to 0.  Class mode evaluates the real operations
once per representative and counts class sizes exactly; pointwise mode
walks the raw box and is used to validate class mode at small scale.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .combinatorics import (
    is_antitableau,
    overlap_by_definition,
    overlap_by_formula,
    shared_value_table,
    singularity,
)
from .core import LambdaParam, ParabolicDatum
from .criteria import (
    dirac_constructive,
    dirac_feasibility_bruteforce,
    dirac_index_condition,
    ktype_weight,
    multiplicity_condition,
    nonvanishing_nice,
)
from .errors import InternalContradictionError
from .ranges import classify
from .tableau import build_quasitableau, build_signed_tableau


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of n into parts >= 1, lexicographic by first part."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def enumerate_parabolics(n_max: int) -> Iterator[ParabolicDatum]:
    """Every datum with 1 <= n <= n_max, each exactly once, deterministic order."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    for n in range(1, n_max + 1):
        for comp in compositions(n):
            for plus_counts in product(*(range(part + 1) for part in comp)):
                yield ParabolicDatum(
                    [(p, part - p) for p, part in zip(plus_counts, comp)]
                )


def count_parabolics(n: int) -> int:
    """Number of datums with total size exactly n: sum over compositions
    of the product of (part+1)."""
    return sum(
        _prod(part + 1 for part in comp) for comp in compositions(n)
    )


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def enumerate_lambdas(datum: ParabolicDatum, span: int) -> Iterator[LambdaParam]:
    """lambda_1 = 0, successive gaps in [-span, span]; (2 span + 1)^(r-1) points."""
    if span < 0:
        raise ValueError("span must be >= 0")
    for gaps in product(range(-span, span + 1), repeat=datum.r - 1):
        values, acc = [0], 0
        for g in gaps:
            acc += g
            values.append(acc)
        yield LambdaParam(values)


def _lambda_from_gaps(gaps) -> LambdaParam:
    values, acc = [0], 0
    for g in gaps:
        acc += g
        values.append(acc)
    return LambdaParam(values)


@dataclass
class SweepReport:
    """Outcome of one sweep; disagreements == 0 on a passing run."""

    name: str
    parameters: dict
    datums: int
    points: int
    checks: int
    disagreements: int
    first_counterexample: dict | None
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def to_dict(self) -> dict:
        return {
            "sweep": self.name,
            "parameters": self.parameters,
            "datums": self.datums,
            "points": self.points,
            "checks": self.checks,
            "disagreements": self.disagreements,
            "first_counterexample": self.first_counterexample,
            "elapsed_ms": self.elapsed_ms,
        }


def _dump(datum: ParabolicDatum, lam: LambdaParam | None, detail: str) -> dict:
    out = {"pairs": [list(p) for p in datum.pairs]}
    if lam is not None:
        out["lambda"] = list(lam.values)
    out["detail"] = detail
    return out


def sweep_overlap(n_max: int) -> SweepReport:
    """Geometric overlap against the closed formula on every built tableau."""
    start = time.perf_counter()
    datums = checks = disagreements = 0
    first = None
    for datum in enumerate_parabolics(n_max):
        datums += 1
        t = build_signed_tableau(datum)
        for i in range(1, datum.r):
            checks += 1
            if overlap_by_definition(t, i) != overlap_by_formula(datum, i):
                disagreements += 1
                if first is None:
                    first = _dump(datum, None, f"junction {i}")
    return SweepReport(
        name="overlap",
        parameters={"n_max": n_max},
        datums=datums,
        points=checks,
        checks=checks,
        disagreements=disagreements,
        first_counterexample=first,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )


def sweep_positional_lemma(n_max: int) -> SweepReport:
    """Bottom cells of a block sit no higher than the next block's top cells.

    With m_i = min(p_i, q_{i+1}) + min(p_{i+1}, q_i), checks that the
    (n_i - m_i + j)-th cell of block i lies in a row >= the row of the
    j-th cell of block i+1, for every j <= m_i.
    """
    start = time.perf_counter()
    datums = checks = violations = 0
    first = None
    for datum in enumerate_parabolics(n_max):
        datums += 1
        t = build_signed_tableau(datum)
        for i in range(1, datum.r):
            m_i = overlap_by_formula(datum, i)
            upper = t.block_cells(i)
            lower = t.block_cells(i + 1)
            n_i = len(upper)
            for j in range(1, m_i + 1):
                checks += 1
                if upper[n_i - m_i + j - 1].row < lower[j - 1].row:
                    violations += 1
                    if first is None:
                        first = _dump(datum, None, f"junction {i}, cell {j}")
    return SweepReport(
        name="positional",
        parameters={"n_max": n_max},
        datums=datums,
        points=checks,
        checks=checks,
        disagreements=violations,
        first_counterexample=first,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )


_AUDIT_CLAIMS = (
    "shared_formula",
    "dirac_equivalence",
    "constructive_witness",
    "antitableau_implication",
    "mediocre_agreement",
    "shared_structure",
    "ktype_dominance",
    "window_implies_doubled_bound",
    "small_r_multiplicity",
)


@dataclass
class NiceGridAudit:
    """Counters for every audited claim over the nice-range grid."""

    n_max: int
    span: int
    mode: str
    datums: int = 0
    box_points: int = 0
    nice_points: int = 0
    nonzero_points: int = 0
    classes_evaluated: int = 0
    checks: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    first_counterexamples: dict = field(default_factory=dict)
    vanishing_antitableau: dict = field(default_factory=lambda: {True: 0, False: 0})
    elapsed_ms: int = 0

    def __post_init__(self) -> None:
        for claim in _AUDIT_CLAIMS:
            self.checks.setdefault(claim, 0)
            self.failures.setdefault(claim, 0)

    def record(
        self,
        claim: str,
        ok: bool,
        weight: int,
        datum: ParabolicDatum,
        lam: LambdaParam,
        detail: str,
    ) -> None:
        self.checks[claim] += weight
        if not ok:
            self.failures[claim] += weight
            self.first_counterexamples.setdefault(claim, _dump(datum, lam, detail))

    @property
    def total_failures(self) -> int:
        return sum(self.failures.values())

    def report(self, claims: tuple[str, ...], name: str) -> SweepReport:
        first = None
        for claim in claims:
            if claim in self.first_counterexamples:
                first = self.first_counterexamples[claim]
                break
        return SweepReport(
            name=name,
            parameters={"n_max": self.n_max, "span": self.span, "mode": self.mode},
            datums=self.datums,
            points=self.nonzero_points,
            checks=sum(self.checks[c] for c in claims),
            disagreements=sum(self.failures[c] for c in claims),
            first_counterexample=first,
            elapsed_ms=self.elapsed_ms,
        )


def _audit_point(
    audit: NiceGridAudit,
    datum: ParabolicDatum,
    lam: LambdaParam,
    signed,
    weight: int,
    gaps: tuple[int, ...],
) -> None:
    """Evaluate every audited claim at one (datum, lambda) with multiplicity."""
    audit.nice_points += weight
    table = shared_value_table(datum, lam)
    shared = table.adjacent

    audit.record(
        "shared_formula",
        shared == tuple(max(0, g) for g in gaps),
        weight,
        datum,
        lam,
        f"adjacent shared counts {list(shared)} vs gaps {list(gaps)}",
    )

    at_most_twice, doubled_ok = multiplicity_condition(datum, lam)
    sizes = datum.block_sizes
    if at_most_twice:
        beyond_adjacent_zero = all(
            table.pair(i, j) == 0
            for i in range(1, datum.r + 1)
            for j in range(i + 2, datum.r + 1)
        )
        adjacent_sums_ok = all(
            shared[i - 2] + shared[i - 1] <= sizes[i - 1]
            for i in range(2, datum.r)
        )
        audit.record(
            "shared_structure",
            beyond_adjacent_zero and adjacent_sums_ok,
            weight,
            datum,
            lam,
            "shared-value structure under the multiplicity bound",
        )

    nonzero, _ = nonvanishing_nice(datum, lam)
    quasi = build_quasitableau(datum, lam, signed=signed)
    anti = is_antitableau(quasi)
    necessary_ok = all(
        singularity(quasi, i) <= overlap_by_definition(quasi, i)
        for i in range(1, datum.r)
    )
    audit.record(
        "mediocre_agreement",
        necessary_ok == nonzero,
        weight,
        datum,
        lam,
        f"sing<=overlap says {necessary_ok}, nonvanishing says {nonzero}",
    )
    if not nonzero:
        audit.vanishing_antitableau[anti] += weight
        return

    audit.nonzero_points += weight
    audit.record(
        "antitableau_implication", anti, weight, datum, lam, "nonzero but no antitableau"
    )
    audit.record(
        "ktype_dominance",
        ktype_weight(datum, lam)[1],
        weight,
        datum,
        lam,
        "nonzero but K-type weight not dominant",
    )

    window_ok, _ = dirac_index_condition(datum, lam)
    feasible = dirac_feasibility_bruteforce(datum, lam)
    audit.record(
        "dirac_equivalence",
        window_ok == (feasible is not None),
        weight,
        datum,
        lam,
        f"window condition {window_ok}, brute force {'feasible' if feasible else 'infeasible'}",
    )
    if window_ok:
        try:
            witness = dirac_constructive(datum, lam)
            valid = witness.violation(datum.pairs, shared) is None
        except InternalContradictionError:
            valid = False
        audit.record(
            "constructive_witness",
            valid,
            weight,
            datum,
            lam,
            "constructive witness missing or infeasible",
        )
        audit.record(
            "window_implies_doubled_bound",
            doubled_ok,
            weight,
            datum,
            lam,
            "window condition holds but doubled-value bound fails",
        )
    if datum.r <= 3 and at_most_twice and doubled_ok:
        audit.record(
            "small_r_multiplicity",
            window_ok,
            weight,
            datum,
            lam,
            "r<=3 multiplicity bounds hold but window condition fails",
        )


def nice_grid_audit(n_max: int, span: int, mode: str = "classes") -> NiceGridAudit:
    """Audit every claim over the nice-range grid (n <= n_max, gap box span).

    mode "classes" walks clamp-equivalence classes (exact, fast); mode
    "pointwise" walks the raw box and exists to validate class mode.
    """
    if mode not in ("classes", "pointwise"):
        raise ValueError(f"unknown mode {mode!r}")
    start = time.perf_counter()
    audit = NiceGridAudit(n_max=n_max, span=span, mode=mode)
    for datum in enumerate_parabolics(n_max):
        audit.datums += 1
        audit.box_points += (2 * span + 1) ** (datum.r - 1)
        signed = build_signed_tableau(datum)
        sizes = datum.block_sizes
        if mode == "pointwise":
            for lam in enumerate_lambdas(datum, span):
                gaps = tuple(
                    lam.values[i + 1] - lam.values[i] for i in range(datum.r - 1)
                )
                if not classify(datum, lam).is_nice:
                    continue
                audit.classes_evaluated += 1
                _audit_point(audit, datum, lam, signed, 1, gaps)
            continue
        nice_caps = [
            min(span, min(sizes[i], sizes[i + 1])) for i in range(datum.r - 1)
        ]
        for clamped in product(*(range(cap + 1) for cap in nice_caps)):
            lam = _lambda_from_gaps(clamped)
            if not classify(datum, lam).is_nice:
                raise InternalContradictionError(
                    "class representative escaped the nice range"
                )
            weight = _prod(span + 1 if g == 0 else 1 for g in clamped)
            audit.classes_evaluated += 1
            _audit_point(audit, datum, lam, signed, weight, clamped)
    audit.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return audit


def sweep_dirac_equivalence(
    n_max: int, span: int, mode: str = "classes"
) -> SweepReport:
    """Window condition against brute-force feasibility, plus witness validity,
    over every nonzero nice-range module on the grid."""
    audit = nice_grid_audit(n_max, span, mode=mode)
    return audit.report(
        ("dirac_equivalence", "constructive_witness"), "dirac_equivalence"
    )
