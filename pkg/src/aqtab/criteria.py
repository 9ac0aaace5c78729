"""Non-vanishing and Dirac-index decisions.

The Dirac-index side works with the reduced chain system over adjacent
blocks: non-negative integers a_i, b_i with a_i + b_i = R_i (the shared
count of blocks i, i+1), a_i + b_{i-1} <= p_i and a_{i-1} + b_i <= q_i
for 1 <= i <= r (boundary variables zero).  dirac_feasibility_bruteforce
decides it by enumeration; dirac_constructive builds a witness by
induction on r and must succeed whenever the window condition holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .combinatorics import overlap_by_definition, shared_value_table, singularity
from .core import LambdaParam, ParabolicDatum, Weight, HalfInt, validate_input
from .errors import (
    InternalContradictionError,
    ModuleVanishesError,
    NotInMediocreRangeError,
    NotInNiceRangeError,
    PreconditionError,
)
from .ranges import classify, infinitesimal_character
from .tableau import build_quasitableau


@dataclass(frozen=True, slots=True)
class FeasibilitySolution:
    """Witness (a_i, b_i) for the reduced chain system."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def violation(
        self, pairs: tuple[tuple[int, int], ...], shared: tuple[int, ...]
    ) -> str | None:
        """None if this solves the chain system for (pairs, shared)."""
        r = len(pairs)
        if len(self.a) != r - 1 or len(self.b) != r - 1 or len(shared) != r - 1:
            return "length mismatch"
        if any(x < 0 for x in self.a + self.b):
            return "negative component"
        for i in range(r - 1):
            if self.a[i] + self.b[i] != shared[i]:
                return f"a+b != shared count at junction {i + 1}"
        for i in range(1, r + 1):
            a_out = self.a[i - 1] if i <= r - 1 else 0
            b_in = self.b[i - 2] if i >= 2 else 0
            a_in = self.a[i - 2] if i >= 2 else 0
            b_out = self.b[i - 1] if i <= r - 1 else 0
            p_i, q_i = pairs[i - 1]
            if a_out + b_in > p_i:
                return f"plus capacity exceeded at block {i}"
            if a_in + b_out > q_i:
                return f"minus capacity exceeded at block {i}"
        return None

    def to_dict(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}


@dataclass(frozen=True, slots=True)
class Verdict:
    """Aggregate answer for one (datum, lambda): module and index status."""

    nonzero_module: bool
    multiplicity_ok: bool
    doubled_count_ok: bool
    window_condition: bool
    dirac_index_nonzero: bool | None
    witness: FeasibilitySolution | None
    failure_site: str | None

    def to_dict(self) -> dict:
        return {
            "nonzero_module": self.nonzero_module,
            "multiplicity_ok": self.multiplicity_ok,
            "doubled_count_ok": self.doubled_count_ok,
            "window_condition": self.window_condition,
            "dirac_index_nonzero": self.dirac_index_nonzero,
            "witness": self.witness.to_dict() if self.witness else None,
            "failure_site": self.failure_site,
        }


def _gaps(lam: LambdaParam) -> list[int]:
    v = lam.values
    return [v[i + 1] - v[i] for i in range(len(v) - 1)]


def _require_nice(datum: ParabolicDatum, lam: LambdaParam) -> None:
    if not classify(datum, lam).is_nice:
        raise NotInNiceRangeError("lambda is not in the nice range for this datum")


def nonvanishing_nice(
    datum: ParabolicDatum, lam: LambdaParam
) -> tuple[bool, int | None]:
    """Module non-vanishing in the nice range.

    True iff lambda_{i+1} - lambda_i <= min(p_i, q_{i+1}) + min(q_i, p_{i+1})
    for every i; otherwise False with the first failing junction (1-based).
    """
    validate_input(datum, lam)
    _require_nice(datum, lam)
    for i, gap in enumerate(_gaps(lam), start=1):
        (p_i, q_i), (p_next, q_next) = datum.pairs[i - 1], datum.pairs[i]
        if gap > min(p_i, q_next) + min(q_i, p_next):
            return False, i
    return True, None


def mediocre_necessary_check(
    datum: ParabolicDatum, lam: LambdaParam
) -> tuple[bool, int | None]:
    """Necessary non-vanishing condition in the mediocre range.

    Checks singularity <= overlap on the initial block partition of the
    built quasitableau.  False means the module vanishes; True is only
    conclusive inside the nice range.
    """
    validate_input(datum, lam)
    if not classify(datum, lam).is_mediocre:
        raise NotInMediocreRangeError("lambda is not in the mediocre range")
    t = build_quasitableau(datum, lam)
    for i in range(1, datum.r):
        if singularity(t, i) > overlap_by_definition(t, i):
            return False, i
    return True, None


def multiplicity_condition(
    datum: ParabolicDatum, lam: LambdaParam
) -> tuple[bool, bool]:
    """(no nu-value occurs more than twice, #doubled values <= min(p, q))."""
    validate_input(datum, lam)
    nu = infinitesimal_character(datum, lam)
    counts: dict[int, int] = {}
    for h in nu.coords:
        counts[h.doubled] = counts.get(h.doubled, 0) + 1
    at_most_twice = all(c <= 2 for c in counts.values())
    doubled = sum(1 for c in counts.values() if c == 2)
    return at_most_twice, doubled <= min(datum.p, datum.q)


def dirac_index_condition(
    datum: ParabolicDatum, lam: LambdaParam
) -> tuple[bool, tuple[int, int] | None]:
    """Multiplicity bound plus window inequalities (nice range only).

    True iff no nu-value occurs more than twice and, for every window
    1 <= k < l <= r, the adjacent shared counts satisfy
    sum_{i=k}^{l-1} R_i <= min(sum_{i=k}^{l} p_i, sum_{i=k}^{l} q_i).
    On failure returns the offending window (k, l); a multiplicity
    failure returns window None.
    """
    validate_input(datum, lam)
    _require_nice(datum, lam)
    at_most_twice, _ = multiplicity_condition(datum, lam)
    if not at_most_twice:
        return False, None
    shared = shared_value_table(datum, lam).adjacent
    pairs = datum.pairs
    for k in range(1, datum.r):
        r_sum = 0
        p_sum, q_sum = pairs[k - 1]
        for l in range(k + 1, datum.r + 1):
            r_sum += shared[l - 2]
            p_sum += pairs[l - 1][0]
            q_sum += pairs[l - 1][1]
            if r_sum > min(p_sum, q_sum):
                return False, (k, l)
    return True, None


def dirac_feasibility_bruteforce(
    datum: ParabolicDatum, lam: LambdaParam
) -> FeasibilitySolution | None:
    """Decide the reduced chain system by full enumeration.

    Enumerates a_i in [0, R_i] independently (b_i determined), checks all
    capacity constraints, returns the lexicographically smallest feasible
    a-vector or None.  Requires nice range and a nonzero module; the
    multiplicity bound is not required (the system stays well-defined,
    and when the bound fails the system is infeasible anyway).
    """
    validate_input(datum, lam)
    if not classify(datum, lam).is_nice:
        raise PreconditionError("feasibility is only decided in the nice range")
    if not nonvanishing_nice(datum, lam)[0]:
        raise PreconditionError("module vanishes; feasibility question is void")
    shared = shared_value_table(datum, lam).adjacent
    pairs = datum.pairs
    for a in product(*(range(s + 1) for s in shared)):
        candidate = FeasibilitySolution(
            a=a, b=tuple(s - x for s, x in zip(shared, a))
        )
        if candidate.violation(pairs, shared) is None:
            return candidate
    return None


def _construct_chain(
    pairs: list[tuple[int, int]], shared: list[int]
) -> tuple[list[int], list[int]]:
    """Witness construction by induction on the number of blocks.

    Internal subproblems may carry (0,0) pairs: the deficit reduction can
    empty a block, which is harmless here because an empty block shares
    no values.
    """
    r = len(pairs)
    if r == 1:
        return [], []
    if r == 2:
        (p1, _), (_, q2) = pairs
        a12 = min(p1, q2, shared[0])
        return [a12], [shared[0] - a12]
    (p_prev, q_prev), (p_last, q_last) = pairs[-2], pairs[-1]
    r_last = shared[-1]
    bound = min(p_prev, q_prev, p_last, q_last)
    if r_last <= bound:
        a, b = _construct_chain(pairs[:-1], shared[:-1])
        a_last = min(p_prev - b[-1], r_last)
        return a + [a_last], b + [r_last - a_last]
    d = r_last - bound
    if min(p_last, q_prev) <= min(p_prev, q_last):
        # reduce on the plus side: a picks up the deficit
        sub_pairs = pairs[:-2] + [(p_prev - d, q_prev), (p_last, q_last - d)]
        a, b = _construct_chain(sub_pairs, shared[:-1] + [r_last - d])
        a[-1] += d
    else:
        sub_pairs = pairs[:-2] + [(p_prev, q_prev - d), (p_last - d, q_last)]
        a, b = _construct_chain(sub_pairs, shared[:-1] + [r_last - d])
        b[-1] += d
    return a, b


def dirac_constructive(
    datum: ParabolicDatum, lam: LambdaParam
) -> FeasibilitySolution:
    """Build a feasibility witness; guaranteed when dirac_index_condition holds.

    Raises PreconditionError if the window condition fails, and
    InternalContradictionError if the constructed witness does not satisfy
    the system (which would mean a bug, not a property of the input).
    """
    ok, _ = dirac_index_condition(datum, lam)
    if not ok:
        raise PreconditionError("window condition fails; no witness is guaranteed")
    shared = shared_value_table(datum, lam).adjacent
    a, b = _construct_chain(list(datum.pairs), list(shared))
    solution = FeasibilitySolution(a=tuple(a), b=tuple(b))
    reason = solution.violation(datum.pairs, shared)
    if reason is not None:
        raise InternalContradictionError(
            f"constructed witness is infeasible ({reason})"
        )
    return solution


def dirac_index_nonzero(datum: ParabolicDatum, lam: LambdaParam) -> Verdict:
    """Full verdict for a nonzero nice-range module.

    dirac_index_nonzero equals the window condition; a witness comes from
    the constructive path and is cross-checked against brute-force
    enumeration, which must agree.
    """
    validate_input(datum, lam)
    _require_nice(datum, lam)
    nonzero, failing = nonvanishing_nice(datum, lam)
    if not nonzero:
        raise ModuleVanishesError(f"module vanishes (junction {failing})")
    at_most_twice, doubled_ok = multiplicity_condition(datum, lam)
    ok, window = dirac_index_condition(datum, lam)
    brute = dirac_feasibility_bruteforce(datum, lam)
    if ok != (brute is not None):
        raise InternalContradictionError(
            "window condition and brute-force feasibility disagree"
        )
    witness = dirac_constructive(datum, lam) if ok else None
    if ok:
        failure_site = None
    elif not at_most_twice:
        failure_site = "a nu-value occurs more than twice"
    else:
        failure_site = f"window {window}"
    return Verdict(
        nonzero_module=True,
        multiplicity_ok=at_most_twice,
        doubled_count_ok=doubled_ok,
        window_condition=ok,
        dirac_index_nonzero=ok,
        witness=witness,
        failure_site=failure_site,
    )


def ktype_weight(datum: ParabolicDatum, lam: LambdaParam) -> tuple[Weight, bool]:
    """lambda + twice the half-sum over the noncompact part of the nilradical.

    Block j contributes lambda_j + eta_{j,+} on its p_j plus slots and
    lambda_j + eta_{j,-} on its q_j minus slots, where eta_{j,+} counts
    minus slots after block j minus those before, and eta_{j,-} does the
    same with plus slots.  k_dominant is the adjacent-gap test
    lambda_{j+1} - lambda_j <= p_j + p_{j+1} and <= q_j + q_{j+1}.
    """
    validate_input(datum, lam)
    coords: list[HalfInt] = []
    for j, ((p_j, q_j), value) in enumerate(zip(datum.pairs, lam.values), start=1):
        q_before = sum(q for _, q in datum.pairs[: j - 1])
        q_after = sum(q for _, q in datum.pairs[j:])
        p_before = sum(p for p, _ in datum.pairs[: j - 1])
        p_after = sum(p for p, _ in datum.pairs[j:])
        eta_plus = q_after - q_before
        eta_minus = p_after - p_before
        coords.extend([HalfInt.from_int(value + eta_plus)] * p_j)
        coords.extend([HalfInt.from_int(value + eta_minus)] * q_j)
    k_dominant = all(
        gap <= min(p_j + p_next, q_j + q_next)
        for gap, (p_j, q_j), (p_next, q_next) in zip(
            _gaps(lam), datum.pairs, datum.pairs[1:]
        )
    )
    return Weight(coords), k_dominant
