"""Brute-force verification sweeps over exhaustive parameter grids.

Every closed form, containment, mapping property, and the minimum-size
bound itself is cross-checked against enumeration, word by word.  A
sweep never aborts on failure: every case is recorded, failures carry
full reproduction parameters, and cap-skipped cases are listed
explicitly, so silence never means "not run".  Iteration order is
ascending lexicographic in (q, n, t, s, p, word-as-integer) and nothing
is randomized, so reports are deterministic for a given grid.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ._backend import BACKEND
from .balls import (
    BallParams,
    BallSet,
    ball,
    ball_size,
    deletion_ball,
    enumeration_space,
    insertion_ball,
    member_definitional,
    substitution_ball,
)
from .constructions import (
    bijection_insertion,
    bijection_insertion_inverse,
    injection_idp,
    witness_deletion_pair,
    witness_nonsurjective,
    witness_swap_flip,
)
from .errors import DomainError, PostconditionError
from .formulas import (
    levenshtein_intersection_max,
    min_ball_bound,
    minimality_predicate,
    size_insertion_ball,
    size_substitution_ball,
    size_zero_ball,
)
from .seqcore import Sequence, hamming, is_subsequence, run_count

REPORT_SCHEMA = "idsballs.verify/1"

#: Check names accepted by :class:`GridSpec`, in canonical run order.
ALL_CHECKS = (
    "theorem",
    "formulas",
    "containments",
    "intersection",
    "bijection",
    "injection",
    "witnesses",
)


@dataclass(frozen=True)
class GridSpec:
    """The sweep domain: alphabets, lengths, budgets, cap, and checks."""

    q_values: tuple[int, ...] = (1, 2, 3)
    n_max: int = 5
    budget_max: int = 2
    word_cap: int = 10**6
    checks: tuple[str, ...] = ALL_CHECKS

    def __post_init__(self) -> None:
        qs = tuple(sorted(set(self.q_values)))
        if not qs or any(q < 1 for q in qs):
            raise DomainError(f"q_values must be non-empty alphabet sizes >= 1, got {self.q_values}")
        object.__setattr__(self, "q_values", qs)
        if self.n_max < 0 or self.budget_max < 0 or self.word_cap < 1:
            raise DomainError("n_max and budget_max must be >= 0 and word_cap >= 1")
        checks = tuple(c for c in ALL_CHECKS if c in set(self.checks))
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise DomainError(f"unknown checks: {sorted(unknown)}; valid: {list(ALL_CHECKS)}")
        object.__setattr__(self, "checks", checks)

    def to_dict(self) -> dict:
        return {
            "q_values": list(self.q_values),
            "n_max": self.n_max,
            "budget_max": self.budget_max,
            "word_cap": self.word_cap,
            "checks": list(self.checks),
        }


@dataclass(frozen=True)
class CaseRecord:
    """One verified case; ``detail`` carries check-specific payload."""

    check: str
    q: int
    n: int
    t: int | None
    s: int | None
    p: int | None
    x: str | None
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "q": self.q,
            "n": self.n,
            "t": self.t,
            "s": self.s,
            "p": self.p,
            "x": self.x,
            "ok": self.ok,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SkipRecord:
    """A case family not run, and why (always cap-related)."""

    check: str
    q: int
    n: int
    t: int | None
    s: int | None
    p: int | None
    reason: str

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "q": self.q,
            "n": self.n,
            "t": self.t,
            "s": self.s,
            "p": self.p,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class VerificationReport:
    """All case and skip records of one sweep, with failure accounting."""

    grid: GridSpec
    cases: tuple[CaseRecord, ...]
    skipped: tuple[SkipRecord, ...]

    @property
    def failures(self) -> tuple[CaseRecord, ...]:
        return tuple(c for c in self.cases if not c.ok)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "backend": BACKEND,
            "grid": self.grid.to_dict(),
            "summary": {
                "cases_run": len(self.cases),
                "cases_skipped": len(self.skipped),
                "failures": len(self.failures),
            },
            "failures": [c.to_dict() for c in self.failures],
            "skipped": [s.to_dict() for s in self.skipped],
            "cases": [c.to_dict() for c in self.cases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def merge_reports(grid: GridSpec, reports: Iterable[VerificationReport]) -> VerificationReport:
    cases: list[CaseRecord] = []
    skipped: list[SkipRecord] = []
    for report in reports:
        cases.extend(report.cases)
        skipped.extend(report.skipped)
    return VerificationReport(grid=grid, cases=tuple(cases), skipped=tuple(skipped))


def _words(q: int, n: int) -> Iterator[Sequence]:
    for symbols in itertools.product(range(q), repeat=n):
        yield Sequence(q, symbols)


def _params(grid: GridSpec, n: int) -> Iterator[BallParams]:
    for t in range(grid.budget_max + 1):
        for s in range(min(grid.budget_max, n) + 1):
            for p in range(grid.budget_max + 1):
                yield BallParams(t, s, p)


def _cap_skip(grid: GridSpec, check: str, q: int, n: int, out_len: int,
              t: int | None, s: int | None, p: int | None) -> SkipRecord | None:
    space = enumeration_space(q, out_len)
    if space > grid.word_cap:
        return SkipRecord(check, q, n, t, s, p,
                          f"word space {q}^{out_len} = {space} exceeds cap {grid.word_cap}")
    return None


def _guarded(record: CaseRecord) -> CaseRecord:
    return record


def verify_theorem(grid: GridSpec) -> VerificationReport:
    """Enumerated ball size vs the minimum bound, both directions of the
    equality characterization, for every word in the grid."""
    cases: list[CaseRecord] = []
    skipped: list[SkipRecord] = []
    for q in grid.q_values:
        for n in range(grid.n_max + 1):
            for params in _params(grid, n):
                m = n + params.t - params.s
                skip = _cap_skip(grid, "theorem", q, n, m, params.t, params.s, params.p)
                if skip is not None:
                    skipped.append(skip)
                    continue
                bound = min_ball_bound(n, q, params)
                for x in _words(q, n):
                    size = ball_size(x, params, word_cap=grid.word_cap)
                    report = minimality_predicate(x, params)
                    observed = size == bound
                    ok = size >= bound and observed == report.minimal_predicted
                    cases.append(CaseRecord(
                        "theorem", q, n, params.t, params.s, params.p, x.text(), ok,
                        {
                            "enumerated_size": size,
                            "bound": bound,
                            "predicted_equal": report.minimal_predicted,
                            "observed_equal": observed,
                            "fired": list(report.condition_fired),
                        },
                    ))
    return VerificationReport(grid=grid, cases=tuple(cases), skipped=tuple(skipped))


def verify_formulas(grid: GridSpec) -> VerificationReport:
    """Closed-form sizes vs enumerated cardinalities: substitution balls,
    insertion balls (with the uniformity-across-words check), and the
    all-zero word's combined ball."""
    cases: list[CaseRecord] = []
    skipped: list[SkipRecord] = []
    for q in grid.q_values:
        for n in range(grid.n_max + 1):
            # substitution balls, every word
            for p in range(grid.budget_max + 1):
                skip = _cap_skip(grid, "formulas", q, n, n, None, None, p)
                if skip is not None:
                    skipped.append(skip)
                    continue
                expected = size_substitution_ball(n, q, p)
                for x in _words(q, n):
                    got = len(substitution_ball(x, p))
                    cases.append(CaseRecord(
                        "formulas", q, n, None, None, p, x.text(), got == expected,
                        {"kind": "substitution", "enumerated_size": got, "formula": expected},
                    ))
            # insertion balls, every word, plus uniformity
            for t in range(grid.budget_max + 1):
                skip = _cap_skip(grid, "formulas", q, n, n + t, t, None, None)
                if skip is not None:
                    skipped.append(skip)
                    continue
                expected = size_insertion_ball(n, q, t)
                sizes = set()
                for x in _words(q, n):
                    got = len(insertion_ball(x, t))
                    sizes.add(got)
                    cases.append(CaseRecord(
                        "formulas", q, n, t, None, None, x.text(), got == expected,
                        {"kind": "insertion", "enumerated_size": got, "formula": expected},
                    ))
                cases.append(CaseRecord(
                    "formulas", q, n, t, None, None, None, sizes == {expected},
                    {"kind": "insertion-uniformity", "distinct_sizes": sorted(sizes),
                     "formula": expected},
                ))
            # the all-zero word's combined ball
            for params in _params(grid, n):
                m = n + params.t - params.s
                skip = _cap_skip(grid, "formulas", q, n, m, params.t, params.s, params.p)
                if skip is not None:
                    skipped.append(skip)
                    continue
                zero = Sequence.zeros(q, n)
                got = ball_size(zero, params, word_cap=grid.word_cap)
                expected = size_zero_ball(n, q, params)
                cases.append(CaseRecord(
                    "formulas", q, n, params.t, params.s, params.p, zero.text(),
                    got == expected,
                    {"kind": "zero-ball", "enumerated_size": got, "formula": expected},
                ))
    return VerificationReport(grid=grid, cases=tuple(cases), skipped=tuple(skipped))


def _reduction(params: BallParams) -> BallParams:
    # trade min(t, s) insertion/deletion pairs for substitutions
    if params.t == params.s:
        return BallParams(0, 0, params.t + params.p)
    if params.t < params.s:
        return BallParams(0, params.s - params.t, params.t + params.p)
    return BallParams(params.t - params.s, 0, params.s + params.p)


def verify_containments(grid: GridSpec) -> VerificationReport:
    """Set inclusion of the substitution-traded reduction ball inside the
    original ball, for every word in the grid."""
    cases: list[CaseRecord] = []
    skipped: list[SkipRecord] = []
    for q in grid.q_values:
        for n in range(grid.n_max + 1):
            for params in _params(grid, n):
                reduced = _reduction(params)
                kind = ("t=s" if params.t == params.s
                        else "t<s" if params.t < params.s else "t>s")
                if reduced == params:
                    # min(t, s) = 0: the reduction is the identity
                    for x in _words(q, n):
                        cases.append(CaseRecord(
                            "containments", q, n, params.t, params.s, params.p,
                            x.text(), True,
                            {"kind": kind, "reduced": [reduced.t, reduced.s, reduced.p],
                             "identity": True},
                        ))
                    continue
                m = n + params.t - params.s
                skip = _cap_skip(grid, "containments", q, n, m,
                                 params.t, params.s, params.p)
                if skip is not None:
                    skipped.append(skip)
                    continue
                for x in _words(q, n):
                    big = ball(x, params, word_cap=grid.word_cap)
                    small = ball(x, reduced, word_cap=grid.word_cap)
                    ok = small.member_set <= big.member_set
                    cases.append(CaseRecord(
                        "containments", q, n, params.t, params.s, params.p, x.text(), ok,
                        {"kind": kind, "reduced": [reduced.t, reduced.s, reduced.p],
                         "identity": False, "big_size": len(big), "small_size": len(small)},
                    ))
    return VerificationReport(grid=grid, cases=tuple(cases), skipped=tuple(skipped))


def verify_intersection_max(grid: GridSpec) -> VerificationReport:
    """Brute-force maximum over all distinct center pairs of the
    radius-p substitution-ball intersection vs the closed form.

    Rows with q < 2 have no distinct pair and are omitted.
    """
    cases: list[CaseRecord] = []
    skipped: list[SkipRecord] = []
    for q in grid.q_values:
        if q < 2:
            continue
        for n in range(1, grid.n_max + 1):
            for p in range(grid.budget_max + 1):
                skip = _cap_skip(grid, "intersection", q, n, n, None, None, p)
                if skip is not None:
                    skipped.append(skip)
                    continue
                balls = [substitution_ball(x, p).member_set for x in _words(q, n)]
                best = 0
                for a, b in itertools.combinations(balls, 2):
                    size = len(a & b)
                    if size > best:
                        best = size
                expected = levenshtein_intersection_max(n, q, p)
                cases.append(CaseRecord(
                    "intersection", q, n, None, None, p, None, best == expected,
                    {"max_intersection": best, "formula": expected,
                     "pairs": len(balls) * (len(balls) - 1) // 2},
                ))
    return VerificationReport(grid=grid, cases=tuple(cases), skipped=tuple(skipped))


def verify_mappings(grid: GridSpec) -> VerificationReport:
    """Exhaustive mapping properties.

    ``bijection``: applied to the whole pure-insertion neighborhood of
    the all-zero word, the map is injective, onto the neighborhood of
    the target, and round-trips through its inverse.  ``injection``: the
    substitution-tolerant map is injective into the target ball; when
    the strictness conditions hold (t >= 1, 1 <= p < n, more than one
    run) the image is proper and the constructed witness lies in the
    ball but outside the image.
    """
    cases: list[CaseRecord] = []
    skipped: list[SkipRecord] = []
    run_bijection = "bijection" in grid.checks
    run_injection = "injection" in grid.checks
    for q in grid.q_values:
        for n in range(grid.n_max + 1):
            zero = Sequence.zeros(q, n)
            if run_bijection:
                for t in range(grid.budget_max + 1):
                    skip = _cap_skip(grid, "bijection", q, n, n + t, t, None, None)
                    if skip is not None:
                        skipped.append(skip)
                        continue
                    domain = [Sequence(q, w) for w in insertion_ball(zero, t)]
                    for x in _words(q, n):
                        target = insertion_ball(x, t)
                        image = set()
                        ok = True
                        note = ""
                        try:
                            for y in domain:
                                z = bijection_insertion(y, x, t).output
                                image.add(z.symbols)
                                if bijection_insertion_inverse(z, x, t) != y:
                                    ok = False
                                    note = f"round trip failed at y={y.text()}"
                                    break
                        except (DomainError, PostconditionError) as exc:
                            ok = False
                            note = f"{type(exc).__name__}: {exc}"
                        injective = len(image) == len(domain)
                        onto = image == target.member_set
                        ok = ok and injective and onto
                        cases.append(CaseRecord(
                            "bijection", q, n, t, None, None, x.text(), ok,
                            {"domain_size": len(domain), "image_size": len(image),
                             "target_size": len(target), "injective": injective,
                             "onto": onto, "note": note},
                        ))
            if run_injection:
                for t in range(grid.budget_max + 1):
                    for p in range(min(grid.budget_max, n) + 1):
                        skip = _cap_skip(grid, "injection", q, n, n + t, t, 0, p)
                        if skip is not None:
                            skipped.append(skip)
                            continue
                        params = BallParams(t, 0, p)
                        domain = [Sequence(q, w)
                                  for w in ball(zero, params, word_cap=grid.word_cap)]
                        for x in _words(q, n):
                            target = ball(x, params, word_cap=grid.word_cap)
                            image = set()
                            ok = True
                            note = ""
                            try:
                                for y in domain:
                                    image.add(injection_idp(y, x, t, p).output.symbols)
                            except (DomainError, PostconditionError) as exc:
                                ok = False
                                note = f"{type(exc).__name__}: {exc}"
                            injective = len(image) == len(domain)
                            contained = image <= target.member_set
                            ok = ok and injective and contained
                            detail = {
                                "domain_size": len(domain), "image_size": len(image),
                                "target_size": len(target), "injective": injective,
                                "contained": contained, "note": note,
                            }
                            strict = t >= 1 and 1 <= p < n and run_count(x) > 1
                            detail["strict_expected"] = strict
                            if strict and ok:
                                proper = len(image) < len(target)
                                try:
                                    w = witness_nonsurjective(x, t, p)
                                    witness_ok = (w.symbols in target.member_set
                                                  and w.symbols not in image)
                                    detail["witness"] = w.text()
                                except (DomainError, PostconditionError) as exc:
                                    witness_ok = False
                                    detail["note"] = f"{type(exc).__name__}: {exc}"
                                detail["proper_subset"] = proper
                                detail["witness_outside_image"] = witness_ok
                                ok = proper and witness_ok
                            cases.append(CaseRecord(
                                "injection", q, n, t, 0, p, x.text(), ok, detail))
    return VerificationReport(grid=grid, cases=tuple(cases), skipped=tuple(skipped))


def verify_witnesses(grid: GridSpec) -> VerificationReport:
    """Postconditions of the three witness constructors over every
    admissible word of the grid."""
    cases: list[CaseRecord] = []
    skipped: list[SkipRecord] = []
    for q in grid.q_values:
        for n in range(grid.n_max + 1):
            for x in _words(q, n):
                runs = run_count(x)
                if runs <= 1:
                    continue
                # swap-plus-flips member of the (t, t, p)-ball
                for t in range(1, grid.budget_max + 1):
                    for p in range(grid.budget_max + 1):
                        if t + p >= n:
                            continue
                        ok = True
                        detail: dict = {"kind": "swap-flip"}
                        try:
                            z = witness_swap_flip(x, t, p)
                            dist = hamming(z, x)
                            member = member_definitional(z, x, BallParams(t, t, p))
                            detail.update(witness=z.text(), hamming=dist, member=member)
                            ok = dist == t + p + 1 and member
                        except (DomainError, PostconditionError) as exc:
                            ok = False
                            detail["note"] = f"{type(exc).__name__}: {exc}"
                        cases.append(CaseRecord(
                            "witnesses", q, n, t, t, p, x.text(), ok, detail))
                # distinct deletion pair
                for s in range(1, min(grid.budget_max, n - 1) + 1):
                    ok = True
                    detail = {"kind": "deletion-pair"}
                    try:
                        u, v = witness_deletion_pair(x, s)
                        members = (u.symbols in deletion_ball(x, s).member_set
                                   and v.symbols in deletion_ball(x, s).member_set)
                        detail.update(u=u.text(), v=v.text(), members=members)
                        ok = u != v and members
                    except (DomainError, PostconditionError) as exc:
                        ok = False
                        detail["note"] = f"{type(exc).__name__}: {exc}"
                    cases.append(CaseRecord(
                        "witnesses", q, n, None, s, None, x.text(), ok, detail))
                # unreached member of the (t, 0, p)-ball
                for t in range(1, grid.budget_max + 1):
                    for p in range(1, min(grid.budget_max, n - 1) + 1):
                        ok = True
                        detail = {"kind": "nonsurjective"}
                        try:
                            z = witness_nonsurjective(x, t, p)
                            member = member_definitional(z, x, BallParams(t, 0, p))
                            prefix = all(z.symbols[i] != x.symbols[i] for i in range(p))
                            tail_free = not is_subsequence(
                                Sequence(q, x.symbols[p:]), Sequence(q, z.symbols[p:]))
                            detail.update(witness=z.text(), member=member,
                                          prefix_mismatch=prefix, tail_not_embeddable=tail_free)
                            ok = member and prefix and tail_free
                        except (DomainError, PostconditionError) as exc:
                            ok = False
                            detail["note"] = f"{type(exc).__name__}: {exc}"
                        cases.append(CaseRecord(
                            "witnesses", q, n, t, 0, p, x.text(), ok, detail))
    return VerificationReport(grid=grid, cases=tuple(cases), skipped=tuple(skipped))


_RUNNERS = {
    "theorem": verify_theorem,
    "formulas": verify_formulas,
    "containments": verify_containments,
    "intersection": verify_intersection_max,
    "witnesses": verify_witnesses,
}


def run_grid(grid: GridSpec) -> VerificationReport:
    """Run every check selected by the grid, in canonical order."""
    reports = []
    mappings_done = False
    for check in grid.checks:
        if check in ("bijection", "injection"):
            if not mappings_done:
                reports.append(verify_mappings(grid))
                mappings_done = True
            continue
        reports.append(_RUNNERS[check](grid))
    return merge_reports(grid, reports)
