"""The rigidity-exclusion sieve.

For r >= 4 a surviving configuration is a series dimension alpha >= r
together with one of four cases (split by the sign of d - g and by
whether the special-series locus has dimension 0 or >= 1) whose
dimension-count inequality is satisfiable and whose genus caps hold.
Everything is exact integer arithmetic; rational thresholds are compared
by cross-multiplication.

The r = 3 path is a separate two-branch chain with its own constant
(derived from requiring the moduli image to have dimension <= 22) plus a
classification table for the handful of exceptional (d, g).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from . import bounds
from .bounds import CastelnuovoProfile


class SieveCase(enum.Enum):
    """The four exclusion cases: 1/2 for d < g, 3/4 for d >= g; odd cases
    assume a zero-dimensional series locus, even cases a positive one."""

    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    CASE4 = "case4"

    @property
    def index(self) -> int:
        return int(self.value[-1])

    def applies(self, d: int, g: int) -> bool:
        if self.index <= 2:
            return d < g
        return d >= g


class Ineq(enum.Enum):
    """The four derived inequalities obtained by substituting the genus
    caps into the case systems (7/9 via pi1, 8/10 via pi2)."""

    INEQ7 = "ineq7"
    INEQ8 = "ineq8"
    INEQ9 = "ineq9"
    INEQ10 = "ineq10"


NON_SPECIAL = "non-special"
NO_ALPHA = "no-alpha"
ALL_CASES_INFEASIBLE = "all-cases-infeasible"
GENUS_ZERO = "genus-zero"


@dataclass(frozen=True)
class SieveWitness:
    """A surviving (alpha, case) configuration with its slack and profile."""

    alpha: int
    case: SieveCase
    i: int
    j: int
    profile: CastelnuovoProfile
    slack: int

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "case": self.case.value,
            "i": self.i,
            "j": self.j,
            "slack": self.slack,
            "profile": self.profile._asdict(),
        }


@dataclass(frozen=True)
class R3Witness:
    """A surviving alpha in the r = 3 chain; branch records which of the
    two series-locus branches fired."""

    alpha: int
    branch: str  # "dim-w-0" or "dim-w-pos"
    slack: int

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "branch": self.branch, "slack": self.slack}


SURVIVORS = "survivors"
EXCLUDED = "excluded"
OUT_OF_SCOPE = "out-of-scope"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a scan: survivors with witnesses, an exclusion with
    machine-checkable reasons, or out-of-scope."""

    outcome: str
    witnesses: tuple = ()
    reasons: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.outcome == SURVIVORS and not self.witnesses:
            raise ValueError("survivor verdict requires at least one witness")
        if self.outcome == EXCLUDED and not self.reasons:
            raise ValueError("exclusion requires at least one reason")

    @property
    def is_survivor(self) -> bool:
        return self.outcome == SURVIVORS

    @staticmethod
    def survivors(witnesses) -> "Verdict":
        return Verdict(SURVIVORS, witnesses=tuple(witnesses))

    @staticmethod
    def excluded(*reasons: str) -> "Verdict":
        return Verdict(EXCLUDED, reasons=tuple(reasons))

    @staticmethod
    def out_of_scope(reason: str) -> "Verdict":
        return Verdict(OUT_OF_SCOPE, reasons=(reason,))

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "reasons": list(self.reasons),
        }


_EXCLUDED_NON_SPECIAL = Verdict(EXCLUDED, reasons=(NON_SPECIAL,))
_EXCLUDED_NO_ALPHA = Verdict(EXCLUDED, reasons=(NO_ALPHA,))
_EXCLUDED_INFEASIBLE = Verdict(EXCLUDED, reasons=(ALL_CASES_INFEASIBLE,))
_OUT_OF_SCOPE_G0 = Verdict(OUT_OF_SCOPE, reasons=(GENUS_ZERO,))


def case_slack(case: SieveCase, d: int, g: int, r: int, alpha: int) -> int:
    """Right side minus left side of the case's inequality; feasible iff >= 0.

    Case1/Case3: (r-3)g - (r+1)(d-alpha) + 3
    Case2:       (r-3)g - rd + (r-2)alpha + 4
    Case4:       (r-4)g - (r-1)d + (r-2)alpha + 4
    """
    if case is SieveCase.CASE2:
        return (r - 3) * g - r * d + (r - 2) * alpha + 4
    if case is SieveCase.CASE4:
        return (r - 4) * g - (r - 1) * d + (r - 2) * alpha + 4
    return (r - 3) * g - (r + 1) * (d - alpha) + 3


def alpha_cap(case: SieveCase, d: int, g: int) -> int:
    """Largest alpha allowed by the case: floor of (d+1)/3, d/3,
    (2d-g+1)/3, (2d-g)/3 for cases 1..4 respectively."""
    if case is SieveCase.CASE1:
        return (d + 1) // 3
    if case is SieveCase.CASE2:
        return d // 3
    if case is SieveCase.CASE3:
        return (2 * d - g + 1) // 3
    return (2 * d - g) // 3


def _slack_alpha_lo(case: SieveCase, d: int, g: int, r: int) -> int:
    """Least alpha with case_slack >= 0 (each slack is increasing in alpha)."""
    if case is SieveCase.CASE2:
        num = r * d - (r - 3) * g - 4
        den = r - 2
    elif case is SieveCase.CASE4:
        num = (r - 1) * d - (r - 4) * g - 4
        den = r - 2
    else:
        num = (r + 1) * d - (r - 3) * g - 3
        den = r + 1
    return -(-num // den)


def genus_caps_ok(d: int, g: int, alpha: int) -> bool:
    """Whether genus g survives the three-step genus caps at (d, alpha):
    g <= pi(d, alpha) always; g <= pi1 once d >= 2*alpha + 1; and for
    alpha >= 8 with d >= 2*alpha + 3 also g <= pi2 and g < pi1."""
    if g > bounds.max_genus_pi(d, alpha):
        return False
    prof = bounds.castelnuovo_profile(d, alpha)
    if d >= 2 * alpha + 1 and g > prof.pi1:
        return False
    if alpha >= 8 and d >= 2 * alpha + 3 and (g > prof.pi2 or g >= prof.pi1):
        return False
    return True


def _collect_witnesses(d: int, g: int, r: int, apply_genus_caps: bool = True) -> list[SieveWitness]:
    """All (alpha, case) configurations passing slack, alpha caps and
    (optionally) genus caps; sorted by (alpha, case)."""
    emb = bounds.embed_dim_cap(d, g)
    found: list[SieveWitness] = []
    cases = (SieveCase.CASE1, SieveCase.CASE2) if d < g else (SieveCase.CASE3, SieveCase.CASE4)
    for case in cases:
        hi = min(emb, alpha_cap(case, d, g))
        lo = max(r, _slack_alpha_lo(case, d, g, r))
        for alpha in range(lo, hi + 1):
            if apply_genus_caps and not genus_caps_ok(d, g, alpha):
                continue
            found.append(
                SieveWitness(
                    alpha=alpha,
                    case=case,
                    i=d + 1 - 3 * alpha,
                    j=d - 3 * alpha,
                    profile=bounds.castelnuovo_profile(d, alpha),
                    slack=case_slack(case, d, g, r, alpha),
                )
            )
    found.sort(key=lambda w: (w.alpha, w.case.index))
    return found


def scan(d: int, g: int, r: int) -> Verdict:
    """Full sieve verdict for (d, g, r) with r >= 4.

    Out-of-scope for genus 0; non-special exclusion for g = 1 or
    d > 2g - 2; otherwise enumerates alpha from r up to the embedding
    cap in the two applicable cases and returns all witnesses, or an
    exclusion naming why none exist.
    """
    if r < 4:
        raise ValueError(f"scan requires r >= 4 (got {r}); use r3_sieve for r = 3")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if g == 0:
        return _OUT_OF_SCOPE_G0
    if g == 1 or d > 2 * g - 2:
        return _EXCLUDED_NON_SPECIAL
    if bounds.embed_dim_cap(d, g) < r:
        return _EXCLUDED_NO_ALPHA
    found = _collect_witnesses(d, g, r)
    if found:
        return Verdict.survivors(found)
    return _EXCLUDED_INFEASIBLE


def derived_slack(which: Ineq, r: int, alpha: int, m: int, eps: int, mu: int) -> int:
    """Twice the derived-inequality expression (doubling clears the
    (r-3)/2 half-integer coefficient).

    INEQ7/INEQ9 take (m, eps, mu) in the alpha-division convention
    (0 <= eps <= alpha-1, mu = [eps == alpha-1]) and are satisfied when
    the value is > 0; INEQ8/INEQ10 take the (alpha+1)-division convention
    (0 <= eps <= alpha, mu in {0,1,2} by the three-way split) and are
    satisfied when >= 0.
    """
    if alpha < 8:
        raise ValueError(f"need alpha >= 8, got {alpha}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if which in (Ineq.INEQ7, Ineq.INEQ9):
        if not 0 <= eps <= alpha - 1:
            raise ValueError(f"eps={eps} out of range for alpha={alpha}")
        if mu != (1 if eps == alpha - 1 else 0):
            raise ValueError(f"mu={mu} inconsistent with eps={eps}, alpha={alpha}")
    else:
        if not 0 <= eps <= alpha:
            raise ValueError(f"eps={eps} out of range for alpha={alpha}")
        expected = 2 if eps == alpha else (1 if eps >= alpha - 2 else 0)
        if mu != expected:
            raise ValueError(f"mu={mu} inconsistent with eps={eps}, alpha={alpha}")

    if which is Ineq.INEQ7:
        return (
            alpha * (m - 1) * ((r - 3) * m - 2 * (r + 1))
            + 2 * (eps + 1) * ((r - 3) * m - r - 1)
            + 6
            + 2 * mu * (r - 3)
        )
    if which is Ineq.INEQ8:
        return (
            (alpha + 1) * (m - 1) * ((r - 3) * m - 2 * (r + 1))
            + 2 * (eps + 1) * ((r - 3) * m - r - 1)
            - 2 * r
            + 4
            + 2 * (m + mu) * (r - 3)
        )
    binom = m * (m - 1) // 2
    if which is Ineq.INEQ9:
        return (
            2 * alpha * ((r - 3) * binom - m * r + r - 2)
            + 2 * (eps + 1) * ((r - 3) * m - r)
            + 8
            + 2 * mu * (r - 3)
        )
    return (
        2 * (alpha + 1) * ((r - 3) * binom - m * r + r - 2)
        + 2 * (eps + 1) * ((r - 3) * m - r)
        - 2 * r
        + 12
        + 2 * (m + mu) * (r - 3)
    )


def derived_satisfied(which: Ineq, value: int) -> bool:
    """Strict positivity for INEQ7/INEQ9, non-negativity for INEQ8/INEQ10."""
    if which in (Ineq.INEQ7, Ineq.INEQ9):
        return value > 0
    return value >= 0


def _gt(d: int, g: int, p: int, q: int, s: int) -> bool:
    """d > (p*g + q)/s by cross-multiplication (s > 0)."""
    return s * d > p * g + q


def range_thm41(d: int, g: int, r: int, *, honor_exception: bool = True) -> bool:
    """Whether (d, g) lies in the hypothesis range of the r >= 4 theorem.

    All thresholds are exact rational comparisons; the r = 5 window adds
    the extra clause 3d > g + 22 for 101 <= d <= 113, and r = 9 excepts
    the single point (30, 34) unless honor_exception is disabled.
    """
    if r < 4:
        raise ValueError(f"hypothesis ranges are defined for r >= 4, got {r}")
    if g < 1:
        raise ValueError(f"need g >= 1, got {g}")
    if r == 4:
        return (
            _gt(d, g, 17, 72, 64)
            or _gt(d, g, 4, 15, 15)
            or (_gt(d, g, 1, 18, 4) and _gt(d, g, 17, 44, 64))
        )
    if r == 5:
        basic = (
            _gt(d, g, 9, 20, 20)
            or _gt(d, g, 10, 17, 22)
            or (_gt(d, g, 2, 25, 5) and _gt(d, g, 9, 10, 20))
        )
        if 101 <= d <= 113:
            return basic and _gt(d, g, 1, 22, 3)
        return basic
    if r == 6:
        return (
            _gt(d, g, 13, 20, 22)
            or _gt(d, g, 3, 3, 5)
            or (_gt(d, g, 1, 10, 2) and _gt(d, g, 13, 10, 22))
            or (_gt(d, g, 1, 10, 2) and _gt(d, g, 3, -1, 5))
        )
    if r == 7:
        return _gt(d, g, 19, 24, 27) or (_gt(d, g, 4, 39, 7) and _gt(d, g, 76, 71, 108))
    if r == 8:
        return _gt(d, g, 4, 1, 5) or _gt(d, g, 5, -4, 6)
    if r == 9:
        if honor_exception and (d, g) == (30, 34):
            return False
        return _gt(d, g, 9, -5, 10) or _gt(d, g, 29, 3, 33)
    if r == 10:
        return _gt(d, g, 21, -4, 22) or _gt(d, g, 17, 12, 18)
    if r == 11:
        return d > g
    return (r + 1) * d > 2 * (r - 5) * g - r + 14


_RANGE_CLAUSES: dict[int, tuple[tuple[int, int, int], ...]] = {
    4: ((17, 72, 64), (4, 15, 15), (17, 44, 64)),
    5: ((9, 20, 20), (10, 17, 22), (9, 10, 20)),
    6: ((13, 20, 22), (3, 3, 5), (13, 10, 22), (3, -1, 5)),
    7: ((19, 24, 27), (76, 71, 108)),
    8: ((4, 1, 5), (5, -4, 6)),
    9: ((9, -5, 10), (29, 3, 33)),
    10: ((21, -4, 22), (17, 12, 18)),
}


def range_g_limit(d: int, r: int) -> int:
    """An over-approximated upper bound for g with (d, g) in the
    hypothesis range: every range clause has the shape d > (p*g + q)/s
    with p > 0, so each is down-closed in g and dies at g = (s*d - q)/p.
    Callers still filter by range_thm41."""
    if r < 4:
        raise ValueError(f"need r >= 4, got {r}")
    if r == 11:
        return max(d - 1, 0) + 1
    if r >= 12:
        return max(((r + 1) * d + r - 14) // (2 * (r - 5)), 0) + 1
    lim = 0
    for p, q, s in _RANGE_CLAUSES[r]:
        lim = max(lim, (s * d - q) // p)
    return max(lim, 0) + 1


def r3_sieve(d: int, g: int) -> Verdict:
    """The r = 3 exclusion chain on the reduced range g >= 5, d <= g.

    A configuration survives if 4d <= 4*alpha + 25 for some
    3 <= alpha <= (d+1)/3 (zero-dimensional branch), or
    4d <= cap + 4*alpha + 25 for some 3 <= alpha <= d/3 whose
    positive-dimension cap is >= 1.  Witnesses carry branch and slack.
    """
    if g < 5:
        raise ValueError(f"r = 3 sieve requires g >= 5, got {g}")
    if d > g:
        raise ValueError(f"r = 3 sieve requires d <= g, got d={d}, g={g}")
    found: list[R3Witness] = []
    # Both slacks increase by at least 1 per unit of alpha, so each branch
    # fires exactly on an upper interval of its alpha range.
    lo = max(3, -(-(4 * d - 25) // 4))
    for alpha in range(lo, (d + 1) // 3 + 1):
        found.append(R3Witness(alpha, "dim-w-0", 4 * alpha + 25 - 4 * d))
    lo = max(3, 3 * d - 26)
    for alpha in range(lo, d // 3 + 1):
        cap = bounds.agh_cap(d, g, alpha)
        if cap < 1:
            continue
        slack = cap + 4 * alpha + 25 - 4 * d
        if slack >= 0:
            found.append(R3Witness(alpha, "dim-w-pos", slack))
    if found:
        return Verdict.survivors(found)
    if (d + 1) // 3 < 3:
        return _EXCLUDED_NO_ALPHA
    return _EXCLUDED_INFEASIBLE


EMPTY = "empty"
DOMINATES = "dominates"
EXACT_IMAGE = "exact-image"
MIN_IMAGE_IF_NONEMPTY = "min-image-if-nonempty"


@dataclass(frozen=True)
class R3Classification:
    """Moduli-image classification of (d, g) in 3-space: empty scheme,
    dominating component, known exact image dimension, or a certified
    lower bound conditional on nonemptiness."""

    kind: str
    image_dim: Optional[int] = None

    def render(self) -> str:
        if self.image_dim is None:
            return self.kind
        return f"{self.kind}({self.image_dim})"


_R3_TABLE: dict[tuple[int, int], int] = {
    (7, 6): 13,
    (8, 7): 17,
    (8, 8): 17,
    (8, 9): 18,
    (9, 9): 21,
    (9, 10): 21,
    (9, 12): 23,
}


def r3_classify(d: int, g: int) -> R3Classification:
    """Decision table for curves in 3-space (see class docstring)."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if g == 0:
        return R3Classification(OUT_OF_SCOPE)
    max_g = bounds.max_genus_pi(d, 3) if d >= 3 else 0
    if g > max_g:
        return R3Classification(EMPTY)
    if d == g + 1 and g <= 5:
        return R3Classification(EMPTY)
    if (d, g) == (9, 11):
        return R3Classification(EMPTY)
    if (d, g) in _R3_TABLE:
        return R3Classification(EXACT_IMAGE, _R3_TABLE[(d, g)])
    if d == g + 1 and g >= 8:
        return R3Classification(DOMINATES)
    if d >= g + 3 or (d == g + 2 and g >= 5) or 1 <= g <= 4:
        return R3Classification(DOMINATES)
    return R3Classification(MIN_IMAGE_IF_NONEMPTY, 23)
