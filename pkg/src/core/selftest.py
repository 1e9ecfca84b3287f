"""
Acceptance harness behind ``qgrass selftest``.

Each check recomputes one identity over its whole parameter range and reports the first
counterexample it meets. ``quick`` shrinks the ranges so the run stays interactive.
"""

import logging
import random
from typing import Callable, List, Optional, Tuple

from loguru import logger as loguru_logger
from pydantic import BaseModel

from src.config.config import AppConfig
from src.core.alpha_beta import alpha_beta_bijection, alpha_dimension, alpha_set, beta_dimension, beta_set
from src.core.cluster import (
    cc_of, cluster_monomial_a11, cluster_monomial_a21, cluster_rules_a11, cluster_rules_a21,
    cluster_var_a11, cluster_var_a21, positivity_check, s_n, u_n_geometric, u_n_recurrence,
    z_n_geometric, z_n_recurrence,
)
from src.core.coefficient_quiver import enumerate_fixed_points
from src.core.errors import QuiverGrassError
from src.core.fq_oracle import count_points, matrix_rep
from src.core.hom_basis import cell_dimension, cell_dimension_recursive
from src.core.invariants import betti_special, dual_e, euler_char, poincare, poincare_from_cells
from src.models.models import DimVector, GrassID, Indecomposable, Kind, RepDescriptor
from src.observability.observability import is_tracing_enabled, observe_if_available, timed

logger = logging.getLogger('quiver_grass.selftest')

Outcome = Tuple[bool, str]


class CheckRecord(BaseModel):
    criterion: int
    name: str
    passed: bool
    elapsed: float
    detail: str


def _regular_range(n: int):
    for e1 in range(n + 1):
        for e2 in range(e1, n + 1):
            yield DimVector(d1=e1, d2=e2)


def _all_e(m: Indecomposable):
    d = m.dim
    for e1 in range(d.d1 + 1):
        for e2 in range(d.d2 + 1):
            yield DimVector(d1=e1, d2=e2)


def _kinds(n: int):
    yield Indecomposable.P(n)
    if n >= 1:
        yield Indecomposable.R(n)
    yield Indecomposable.I(n)


def check_master_identity(max_n: int, jobs: int) -> Outcome:
    for n in range(1, max_n + 1):
        for e in _regular_range(n):
            gid = GrassID(ambient=Indecomposable.R(n), e=e)
            cells = poincare_from_cells(gid.ambient, e, jobs=jobs)
            if cells != poincare(gid):
                return False, f"{gid}: cells give {cells}, closed form {poincare(gid)}"
    return True, f"R_n for n <= {max_n}, every e"


def check_betti_special(max_n: int) -> Outcome:
    for n in range(1, max_n + 1):
        for e1 in range(n):
            gid = GrassID.of(Indecomposable.R(n), e1, e1 + 1)
            if betti_special(n, e1) != poincare(gid):
                return False, f"{gid}: piecewise {betti_special(n, e1)} vs {poincare(gid)}"
    return True, f"n <= {max_n}"


def check_oracle(max_n: int, fields: Tuple[int, ...], config: AppConfig) -> Outcome:
    for n in range(max_n + 1):
        for m in _kinds(n):
            for q in fields:
                rep = matrix_rep(m, q)
                for e in _all_e(m):
                    expected = poincare(GrassID(ambient=m, e=e)).evaluate(q)
                    got = count_points(rep, e, jobs=config.jobs, bounds=config.oracle)
                    if got != expected:
                        return False, f"Gr_{e}({m}) over F_{q}: counted {got}, P(q) = {expected}"
    return True, f"P_n, R_n, I_n for n <= {max_n}, q in {list(fields)}"


def check_recursion(max_n: int) -> Outcome:
    for n in range(1, max_n + 1):
        m = Indecomposable.R(n)
        for e in _regular_range(n):
            for point in enumerate_fixed_points(m, e):
                direct = cell_dimension(m, point)
                recursive = cell_dimension_recursive(n, point.summands)
                if direct != recursive:
                    return False, f"{point.label} in R_{n}: Hom+ gives {direct}, recursion {recursive}"
    return True, f"every fixed point of Gr_e(R_n), n <= {max_n}"


def check_duality(max_n: int) -> Outcome:
    for n in range(1, max_n + 1):
        for e in _regular_range(n):
            left = poincare(GrassID(ambient=Indecomposable.R(n), e=e))
            right = poincare(GrassID(ambient=Indecomposable.R(n), e=dual_e(n, e)))
            if left != right:
                return False, f"R_{n}, e={e}: {left} vs {right}"
    return True, f"n <= {max_n}"


def check_euler(max_n: int) -> Outcome:
    for n in range(max_n + 1):
        for m in _kinds(n):
            for e in _all_e(m):
                gid = GrassID(ambient=m, e=e)
                counts = {len(enumerate_fixed_points(m, e)), euler_char(gid), poincare(gid).evaluate(1)}
                if len(counts) != 1:
                    return False, f"{gid}: fixed points / binomials / P(1) = {sorted(counts)}"
    return True, f"P_n, R_n, I_n for n <= {max_n}"


def check_z(max_n: int) -> Outcome:
    for n in range(1, max_n + 1):
        recurrence = z_n_recurrence(n)
        if z_n_geometric(n) != recurrence or s_n(n) - s_n(n - 2) != recurrence:
            return False, f"z_{n} constructions disagree"
    return True, f"1 <= n <= {max_n}"


def check_u(max_n: int) -> Outcome:
    for n in range(1, max_n + 1):
        if u_n_geometric(n) != u_n_recurrence(n):
            return False, f"u_{n} constructions disagree"
    return True, f"1 <= n <= {max_n}"


def check_cc_alignment(max_n: int) -> Outcome:
    for n in range(max_n + 1):
        if cc_of(RepDescriptor.of(Indecomposable.P(n))) != cluster_var_a11(-n):
            return False, f"CC(P_{n}) != x_{-n}"
        if cc_of(RepDescriptor.of(Indecomposable.I(n))) != cluster_var_a11(n + 3):
            return False, f"CC(I_{n}) != x_{n + 3}"
    return True, f"CC(P_n) = x_-n and CC(I_n) = x_n+3 for n <= {max_n}"


def check_laurent(bound: int) -> Outcome:
    # any inexact division raises and is reported by the runner
    for k in range(-bound, bound + 1):
        cluster_var_a11(k, bound=bound)
        cluster_var_a21(k, bound=bound)
    return True, f"|k| <= {bound}"


def check_alpha_beta(max_n: int) -> Outcome:
    for n in range(1, max_n + 1):
        for e in _regular_range(n):
            for alpha in alpha_set(n, e):
                beta = alpha_beta_bijection(n, e, alpha)
                if beta_dimension(n, beta) != alpha_dimension(n, alpha):
                    return False, f"n={n}, e={e}: {alpha} changes dimension"
            images = {alpha_beta_bijection(n, e, a) for a in alpha_set(n, e)}
            targets = set(beta_set(n, e))
            if images != targets:
                return False, f"n={n}, e={e}: image differs from the beta set"
    return True, f"n <= {max_n}"


A11_CLUSTERS = (1, 2, -1)
A21_CLUSTERS = (1, 2, 0)


def check_positivity(monomials: int, seed: int = 7) -> Outcome:
    rng = random.Random(seed)
    a11 = [z_n_recurrence(n) for n in range(1, 5)]
    a21 = [u_n_recurrence(n) for n in range(1, 4)]
    for _ in range(monomials // 2):
        a11.append(cluster_monomial_a11(rng.randint(-3, 4), rng.randint(0, 3), rng.randint(0, 3)))
    for _ in range(monomials - monomials // 2):
        a21.append(cluster_monomial_a21(rng.randint(-2, 3), rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)))
    for p in a11:
        for k in A11_CLUSTERS:
            if not positivity_check(p, cluster_rules_a11(k)):
                return False, f"{p.to_text()} is not positive in the cluster starting at x_{k}"
    for p in a21:
        for m in A21_CLUSTERS:
            if not positivity_check(p, cluster_rules_a21(m)):
                return False, f"{p.to_text()} is not positive in the cluster starting at x_{m}"
    return True, f"{len(a11) + len(a21)} elements in {len(A11_CLUSTERS)} clusters each"


def _checks(config: AppConfig, quick: bool) -> List[Tuple[int, str, Callable[[], Outcome]]]:
    small = quick
    return [
        (1, "master cell identity", lambda: check_master_identity(5 if small else 8, config.jobs)),
        (2, "special Betti formula", lambda: check_betti_special(10)),
        (3, "Lefschetz oracle", lambda: check_oracle(2 if small else 4, (2, 3), config)),
        (4, "recursion vs Hom+", lambda: check_recursion(5 if small else 8)),
        (5, "duality", lambda: check_duality(10)),
        (6, "Euler characteristics", lambda: check_euler(5 if small else 8)),
        (7, "z_n identities", lambda: check_z(3 if small else 6)),
        (8, "u_n identities", lambda: check_u(3 if small else 5)),
        (9, "CC alignment", lambda: check_cc_alignment(4)),
        (10, "Laurent phenomenon", lambda: check_laurent(8 if small else 12)),
        (11, "alpha-beta bijection", lambda: check_alpha_beta(4 if small else 6)),
        (12, "positivity", lambda: check_positivity(10)),
    ]


@observe_if_available(name="run_selftest")
def run_selftest(config: AppConfig, quick: bool = False, only: Optional[List[int]] = None) -> List[CheckRecord]:
    records = []
    loguru_logger.info(f"selftest quick={quick} tracing={'on' if is_tracing_enabled() else 'off'}")
    for criterion, name, check in _checks(config, quick):
        if only and criterion not in only:
            continue
        with timed(name) as clock:
            try:
                passed, detail = check()
            except (QuiverGrassError, ValueError) as e:
                passed, detail = False, f"{type(e).__name__}: {e}"
        record = CheckRecord(criterion=criterion, name=name, passed=passed, elapsed=clock["elapsed"], detail=detail)
        records.append(record)
        loguru_logger.info(f"selftest {criterion} {name}: {'PASS' if passed else 'FAIL'} ({record.elapsed:.2f}s) {detail}")
        if not passed:
            logger.error(f"criterion {criterion} ({name}) failed: {detail}")
    return records
