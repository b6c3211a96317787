"""
FusedHecke Conjecture Checks
The fused q-antisymmetriser AS_{k,n}(q) and verification that it is central
and generates the kernel of the Schur-Weyl action
"""

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import linalg
import sworacle
from config import get_config
from error_handling import BudgetExceededError, InvariantError, PreconditionError
from fused import (
    FusedElem,
    basis_element,
    from_hecke,
    multiply_at,
    multiply_q,
)
from hecke import HeckeElem, basis_element as hecke_basis_element, invert_word, mul_word
from logging_config import get_logger, log_performance, log_with_context
from monitoring import CheckStatus, ResourceMonitor, parallel_map
from permcomb import (
    Blocks,
    FusedPerm,
    all_perms,
    enumerate_fused,
    from_word,
    length,
    matrix_from_perm,
    reduced_word,
    simple_reflection,
)
from qcoeff import q
from seminormal import fused_irrep
from shapes import kostka, partitions, s_set
from validation import CompositionValidator

logger = get_logger()

# The ideal rank is also confirmed over Q(q) up to this weight
SYMBOLIC_IDEAL_WEIGHT = 5


@dataclass
class ConjReport:
    """Outcome of both checks for one (k, N)."""

    k: Tuple[int, ...]
    N: int
    centrality: CheckStatus = CheckStatus.SKIPPED
    ideal_dim_expected: int = 0
    ideal_dim_computed: int = 0
    ideal_generation: CheckStatus = CheckStatus.SKIPPED
    q_mode: str = "symbolic"
    kernel_member: Optional[bool] = None
    kernel_method: Optional[str] = None
    certificate: str = "lower-bound"
    q_points: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return CheckStatus.FAILED not in (self.centrality, self.ideal_generation)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["k"] = list(self.k)
        data["centrality"] = self.centrality.value
        data["ideal_generation"] = self.ideal_generation.value
        return data


def _check_composition(k: Sequence[int], n: int) -> Tuple[int, ...]:
    k = tuple(k)
    if len(k) < n:
        raise PreconditionError(
            f"Composition {k} has fewer than {n} entries", operation="gamma", k=k
        )
    prefix = k[:n]
    validator = CompositionValidator(positive=True, decreasing=True)
    if not validator.validate(prefix).is_valid:
        raise PreconditionError(
            "AS_{k,n} needs positive weakly decreasing entries",
            operation="gamma",
            k=prefix,
        )
    return prefix


def gamma_word(k: Sequence[int], n: int) -> Tuple[int, ...]:
    """σ_{k1}···σ_2 · σ_{k1+k2}···σ_3 ··· as a word in the generators."""
    k = _check_composition(k, n)
    word: List[int] = []
    total = k[0]
    for a in range(2, n + 1):
        word.extend(range(total, a - 1, -1))
        total += k[a - 1]
    return tuple(word)


def gamma(k: Sequence[int], n: int) -> Tuple[HeckeElem, HeckeElem]:
    """Γ as a single basis element, and its inverse."""
    k = _check_composition(k, n)
    m = sum(k)
    word = gamma_word(k, n)
    w = from_word(word, m)
    if length(w) != len(word):
        raise InvariantError("Γ is not a reduced product", kind="gamma", value=word)
    return hecke_basis_element(w), invert_word(word, m)


@lru_cache(maxsize=None)
def _as_element(k: Tuple[int, ...]) -> FusedElem:
    n, m = len(k), sum(k)
    word = gamma_word(k, n)
    _, inverse = gamma(k, n)
    total = HeckeElem(m)
    for w in all_perms(n):
        conjugated = mul_word(mul_word(inverse, reduced_word(w), "left"), word, "left")
        total = total + conjugated.scale((-(q ** (-1))) ** length(w))
    return from_hecke(total, Blocks(k))


def as_element(k: Sequence[int], n: int) -> FusedElem:
    """
    AS_{k,n}(q) = Σ_{w ∈ S_n} (-q^{-1})^{ℓ(w)} P Γ σ_w Γ^{-1} P.

    σ_w permutes the first strand of every block; Γ brings those strands
    to positions 1..n.
    """
    return _as_element(_check_composition(k, n))


def as_classical(k: Sequence[int], n: int) -> FusedElem:
    """AS_{k,n}(1) from diagrams: add k_a - 1 vertical edges to each permutation."""
    k = _check_composition(k, n)
    blocks = Blocks(k)
    terms: Dict[FusedPerm, int] = {}
    for w in all_perms(n):
        mat = [[0] * n for _ in range(n)]
        for a in range(n):
            mat[a][a] += k[a] - 1
            mat[a][w.images[a] - 1] += 1
        terms[FusedPerm.of(mat)] = (-1) ** length(w)
    return FusedElem(blocks, terms)


def _centrality_labels(blocks: Blocks) -> List[FusedPerm]:
    """Labels AS must commute with: the simple reflections when every block is 1."""
    if all(part == 1 for part in blocks.parts):
        m = blocks.m
        return [matrix_from_perm(simple_reflection(i, m), blocks) for i in range(1, m)]
    return list(enumerate_fused(blocks))


@log_performance("conjectures.check_centrality")
def check_centrality(
    k: Sequence[int], N: int, threads: Optional[int] = None
) -> Tuple[CheckStatus, str]:
    """
    AS·F_w = F_w·AS for every standard basis label w of H_{k,N+1}(q).

    Exact over Q(q) up to the symbolic weight, then at three generic
    points up to the evaluated weight; beyond that the check is skipped.
    """
    config = get_config()
    prefix = _check_composition(k, N + 1)
    weight = sum(prefix)
    budget = config.budget
    if weight > budget.max_weight_evaluated:
        logger.log_budget_skip("centrality", weight, budget.max_weight_evaluated)
        return CheckStatus.SKIPPED, "skipped"

    blocks = Blocks(prefix)
    AS = as_element(prefix, N + 1)
    if weight <= budget.max_weight_symbolic:
        mode = "symbolic"

        def commutes(w):
            F = basis_element(blocks, w)
            return multiply_q(AS, F) == multiply_q(F, AS)

        results = parallel_map(commutes, _centrality_labels(blocks), threads)
    else:
        mode = "evaluated"
        points = config.arithmetic.three_points()
        specialized = {q0: AS.specialize(q0) for q0 in points}

        def commutes(w):
            F = {w: Fraction(1)}
            return all(
                multiply_at(blocks, specialized[q0], F, q0)
                == multiply_at(blocks, F, specialized[q0], q0)
                for q0 in points
            )

        results = parallel_map(commutes, _centrality_labels(blocks), threads)

    status = CheckStatus.VERIFIED if all(results) else CheckStatus.FAILED
    logger.log_check("centrality", status.value, k=list(prefix), N=N, mode=mode)
    return status, mode


def expected_ideal_dim(k: Sequence[int], N: int) -> int:
    """Σ K_{λ,k}² over λ ∈ S_{k,N+1} with exactly N+1 rows."""
    prefix = tuple(k)[: N + 1]
    return sum(kostka(lam, prefix) ** 2 for lam in s_set(prefix, N + 1) if lam.length == N + 1)


def _ideal_rows_at(
    blocks: Blocks, AS: FusedElem, q0: Fraction, threads: Optional[int] = None
) -> Iterator[Dict[int, Fraction]]:
    """Rows F_u·AS·F_v at q0 in (u, v) order, computed a chunk of v at a time."""
    labels = enumerate_fused(blocks)
    index = {w: j for j, w in enumerate(labels)}
    specialized = AS.specialize(q0)
    chunk = max(threads or get_config().execution.threads, 1)
    for u in labels:
        left = multiply_at(blocks, {u: Fraction(1)}, specialized, q0)
        for start in range(0, len(labels), chunk):
            batch = labels[start : start + chunk]
            products = parallel_map(
                lambda v: multiply_at(blocks, left, {v: Fraction(1)}, q0), batch, threads
            )
            for row in products:
                yield {index[w]: c for w, c in row.items()}


def _ideal_rank_at(
    blocks: Blocks,
    AS: FusedElem,
    q0: Fraction,
    target: Optional[int] = None,
    threads: Optional[int] = None,
) -> int:
    """Rank of the ideal at q0; stops early once ``target`` independent rows are found."""
    return linalg.rank_rational_until(_ideal_rows_at(blocks, AS, q0, threads), target)


def _ideal_rank_symbolic(blocks: Blocks, AS: FusedElem, threads: Optional[int] = None) -> int:
    labels = enumerate_fused(blocks)
    basis = [basis_element(blocks, w) for w in labels]
    left = parallel_map(lambda F: multiply_q(F, AS), basis, threads)
    rows = parallel_map(
        lambda pair: multiply_q(pair[0], pair[1]),
        [(L, F) for L in left for F in basis],
        threads,
    )
    return linalg.rank_over_field([[row.coefficient(w) for w in labels] for row in rows])


def _kernel_check(AS: FusedElem, N: int) -> Tuple[bool, str]:
    """AS acts as zero on the tensor space, or on every W_{k,λ} with at most N rows."""
    states = N ** AS.blocks.m
    if N >= 2 and states <= get_config().budget.max_tensor_states:
        return sworacle.kernel_member(AS, N), "tensor"
    k, n = AS.blocks.parts, AS.blocks.n
    for lam in s_set(k, n):
        if lam.length > N:
            continue
        irrep = fused_irrep(lam, k, n)
        labels = next(iter(irrep.values())).basis_labels
        image = linalg.zeros(len(labels), len(labels))
        for w, c in AS.items():
            image = linalg.add(image, linalg.scale(irrep[w].entries, c))
        if not linalg.is_zero(image):
            return False, "seminormal"
    return True, "seminormal"


@log_performance("conjectures.check_ideal_generation")
def check_ideal_generation(k: Sequence[int], N: int, threads: Optional[int] = None) -> ConjReport:
    """
    Dimension of the two-sided ideal generated by AS_{k,N+1}(q).

    Ranks at generic points bound the generic rank from below. Kernel
    membership bounds it from above by the expected dimension, so once it
    holds the evaluated rank may stop at that bound and equality is exact.
    """
    config = get_config()
    prefix = _check_composition(k, N + 1)
    weight = sum(prefix)
    limit = config.budget.max_weight_evaluated
    if weight > limit:
        raise BudgetExceededError(
            f"Ideal check of weight {weight} exceeds {limit}", weight=weight, limit=limit
        )

    blocks = Blocks(prefix)
    AS = as_element(prefix, N + 1)
    points = config.arithmetic.fractions()
    report = ConjReport(k=prefix, N=N, q_points=[str(p) for p in points])
    report.ideal_dim_expected = expected_ideal_dim(prefix, N)
    report.kernel_member, report.kernel_method = _kernel_check(AS, N)
    target = report.ideal_dim_expected if report.kernel_member else None
    report.ideal_dim_computed = 0
    for q0 in points:
        rank = _ideal_rank_at(blocks, AS, q0, target, threads)
        report.ideal_dim_computed = max(report.ideal_dim_computed, rank)
        if target is not None and rank >= target:
            break
    report.q_mode = "evaluated"
    if weight <= SYMBOLIC_IDEAL_WEIGHT:
        symbolic = _ideal_rank_symbolic(blocks, AS, threads)
        if symbolic != report.ideal_dim_computed:
            logger.warning(
                "Generic-point rank differs from rank over Q(q)",
                k=list(prefix),
                N=N,
                evaluated=report.ideal_dim_computed,
                symbolic=symbolic,
            )
        report.ideal_dim_computed = symbolic
        report.q_mode = "symbolic"

    ok = report.kernel_member and report.ideal_dim_computed == report.ideal_dim_expected
    report.ideal_generation = CheckStatus.VERIFIED if ok else CheckStatus.FAILED
    if ok:
        report.certificate = "exact"
    logger.log_check(
        "ideal_generation",
        report.ideal_generation.value,
        k=list(prefix),
        N=N,
        expected=report.ideal_dim_expected,
        computed=report.ideal_dim_computed,
    )
    return report


def run_checks(k: Sequence[int], N: int, threads: Optional[int] = None) -> ConjReport:
    """Both checks for one (k, N)."""
    report = check_ideal_generation(k, N, threads)
    report.centrality, mode = check_centrality(k, N, threads)
    if mode == "evaluated":
        report.q_mode = "evaluated"
    return report


def sweep_cases(max_weight: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Every weakly decreasing positive k of length N+1 with k1+...+k_{N+1} ≤ max_weight."""
    cases = []
    for N in range(1, max_weight):
        for size in range(N + 1, max_weight + 1):
            for lam in partitions(size, N + 1):
                if lam.length == N + 1:
                    cases.append((lam.parts, N))
    return sorted(cases, key=lambda case: (sum(case[0]), case[1], tuple(-x for x in case[0])))


def sweep(max_weight: Optional[int] = None, threads: Optional[int] = None) -> List[ConjReport]:
    """Run both checks on every case of the sweep, tracking resources."""
    if max_weight is None:
        max_weight = get_config().budget.max_weight_evaluated
    monitor = ResourceMonitor(logger)
    reports = []
    for k, N in sweep_cases(max_weight):
        with log_with_context(logger, case=f"{list(k)}/N={N}"):
            with monitor.track("conjectures.case", k=list(k), N=N):
                reports.append(run_checks(k, N, threads))
    monitor.log_summary("Conjecture sweep")
    failures = [r for r in reports if not r.passed]
    if failures:
        logger.error(
            "Conjecture sweep found failures",
            cases=[[list(r.k), r.N] for r in failures],
        )
    return reports
