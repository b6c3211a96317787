"""
FusedHecke Golden Fixtures
Reference values every build must reproduce, run headless behind `cli golden`
"""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import bratteli
import conjectures
import fused
import hecke
import seminormal
import sworacle
from config import get_config
from logging_config import get_logger
from monitoring import CheckStatus, ResourceMonitor
from permcomb import Blocks, enumerate_fused
from qcoeff import QField, q, q_number
from shapes import Partition, SkewShape, Tableau, bar_map, kostka, partitions, res_set, s_set

logger = get_logger()

GOLDEN_DIR = Path(__file__).parent / "golden"

Check = Callable[[], bool]


@dataclass
class Fixture:
    name: str
    description: str
    check: Check
    slow: bool = False


@dataclass
class FixtureResult:
    name: str
    status: CheckStatus
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "status": self.status.value, "detail": self.detail}


@dataclass
class GoldenReport:
    results: List[FixtureResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status is not CheckStatus.FAILED for r in self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "total": len(self.results),
            "failed": [r.name for r in self.results if r.status is CheckStatus.FAILED],
            "results": [r.to_dict() for r in self.results],
        }


FIXTURES: List[Fixture] = []


def fixture(name: str, description: str, slow: bool = False):
    """Register a golden check."""

    def decorator(func: Check) -> Check:
        FIXTURES.append(Fixture(name, description, func, slow))
        return func

    return decorator


def _P(*parts: int) -> Partition:
    return Partition(parts)


def _tableau(rows: List[List[int]]) -> Tableau:
    shape = SkewShape.of([len(r) for r in rows])
    return Tableau(shape, tuple(x for r in rows for x in r))


# Coefficients and the Hecke algebra


@fixture("q_numbers", "[2]_q = (q^2+1)/q and {3}_q = 1+q^2+q^4")
def _q_numbers() -> bool:
    return q_number(2) == (q**2 + 1) / q and q_number(3, "brace") == 1 + q**2 + q**4


@fixture("hecke_relations", "quadratic relation and braid relation of the generators")
def _hecke_relations() -> bool:
    s1 = hecke.generator(1, 2)
    quadratic = hecke.mul_gen(s1, 1) == hecke.one(2) + s1.scale(hecke.HECKE_DELTA)
    braid = hecke.from_word((1, 2, 1), 3) == hecke.from_word((2, 1, 2), 3)
    return quadratic and braid


@fixture("symmetrizers", "P_2 = (1+qσ1)/(1+q^2), P_3 idempotent and σ_i P_3 = q P_3")
def _symmetrizers() -> bool:
    P2 = (hecke.one(2) + hecke.generator(1, 2).scale(q)).scale(1 / (1 + q**2))
    P3 = hecke.symmetrizer(3)
    absorbs = all(hecke.mul(hecke.generator(i, 3), P3) == P3.scale(q) for i in (1, 2))
    return hecke.symmetrizer(2) == P2 and hecke.mul(P3, P3) == P3 and absorbs


@fixture("antisymmetrizers", "P'_2 = (1-q^{-1}σ1)/(1+q^{-2}) and σ1 P'_3 = -q^{-1} P'_3")
def _antisymmetrizers() -> bool:
    expected = (hecke.one(2) - hecke.generator(1, 2).scale(q ** (-1))).scale(1 / (1 + q ** (-2)))
    A3 = hecke.antisymmetrizer(3)
    return hecke.antisymmetrizer(2) == expected and hecke.mul(
        hecke.generator(1, 3), A3
    ) == A3.scale(-(q ** (-1)))


# Fused permutations and products


@fixture("fused_counts", "7, 3 and 21 fused permutations for (2,1,1), (2,2), (2,2,2)")
def _fused_counts() -> bool:
    return [len(enumerate_fused(Blocks(k))) for k in [(2, 1, 1), (2, 2), (2, 2, 2)]] == [7, 3, 21]


@fixture("classical_product_22", "single crossing squared is 1/4, 1/2, 1/4 at q = 1")
def _classical_22() -> bool:
    blocks = Blocks((2, 2))
    F = fused.from_matrices(blocks, [[[1, 1], [1, 1]]], [1])
    expected = fused.from_matrices(
        blocks,
        [[[2, 0], [0, 2]], [[1, 1], [1, 1]], [[0, 2], [2, 0]]],
        [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)],
    )
    return fused.multiply_classical(F, F) == expected


@fixture("classical_product_211", "worked product with blocks (2,1,1) splits in halves")
def _classical_211() -> bool:
    blocks = Blocks((2, 1, 1))
    A = fused.from_matrices(blocks, [[[1, 0, 1], [1, 0, 0], [0, 1, 0]]], [1])
    B = fused.from_matrices(blocks, [[[1, 1, 0], [1, 0, 0], [0, 0, 1]]], [1])
    expected = fused.from_matrices(
        blocks,
        [[[1, 0, 1], [0, 1, 0], [1, 0, 0]], [[0, 1, 1], [1, 0, 0], [1, 0, 0]]],
        [Fraction(1, 2), Fraction(1, 2)],
    )
    return fused.multiply_classical(A, B) == expected


@fixture("q_product_22", "single crossing squared in H_{(2,2),2}(q)")
def _q_product_22() -> bool:
    blocks = Blocks((2, 2))
    F = fused.from_matrices(blocks, [[[1, 1], [1, 1]]], [1])
    norm = (1 + q**2) ** 2
    expected = fused.from_matrices(
        blocks,
        [[[2, 0], [0, 2]], [[1, 1], [1, 1]], [[0, 2], [2, 0]]],
        [1 / norm, (q - q ** (-1) + 2 * q**3) / norm, q**2 / norm],
    )
    return fused.multiply_q(F, F) == expected


@fixture("sigma_relations", "characteristic equation, T Σ relation and braid relation for k = 2")
def _sigma_relations() -> bool:
    blocks = Blocks((2, 2))
    S, T, one = fused.sigma_element(blocks, 1), fused.t_element(blocks, 1), fused.unit(blocks)
    S2 = S * S
    cubic = S2 * S - S2.scale(q**4 - 1 + q ** (-2)) - S.scale(q**4 - q**2 + q ** (-2)) + one.scale(
        q**2
    )
    mixed = T * S == S.scale(q - q ** (-1)) + T.scale(q**2)
    three = Blocks((2, 2, 2))
    S1, S2b = fused.sigma_element(three, 1), fused.sigma_element(three, 2)
    return cubic == 0 and mixed and S1 * S2b * S1 == S2b * S1 * S2b


@fixture("constant_pair_dimension", "dim H_{(k,k),2}(q) = k+1")
def _constant_pair_dimension() -> bool:
    return all(fused.dimension(Blocks((k, k))) == k + 1 for k in (1, 2, 3))


# Tableaux


@fixture("kostka_44", "K_{(4,4),(2,2,2,2)} = 3")
def _kostka_44() -> bool:
    return kostka(_P(4, 4), (2, 2, 2, 2)) == 3


@fixture("s_set_222", "S_{(2,2,2),3} is every λ ⊢ 6 with at most 3 rows")
def _s_set_222() -> bool:
    return s_set((2, 2, 2), 3) == partitions(6, 3)


@fixture("bar_map", "block relabelling of two standard tableaux for k = (2,2)")
def _bar_map() -> bool:
    good = bar_map(_tableau([[1, 2, 3], [4]]), (2, 2), 2)
    bad = bar_map(_tableau([[1, 3, 4], [2]]), (2, 2), 2)
    return (
        good.rows() == [[1, 1, 2], [2]]
        and good.is_semistandard()
        and bad.rows() == [[1, 2, 2], [1]]
        and not bad.is_semistandard()
    )


@fixture("res_set_3111", "Res for k = (3,1,1): (3,1) at level 2 and (4,1) at level 3")
def _res_set_3111() -> bool:
    k = (3, 1, 1)
    return res_set(_P(3, 1), k, 2) == [_P(3)] and res_set(_P(4, 1), k, 3) == [_P(4), _P(3, 1)]


# Representations


@fixture("one_dimensional_reps", "row acts by q, column by -q^{-1}")
def _one_dimensional_reps() -> bool:
    row = seminormal.generator_matrix(SkewShape.of([3]), 1).entries
    column = seminormal.generator_matrix(SkewShape.of([1, 1, 1]), 2).entries
    return row == [[q]] and column == [[-(q ** (-1))]]


@fixture("contents", "q-contents of [[1,2,4],[3]] are 1, q^2, q^-2, q^4")
def _contents() -> bool:
    t = _tableau([[1, 2, 4], [3]])
    return [seminormal.q_content(t, i) for i in range(1, 5)] == [
        QField.one,
        q**2,
        q ** (-2),
        q**4,
    ]


@fixture("seminormal_quadratic", "R_i^2 = (q-q^{-1})R_i + 1 on V_(3,1)")
def _seminormal_quadratic() -> bool:
    shape = SkewShape.of([3, 1])
    for i in range(1, 4):
        R = seminormal.generator_matrix(shape, i)
        I = seminormal.identity_matrix(R.basis_labels)
        if R @ R != R.scale(hecke.HECKE_DELTA) + I:
            return False
    return True


@fixture("fused_irrep_31", "W_{(2,2),(3,1)} is one-dimensional")
def _fused_irrep_31() -> bool:
    irrep = seminormal.fused_irrep(_P(3, 1), (2, 2), 2)
    return all(m.dim == 1 for m in irrep.values())


@fixture("fused_irrep_dims", "dim W_{k,λ} = K_{λ,k} and Σ dim^2 = dim H_{k,n}", slow=True)
def _fused_irrep_dims() -> bool:
    for k in [(2, 2), (2, 1, 1), (2, 2, 2), (3, 1, 1, 1)]:
        n = len(k)
        total = 0
        for lam in s_set(k, n):
            irrep = seminormal.fused_irrep(lam, k, n)
            dim = next(iter(irrep.values())).dim
            if dim != kostka(lam, k):
                return False
            total += dim**2
        if total != fused.dimension(Blocks(k)):
            return False
    return True


# Bratteli diagrams


YOUNG_GRAPH = {
    "vertices": [
        [((), 1)],
        [((1,), 1)],
        [((2,), 1), ((1, 1), 1)],
        [((3,), 1), ((2, 1), 2), ((1, 1, 1), 1)],
        [((4,), 1), ((3, 1), 3), ((2, 2), 2), ((2, 1, 1), 3), ((1, 1, 1, 1), 1)],
        [
            ((5,), 1),
            ((4, 1), 4),
            ((3, 2), 5),
            ((3, 1, 1), 6),
            ((2, 2, 1), 5),
            ((2, 1, 1, 1), 4),
            ((1, 1, 1, 1, 1), 1),
        ],
    ],
    "edges": [
        [((), (1,))],
        [((1,), (2,)), ((1,), (1, 1))],
        [((2,), (3,)), ((2,), (2, 1)), ((1, 1), (2, 1)), ((1, 1), (1, 1, 1))],
        [
            ((3,), (4,)),
            ((3,), (3, 1)),
            ((2, 1), (3, 1)),
            ((2, 1), (2, 2)),
            ((2, 1), (2, 1, 1)),
            ((1, 1, 1), (2, 1, 1)),
            ((1, 1, 1), (1, 1, 1, 1)),
        ],
        [
            ((4,), (5,)),
            ((4,), (4, 1)),
            ((3, 1), (4, 1)),
            ((3, 1), (3, 2)),
            ((3, 1), (3, 1, 1)),
            ((2, 2), (3, 2)),
            ((2, 2), (2, 2, 1)),
            ((2, 1, 1), (3, 1, 1)),
            ((2, 1, 1), (2, 2, 1)),
            ((2, 1, 1), (2, 1, 1, 1)),
            ((1, 1, 1, 1), (2, 1, 1, 1)),
            ((1, 1, 1, 1), (1, 1, 1, 1, 1)),
        ],
    ],
}

CHAIN_222 = {
    "vertices": [
        [((), 1)],
        [((2,), 1)],
        [((4,), 1), ((3, 1), 1), ((2, 2), 1)],
        [
            ((6,), 1),
            ((5, 1), 2),
            ((4, 2), 3),
            ((4, 1, 1), 1),
            ((3, 3), 1),
            ((3, 2, 1), 2),
            ((2, 2, 2), 1),
        ],
    ],
    "edges": [
        [((), (2,))],
        [((2,), (4,)), ((2,), (3, 1)), ((2,), (2, 2))],
        [
            ((4,), (6,)),
            ((4,), (5, 1)),
            ((4,), (4, 2)),
            ((3, 1), (5, 1)),
            ((3, 1), (4, 2)),
            ((3, 1), (4, 1, 1)),
            ((3, 1), (3, 3)),
            ((3, 1), (3, 2, 1)),
            ((2, 2), (4, 2)),
            ((2, 2), (3, 2, 1)),
            ((2, 2), (2, 2, 2)),
        ],
    ],
}

CHAIN_3111 = {
    "vertices": [
        [((), 1)],
        [((3,), 1)],
        [((4,), 1), ((3, 1), 1)],
        [((5,), 1), ((4, 1), 2), ((3, 2), 1), ((3, 1, 1), 1)],
        [
            ((6,), 1),
            ((5, 1), 3),
            ((4, 2), 3),
            ((4, 1, 1), 3),
            ((3, 3), 1),
            ((3, 2, 1), 2),
            ((3, 1, 1, 1), 1),
        ],
    ],
    "edges": [
        [((), (3,))],
        [((3,), (4,)), ((3,), (3, 1))],
        [((4,), (5,)), ((4,), (4, 1)), ((3, 1), (4, 1)), ((3, 1), (3, 2)), ((3, 1), (3, 1, 1))],
        [
            ((5,), (6,)),
            ((5,), (5, 1)),
            ((4, 1), (5, 1)),
            ((4, 1), (4, 2)),
            ((4, 1), (4, 1, 1)),
            ((3, 2), (4, 2)),
            ((3, 2), (3, 3)),
            ((3, 2), (3, 2, 1)),
            ((3, 1, 1), (4, 1, 1)),
            ((3, 1, 1), (3, 2, 1)),
            ((3, 1, 1), (3, 1, 1, 1)),
        ],
    ],
}


def golden_dot(name: str) -> str:
    """Contents of a stored DOT fixture."""
    return (GOLDEN_DIR / f"{name}.dot").read_text(encoding="utf-8")


@fixture("young_graph", "vertices, dims and edges of the Young graph up to level 5")
def _young_graph() -> bool:
    d = bratteli.build_chain((1,) * 5, 5)
    return bratteli.structure(d) == YOUNG_GRAPH and bratteli.level_dimension(d, 5) == 120


@fixture("chain_222", "vertices, dims and edges of the chain for k = (2,2,2,...) to level 3")
def _chain_222() -> bool:
    d = bratteli.build_chain((2, 2, 2), 3)
    return bratteli.structure(d) == CHAIN_222 and bratteli.level_dimension(d, 3) == 21


@fixture("chain_222_dot", "DOT export of the chain for k = (2,2,2,...) matches the stored file")
def _chain_222_dot() -> bool:
    return bratteli.to_dot(bratteli.build_chain((2, 2, 2), 3)) == golden_dot("chain_222")


@fixture("chain_3111", "vertices, dims and edges of the chain for k = (3,1,1,1,...) to level 4")
def _chain_3111() -> bool:
    d = bratteli.build_chain((3, 1, 1, 1), 4)
    return bratteli.structure(d) == CHAIN_3111 and bratteli.level_dimension(d, 4) == 34


@fixture("temperley_lieb_quotient", "removing (1,1,1) from the Young graph keeps two rows")
def _temperley_lieb_quotient() -> bool:
    d = bratteli.build_chain((1,) * 5, 5)
    quotient = bratteli.quotient(d, [(3, _P(1, 1, 1))])
    return all(v.partition.length <= 2 for level in quotient.levels for v in level) and [
        bratteli.level_dimension(quotient, n) for n in range(6)
    ] == [1, 1, 2, 5, 14, 42]


@fixture("column_removal_quotient", "k = (2,2,...) modulo S^< is the Young graph")
def _column_removal_quotient() -> bool:
    d = bratteli.build_chain((2,) * 4, 4)
    quotient = bratteli.quotient(d, bratteli.short_partitions(d))
    image = bratteli.column_removal_image(quotient, (1,) * 4)
    return bratteli.isomorphic(image, bratteli.build_chain((1,) * 4, 4))


@fixture("minimal_generators", "S_min = {(4)@2, (3,3)@3} for k = 2 and {(2)@2} for k = 1")
def _minimal_generators() -> bool:
    for k, n_max, expected in [
        (2, 4, [(2, _P(4)), (3, _P(3, 3))]),
        (1, 5, [(2, _P(2))]),
    ]:
        d = bratteli.build_chain((k,) * n_max, n_max)
        found = bratteli.minimal_generators(d, bratteli.short_partitions(d))
        predicted = bratteli.predicted_minimal_generators((k,) * n_max, n_max)
        if found != expected or predicted != expected:
            return False
        rectangle = _P(*([k + 1] * k))
        if (k + 1, rectangle) not in found or any(n > k + 1 for n, _ in found):
            return False
    return True


# Schur-Weyl duality and the conjectures


@fixture("rmatrix_diagonal", "Ř(e1⊗e1) = q0 e1⊗e1")
def _rmatrix_diagonal() -> bool:
    q0 = get_config().arithmetic.fractions()[0]
    R = sworacle.rmatrix_action(2, 2, 1, q0)
    return R.rows[0] == {0: q0}


@fixture("antisymmetrizer_vanishes", "P'_{N+1} acts as zero for N = 2, 3")
def _antisymmetrizer_vanishes() -> bool:
    q0 = get_config().arithmetic.fractions()[0]
    return all(sworacle.antisymmetrizer_vanishes(N, q0) for N in (2, 3))


@fixture("faithful_range", "the action is faithful when n ≤ N")
def _faithful_range() -> bool:
    q0 = get_config().arithmetic.fractions()[0]
    return sworacle.centralizer_dim((2, 2), 2, 2, q0) == fused.dimension(Blocks((2, 2)))


@fixture("gamma_trivial", "Γ = 1 for k = (1,1,1)")
def _gamma_trivial() -> bool:
    G, G_inverse = conjectures.gamma((1, 1, 1), 3)
    return G == hecke.one(3) and G_inverse == hecke.one(3)


@fixture("temperley_lieb_relation", "AS for k = (1,1,1) is the Temperley-Lieb relation")
def _temperley_lieb_relation() -> bool:
    m = 3
    relation = (
        hecke.from_word((1, 2, 1), m)
        - (hecke.from_word((1, 2), m) + hecke.from_word((2, 1), m)).scale(q)
        + (hecke.generator(1, m) + hecke.generator(2, m)).scale(q**2)
        - hecke.one(m).scale(q**3)
    )
    expected = fused.from_hecke(relation, Blocks((1, 1, 1)))
    return conjectures.as_element((1, 1, 1), 3).scale(-(q**3)) == expected


@fixture("kernel_membership", "AS_{(2,2,2),3} acts as zero for N = 2")
def _kernel_membership() -> bool:
    return sworacle.kernel_member(conjectures.as_element((2, 2, 2), 3), 2)


@fixture("conjectures_small", "both conjectures for (3,1,1) and (2,2,1) with N = 2", slow=True)
def _conjectures_small() -> bool:
    return all(conjectures.run_checks(k, 2).passed for k in [(3, 1, 1), (2, 2, 1)])


@fixture("conjectures_222", "ideal of dimension 6 and centrality for (2,2,2), N = 2", slow=True)
def _conjectures_222() -> bool:
    report = conjectures.run_checks((2, 2, 2), 2)
    return (
        report.passed
        and report.ideal_dim_expected == report.ideal_dim_computed == 6
        and report.centrality is CheckStatus.VERIFIED
    )


def run_golden(include_slow: bool = True, names: Optional[List[str]] = None) -> GoldenReport:
    """Run every registered fixture; an exception counts as a failure."""
    monitor = ResourceMonitor(logger)
    report = GoldenReport()
    for item in FIXTURES:
        if names is not None and item.name not in names:
            continue
        if item.slow and not include_slow:
            report.results.append(FixtureResult(item.name, CheckStatus.SKIPPED, "slow"))
            continue
        try:
            with monitor.track(f"golden.{item.name}"):
                ok = item.check()
            if ok:
                status, detail = CheckStatus.VERIFIED, None
            else:
                status, detail = CheckStatus.FAILED, "mismatch"
        except Exception as e:
            logger.exception("Golden fixture raised", fixture=item.name)
            status, detail = CheckStatus.FAILED, f"{type(e).__name__}: {e}"
        logger.log_check(item.name, status.value, description=item.description)
        report.results.append(FixtureResult(item.name, status, detail))
    monitor.log_summary("Golden fixtures")
    return report
