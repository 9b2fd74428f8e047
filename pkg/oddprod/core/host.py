"""
Elimination-ordered hosts
A host is a graph on vertices 1..r where every vertex i remembers its earlier
neighbours C_i; the ordering has width t when every C_i is a clique of size <= t
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Set, Tuple

import numpy as np

from oddprod.core.report import ValidationReport
from oddprod.utils.errors import ContractError, InvalidParameterError, InvalidVertexError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ElimOrderedHost:
    """
    Host graph H given by its elimination ordering.

    ``back_cliques[i - 1]`` is C_i, the set of neighbours of vertex i with a
    smaller index. Vertex indices are 1-based throughout.
    """

    t: int
    back_cliques: Tuple[FrozenSet[int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(
            self, "back_cliques", tuple(frozenset(int(m) for m in c) for c in self.back_cliques)
        )

    @classmethod
    def from_lists(cls, t: int, back_cliques: Iterable[Iterable[int]]) -> "ElimOrderedHost":
        return cls(t=t, back_cliques=tuple(frozenset(c) for c in back_cliques))

    @property
    def r(self) -> int:
        return len(self.back_cliques)

    def back(self, i: int) -> FrozenSet[int]:
        """C_i"""
        return self.back_cliques[i - 1]

    @cached_property
    def forward(self) -> Tuple[Tuple[int, ...], ...]:
        """``forward[i - 1]`` lists the later vertices m with i in C_m, ascending"""
        children: List[List[int]] = [[] for _ in range(self.r)]
        for m, clique in enumerate(self.back_cliques, start=1):
            for i in clique:
                if 1 <= i < m:
                    children[i - 1].append(m)
        return tuple(tuple(c) for c in children)

    def adjacent(self, a: int, b: int) -> bool:
        """Host adjacency: {a, b} is an edge iff the smaller index lies in C of the larger"""
        if a == b:
            return False
        lo, hi = (a, b) if a < b else (b, a)
        return lo in self.back_cliques[hi - 1]

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.r:
            raise InvalidVertexError(f"host index {i} outside 1..{self.r}", rule_id="host.range")

    def to_lists(self) -> List[List[int]]:
        return [sorted(c) for c in self.back_cliques]


def _index_violations(host: ElimOrderedHost) -> ValidationReport:
    report = ValidationReport()
    if host.t < 0:
        report.add("host.width", (host.t,), f"width t={host.t} is negative")
    for i, clique in enumerate(host.back_cliques, start=1):
        for m in sorted(clique):
            if m >= i or m < 1:
                report.add(
                    "host.index",
                    (i, m),
                    f"back-clique of vertex {i} lists {m}: index >= owner or < 1",
                )
    return report


def check_star_property(host: ElimOrderedHost) -> ValidationReport:
    """
    Check ancestor closure of back-cliques.

    For every pair with i in C_j, C_i + {i} must contain C_j restricted to
    indices <= i. Each failure is reported as (i, j, missing element).

    Raises:
        ContractError: if any back-clique index is malformed
    """
    malformed = _index_violations(host)
    if not malformed.ok:
        raise ContractError(str(malformed), rule_id="host.index")

    report = ValidationReport()
    for j, clique_j in enumerate(host.back_cliques, start=1):
        for i in clique_j:
            clique_i = host.back_cliques[i - 1]
            for m in sorted(clique_j):
                if m < i and m not in clique_i:
                    report.add(
                        "host.star",
                        (i, j, m),
                        f"{m} is in C_{j} below {i} but not in C_{i} + {{{i}}}",
                    )
    return report


def validate_host(host: ElimOrderedHost, require_full: bool = False) -> ValidationReport:
    """
    Validate width, clique and ancestor-closure rules of an elimination-ordered host.

    Args:
        host: Host to validate
        require_full: Also demand a full t-tree, i.e. |C_i| = min(i-1, t)

    Returns:
        ValidationReport whose violations use rule ids host.index, host.size,
        host.clique, host.star and host.full
    """
    report = _index_violations(host)
    if not report.ok:
        return report

    for i, clique in enumerate(host.back_cliques, start=1):
        if len(clique) > host.t:
            report.add(
                "host.size", (i,), f"|C_{i}| = {len(clique)} exceeds width t={host.t}"
            )
        if require_full and len(clique) != min(i - 1, host.t):
            report.add(
                "host.full",
                (i,),
                f"|C_{i}| = {len(clique)} but a full {host.t}-tree needs {min(i - 1, host.t)}",
            )
        for a, b in combinations(sorted(clique), 2):
            if a not in host.back_cliques[b - 1]:
                report.add(
                    "host.clique", (i, a, b), f"C_{i} contains {a} and {b} which are not adjacent"
                )

    report.extend(check_star_property(host))
    return report


def host_neighbours(host: ElimOrderedHost, i: int) -> Set[int]:
    """All host neighbours of i: its back-clique plus every later vertex that lists it"""
    host.check_index(i)
    return set(host.back(i)) | set(host.forward[i - 1])


def host_edges(host: ElimOrderedHost) -> List[Tuple[int, int]]:
    """Host edges as (a, b) with a < b, sorted"""
    return sorted((a, b) for b, clique in enumerate(host.back_cliques, start=1) for a in clique)


def random_t_tree(t: int, r: int, seed: int) -> ElimOrderedHost:
    """
    Generate a random full t-tree on r vertices.

    Vertices 1..t+1 form a clique; every later vertex attaches to a t-clique
    drawn uniformly from the multiset of t-subsets of all (t+1)-cliques created
    so far. Deterministic for a given (t, r, seed).

    Raises:
        InvalidParameterError: if t < 0 or r < t + 1
    """
    if t < 0:
        raise InvalidParameterError(f"width t={t} must be non-negative", rule_id="param.t")
    if r < t + 1:
        raise InvalidParameterError(
            f"a {t}-tree needs at least {t + 1} vertices, got r={r}", rule_id="param.r"
        )

    rng = np.random.default_rng(seed)
    back_cliques: List[FrozenSet[int]] = [frozenset(range(1, i)) for i in range(1, t + 2)]
    candidates: List[Tuple[int, ...]] = list(combinations(range(1, t + 2), t))

    for i in range(t + 2, r + 1):
        chosen = candidates[int(rng.integers(len(candidates)))]
        back_cliques.append(frozenset(chosen))
        candidates.extend(combinations(chosen + (i,), t))

    logger.debug(f"Generated random {t}-tree with {r} vertices (seed={seed})")
    return ElimOrderedHost(t=t, back_cliques=tuple(back_cliques))


def path_host(r: int) -> ElimOrderedHost:
    """The path x_1 ... x_r as a 1-tree"""
    return ElimOrderedHost(
        t=1, back_cliques=tuple(frozenset({i - 1}) - {0} for i in range(1, r + 1))
    )


def clique_host(r: int) -> ElimOrderedHost:
    """The complete graph on r vertices as an (r-1)-tree"""
    return ElimOrderedHost(
        t=max(r - 1, 0), back_cliques=tuple(frozenset(range(1, i)) for i in range(1, r + 1))
    )


def clique_blowup(host: ElimOrderedHost, ell: int) -> ElimOrderedHost:
    """
    The host H times K_ell as an elimination-ordered host of width l(t+1)-1.

    Vertex (i, k) becomes (i - 1) * ell + k; its back-clique is every copy of
    C_i plus the earlier copies of i itself.
    """
    if ell < 1:
        raise InvalidParameterError(f"clique size ell={ell} must be >= 1", rule_id="param.ell")

    back_cliques: List[FrozenSet[int]] = []
    for i, clique in enumerate(host.back_cliques, start=1):
        lifted = {(m - 1) * ell + k for m in clique for k in range(1, ell + 1)}
        for k in range(1, ell + 1):
            own = {(i - 1) * ell + kk for kk in range(1, k)}
            back_cliques.append(frozenset(lifted | own))
    return ElimOrderedHost(t=ell * (host.t + 1) - 1, back_cliques=tuple(back_cliques))


def blowup_index(i: int, k: int, ell: int) -> int:
    return (i - 1) * ell + k


def full_t_tree_edge_count(t: int, r: int) -> int:
    """Edge count of any full t-tree on r >= t+1 vertices"""
    return t * (t + 1) // 2 + t * (r - t - 1)


