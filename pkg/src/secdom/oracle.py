"""Domination and secure-domination primitives, plus exact solvers.

The predicates here are written straight from the definitions and serve as
the ground truth for everything else: constructions certify their output
against them, and the exhaustive solvers' witnesses are re-checked through
them, so a kernel bug cannot silently agree with itself.

Throughout, S defends an outside vertex v via u when u is a neighbor of v
inside S and swapping u for v keeps the set dominating.
"""

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import backend
from .errors import ConsistencyError
from .graph import Graph, iter_bits, mask_vertices, vertex_mask


@dataclass(frozen=True)
class DefenseCertificate:
    """Per-vertex defenders witnessing a secure dominating set.

    defenders maps every vertex outside `members` to its smallest
    qualifying defender; vertices of the set itself never appear.
    """

    members: frozenset[int]
    defenders: Mapping[int, int]


@dataclass(frozen=True)
class SetPartition:
    """Split of a dominating set D by defense duty.

    exposed: members with at least one undefended outside neighbor.
    settled: the other members.
    """

    exposed: frozenset[int]
    settled: frozenset[int]


class _SetScan:
    """Prefix/suffix coverage unions over a candidate set, for swap tests."""

    __slots__ = ("g", "smask", "members", "pre", "suf", "full", "nbc")

    def __init__(self, g: Graph, smask: int):
        self.g = g
        self.smask = smask
        self.members = list(iter_bits(smask))
        self.nbc = [g.neighbor_mask(v, closed=True) for v in range(g.n)]
        k = len(self.members)
        pre = [0] * (k + 1)
        suf = [0] * (k + 1)
        for i, u in enumerate(self.members):
            pre[i + 1] = pre[i] | self.nbc[u]
        for i in range(k - 1, -1, -1):
            suf[i] = suf[i + 1] | self.nbc[self.members[i]]
        self.pre = pre
        self.suf = suf
        self.full = g.full_mask()

    def covers(self) -> bool:
        return self.pre[-1] == self.full

    def defender(self, v: int) -> int | None:
        """Smallest defender of outside vertex v, or None."""
        av = self.g.neighbor_mask(v)
        nv = self.nbc[v]
        for i, u in enumerate(self.members):
            if (av >> u) & 1 and (self.pre[i] | self.suf[i + 1] | nv) == self.full:
                return u
        return None


def is_dominating(g: Graph, members: Iterable[int]) -> bool:
    smask = vertex_mask(g, members)
    cover = 0
    for u in iter_bits(smask):
        cover |= g.neighbor_mask(u, closed=True)
    return cover == g.full_mask()


def epn(g: Graph, members: Iterable[int], u: int) -> frozenset[int]:
    """External private neighbors of u with respect to the set.

    Vertices outside the set whose only set-neighbor is u.  Errors when u
    is not a member.
    """
    dmask = vertex_mask(g, members)
    g._check_vertex(u)
    if not (dmask >> u) & 1:
        raise ValueError(f"vertex {u} is not in the set")
    out = []
    for v in range(g.n):
        if (dmask >> v) & 1:
            continue
        if g.neighbor_mask(v) & dmask == 1 << u:
            out.append(v)
    return frozenset(out)


def defended_by(g: Graph, members: Iterable[int], v: int) -> int | None:
    """Smallest defender of v, or None when v is undefended.

    Preconditions: the set dominates and v lies outside it.
    """
    smask = vertex_mask(g, members)
    g._check_vertex(v)
    if (smask >> v) & 1:
        raise ValueError(f"vertex {v} is in the set")
    scan = _SetScan(g, smask)
    if not scan.covers():
        raise ValueError("set is not dominating")
    return scan.defender(v)


def secure_certificate(g: Graph, members: Iterable[int]) -> DefenseCertificate | None:
    """Defender map when the set is secure dominating, else None."""
    cert, _ = _secure_scan(g, vertex_mask(g, members))
    return cert


def secure_failure(g: Graph, members: Iterable[int]) -> int | None:
    """Smallest undominated or undefendable vertex, or None when secure."""
    _, fail = _secure_scan(g, vertex_mask(g, members))
    return fail


def _secure_scan(g: Graph, smask: int) -> tuple[DefenseCertificate | None, int | None]:
    scan = _SetScan(g, smask)
    if not scan.covers():
        covered = scan.pre[-1]
        for v in range(g.n):
            if not (covered >> v) & 1:
                return None, v
    defenders: dict[int, int] = {}
    for v in range(g.n):
        if (smask >> v) & 1:
            continue
        u = scan.defender(v)
        if u is None:
            return None, v
        defenders[v] = u
    return DefenseCertificate(mask_vertices(smask), defenders), None


def undefended_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    """All outside vertices with no defender.  Requires a dominating set."""
    smask = vertex_mask(g, members)
    scan = _SetScan(g, smask)
    if not scan.covers():
        raise ValueError("set is not dominating")
    return frozenset(
        v for v in range(g.n) if not (smask >> v) & 1 and scan.defender(v) is None
    )


def set_partition(g: Graph, members: Iterable[int]) -> SetPartition:
    """Partition a dominating set into exposed and settled members."""
    smask = vertex_mask(g, members)
    und = undefended_set(g, mask_vertices(smask))
    umask = 0
    for v in und:
        umask |= 1 << v
    exposed = []
    settled = []
    for u in iter_bits(smask):
        if g.neighbor_mask(u) & umask:
            exposed.append(u)
        else:
            settled.append(u)
    return SetPartition(frozenset(exposed), frozenset(settled))


def max_independent_set(g: Graph) -> frozenset[int]:
    """Lexicographically least maximum independent set."""
    return mask_vertices(backend.alpha_set_mask(g.adjacency_masks(), g.n))


def independence_number(g: Graph) -> int:
    return backend.alpha_size(g.adjacency_masks(), g.n, g.full_mask())


def min_dominating_set(g: Graph) -> frozenset[int]:
    """First minimum dominating set in (cardinality, lexicographic) order."""
    return mask_vertices(backend.min_dominating_mask(g.adjacency_masks(), g.n))


def domination_number(g: Graph) -> int:
    return len(min_dominating_set(g))


def min_secure_dominating_set(g: Graph) -> tuple[frozenset[int], DefenseCertificate]:
    """First minimum secure dominating set, with its defender certificate.

    Search starts at the domination number (no secure dominating set is
    smaller).  The witness is re-certified definitionally before return.
    """
    gamma = len(min_dominating_set(g))
    smask = backend.min_secure_mask(g.adjacency_masks(), g.n, max(1, gamma))
    members = mask_vertices(smask)
    cert = secure_certificate(g, members)
    if cert is None:
        raise ConsistencyError("solver witness failed definitional recheck")
    return members, cert


def secure_domination_number(g: Graph) -> int:
    return len(min_secure_dominating_set(g)[0])
