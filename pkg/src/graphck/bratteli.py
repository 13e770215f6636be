"""Bratteli chains of single full matrix blocks read off a staged family,
their direct limits, and an exact check of the stage-to-stage embedding.

Two chain shapes are supported:

* a **corner chain** — the compression of each stage's algebra to a fixed
  corner vertex; sizes are path counts from that vertex into the stage's
  sink, and consecutive sizes are related by the multiplication law
  ``d[i+1] == m[i] * d[i]``;
* a **tail chain** — the whole algebra of each stage of a family growing
  along an exclusive tail; every inclusion has multiplicity one and sizes
  are total path counts into the stage's sink.

The limit is only named when the chain's own numbers certify it (constant
multiplicities at least two, or strictly increasing sizes); anything else
comes back ``Other`` with the failed criterion spelled out.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ChainError, SpineError, StageError
from .exactmat import IntMatrix
from .graph_model import (
    Graph,
    Path,
    StagedGraph,
    count_paths_ending,
    count_paths_from,
    sinks,
)
from .ck_matrix import MatrixRep

CORNER = "corner"
TAIL = "tail"


@dataclass(frozen=True)
class BratteliChain:
    """Sizes ``d`` and inclusion multiplicities ``m`` (``len(m) == len(d)-1``)
    of a chain of single full matrix blocks."""

    kind: str  # CORNER or TAIL
    d: tuple[int, ...]
    m: tuple[int, ...]
    corner: str | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.kind not in (CORNER, TAIL):
            raise ChainError(f"unknown chain kind {self.kind!r}")
        if not self.d or any(x < 1 for x in self.d):
            raise ChainError("chain sizes must be positive")
        if len(self.m) != len(self.d) - 1:
            raise ChainError("need exactly one multiplicity per inclusion")
        if self.kind == CORNER:
            for i, mult in enumerate(self.m):
                if self.d[i + 1] != mult * self.d[i]:
                    raise ChainError(
                        f"corner law broken at step {i}: "
                        f"{self.d[i + 1]} != {mult} * {self.d[i]}")
        else:
            for i, mult in enumerate(self.m):
                if mult != 1:
                    raise ChainError("tail chains have multiplicity one")
                if self.d[i + 1] < self.d[i]:
                    raise ChainError(f"tail sizes must not shrink (step {i})")

    def __len__(self) -> int:
        return len(self.d)


def corner_chain(sg: StagedGraph, depth: int,
                 corner_vertex: str | None = None) -> BratteliChain:
    """Chain of corner dimensions at a fixed vertex over stages 1..depth.

    Each stage must have a single sink.  The size at stage n is the literal
    number of paths from the corner vertex into that sink — the first stage
    contributes the trivial path, so the doubled ladder yields sizes 1, 2,
    4, 8, ... with every multiplicity 2.  Multiplicities are path counts
    from the old sink to the new one; if the product law fails, paths
    bypass the spine and the corner compressions do not form a chain of
    single blocks.
    """
    if depth < 1:
        raise ChainError("corner chain needs depth >= 1")
    if corner_vertex is None:
        prefix = sg.spine_prefix(1)
        if not prefix:
            raise ChainError(f"{sg.name}: no spine; pass corner_vertex")
        corner_vertex = prefix[0]
    d: list[int] = []
    mults: list[int] = []
    prev_sink: str | None = None
    for n in range(1, depth + 1):
        g = sg.stage(n)
        sk = sinks(g)
        if len(sk) != 1:
            raise ChainError(
                f"{sg.name}: stage {n} has {len(sk)} sinks; corner chains "
                "need exactly one")
        t = sk[0]
        if corner_vertex not in g.vertex_set:
            raise ChainError(f"{sg.name}: corner vertex {corner_vertex!r} "
                             f"missing from stage {n}")
        d.append(count_paths_from(g, corner_vertex)[t])
        if prev_sink is not None:
            mults.append(count_paths_from(g, prev_sink)[t])
            if d[-1] != mults[-1] * d[-2]:
                raise ChainError(
                    f"{sg.name}: stage {n} corner size {d[-1]} is not "
                    f"{mults[-1]} * {d[-2]}; paths bypass the spine")
        prev_sink = t
    return BratteliChain(CORNER, tuple(d), tuple(mults),
                         corner=corner_vertex, label=sg.name)


def tail_chain(sg: StagedGraph, depth: int) -> BratteliChain:
    """Chain of whole-algebra dimensions of a family growing along an
    exclusive tail, over stages 1..depth.

    Each stage must have a single sink, and each old sink must emit exactly
    one single edge in the next stage, landing on the new sink — that is
    what makes every inclusion have multiplicity one.
    """
    if depth < 1:
        raise ChainError("tail chain needs depth >= 1")
    d: list[int] = []
    prev_sink: str | None = None
    for n in range(1, depth + 1):
        g = sg.stage(n)
        sk = sinks(g)
        if len(sk) != 1:
            raise ChainError(
                f"{sg.name}: stage {n} has {len(sk)} sinks; tail chains "
                "need exactly one")
        t = sk[0]
        if prev_sink is not None:
            outs = g.out_bundles(prev_sink)
            edges = g.out_degree(prev_sink)
            if len(outs) != 1 or edges != 1:
                raise SpineError(
                    f"{sg.name}: old sink {prev_sink!r} emits "
                    f"{edges if edges is not None else 'infinitely many'} "
                    f"edges at stage {n}; a tail extends by exactly one")
            if outs[0].dst != t:
                raise ChainError(
                    f"{sg.name}: tail edge {outs[0].id!r} lands on "
                    f"{outs[0].dst!r}, not the stage-{n} sink {t!r}")
        d.append(count_paths_ending(g)[t])
        prev_sink = t
    return BratteliChain(TAIL, tuple(d), tuple([1] * (len(d) - 1)),
                         label=sg.name)


# --- direct limits ------------------------------------------------------------


@dataclass(frozen=True)
class LimitSummary:
    """Named direct limit of a chain.

    ``kind`` is ``"UHF"``, ``"Compacts"``, or ``"Other"``.  For UHF limits
    ``supernatural`` maps each prime to its exponent, ``None`` standing for
    infinity.  ``Other`` names the certification that failed.
    """

    kind: str
    supernatural: dict[int, int | None] | None = None
    failed: str = ""

    def render(self) -> str:
        if self.kind == "UHF":
            parts = " ".join(
                f"{p}^{'infinity' if e is None else e}"
                for p, e in sorted(self.supernatural.items()))
            return f"UHF {parts}"
        if self.kind == "Compacts":
            return "Compacts"
        return f"Other: {self.failed}"


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def direct_limit_summary(chain: BratteliChain) -> LimitSummary:
    """Name the direct limit when the chain's numbers certify it.

    * Constant multiplicity m >= 2 over a suffix of at least two steps:
      UHF.  The supernatural number takes every prime of m to infinity,
      plus the leftover finite primes of the size where the constant
      suffix starts.
    * Multiplicity one throughout with sizes strictly increasing over a
      suffix of at least two steps: the compact operators.
    * Anything else: Other, with the failed criterion named.  Extrapolation
      from finitely many stages is only honest under one of the two
      regularity certificates above.
    """
    if len(chain.d) < 3:
        raise ChainError("need at least three chain nodes to extrapolate")
    m = chain.m
    # constant multiplicity >= 2 on a suffix of >= 2 steps
    for k in range(len(m) - 1):
        suffix = m[k:]
        if suffix[0] >= 2 and all(x == suffix[0] for x in suffix):
            sup: dict[int, int | None] = {p: None for p in _factor(suffix[0])}
            for p, e in _factor(chain.d[k]).items():
                if p not in sup:
                    sup[p] = e
            return LimitSummary("UHF", sup)
    if all(x == 1 for x in m):
        for k in range(len(m) - 1):
            tail = chain.d[k:]
            if all(a < b for a, b in zip(tail, tail[1:])):
                return LimitSummary("Compacts")
        return LimitSummary(
            "Other", failed="sizes not strictly increasing over at least "
                            "two consecutive steps")
    return LimitSummary(
        "Other", failed="multiplicities not constant (>= 2) over at least "
                        "two consecutive steps")


# --- exact embedding check -------------------------------------------------------


@dataclass
class EmbedReport:
    ok: bool
    pairs_checked: int
    failures: list[str] = field(default_factory=list)


def embed_check(rep_small: MatrixRep, rep_big: MatrixRep) -> EmbedReport:
    """Check the chain's inclusion law exactly, inside the bigger model.

    For every pair of small-stage basis paths with a common range v, the
    matrix unit they span must satisfy, in the big model,

        S_a S_b* == sum over edges e out of v of S_ae S_be*

    whenever v became regular, and survive unchanged whenever v stayed a
    sink.  All products are exact integer matrices.
    """
    small, big = rep_small.graph, rep_big.graph
    if not small.is_subgraph_of(big):
        raise StageError("embedding check needs the smaller model's graph "
                         "to be a subgraph of the bigger one")
    by_target: dict[str, list[Path]] = {}
    for p in rep_small.basis:
        by_target.setdefault(p.target, []).append(p)

    def extended(p: Path, e) -> Path:
        return Path(p.source, e.dst, p.edges + (e.id,), p.vertex_seq + (e.dst,))

    checked = 0
    failures: list[str] = []
    for v, paths in sorted(by_target.items()):
        ops = {p: rep_big.path_matrix(p) for p in paths}
        outs = [e for e in big.finite_edges() if e.src == v]
        for a in paths:
            for b in paths:
                lhs = ops[a] @ ops[b].transpose()
                if big.is_sink(v):
                    rhs = lhs  # the unit persists verbatim
                else:
                    rhs = IntMatrix.zero(rep_big.dim)
                    for e in outs:
                        ae = rep_big.path_matrix(extended(a, e))
                        be = rep_big.path_matrix(extended(b, e))
                        rhs = rhs + ae @ be.transpose()
                checked += 1
                if lhs != rhs:
                    failures.append(f"unit ({a.label()}, {b.label()}) at {v}")
    return EmbedReport(not failures, checked, failures)
