"""Exact finite-dimensional Cuntz-Krieger matrix models on path bases.

For a finite acyclic graph and a chosen set S of regular vertices, the
model acts on the free basis of all paths whose range is a sink or a
regular vertex outside S.  Vertex projections are diagonal idempotents
(paths starting at the vertex); each edge acts as the partial permutation
prepending itself to a basis path.  With this basis rule the three
Cuntz-Krieger identities hold exactly, the summation identity holds at
precisely the vertices of S, and every vertex projection and every gap
projection is nonzero — so the model is a faithful copy of the relative
algebra whenever every cycle has an exit (vacuous here: no cycles at all).

All arithmetic is integer-exact; dimensions come from rank computations
over the rationals, never from floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CyclicGraphError,
    InfiniteBundleError,
    RelativeSpecError,
    UnknownVertexError,
)
from .exactmat import IntMatrix, exact_rank
from .graph_model import (
    Graph,
    Path,
    enumerate_paths,
    has_cycle,
    regular_vertices,
    sinks,
)


@dataclass(frozen=True)
class RelativeSpec:
    """The set of regular vertices where the summation identity is imposed.

    The empty set gives the Toeplitz model; the full set of regular
    vertices gives the ordinary Cuntz-Krieger model.
    """

    imposed: frozenset[str]

    @staticmethod
    def toeplitz() -> "RelativeSpec":
        return RelativeSpec(frozenset())

    @staticmethod
    def full(g: Graph) -> "RelativeSpec":
        return RelativeSpec(frozenset(regular_vertices(g)))

    @staticmethod
    def of(vertices) -> "RelativeSpec":
        return RelativeSpec(frozenset(vertices))

    def validate(self, g: Graph) -> None:
        regs = set(regular_vertices(g))
        stray = sorted(self.imposed - regs)
        if stray:
            raise RelativeSpecError(
                "relative spec must name regular vertices of this graph; "
                f"rejected: {', '.join(stray)}")


def _check_model_graph(g: Graph) -> None:
    if has_cycle(g):
        raise CyclicGraphError("cyclic graph: no finite-dimensional model")
    if not g.all_bundles_finite():
        raise InfiniteBundleError("matrix models need every bundle finite")


def terminal_vertices(g: Graph, spec: RelativeSpec) -> list[str]:
    """Sinks plus regular vertices where the summation identity is NOT
    imposed — the vertices where basis paths are allowed to end."""
    spec.validate(g)
    terms = set(sinks(g)) | (set(regular_vertices(g)) - spec.imposed)
    return sorted(terms)


def path_basis(g: Graph, spec: RelativeSpec,
               all_paths: list[Path] | None = None) -> list[Path]:
    """Basis paths: every path whose range is a terminal vertex, in the
    deterministic (length, edge ids, source) order.

    ``all_paths`` may carry a precomputed ``enumerate_paths(g)`` result to
    share enumeration across several specs on the same graph.
    """
    _check_model_graph(g)
    terms = set(terminal_vertices(g, spec))
    if all_paths is None:
        all_paths = enumerate_paths(g)
    return [p for p in all_paths if p.target in terms]


@dataclass
class MatrixRep:
    """The assembled model: basis paths, one diagonal idempotent per vertex,
    one partial permutation per edge."""

    graph: Graph
    spec: RelativeSpec
    basis: tuple[Path, ...]
    vertex_projections: dict[str, IntMatrix]
    edge_isometries: dict[str, IntMatrix]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index_of(self, path: Path) -> int:
        return self._index[path]

    def __post_init__(self) -> None:
        self._index = {p: i for i, p in enumerate(self.basis)}

    def path_matrix(self, path: Path) -> IntMatrix:
        """The operator of an arbitrary path: the vertex projection for a
        trivial path, else the product of its edge isometries."""
        if path.is_trivial:
            return self.vertex_projections[path.source]
        m = self.edge_isometries[path.edges[0]]
        for eid in path.edges[1:]:
            m = m @ self.edge_isometries[eid]
        return m


def build_ck_family(g: Graph, spec: RelativeSpec,
                    all_paths: list[Path] | None = None) -> MatrixRep:
    """Assemble the model for a finite acyclic graph with finite bundles."""
    basis = path_basis(g, spec, all_paths)
    index: dict[Path, int] = {p: i for i, p in enumerate(basis)}
    dim = len(basis)

    by_source: dict[str, list[int]] = {v: [] for v in g.vertices}
    for i, p in enumerate(basis):
        by_source[p.source].append(i)
    projections = {v: IntMatrix.from_diag(idxs, dim)
                   for v, idxs in by_source.items()}

    isometries: dict[str, IntMatrix] = {}
    for e in g.finite_edges():
        col_to_row: dict[int, int] = {}
        for i in by_source[e.dst]:
            tail = basis[i]
            extended = Path(e.src, tail.target, (e.id,) + tail.edges,
                            (e.src,) + tail.vertex_seq)
            col_to_row[i] = index[extended]
        isometries[e.id] = IntMatrix.from_partial_perm(col_to_row, dim)
    return MatrixRep(g, spec, tuple(basis), projections, isometries)


# --- verification ---------------------------------------------------------


@dataclass
class CkReport:
    """Outcome of the exact identity checks, listing every failure."""

    ck1: bool                      # s*th s = range projection, per edge
    ck2: bool                      # range projection under source projection
    ck3_at: dict[str, bool]        # summation identity per regular vertex
    mutual_orthogonality: bool
    failures: list[str]

    def ck3_exactly_at(self, imposed: frozenset[str]) -> bool:
        return all(held == (v in imposed) for v, held in self.ck3_at.items())

    @property
    def all_imposed_hold(self) -> bool:
        return self.ck1 and self.ck2 and self.mutual_orthogonality


def verify_ck(rep: MatrixRep) -> CkReport:
    """Check every Cuntz-Krieger identity by honest matrix arithmetic."""
    g = rep.graph
    failures: list[str] = []
    edges = g.finite_edges()
    range_proj: dict[str, IntMatrix] = {}

    ck1_ok = True
    ck2_ok = True
    for e in edges:
        s = rep.edge_isometries[e.id]
        r = s @ s.transpose()
        range_proj[e.id] = r
        if s.transpose() @ s != rep.vertex_projections[e.dst]:
            ck1_ok = False
            failures.append(f"ck1 fails at edge {e.id}")
        if r @ rep.vertex_projections[e.src] != r:
            ck2_ok = False
            failures.append(f"ck2 fails at edge {e.id}")

    mutual = True
    verts = list(g.vertices)
    for i, v in enumerate(verts):
        pv = rep.vertex_projections[v]
        for w in verts[i + 1:]:
            if not (pv @ rep.vertex_projections[w]).is_zero():
                mutual = False
                failures.append(f"vertex projections {v}, {w} not orthogonal")
    ids = [e.id for e in edges]
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            if not (range_proj[a] @ range_proj[b]).is_zero():
                mutual = False
                failures.append(f"edge ranges {a}, {b} not orthogonal")

    ck3: dict[str, bool] = {}
    for v in regular_vertices(g):
        total = IntMatrix.zero(rep.dim)
        for e in edges:
            if e.src == v:
                total = total + range_proj[e.id]
        held = total == rep.vertex_projections[v]
        ck3[v] = held
        if held != (v in rep.spec.imposed):
            failures.append(
                f"ck3 at {v}: held={held}, imposed={v in rep.spec.imposed}")
    return CkReport(ck1_ok, ck2_ok, ck3, mutual, failures)


@dataclass(frozen=True)
class GapEntry:
    matrix: IntMatrix
    nonzero: bool


def gap_projections(rep: MatrixRep) -> dict[str, GapEntry]:
    """The defect of the summation identity at each regular vertex outside
    the imposed set.  Every entry is an idempotent; with the path basis it
    is the rank-one projection onto the vertex's own trivial path."""
    g = rep.graph
    out: dict[str, GapEntry] = {}
    for v in regular_vertices(g):
        if v in rep.spec.imposed:
            continue
        q = rep.vertex_projections[v]
        for e in g.finite_edges():
            if e.src == v:
                s = rep.edge_isometries[e.id]
                q = q - (s @ s.transpose())
        if not q.is_idempotent():
            raise RelativeSpecError(f"gap at {v} is not a projection")
        out[v] = GapEntry(q, not q.is_zero())
    return out


# --- dimensions, blocks, corners -------------------------------------------


def _operators_of_pairs(rep: MatrixRep,
                        pairs: list[tuple[Path, Path]]) -> list[dict[int, int]]:
    cache: dict[Path, IntMatrix] = {}
    cache_t: dict[Path, IntMatrix] = {}

    def op(p: Path) -> IntMatrix:
        m = cache.get(p)
        if m is None:
            m = rep.path_matrix(p)
            cache[p] = m
        return m

    def op_t(p: Path) -> IntMatrix:
        m = cache_t.get(p)
        if m is None:
            m = op(p).transpose()
            cache_t[p] = m
        return m

    return [(op(a) @ op_t(b)).vectorize() for a, b in pairs]


def algebra_dimension(rep: MatrixRep) -> int:
    """Linear dimension of the span of all path-pair operators, by exact
    rank over the rationals.

    Equals the sum over terminal vertices of the squared count of basis
    paths ending there (each terminal contributes a full matrix block).
    """
    paths = enumerate_paths(rep.graph)
    by_target: dict[str, list[Path]] = {}
    for p in paths:
        by_target.setdefault(p.target, []).append(p)
    pairs = [(a, b) for group in by_target.values() for a in group for b in group]
    return exact_rank(_operators_of_pairs(rep, pairs))


@dataclass(frozen=True)
class Block:
    terminal: str
    size: int


def block_decomposition(rep: MatrixRep) -> list[Block]:
    """One full matrix block per sink; sizes count basis paths into each
    sink.  Only defined for the full relative spec — excluded regular
    vertices leave gap summands that mix into the blocks, so refuse."""
    full = frozenset(regular_vertices(rep.graph))
    if rep.spec.imposed != full:
        raise RelativeSpecError(
            "block decomposition needs the summation identity at every "
            "regular vertex")
    counts: dict[str, int] = {}
    for p in rep.basis:
        counts[p.target] = counts.get(p.target, 0) + 1
    return [Block(v, counts.get(v, 0)) for v in sorted(sinks(rep.graph))]


@dataclass(frozen=True)
class CornerSummary:
    vertex: str
    dimension: int
    full: bool


def corner(rep: MatrixRep, v: str) -> CornerSummary:
    """The compression of the model by one vertex projection.

    Its dimension is the exact rank of the span of path-pair operators
    with both paths starting at the vertex.  The corner is full exactly
    when the vertex projection meets every matrix block, i.e. when every
    terminal vertex is the range of some path from ``v``.
    """
    rep.graph.require_vertex(v)
    paths = enumerate_paths(rep.graph)
    from_v: dict[str, list[Path]] = {}
    for p in paths:
        if p.source == v:
            from_v.setdefault(p.target, []).append(p)
    pairs = [(a, b) for group in from_v.values() for a in group for b in group]
    dim = exact_rank(_operators_of_pairs(rep, pairs))
    terminals = set(terminal_vertices(rep.graph, rep.spec))
    reached = {p.target for p in rep.basis if p.source == v}
    return CornerSummary(v, dim, reached == terminals)


def export_model(rep: MatrixRep) -> dict:
    """JSON-ready form: basis path labels plus sparse triples for every
    generator."""
    return {
        "basis": [p.label() for p in rep.basis],
        "p": {v: m.to_triples() for v, m in sorted(rep.vertex_projections.items())},
        "s": {e: m.to_triples() for e, m in sorted(rep.edge_isometries.items())},
    }
