"""Builtin staged families: ladders, the ray, doubled-path ladders, roses.

Family names accepted by :func:`builtin_family`:

* ``ladder<k>``       — spine w_1, w_2, ... with k parallel edges per rung
                        (``ladder2`` is the doubled ladder; rung i edges are
                        named e_i, f_i, g_i, ... in alphabet order)
* ``ray``             — v_1 -> v_2 -> ... single exclusive edges e_i
* ``forbidden_ladder[_a_b]`` — spine v_1, v_2, ... joined by two distinct
                        paths per rung, of lengths a and b (default 1 and 2)
* ``rose<n>``         — one vertex with n loops (constant family)
* ``uncountable_rose`` — one vertex with one uncountable loop bundle
"""

from __future__ import annotations

import re

from .errors import FamilyError
from .graph_model import (
    ALEPH0,
    UNCOUNTABLE,
    EdgeBundle,
    Graph,
    StagedGraph,
    UniformProfile,
    build_graph,
    finite,
)

# letters used to name parallel rung edges, starting at 'e' as is customary
_RUNG_LETTERS = "efghijklmnopqrstuvwxyz"


def ladder_family(parallel: int) -> StagedGraph:
    """Stage n: vertices w_1..w_n, with ``parallel`` edges from each w_i to
    w_{i+1}."""
    if parallel < 1:
        raise FamilyError("ladder needs at least one edge per rung")
    if parallel > len(_RUNG_LETTERS):
        raise FamilyError(f"ladder supports at most {len(_RUNG_LETTERS)} parallel edges")

    def build(n: int) -> Graph:
        vertices = [f"w_{i}" for i in range(1, n + 1)]
        bundles = []
        for i in range(1, n):
            for j in range(parallel):
                bundles.append(EdgeBundle(f"{_RUNG_LETTERS[j]}_{i}",
                                          f"w_{i}", f"w_{i + 1}"))
        return build_graph(vertices, bundles)

    profile = UniformProfile(min_out_degree=parallel,
                             spine=lambda i: f"w_{i}",
                             acyclic_stages=True)
    return StagedGraph(f"ladder{parallel}", build, profile, chain_kind="corner")


def ray_family() -> StagedGraph:
    """Stage n: v_1 -> v_2 -> ... -> v_n, each edge its source's only one."""

    def build(n: int) -> Graph:
        vertices = [f"v_{i}" for i in range(1, n + 1)]
        bundles = [EdgeBundle(f"e_{i}", f"v_{i}", f"v_{i + 1}")
                   for i in range(1, n)]
        return build_graph(vertices, bundles)

    profile = UniformProfile(min_out_degree=1,
                             spine=lambda i: f"v_{i}",
                             spine_exclusive=True,
                             acyclic_stages=True)
    return StagedGraph("ray", build, profile, chain_kind="tail")


def forbidden_ladder_family(len_a: int = 1, len_b: int = 2) -> StagedGraph:
    """Spine v_1, v_2, ... where consecutive vertices are joined by two
    distinct paths of lengths ``len_a`` and ``len_b`` through fresh
    intermediate vertices."""
    if len_a < 1 or len_b < 1:
        raise FamilyError("forbidden_ladder path lengths must be >= 1")

    def rung(i: int, tag: str, length: int) -> tuple[list[str], list[EdgeBundle]]:
        mids = [f"{tag}{i}_{j}" for j in range(1, length)]
        hops = [f"v_{i}"] + mids + [f"v_{i + 1}"]
        bundles = [EdgeBundle(f"{tag}{i}_{j}e", hops[j], hops[j + 1])
                   for j in range(length)]
        return mids, bundles

    def build(n: int) -> Graph:
        vertices = [f"v_{i}" for i in range(1, n + 1)]
        bundles: list[EdgeBundle] = []
        for i in range(1, n):
            mids_a, bun_a = rung(i, "a", len_a)
            mids_b, bun_b = rung(i, "b", len_b)
            vertices.extend(mids_a)
            vertices.extend(mids_b)
            bundles.extend(bun_a)
            bundles.extend(bun_b)
        return build_graph(vertices, bundles)

    # the spine is only edge-joined when one of the two rung paths is direct
    spine = (lambda i: f"v_{i}") if min(len_a, len_b) == 1 else None
    profile = UniformProfile(min_out_degree=1, spine=spine, acyclic_stages=True)
    return StagedGraph(f"forbidden_ladder_{len_a}_{len_b}", build, profile)


def rose_family(loops: int) -> StagedGraph:
    """One vertex with ``loops`` loops; every stage is the same graph."""
    if loops < 1:
        raise FamilyError("rose needs at least one loop")
    g = build_graph(["u"], [EdgeBundle(f"l_{j}", "u", "u")
                            for j in range(1, loops + 1)])
    return StagedGraph(f"rose{loops}", lambda n: g, constant=True)


def uncountable_rose_family() -> StagedGraph:
    """One vertex with a single uncountable loop bundle."""
    g = build_graph(["u"], [EdgeBundle("l", "u", "u", UNCOUNTABLE)])
    return StagedGraph("uncountable_rose", lambda n: g, constant=True)


def aleph0_rose_family() -> StagedGraph:
    """One vertex with one countably infinite loop bundle."""
    g = build_graph(["u"], [EdgeBundle("l", "u", "u", ALEPH0)])
    return StagedGraph("aleph0_rose", lambda n: g, constant=True)


_FAMILY_SPECS = [
    ("ladder<k>", "doubled/k-fold ladder; corner chain from w_1"),
    ("ray", "single infinite tail v_1 -> v_2 -> ...; tail chain"),
    ("forbidden_ladder[_a_b]", "spine joined by two distinct paths per rung"),
    ("rose<n>", "one vertex, n loops (constant)"),
    ("uncountable_rose", "one vertex, one uncountable loop bundle (constant)"),
    ("aleph0_rose", "one vertex, one countably infinite loop bundle (constant)"),
]


def family_catalog() -> list[tuple[str, str]]:
    return list(_FAMILY_SPECS)


def builtin_family(name: str) -> StagedGraph:
    """Parse a family spec string like ``ladder2`` or ``forbidden_ladder_1_2``."""
    m = re.fullmatch(r"ladder(\d+)", name)
    if m:
        return ladder_family(int(m.group(1)))
    if name == "ray":
        return ray_family()
    if name == "forbidden_ladder":
        return forbidden_ladder_family()
    m = re.fullmatch(r"forbidden_ladder_(\d+)_(\d+)", name)
    if m:
        return forbidden_ladder_family(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"rose(\d+)", name)
    if m:
        return rose_family(int(m.group(1)))
    if name == "uncountable_rose":
        return uncountable_rose_family()
    if name == "aleph0_rose":
        return aleph0_rose_family()
    raise FamilyError(f"unknown family {name!r}; see `family --list`")
