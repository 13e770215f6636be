"""Registry of the structure facts the reports lean on.

Every claim line a report emits carries exactly one tag.  A tag is either
``computed`` — the line restates something this package checked directly,
by enumeration or exact arithmetic — or one of the fixed entries below,
each a standard fact about graph algebras stated in our own words.  The
registry is deliberately closed: an unknown tag in a report is a bug.
"""

from __future__ import annotations

TAGS: dict[str, str] = {
    "computed":
        "checked directly by this package, by enumeration or exact "
        "integer arithmetic",
    "simplicity-criterion":
        "a row-countable graph algebra is simple exactly when every cycle "
        "has an exit and the only saturated hereditary vertex sets are "
        "empty and full; equivalently, every cycle has an exit, the graph "
        "is cofinal, and every vertex reaches every singular vertex",
    "af-iff-acyclic":
        "a graph algebra is approximately finite-dimensional exactly when "
        "the graph has no cycles",
    "hereditary-restriction-ideal":
        "a saturated hereditary vertex set spans an ideal, and the ideal "
        "is the algebra of the restricted graph",
    "relative-uniqueness":
        "a representation that keeps every vertex projection and every "
        "off-list gap projection nonzero is faithful on the relative "
        "algebra",
    "unique-irrep-implies-simple":
        "an algebra with a unique irreducible representation (up to "
        "unitary equivalence) is simple",
    "doubled-ladder-corner-uhf":
        "the corner of the doubled-edge ladder algebra at the first rung "
        "vertex is the uniformly hyperfinite algebra of type two to the "
        "infinity",
    "downstream-restriction-countable":
        "restricting a row-countable graph to the downstream closure of a "
        "vertex keeps it row-countable with countably many vertices",
    "row-class-af-equivalence":
        "for deciding AF-ness and simplicity together, a row-countable "
        "graph behaves like a row-finite one",
    "forbidden-doubled-ladder":
        "a simple AF graph algebra with a unique irreducible "
        "representation admits no arbitrarily long chains of vertices "
        "consecutively joined by two or more paths",
    "sink-or-tail-dichotomy":
        "a simple AF graph algebra with a unique irreducible "
        "representation comes from a graph that either has exactly one "
        "sink and no infinite paths, or has no sinks and an exclusive "
        "infinite tail",
    "af-unique-irrep-compacts":
        "a simple AF graph algebra has a unique irreducible representation "
        "exactly when it is the compact operators on some separable "
        "space; the sink or tail of the dichotomy carries that "
        "representation",
    "row-countable-unique-irrep-compacts":
        "a simple row-countable graph algebra with a unique irreducible "
        "representation is the compact operators, and the graph is "
        "acyclic",
    "purely-infinite-open-case":
        "whether a simple purely infinite algebra can have a unique "
        "irreducible representation is open; graphs with uncountable "
        "emitters land here",
    "full-corner-morita":
        "a full corner is Morita equivalent to the ambient algebra and "
        "shares its ideal structure and representation theory",
    "multiplicity-one-chain-compacts":
        "a Bratteli chain of single blocks with every inclusion of "
        "multiplicity one and sizes growing without bound has the compact "
        "operators as its limit",
    "uniform-multiplicity-chain-uhf":
        "a Bratteli chain of single blocks with every inclusion of "
        "constant multiplicity at least two has a uniformly hyperfinite "
        "limit whose supernatural number collects the multiplicities",
}


def citation_text(tag: str) -> str:
    """Look a tag up, loudly."""
    try:
        return TAGS[tag]
    except KeyError:
        raise KeyError(f"unknown citation tag: {tag!r}") from None


def known_tags() -> tuple[str, ...]:
    return tuple(sorted(TAGS))
