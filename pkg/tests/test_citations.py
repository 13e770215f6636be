# The claim-tag registry is closed; freeze its contents.

import pytest

from graphck.citations import TAGS, citation_text, known_tags

FROZEN = (
    "af-iff-acyclic",
    "af-unique-irrep-compacts",
    "computed",
    "doubled-ladder-corner-uhf",
    "downstream-restriction-countable",
    "forbidden-doubled-ladder",
    "full-corner-morita",
    "hereditary-restriction-ideal",
    "multiplicity-one-chain-compacts",
    "purely-infinite-open-case",
    "relative-uniqueness",
    "row-class-af-equivalence",
    "row-countable-unique-irrep-compacts",
    "simplicity-criterion",
    "sink-or-tail-dichotomy",
    "uniform-multiplicity-chain-uhf",
    "unique-irrep-implies-simple",
)


def test_registry_is_exactly_the_frozen_set():
    assert known_tags() == FROZEN


def test_lookup():
    assert citation_text("computed").startswith("checked directly")
    with pytest.raises(KeyError, match="unknown citation tag"):
        citation_text("nope")


def test_every_entry_has_real_prose():
    for tag, text in TAGS.items():
        assert len(text) > 40, tag
        assert text == text.strip()
        assert not text.endswith(".")
