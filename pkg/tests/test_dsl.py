import pytest

from hansarg.core import TOP, Hans, ValidationError, parse_literal
from hansarg.dsl import ParseError, canonical_hans, load_hans, parse_hans, render_hans
from hansarg.fixtures import FIXTURES, fixture

from conftest import random_instances

ORDER = "context w\nnorm w -> h rank 1\nnorm h -> o rank 3\nnorm w -> ~o rank 2"


def test_order_puzzle_text():
    h = parse_hans(ORDER).hans
    assert h == fixture("order")
    assert h.norm("w", "h").rank == 1
    assert h.context == {TOP, parse_literal("w")}


def test_empty_text():
    h = parse_hans("").hans
    assert h.context == {TOP} and h.norms == ()


def test_comments_blank_lines_and_multiple_context_lines():
    doc = parse_hans("# hi\n\ncontext a, ~b  # trailing\ncontext c\nnorm top -> a rank 0\n")
    assert doc.hans.context == {TOP, parse_literal("a"), parse_literal("~b"), parse_literal("c")}
    assert doc.norm_spans == {0: (5, 1)}
    assert doc.context_spans[parse_literal("c")] == (4, 9)


def test_inconsistent_context():
    with pytest.raises(ValidationError, match="both w and ~w"):
        parse_hans("context w, ~w")


def test_duplicate_norm():
    with pytest.raises(ValidationError, match="duplicate"):
        parse_hans("context a\nnorm a -> b rank 1\nnorm a -> b rank 2")


def test_negative_rank_is_validation_error():
    with pytest.raises(ValidationError, match="negative"):
        parse_hans("norm a -> b rank -3")


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("norm a b rank 1", 1, 8),
        ("context\n", 1, 8),
        ("norm a -> b rank x", 1, 18),
        ("norm a -> b weight 2", 1, 13),
        ("\n\nrule a -> b", 3, 1),
        ("context a;", 1, 10),
        ("context a b", 1, 11),
        ("norm a -> ~top rank 1", 1, 11),
        ("norm a -> b rank 1 extra", 1, 20),
    ],
)
def test_syntax_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_hans(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_top_headed_norm_warns():
    doc = parse_hans("context a\nnorm a -> top rank 1")
    assert len(doc.warnings) == 1 and "top" in doc.warnings[0]


def test_round_trip_fixtures_and_random():
    for text in FIXTURES.values():
        h = parse_hans(text).hans
        assert parse_hans(render_hans(h)).hans == h
    for _, h in random_instances():
        assert parse_hans(render_hans(h)).hans == canonical_hans(h)


def test_canonical_drops_unused_atoms():
    h = Hans.build([("a", "b", 0)], ["a"], atoms="abz")
    assert canonical_hans(h).atoms == {"a", "b"}
    assert canonical_hans(h) != h


def test_render_is_canonical():
    text = render_hans(fixture("oddcycle"))
    assert text.splitlines()[0] == "context b, p, r"
    assert render_hans(Hans()) == ""


def test_shipped_files_match_fixtures(tmp_path):
    import pathlib

    root = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    for name in FIXTURES:
        assert load_hans(root / f"{name}.hans").hans == fixture(name)
