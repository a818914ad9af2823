import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_gens, random_semigroup
from sgpcalc import make_semigroup
from sgpcalc.errors import NonCoprime, NonPositive, ParseError
from sgpcalc.formats import (
    document,
    dumps,
    format_ideal,
    format_semigroup,
    parse_ideal,
    parse_instance,
    parse_semigroup,
)
from sgpcalc.ideals import unit_ideal


def test_parse_semigroup():
    assert parse_semigroup("<4,6,7>").generators == (4, 6, 7)
    assert parse_semigroup("  < 4 , 5,11 >  ").generators == (4, 5, 11)
    with pytest.raises(NonCoprime):
        parse_semigroup("<4,6>")
    with pytest.raises(NonPositive):
        parse_semigroup("<0,3>")


@pytest.mark.parametrize("text, offset", [("<4,6,7", 6), ("4,6,7>", 0), ("<4,,7>", 3), ("<4,6,7>x", 7),
                                          ("<>", 1), ("<4;6>", 2), ("", 0), ("<4 6>", 3)])
def test_parse_errors_carry_byte_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_semigroup(text)
    assert info.value.offset == offset


def test_offsets_count_bytes_not_characters():
    with pytest.raises(ParseError) as info:
        parse_semigroup("<4,é>")
    assert info.value.offset == 3
    with pytest.raises(ParseError) as info:
        parse_semigroup("<é")
    assert info.value.offset == 1


def test_parse_ideal():
    S = make_semigroup([4, 6, 7])
    E = parse_ideal("(7,8)", S)
    assert E.sporadic == (7, 8) and E.threshold == 11
    assert parse_ideal("(0)", S) == unit_ideal(S)
    assert parse_ideal("(-3, 1)", S).min == -3
    T = make_semigroup([4, 5, 11])
    assert parse_ideal("(8,9,15,16,22)", T).generators == (8, 9, 15)
    with pytest.raises(ParseError):
        parse_ideal("<7,8>", S)


def test_parse_instance():
    inst = parse_instance("<4,6,7>", I="(7,8)", J="(4)", x=4)
    assert inst.I.generators == (7, 8) and inst.J.generators == (4,) and inst.K is None and inst.x == 4


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_round_trip(seed):
    rng = random.Random(seed)
    S = random_semigroup(rng)
    assert parse_semigroup(format_semigroup(S)) == S
    E = parse_ideal("(" + ",".join(map(str, random_gens(rng, S, integral=False))) + ")", S)
    again = parse_ideal(format_ideal(E), S)
    assert again == E and again.generators == E.generators


def test_json_layout():
    text = dumps(document(semigroup={"b": 1, "a": 2}, ideal=None))
    assert text.endswith("\n")
    doc = json.loads(text)
    assert list(doc) == ["schema_version", "semigroup"]
    assert list(doc["semigroup"]) == ["a", "b"]
