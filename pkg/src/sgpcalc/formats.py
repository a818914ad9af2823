"""Literals for semigroups and ideals, and the JSON document layout."""

from __future__ import annotations

import json
import re

from .classify import ClassificationReport, InstanceSpec
from .errors import ParseError
from .ideals import FractionalIdeal, colength, ideal_from_generators
from .invariants import InvariantReport
from .semigroup import NumericalSemigroup, make_semigroup

SCHEMA_VERSION = 1

_TOKEN = re.compile(r"\s*(?:(-?\d+)|(\S))")


def _byte_offset(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


def _parse_list(text: str, open_ch: str, close_ch: str, what: str) -> list[int]:
    """Grammar: open int (',' int)* close, with optional whitespace between tokens."""
    if not isinstance(text, str):
        raise ParseError(f"{what} literal must be a string", str(text), 0)
    pos = 0
    items: list[int] = []

    def fail(msg, at):
        raise ParseError(f"malformed {what} literal: {msg}", text, _byte_offset(text, at))

    def next_token():
        nonlocal pos
        m = _TOKEN.match(text, pos)
        if not m:
            return None, len(text.rstrip()) if text.strip() else 0
        start = m.start(1) if m.group(1) is not None else m.start(2)
        pos = m.end()
        return m, start

    m, at = next_token()
    if m is None or m.group(2) != open_ch:
        fail(f"expected {open_ch!r}", at if m is not None else len(text))
    expect_int = True
    while True:
        m, at = next_token()
        if m is None:
            fail(f"expected {'an integer' if expect_int else repr(close_ch)}", len(text))
        if expect_int:
            if m.group(1) is None:
                fail("expected an integer", at)
            items.append(int(m.group(1)))
            expect_int = False
        elif m.group(2) == ",":
            expect_int = True
        elif m.group(2) == close_ch:
            break
        else:
            fail(f"expected ',' or {close_ch!r}", at)
    if text[pos:].strip():
        fail("trailing characters", pos + (len(text[pos:]) - len(text[pos:].lstrip())))
    return items


def parse_semigroup(text: str) -> NumericalSemigroup:
    """``<a1,...,an>``; constructor errors (NonCoprime, NonPositive) pass through."""
    return make_semigroup(_parse_list(text, "<", ">", "semigroup"))


def parse_ideal(text: str, S: NumericalSemigroup) -> FractionalIdeal:
    """``(g1,...,gk)``; negative exponents give fractional ideals."""
    return ideal_from_generators(S, _parse_list(text, "(", ")", "ideal"))


def format_semigroup(S: NumericalSemigroup) -> str:
    return S.literal()


def format_ideal(E: FractionalIdeal) -> str:
    return E.literal()


def parse_instance(S_text: str, I=None, J=None, K=None, x=None) -> InstanceSpec:
    S = parse_semigroup(S_text)
    return InstanceSpec(
        semigroup=S,
        I=parse_ideal(I, S) if I is not None else None,
        J=parse_ideal(J, S) if J is not None else None,
        K=parse_ideal(K, S) if K is not None else None,
        x=x,
    )


# -- JSON sections ---------------------------------------------------------------

def semigroup_json(S: NumericalSemigroup, nearly_gorenstein: bool) -> dict:
    return {
        "generators": list(S.generators),
        "frobenius": S.frobenius,
        "gaps": list(S.gaps),
        "pf": list(S.pseudo_frobenius),
        "type": S.ring_type,
        "symmetric": S.symmetric,
        "nearly_gorenstein": nearly_gorenstein,
    }


def invariants_json(rep: InvariantReport) -> dict:
    out = {
        "e": rep.e,
        "embdim": rep.embdim,
        "eli": rep.eli,
        "ulr": rep.ulr,
        "gll_mono": rep.gll_mono,
        "gll_witness": rep.gll_witness,
        "gll_exact_flag": rep.gll_exact,
        "gr_cm": rep.gr_cm,
        "samuel": list(rep.samuel),
    }
    if rep.index is not None:
        out["index"] = rep.index
    return out


def ideal_json(E: FractionalIdeal) -> dict:
    out = dict(E.normal_form())
    out["mu"] = E.mu
    if E.is_integral():
        out["colength"] = colength(E)
    return out


def classification_json(rep: ClassificationReport) -> dict:
    return rep.to_json()


def document(**sections) -> dict:
    out = {"schema_version": SCHEMA_VERSION}
    out.update({k: v for k, v in sections.items() if v is not None})
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"
