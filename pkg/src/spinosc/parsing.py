"""Text grammar for algebra elements, plus the small weight/root readers.

Element grammar (whitespace insensitive):

    element  := term (("+" | "-") term)*
    term     := [rational "*"] factor ("*" factor)*  |  rational
    factor   := ("x" | "d" | "xi" | "eta") "[" signed-int "]" ["^" nat]
    rational := ["-"] nat ["/" nat]

Generators x/d belong to Weyl signatures and xi/eta to Clifford ones.  The
canonical printer in the algebra module is a fixed point of this parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, GeneratorSymbol, GenKind, normal_form
from .errors import ParseError
from .weights import AlgebraKind, AlgebraSignature, ClassicalWeight, Weight

_TOKEN = re.compile(
    r"\s*(?:(?P<name>xi|eta|x|d)\[(?P<index>-?\d+)\]"
    r"|(?P<number>\d+(?:/\d+)?)"
    r"|(?P<op>[\^*+-]))"
)

_WEYL_NAMES = {"x": GenKind.RAISING, "d": GenKind.LOWERING}
_CLIFFORD_NAMES = {"xi": GenKind.RAISING, "eta": GenKind.LOWERING}


@dataclass(frozen=True)
class ParsedElement:
    source: str
    element: AlgebraElement


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
            break
        out.append((match, match.start()))
        pos = match.end()
    return out


def parse_element(text: str, sig: AlgebraSignature) -> ParsedElement:
    """Parse the element grammar against a signature."""
    names = _WEYL_NAMES if sig.kind is AlgebraKind.WEYL else _CLIFFORD_NAMES
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input")
    element = AlgebraElement.zero(sig)
    i = 0
    sign = 1
    first = True
    while i < len(tokens):
        match, where = tokens[i]
        if match.lastgroup == "op" and match.group("op") in "+-":
            if first:
                if match.group("op") == "-":
                    sign = -sign
                i += 1
                continue
            sign = 1 if match.group("op") == "+" else -1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", where)
        term, i = _parse_term(tokens, i, sig, names)
        element = element.add(term.scale(sign))
        sign = 1
        first = False
    return ParsedElement(text, element)


def _parse_term(tokens, i, sig, names):
    coeff = Fraction(1)
    word: list[GeneratorSymbol] = []
    expect_factor = True
    saw_number = False
    while i < len(tokens):
        match, where = tokens[i]
        kind = match.lastgroup
        if kind == "op" and match.group("op") in "+-":
            break
        if kind == "op" and match.group("op") == "*":
            if expect_factor:
                raise ParseError("misplaced '*'", where)
            expect_factor = True
            i += 1
            continue
        if not expect_factor:
            raise ParseError("missing '*' between factors", where)
        if kind == "number":
            if word or saw_number:
                raise ParseError("coefficient must come first in a term", where)
            coeff *= Fraction(match.group("number"))
            saw_number = True
            expect_factor = False
            i += 1
            continue
        if kind == "name":
            name = match.group("name")
            if name not in names:
                raise ParseError(
                    f"generator {name!r} does not belong to {sig}", where
                )
            index = int(match.group("index"))
            if index == 0:
                raise ParseError("index must be nonzero", where)
            if not sig.in_rank(index):
                raise ParseError(f"index {index} outside ranks of {sig}", where)
            exp = 1
            if i + 1 < len(tokens) and tokens[i + 1][0].lastgroup == "op" \
                    and tokens[i + 1][0].group("op") == "^":
                if i + 2 >= len(tokens) or tokens[i + 2][0].lastgroup != "number":
                    raise ParseError("expected exponent after '^'", where)
                exp_text = tokens[i + 2][0].group("number")
                if "/" in exp_text:
                    raise ParseError("exponent must be a natural number", where)
                exp = int(exp_text)
                i += 2
            if exp > 1 and sig.is_fermionic_index(index):
                raise ParseError(
                    f"exponent {exp} exceeds 1 at fermionic index {index}", where
                )
            word.extend([GeneratorSymbol(names[name], index)] * exp)
            expect_factor = False
            i += 1
            continue
        raise ParseError(f"unexpected token {match.group(0)!r}", where)
    if expect_factor:
        raise ParseError("dangling operator at end of term")
    if not word and not saw_number:
        raise ParseError("empty term")
    return normal_form(word, coeff, sig), i


# -- small readers for weights, classical weights, and roots -----------------


def parse_weight(
    entries_text: str, pos_tail: str = "0", neg_tail: str = "0"
) -> Weight:
    """Read a weight from ``index=value`` pairs, e.g. ``1=1/2,-2=1``."""
    entries = {}
    text = entries_text.strip()
    if text:
        for chunk in text.split(","):
            if "=" not in chunk:
                raise ParseError(f"expected index=value, got {chunk!r}")
            index_text, value_text = chunk.split("=", 1)
            try:
                index = int(index_text.strip())
                value = Fraction(value_text.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad weight entry {chunk!r}: {exc}")
            entries[index] = value
    try:
        return Weight.make(entries, Fraction(pos_tail), Fraction(neg_tail))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad tail value: {exc}")


_CLASSICAL_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*\*?\s*)?(?P<block>[ef])(?P<index>\d+)\s*"
)


def parse_classical(text: str) -> ClassicalWeight:
    """Read an eps/delta combination like ``1/2*e1+1/2*e2-3/2*f1``."""
    eps: dict[int, Fraction] = {}
    delta: dict[int, Fraction] = {}
    pos = 0
    text = text.strip()
    if text in ("", "0"):
        return ClassicalWeight.make()
    first = True
    while pos < len(text):
        match = _CLASSICAL_TERM.match(text, pos)
        if match is None:
            raise ParseError(f"bad classical weight near {text[pos:]!r}", pos)
        sign = match.group("sign")
        if sign is None and not first:
            raise ParseError("expected '+' or '-' between terms", pos)
        value = Fraction(match.group("coeff") or 1)
        if sign == "-":
            value = -value
        index = int(match.group("index"))
        target = eps if match.group("block") == "e" else delta
        target[index] = target.get(index, Fraction(0)) + value
        pos = match.end()
        first = False
    return ClassicalWeight.make(eps, delta)
