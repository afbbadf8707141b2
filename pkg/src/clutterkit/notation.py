"""Text notations for clutters and complexes.

Compact notation writes each set as a run of one-character labels
(``"12, 13, 145"``).  Extended notation braces whitespace-separated labels
(``"{1 2 13}, {4 5}"``) and is used whenever a label is longer than one
character.  ``{}`` is the empty set in both notations, and an empty string is
the family with no sets.
"""

from __future__ import annotations

from .core import Clutter, ClutterError, LabeledGround, SimplicialComplex, is_antichain, mask_of


class ParseError(ClutterError):
    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class AntichainError(ParseError):
    def __init__(self, smaller: str, larger: str) -> None:
        self.pair = (smaller, larger)
        super().__init__(f"not an antichain: {smaller} is contained in {larger}")


def _tokenize(text: str) -> list[tuple[int, list[str]]]:
    """Split into (position, labels) per set."""
    out: list[tuple[int, list[str]]] = []
    i = 0
    n = len(text)
    expect_set = True
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == ",":
            if expect_set:
                raise ParseError("empty entry", i)
            expect_set = True
            i += 1
            continue
        if not expect_set:
            raise ParseError(f"expected ',' but found {ch!r}", i)
        start = i
        if ch == "{":
            close = text.find("}", i)
            if close < 0:
                raise ParseError("unclosed '{'", i)
            body = text[i + 1 : close]
            if "{" in body or "," in body:
                raise ParseError("malformed braced set", i)
            labels = body.split()
            i = close + 1
        elif ch == "∅":
            labels = []
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] != ",":
                if text[j] in "{}":
                    raise ParseError(f"unexpected {text[j]!r}", j)
                j += 1
            labels = list(text[i:j])
            i = j
        for lab in labels:
            if not lab.isdigit() or int(lab) < 1:
                raise ParseError(f"label {lab!r} is not a positive integer", start)
        out.append((start, labels))
        expect_set = False
    if out and expect_set:
        raise ParseError("trailing ','", len(text.rstrip()) - 1)
    return out


def parse_family(text: str, n: int | None = None) -> tuple[int, list[tuple[int, int]], LabeledGround]:
    """Parse sets; returns ground size, (position, mask) pairs and labels ``1..n``."""
    tokens = _tokenize(text)
    top = max((int(lab) for _, labs in tokens for lab in labs), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"label {top} out of range for {n} vertices")
    sets = []
    for pos, labs in tokens:
        idx = [int(lab) - 1 for lab in labs]
        if len(set(idx)) != len(idx):
            raise ParseError("repeated label inside a set", pos)
        sets.append((pos, mask_of(idx)))
    return n, sets, LabeledGround.numbered(n)


def parse_clutter(text: str, n: int | None = None) -> tuple[Clutter, LabeledGround]:
    """Parse a clutter; labels ``1..n`` map to indices ``0..n-1``.

    Without ``n`` the ground set is ``1..`` the largest label used.
    """
    n, sets, labels = parse_family(text, n)
    masks = [m for _, m in sets]
    seen = {}
    for pos, m in sets:
        if m in seen:
            raise ParseError(f"duplicate set {format_set(m, labels)}", pos)
        seen[m] = pos
    if not is_antichain(masks):
        for a in masks:
            for b in masks:
                if a != b and a & b == a:
                    raise AntichainError(format_set(a, labels), format_set(b, labels))
    return Clutter(n, tuple(masks)), labels


def parse_complex(text: str, n: int | None = None) -> tuple[SimplicialComplex, LabeledGround]:
    """Parse facets; non-maximal sets are rejected like in :func:`parse_clutter`."""
    c, labels = parse_clutter(text, n)
    return SimplicialComplex(c.n, c.circuits), labels


def _compact_ok(labels: LabeledGround) -> bool:
    return all(len(lab) == 1 for lab in labels.labels)


def format_set(mask: int, labels: LabeledGround, compact: bool | None = None) -> str:
    if compact is None:
        compact = _compact_ok(labels)
    names = labels.names(mask)
    if not names:
        return "{}"
    if compact:
        return "".join(names)
    return "{" + " ".join(names) + "}"


def _sorted_sets(masks, labels: LabeledGround) -> list[int]:
    def sort_key(m: int):
        return [labels.labels.index(x) for x in labels.names(m)] or [-1]

    return sorted(masks, key=sort_key)


def format_sets(masks, labels: LabeledGround | None = None, n: int | None = None) -> str:
    if labels is None:
        top = max((m.bit_length() for m in masks), default=0)
        labels = LabeledGround.numbered(max(top, n or 0))
    compact = _compact_ok(labels)
    return ", ".join(format_set(m, labels, compact) for m in _sorted_sets(masks, labels))


def format_clutter(c: Clutter, labels: LabeledGround | None = None) -> str:
    return format_sets(c.circuits, labels or LabeledGround.numbered(c.n))


def format_complex(d: SimplicialComplex, labels: LabeledGround | None = None) -> str:
    return format_sets(d.facets, labels or LabeledGround.numbered(d.n))


