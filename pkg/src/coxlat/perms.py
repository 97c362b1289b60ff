"""One-line notation for types A and B.

Type A_n: generators s1..sn, s_i = (i i+1), acting on S_{n+1}.
Type B_n: generators s0..s_{n-1}, s0 = (1 -1) and s_i = (-i-1 -i)(i i+1).
Right multiplication by s_i swaps positions i and i+1; s0 negates the first
entry.  Negative entries are written in parentheses, e.g. ``3(-4)65``.
"""

from __future__ import annotations

import re

from .coxeter import CoxeterDiagram, Word
from .errors import CodecError

_TOKEN = re.compile(r"\((-?\d+)\)|(\d)")


def parse_one_line(text: str) -> tuple[int, ...]:
    """Parse ``"3(-4)65"``; entries above 9 must be parenthesised."""
    text = text.replace(" ", "")
    out, pos = [], 0
    for mt in _TOKEN.finditer(text):
        if mt.start() != pos:
            raise CodecError(f"cannot parse one-line notation {text!r}")
        out.append(int(mt.group(1) or mt.group(2)))
        pos = mt.end()
    if pos != len(text):
        raise CodecError(f"cannot parse one-line notation {text!r}")
    return tuple(out)


def format_one_line(perm) -> str:
    return "".join(str(x) if 0 <= x <= 9 else f"({x})" for x in perm)


def family_of(diagram: CoxeterDiagram) -> str:
    types = diagram.component_types
    if len(types) != 1 or types[0].family not in "AB":
        raise CodecError("one-line notation is available for irreducible types A and B only")
    return types[0].family


def _check(perm, family):
    n = len(perm)
    if family == "A":
        if sorted(perm) != list(range(1, n + 1)):
            raise CodecError(f"{format_one_line(perm)} is not a permutation of 1..{n}")
    elif sorted(abs(x) for x in perm) != list(range(1, n + 1)):
        raise CodecError(f"{format_one_line(perm)} is not a signed permutation of 1..{n}")


def word_to_perm(word: Word, family: str, rank: int) -> tuple[int, ...]:
    """One-line notation of the product of ``word`` (generator indices)."""
    if family == "A":
        p = list(range(1, rank + 2))
        for s in word:
            p[s], p[s + 1] = p[s + 1], p[s]
    else:
        p = list(range(1, rank + 1))
        for s in word:
            if s == 0:
                p[0] = -p[0]
            else:
                p[s - 1], p[s] = p[s], p[s - 1]
    return tuple(p)


def perm_to_word(perm, family: str) -> Word:
    """A reduced word, found by repeatedly removing a right descent."""
    p = list(perm)
    _check(p, family)
    word = []
    while True:
        if family == "A":
            d = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
            if d is None:
                break
            p[d], p[d + 1] = p[d + 1], p[d]
            word.append(d)
        else:
            if p[0] < 0:
                p[0] = -p[0]
                word.append(0)
                continue
            d = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
            if d is None:
                break
            p[d], p[d + 1] = p[d + 1], p[d]
            word.append(d + 1)
    return tuple(reversed(word))


def perm_encode(diagram: CoxeterDiagram, word: Word) -> str:
    return format_one_line(word_to_perm(word, family_of(diagram), diagram.rank))


def perm_decode(diagram: CoxeterDiagram, text) -> Word:
    perm = parse_one_line(text) if isinstance(text, str) else tuple(text)
    fam = family_of(diagram)
    size = diagram.rank + 1 if fam == "A" else diagram.rank
    if len(perm) != size:
        raise CodecError(f"expected {size} entries for {diagram.label}, got {len(perm)}")
    return perm_to_word(perm, fam)


def one_line_table(L) -> list[tuple[int, ...]]:
    """One-line notation of every element of a type A or B weak order (cached)."""
    if "one_line" not in L.cache:
        fam = family_of(L.diagram)
        rank = L.diagram.rank
        L.cache["one_line"] = [word_to_perm(w, fam, rank) for w in L.words]
        L.cache["one_line_index"] = {p: i for i, p in enumerate(L.cache["one_line"])}
    return L.cache["one_line"]


def index_of_perm(L, perm) -> int:
    one_line_table(L)
    if isinstance(perm, str):
        perm = parse_one_line(perm)
    try:
        return L.cache["one_line_index"][tuple(perm)]
    except KeyError:
        raise CodecError(f"{format_one_line(perm)} is not an element of {L.label}") from None


def codec_audit(L) -> bool:
    """Check that covers of the weak order are exactly the one-line moves."""
    fam = family_of(L.diagram)
    table = one_line_table(L)
    for i, j, s in L.covers():
        p, q = list(table[i]), table[j]
        if fam == "A":
            k = s
        elif s == 0:
            if p[0] < 0:
                return False
            p[0] = -p[0]
            if tuple(p) != q:
                return False
            continue
        else:
            k = s - 1
        if p[k] > p[k + 1]:
            return False
        p[k], p[k + 1] = p[k + 1], p[k]
        if tuple(p) != q:
            return False
    return True
