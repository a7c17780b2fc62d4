"""Labeled monotone lattice paths below y=(k-1)x and their combinatorics.

A path of size n runs from (0,0) to (n, (k-1)n) with unit steps R and U
and never rises above the diagonal y=(k-1)x. The heights (k-1)*j for
0 <= j < n carry distinct integer labels; these are exactly the heights
at which the path can touch the diagonal. Three derived structures live
here:

* minimal fields, obtained by cutting a path at diagonal touches whose
  label undercuts the label at the current origin;
* ornaments, the classes of paths under rotation along the diagonal,
  stored by their unique label-minimal representative;
* fields with a fixed number of parts, which realize the coefficients
  of powers of the log of the path generating function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import catalan
from .arith import factorial
from .errors import DEFAULT_MAX_ENUMERATION, check_cap


def is_good(k: int, steps: str) -> bool:
    """True for a nonempty word over {R, U} with n rights and (k-1)n ups
    whose every prefix keeps u <= (k-1)*r."""
    if k < 2 or not steps or any(ch not in "RU" for ch in steps):
        return False
    r = u = 0
    for ch in steps:
        if ch == "R":
            r += 1
        else:
            u += 1
        if u > (k - 1) * r:
            return False
    return r >= 1 and u == (k - 1) * r


@dataclass(frozen=True)
class GoodPath:
    k: int
    steps: str
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.k < 2:
            raise ValueError("paths need k >= 2")
        n = len(self.labels)
        if n < 1:
            raise ValueError("a path carries at least one label")
        if len(set(self.labels)) != n or any(v < 1 for v in self.labels):
            raise ValueError("labels must be distinct positive integers")
        if not is_good(self.k, self.steps) or self.steps.count("R") != n:
            raise ValueError(
                "steps must form a good word with one right step per label"
            )

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class MinimalField:
    """A set of label-minimal paths whose label sets are pairwise disjoint."""

    parts: frozenset[GoodPath]

    def __post_init__(self):
        object.__setattr__(self, "parts", frozenset(self.parts))
        if not self.parts:
            raise ValueError("a field holds at least one part")
        if len({p.k for p in self.parts}) != 1:
            raise ValueError("all parts of a field must share the same k")
        seen: set[int] = set()
        for part in self.parts:
            if not is_label_minimal(part):
                raise ValueError("every part of a field must be label-minimal")
            if seen & set(part.labels):
                raise ValueError("label sets of field parts must be disjoint")
            seen.update(part.labels)

    @property
    def k(self) -> int:
        return next(iter(self.parts)).k

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(v for p in self.parts for v in p.labels)


@dataclass(frozen=True)
class Ornament:
    """A rotation class of labeled good paths, stored by its unique
    label-minimal representative."""

    rep: GoodPath

    def __post_init__(self):
        if not is_label_minimal(self.rep):
            raise ValueError("an ornament representative must be label-minimal")

    @property
    def k(self) -> int:
        return self.rep.k

    @property
    def n(self) -> int:
        return self.rep.n


def diagonal_touches(p: GoodPath) -> list[tuple[int, int]]:
    """The (height, label) pairs where the path meets the diagonal, bottom up.

    Height 0 is always present. The endpoint is never listed: around the
    bent-into-a-circle picture it is the same meeting point as the start.
    """
    out = []
    r = u = 0
    for ch in p.steps:
        if ch == "R":
            if u == (p.k - 1) * r:
                out.append((u, p.labels[r]))
            r += 1
        else:
            u += 1
    return out


def is_label_minimal(p: GoodPath) -> bool:
    """True when the label at height 0 is the smallest among touch labels."""
    return p.labels[0] == min(lab for _, lab in diagonal_touches(p))


def _good_words(k: int, n: int):
    """All good step words of size n, in lexicographic order (R < U)."""
    word: list[str] = []

    def rec(r: int, u: int):
        if r == n:
            yield "".join(word) + "U" * ((k - 1) * n - u)
            return
        word.append("R")
        yield from rec(r + 1, u)
        word.pop()
        if u < (k - 1) * r:
            word.append("U")
            yield from rec(r, u + 1)
            word.pop()

    yield from rec(0, 0)


def enumerate_paths(
    k: int, labels, max_count: int | None = DEFAULT_MAX_ENUMERATION
) -> list[GoodPath]:
    """Every labeled good path on the given label set, exactly once.

    Order: step words lexicographically, then label assignments
    lexicographically within each word.
    """
    base = sorted(labels)
    if len(set(base)) != len(base):
        raise ValueError("label set contains duplicates")
    if k < 2 or not base:
        raise ValueError("enumerate_paths needs k >= 2 and a nonempty label set")
    n = len(base)
    check_cap(catalan.count_paths(k, n), max_count, "good paths")
    out = []
    for word in _good_words(k, n):
        for perm in itertools.permutations(base):
            out.append(GoodPath(k, word, perm))
    return out


def enumerate_minimal_paths(
    k: int, n: int, max_count: int | None = DEFAULT_MAX_ENUMERATION
) -> list[GoodPath]:
    """The label-minimal paths on labels 1..n, in enumeration order."""
    return [
        p
        for p in enumerate_paths(k, range(1, n + 1), max_count=max_count)
        if is_label_minimal(p)
    ]


def _split_at(p: GoodPath, height: int) -> tuple[GoodPath, GoodPath]:
    """Cut at a diagonal touch; the back piece is translated to the origin."""
    j = height // (p.k - 1)
    cut = j + height  # j right steps and `height` up steps precede the touch
    front = GoodPath(p.k, p.steps[:cut], p.labels[:j])
    back = GoodPath(p.k, p.steps[cut:], p.labels[j:])
    return front, back


def decompose(p: GoodPath) -> MinimalField:
    """Split a path into its field of label-minimal pieces.

    Repeatedly cut the remaining piece at its lowest diagonal touch whose
    label is smaller than the label at the piece's origin. Each piece cut
    off in front is label-minimal, the origin labels of the pieces come
    out strictly decreasing, and their label sets partition the input's.
    """
    parts = []
    cur = p
    while True:
        first = cur.labels[0]
        lower = [h for h, lab in diagonal_touches(cur) if lab < first]
        if not lower:
            parts.append(cur)
            return MinimalField(frozenset(parts))
        front, cur = _split_at(cur, min(lower))
        parts.append(front)


def recompose(field: MinimalField) -> GoodPath:
    """Inverse of decompose: concatenate the parts in decreasing order of
    their origin labels."""
    parts = sorted(field.parts, key=lambda q: q.labels[0], reverse=True)
    steps = "".join(q.steps for q in parts)
    labels = tuple(v for q in parts for v in q.labels)
    return GoodPath(field.k, steps, labels)


def _rotate_to(p: GoodPath, touch_index: int) -> GoodPath:
    """The representative with the touch_index-th diagonal touch at the origin."""
    height, _ = diagonal_touches(p)[touch_index]
    if height == 0:
        return p
    j = height // (p.k - 1)
    cut = j + height
    return GoodPath(p.k, p.steps[cut:] + p.steps[:cut], p.labels[j:] + p.labels[:j])


def rotations(p: GoodPath) -> list[GoodPath]:
    """All members of the rotation class of p, one per diagonal touch."""
    return [_rotate_to(p, t) for t in range(len(diagonal_touches(p)))]


def to_ornament(p: GoodPath) -> Ornament:
    """The rotation class of p, via its label-minimal representative.

    Rotating slides the periodized path along the diagonal until the
    touch with the smallest label sits at the origin.
    """
    touches = diagonal_touches(p)
    best = min(range(len(touches)), key=lambda t: touches[t][1])
    return Ornament(_rotate_to(p, best))


def touch_count(o: Ornament) -> int:
    """Number of diagonal touches of the representative, which is also the
    number of paths in the rotation class."""
    return len(diagonal_touches(o.rep))


def enumerate_ornaments(
    k: int, n: int, max_count: int | None = DEFAULT_MAX_ENUMERATION
) -> list[Ornament]:
    """All ornaments on labels 1..n, each exactly once, in a fixed order.

    Walks every labeled path and deduplicates through the canonical
    representative, so the cap is checked against the path count.
    """
    found = {to_ornament(p) for p in enumerate_paths(k, range(1, n + 1), max_count)}
    return sorted(found, key=lambda o: (o.rep.steps, o.rep.labels))


def _set_partitions(items: list[int], blocks: int):
    """Partitions of `items` into exactly `blocks` nonempty blocks, as lists
    of sorted tuples; deterministic order."""
    if blocks < 1 or blocks > len(items):
        return
    if blocks == 1:
        yield [tuple(items)]
        return
    first, rest = items[0], items[1:]
    # first joins an existing block of a smaller partition, or stands alone
    for part in _set_partitions(rest, blocks):
        for i in range(len(part)):
            yield part[:i] + [tuple(sorted((first,) + part[i]))] + part[i + 1 :]
    for part in _set_partitions(rest, blocks - 1):
        yield [(first,)] + part


def enumerate_fields(
    k: int, n: int, parts: int, max_count: int | None = DEFAULT_MAX_ENUMERATION
) -> list[MinimalField]:
    """All minimal fields on labels 1..n with exactly `parts` parts.

    Built as set partitions of the labels crossed with the label-minimal
    paths on each block; empty when parts > n.
    """
    if k < 2 or n < 1 or parts < 1:
        raise ValueError("enumerate_fields needs k >= 2, n >= 1, parts >= 1")
    if parts > n:
        return []
    predicted = factorial(n) * catalan.coeff_log_power(k, n, parts) / factorial(parts)
    check_cap(int(predicted), max_count, "minimal fields")
    out = []
    for partition in _set_partitions(list(range(1, n + 1)), parts):
        pools = [
            [p for p in enumerate_paths(k, block, max_count) if is_label_minimal(p)]
            for block in partition
        ]
        for combo in itertools.product(*pools):
            out.append(MinimalField(frozenset(combo)))
    return sorted(
        out, key=lambda f: tuple(sorted((p.steps, p.labels) for p in f.parts))
    )
