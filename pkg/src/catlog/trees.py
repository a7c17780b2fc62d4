"""Rooted plane k-ary trees, root-minimal forests, and cycle-rooted trees.

Every vertex owns k ordered slots, each vacant or holding one child; the
k-th slot is the rightmost. The rightmost branch (root, then repeatedly
the k-th slot occupant) plays the role the diagonal plays for paths:
cutting it where the labels drop yields a forest of root-minimal trees,
and bending it into a cycle yields a cycle-rooted tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import catalan
from .errors import DEFAULT_MAX_ENUMERATION, check_cap

Slots = tuple[tuple[int, tuple[int | None, ...]], ...]


def canonical_cycle(seq) -> tuple[int, ...]:
    """Rotate a cyclic sequence so that its minimal element comes first."""
    seq = tuple(seq)
    if not seq:
        raise ValueError("empty cycle")
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def _normalize_slots(k: int, slots) -> Slots:
    rows = []
    items = slots.items() if isinstance(slots, dict) else slots
    for v, row in items:
        row = tuple(row)
        if len(row) != k:
            raise ValueError(f"slot array of vertex {v} must have length {k}")
        rows.append((int(v), row))
    rows.sort()
    return tuple(rows)


def _slots_key(slots: Slots):
    """Sort key for slot tables; vacancies order before occupants."""
    return tuple((v, tuple(-1 if c is None else c for c in row)) for v, row in slots)


def _check_forest(k: int, roots, slots: Slots) -> None:
    """Shared shape validation: `slots` must describe a k-ary forest whose
    roots are exactly `roots`."""
    verts = [v for v, _ in slots]
    vs = set(verts)
    if len(vs) != len(verts):
        raise ValueError("duplicate vertex in the slot table")
    if any(v < 1 for v in vs):
        raise ValueError("vertices must be positive integers")
    if not set(roots) <= vs:
        raise ValueError("a root is missing from the slot table")
    occupants = [c for _, row in slots for c in row if c is not None]
    if len(set(occupants)) != len(occupants):
        raise ValueError("a vertex occupies two slots")
    if set(occupants) != vs - set(roots):
        raise ValueError("slot occupants must be exactly the non-root vertices")
    seen: set[int] = set()
    table = dict(slots)
    stack = list(roots)
    while stack:
        v = stack.pop()
        seen.add(v)
        stack.extend(c for c in table[v] if c is not None)
    if seen != vs:
        raise ValueError("not every vertex hangs below a root")


@dataclass(frozen=True)
class PlaneTree:
    k: int
    root: int
    slots: Slots

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("trees need k >= 2")
        object.__setattr__(self, "slots", _normalize_slots(self.k, self.slots))
        _check_forest(self.k, [self.root], self.slots)

    @cached_property
    def slot_map(self) -> dict[int, tuple[int | None, ...]]:
        return dict(self.slots)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.slots)

    @property
    def n(self) -> int:
        return len(self.slots)


@dataclass(frozen=True)
class RootMinimalForest:
    parts: frozenset[PlaneTree]

    def __post_init__(self):
        object.__setattr__(self, "parts", frozenset(self.parts))
        if not self.parts:
            raise ValueError("a forest holds at least one tree")
        if len({t.k for t in self.parts}) != 1:
            raise ValueError("all trees of a forest must share the same k")
        seen: set[int] = set()
        for t in self.parts:
            if not is_root_minimal(t):
                raise ValueError("every tree of the forest must be root-minimal")
            if seen & t.vertices:
                raise ValueError("vertex sets of forest trees must be disjoint")
            seen.update(t.vertices)

    @property
    def k(self) -> int:
        return next(iter(self.parts)).k


@dataclass(frozen=True)
class CycleRootedTree:
    """A clockwise cycle of roots with vacant rightmost slots, each root
    carrying a hanging plane k-ary subtree.

    The cycle is stored in canonical rotation: minimal label first, the
    successor in the tuple being the clockwise neighbor.
    """

    k: int
    cycle: tuple[int, ...]
    slots: Slots

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("trees need k >= 2")
        object.__setattr__(self, "cycle", tuple(self.cycle))
        object.__setattr__(self, "slots", _normalize_slots(self.k, self.slots))
        if not self.cycle or len(set(self.cycle)) != len(self.cycle):
            raise ValueError("the root cycle must be a nonempty list of distinct labels")
        if self.cycle[0] != min(self.cycle):
            raise ValueError("the root cycle must be stored starting at its minimal label")
        _check_forest(self.k, self.cycle, self.slots)
        for r in self.cycle:
            if self.slot_map[r][self.k - 1] is not None:
                raise ValueError("the rightmost slot of a cycle vertex must stay vacant")

    @cached_property
    def slot_map(self) -> dict[int, tuple[int | None, ...]]:
        return dict(self.slots)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.slots)

    @property
    def n(self) -> int:
        return len(self.slots)


def rightmost_branch(t: PlaneTree) -> list[int]:
    """The root, then repeatedly the occupant of the rightmost slot."""
    out = [t.root]
    while True:
        nxt = t.slot_map[out[-1]][t.k - 1]
        if nxt is None:
            return out
        out.append(nxt)


def is_root_minimal(t: PlaneTree) -> bool:
    return t.root == min(rightmost_branch(t))


def _slot_tables(k: int, verts: tuple[int, ...], root: int, open_slots: tuple[int, ...]):
    """Slot tables of all plane trees on `verts` rooted at `root`, the root
    using only the 0-based `open_slots`; deeper vertices use all k slots."""
    rest = tuple(v for v in verts if v != root)
    if not rest:
        yield {root: (None,) * k}
        return
    all_slots = tuple(range(k))
    for assign in itertools.product(open_slots, repeat=len(rest)):
        blocks: dict[int, list[int]] = {}
        for v, q in zip(rest, assign):
            blocks.setdefault(q, []).append(v)
        options = []
        for q in sorted(blocks):
            block = tuple(blocks[q])
            opts = []
            for child in block:
                for sub in _slot_tables(k, block, child, all_slots):
                    opts.append((q, child, sub))
            options.append(opts)
        for combo in itertools.product(*options):
            row: list[int | None] = [None] * k
            table: dict[int, tuple[int | None, ...]] = {}
            for q, child, sub in combo:
                row[q] = child
                table.update(sub)
            table[root] = tuple(row)
            yield table


def enumerate_trees(
    k: int, labels, max_count: int | None = DEFAULT_MAX_ENUMERATION
) -> list[PlaneTree]:
    """Every plane k-ary tree on the given label set, any root, in a fixed order."""
    base = sorted(labels)
    if len(set(base)) != len(base):
        raise ValueError("label set contains duplicates")
    if k < 2 or not base:
        raise ValueError("enumerate_trees needs k >= 2 and a nonempty label set")
    check_cap(catalan.count_paths(k, len(base)), max_count, "plane trees")
    out = []
    for root in base:
        for table in _slot_tables(k, tuple(base), root, tuple(range(k))):
            out.append(PlaneTree(k, root, table))
    out.sort(key=lambda t: (t.root, _slots_key(t.slots)))
    return out


def tree_to_forest(t: PlaneTree) -> RootMinimalForest:
    """Cut the rightmost branch wherever the next vertex undercuts the root
    of the piece being built; every piece comes out root-minimal."""
    table = {v: list(row) for v, row in t.slots}
    roots = [t.root]
    piece_root = t.root
    cur = t.root
    while True:
        nxt = table[cur][t.k - 1]
        if nxt is None:
            break
        if nxt < piece_root:
            table[cur][t.k - 1] = None
            roots.append(nxt)
            piece_root = nxt
        cur = nxt
    parts = []
    for r in roots:
        component: dict[int, tuple[int | None, ...]] = {}
        stack = [r]
        while stack:
            v = stack.pop()
            component[v] = tuple(table[v])
            stack.extend(c for c in table[v] if c is not None)
        parts.append(PlaneTree(t.k, r, component))
    return RootMinimalForest(frozenset(parts))


def forest_to_tree(f: RootMinimalForest) -> PlaneTree:
    """Inverse of tree_to_forest: glue the trees in decreasing root order,
    each root into the vacant rightmost slot ending the previous branch."""
    parts = sorted(f.parts, key=lambda t: t.root, reverse=True)
    k = f.k
    table: dict[int, list[int | None]] = {}
    for t in parts:
        table.update({v: list(row) for v, row in t.slots})
    for prev, nxt in zip(parts, parts[1:]):
        end = rightmost_branch(prev)[-1]
        table[end][k - 1] = nxt.root
    return PlaneTree(k, parts[0].root, {v: tuple(row) for v, row in table.items()})


def to_cycle_rooted(t: PlaneTree) -> CycleRootedTree:
    """Bend the rightmost branch of a root-minimal tree into the root cycle;
    branch order becomes clockwise order."""
    if not is_root_minimal(t):
        raise ValueError("only a root-minimal tree bends into a cycle")
    branch = rightmost_branch(t)
    table = {v: list(row) for v, row in t.slots}
    for v in branch:
        table[v][t.k - 1] = None
    return CycleRootedTree(
        t.k, tuple(branch), {v: tuple(row) for v, row in table.items()}
    )


def to_root_minimal(c: CycleRootedTree) -> PlaneTree:
    """Open the root cycle before its minimal vertex; the cycle becomes the
    rightmost branch of a root-minimal tree."""
    table = {v: list(row) for v, row in c.slots}
    for a, b in zip(c.cycle, c.cycle[1:]):
        table[a][c.k - 1] = b
    return PlaneTree(c.k, c.cycle[0], {v: tuple(row) for v, row in table.items()})


def enumerate_cycle_rooted(
    k: int, n: int, max_count: int | None = DEFAULT_MAX_ENUMERATION
) -> list[CycleRootedTree]:
    """Every cycle-rooted tree on labels 1..n, built directly from the
    definition: choose the root set and its cyclic order, distribute the
    other vertices, and hang a subtree off each root's first k-1 slots."""
    if k < 2 or n < 1:
        raise ValueError("enumerate_cycle_rooted needs k >= 2 and n >= 1")
    check_cap(catalan.count_ornaments(k, n), max_count, "cycle-rooted trees")
    verts = tuple(range(1, n + 1))
    hanging_slots = tuple(range(k - 1))
    out = []
    for size in range(1, n + 1):
        for chosen in itertools.combinations(verts, size):
            for order in itertools.permutations(chosen[1:]):
                cycle = (chosen[0],) + order
                rest = [v for v in verts if v not in chosen]
                for assign in itertools.product(range(size), repeat=len(rest)):
                    groups: dict[int, list[int]] = {r: [r] for r in cycle}
                    for v, gi in zip(rest, assign):
                        groups[cycle[gi]].append(v)
                    per_root = [
                        list(
                            _slot_tables(k, tuple(sorted(groups[r])), r, hanging_slots)
                        )
                        for r in cycle
                    ]
                    for combo in itertools.product(*per_root):
                        table: dict[int, tuple[int | None, ...]] = {}
                        for sub in combo:
                            table.update(sub)
                        out.append(CycleRootedTree(k, cycle, table))
    out.sort(key=lambda c: (c.cycle, _slots_key(c.slots)))
    return out
