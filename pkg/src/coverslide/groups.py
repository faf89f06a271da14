"""Finite groups given by explicit multiplication tables.

Elements are the integers ``0..order-1`` with the identity always at index 0
(tables whose identity sits elsewhere are relabeled on construction).  Tables
are fully validated: rows and columns must be permutations, a two-sided
identity and inverses must exist, and associativity is checked exhaustively
for orders up to :data:`ASSOCIATIVITY_CHECK_BOUND`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import ClassVar, Iterable, Iterator, Sequence

ASSOCIATIVITY_CHECK_BOUND = 256
_MAX_BUILTIN_ORDER = 1024


class NotAGroup(ValueError):
    """A multiplication table violates a group axiom."""


class UnsupportedFamily(ValueError):
    """Unknown builtin family name, or parameters out of range."""


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on ``0..order-1``, identity at index 0."""

    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    labels: tuple[str, ...]

    identity: ClassVar[int] = 0

    def elements(self) -> range:
        return range(self.order)

    def product(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def inverse(self, x: int) -> int:
        return self.inv[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        acc = 0
        for _ in range(k):
            acc = self.mul[acc][x]
        return acc


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as its sorted member indices."""

    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members


def from_mul_table(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    *,
    trusted: bool = False,
) -> FiniteGroup:
    """Validate a multiplication table and return the group it defines.

    The identity is relocated to index 0 by relabeling if necessary.  Raises
    :class:`NotAGroup` with a witness when an axiom fails.  Orders above
    :data:`ASSOCIATIVITY_CHECK_BOUND` skip the O(m^3) associativity sweep and
    require ``trusted=True``.
    """
    rows = [list(r) for r in table]
    m = len(rows)
    if m == 0:
        raise NotAGroup("empty table")
    for x, r in enumerate(rows):
        if len(r) != m:
            raise NotAGroup(f"table not square: row {x} has length {len(r)}, expected {m}")
        for y, v in enumerate(r):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                raise NotAGroup(f"entry out of range at ({x}, {y}): {v!r}")
    for x, r in enumerate(rows):
        if len(set(r)) != m:
            raise NotAGroup(f"row {x} is not a permutation of 0..{m - 1}")
    for y in range(m):
        if len({rows[x][y] for x in range(m)}) != m:
            raise NotAGroup(f"column {y} is not a permutation of 0..{m - 1}")

    ident = None
    for e in range(m):
        if all(rows[e][x] == x for x in range(m)) and all(rows[x][e] == x for x in range(m)):
            ident = e
            break
    if ident is None:
        raise NotAGroup("no two-sided identity element")

    label_list = [str(s) for s in labels] if labels is not None else None
    if label_list is not None and len(label_list) != m:
        raise NotAGroup(f"labels length {len(label_list)} != order {m}")

    if ident != 0:
        # swap indices 0 <-> ident so the identity lands at 0
        perm = list(range(m))
        perm[0], perm[ident] = ident, 0
        relabeled = [[0] * m for _ in range(m)]
        for x in range(m):
            for y in range(m):
                relabeled[perm[x]][perm[y]] = perm[rows[x][y]]
        rows = relabeled
        if label_list is not None:
            moved = [""] * m
            for old, new in enumerate(perm):
                moved[new] = label_list[old]
            label_list = moved
    if label_list is None:
        label_list = ["e" if x == 0 else f"g{x}" for x in range(m)]

    inv = [0] * m
    for x in range(m):
        y = rows[x].index(0)
        if rows[y][x] != 0:
            raise NotAGroup(f"inverse failure: {x}*{y} = e but {y}*{x} = {rows[y][x]}")
        inv[x] = y

    if m > ASSOCIATIVITY_CHECK_BOUND:
        if not trusted:
            raise ValueError(
                f"order {m} exceeds the exhaustive associativity bound "
                f"{ASSOCIATIVITY_CHECK_BOUND}; pass trusted=True to accept the table"
            )
    else:
        for x in range(m):
            rx = rows[x]
            for y in range(m):
                rxy = rows[rx[y]]
                ry = rows[y]
                for z in range(m):
                    if rxy[z] != rx[ry[z]]:
                        raise NotAGroup(f"associativity fails at ({x}, {y}, {z})")

    return FiniteGroup(
        order=m,
        mul=tuple(tuple(r) for r in rows),
        inv=tuple(inv),
        labels=tuple(label_list),
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _cyclic(m: int) -> FiniteGroup:
    if m < 1 or m > _MAX_BUILTIN_ORDER:
        raise UnsupportedFamily(f"cyclic({m}): order must be in 1..{_MAX_BUILTIN_ORDER}")
    table = [[(x + y) % m for y in range(m)] for x in range(m)]
    return from_mul_table(table, [str(x) for x in range(m)], trusted=m > ASSOCIATIVITY_CHECK_BOUND)


def _elementary_abelian(p: int, k: int) -> FiniteGroup:
    if not _is_prime(p):
        raise UnsupportedFamily(f"elementary_abelian({p}, {k}): p must be prime")
    if k < 1 or p**k > _MAX_BUILTIN_ORDER:
        raise UnsupportedFamily(f"elementary_abelian({p}, {k}): order out of range")
    order = p**k

    def coords(x: int) -> tuple[int, ...]:
        out = []
        for _ in range(k):
            x, r = divmod(x, p)
            out.append(r)
        return tuple(out)

    def index(v: Sequence[int]) -> int:
        acc = 0
        for t in reversed(range(k)):
            acc = acc * p + v[t]
        return acc

    table = [
        [index([(a + b) % p for a, b in zip(coords(x), coords(y))]) for y in range(order)]
        for x in range(order)
    ]
    labels = ["".join(str(d) for d in coords(x)) for x in range(order)]
    return from_mul_table(table, labels, trusted=order > ASSOCIATIVITY_CHECK_BOUND)


def _dihedral(m: int) -> FiniteGroup:
    if m < 1 or 2 * m > _MAX_BUILTIN_ORDER:
        raise UnsupportedFamily(f"dihedral({m}): order out of range")
    order = 2 * m

    # element r^i s^j encoded as i + m*j; s r = r^-1 s
    def mul(x: int, y: int) -> int:
        i1, j1 = x % m, x // m
        i2, j2 = y % m, y // m
        i = (i1 + (i2 if j1 == 0 else -i2)) % m
        return i + m * ((j1 + j2) % 2)

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    labels = []
    for x in range(order):
        i, j = x % m, x // m
        rot = "e" if i == 0 else ("r" if i == 1 else f"r{i}")
        if j == 0:
            labels.append(rot)
        else:
            labels.append("s" if i == 0 else rot + "s")
    return from_mul_table(table, labels, trusted=order > ASSOCIATIVITY_CHECK_BOUND)


def _symmetric(k: int) -> FiniteGroup:
    if not 1 <= k <= 5:
        raise UnsupportedFamily(f"symmetric({k}): k must be in 1..5")
    perms = sorted(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}

    # composition applies the right factor first: (p*q)(x) = p(q(x))
    table = [[index[tuple(p[q[t]] for t in range(k))] for q in perms] for p in perms]
    labels = ["".join(str(t) for t in p) for p in perms]
    return from_mul_table(table, labels)


_FAMILIES = {
    "cyclic": _cyclic,
    "elementary_abelian": _elementary_abelian,
    "dihedral": _dihedral,
    "symmetric": _symmetric,
}


def builtin_group(family: str, *params: int) -> FiniteGroup:
    """Construct a named group: cyclic(m), elementary_abelian(p, k),
    dihedral(m) of order 2m, or symmetric(k) for k <= 5.  ``trivial`` is an
    alias for cyclic(1)."""
    name = family.strip().lower().replace("-", "_")
    if name == "trivial":
        if params:
            raise UnsupportedFamily("trivial takes no parameters")
        return _cyclic(1)
    fn = _FAMILIES.get(name)
    if fn is None:
        raise UnsupportedFamily(f"unknown family {family!r}")
    try:
        return fn(*params)
    except TypeError as exc:
        raise UnsupportedFamily(f"{family}: bad parameter count {params}") from exc


def builtin_group_from_string(spec: str) -> FiniteGroup:
    """Parse ``"cyclic:5"`` / ``"elementary_abelian:2,2"`` style specs."""
    name, _, rest = spec.partition(":")
    params = []
    if rest:
        for tok in rest.split(","):
            try:
                params.append(int(tok))
            except ValueError as exc:
                raise UnsupportedFamily(f"bad parameter {tok!r} in {spec!r}") from exc
    return builtin_group(name, *params)


def subgroup_generated(group: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subset containing the generators and the identity, closed
    under multiplication (inverses come for free in a finite group)."""
    gen_list = sorted(set(gens))
    for g in gen_list:
        if not 0 <= g < group.order:
            raise ValueError(f"generator index {g} out of range")
    mul = group.mul
    members = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gen_list:
            y = mul[x][g]
            if y not in members:
                members.add(y)
                frontier.append(y)
    return Subgroup(tuple(sorted(members)))


def left_cosets(group: FiniteGroup, sub: Subgroup) -> list[tuple[int, ...]]:
    """Partition into left cosets gH; the identity's coset comes first and
    every block is sorted, so block representatives are the minima."""
    mul = group.mul
    assigned = [False] * group.order
    blocks = []
    for g in range(group.order):
        if assigned[g]:
            continue
        block = sorted(mul[g][h] for h in sub.members)
        for x in block:
            assigned[x] = True
        blocks.append(tuple(block))
    return blocks


def element_order(group: FiniteGroup, x: int) -> int:
    if not 0 <= x < group.order:
        raise ValueError(f"element index {x} out of range")
    k = 1
    y = x
    while y != 0:
        y = group.mul[y][x]
        k += 1
    return k


def group_to_json(group: FiniteGroup) -> dict:
    return {
        "order": group.order,
        "mul": [list(row) for row in group.mul],
        "labels": list(group.labels),
    }


def group_from_json(data: dict, *, trusted: bool = False) -> FiniteGroup:
    if "mul" not in data:
        raise NotAGroup("group JSON needs a 'mul' table")
    if "order" in data and data["order"] != len(data["mul"]):
        raise NotAGroup(f"declared order {data['order']} != table size {len(data['mul'])}")
    return from_mul_table(data["mul"], data.get("labels"), trusted=trusted)
