"""Shared test utilities: the standard cover battery and a few oracles."""

from __future__ import annotations

from coverslide import builtin_group, cycle_basis, make_cover, standard_images

BATTERY_FAMILIES = (
    ("trivial", ()),
    ("cyclic", (2,)),
    ("cyclic", (3,)),
    ("cyclic", (4,)),
    ("cyclic", (5,)),
    ("cyclic", (6,)),
    ("elementary_abelian", (2, 2)),
    ("elementary_abelian", (2, 3)),
    ("dihedral", (4,)),
    ("symmetric", (3,)),
    ("symmetric", (4,)),
)

_group_cache: dict = {}
_cover_cache: dict = {}


def battery_group(family, params):
    key = (family, params)
    if key not in _group_cache:
        _group_cache[key] = builtin_group(family, *params)
    return _group_cache[key]


def battery_covers(n_values=(2, 3, 4)):
    """All (name, cover, basis) triples for the battery with canonical
    surjective images; (group, n) pairs with no surjection are skipped.
    Covers and bases are cached across tests."""
    out = []
    for family, params in BATTERY_FAMILIES:
        group = battery_group(family, params)
        for n in n_values:
            key = (family, params, n)
            if key not in _cover_cache:
                images = standard_images(group, n)
                if images is None:
                    _cover_cache[key] = None
                else:
                    Y = make_cover(group, images)
                    _cover_cache[key] = (Y, cycle_basis(Y))
            cached = _cover_cache[key]
            if cached is None:
                continue
            name = f"{family}{list(params)} n={n}"
            out.append((name, cached[0], cached[1]))
    return out


def unit_vector(rank: int, k: int) -> list:
    v = [0] * rank
    v[k] = 1
    return v
