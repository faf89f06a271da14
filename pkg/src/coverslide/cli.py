"""Command-line interface.

Commands: ``build``, ``verify-cw``, ``move``, ``slide``, ``selftest``.
Covers are specified by ``--group`` (a builtin family like ``cyclic:5`` or a
JSON file with a multiplication table), ``--n`` and ``--images`` (element
indices or labels).  Output is human-readable by default, JSON with
``--json``; all runs are deterministic given the flags and ``--seed``.

Exit codes: 0 success, 1 failed verification or selftest, 2 invalid
configuration, 3 disconnected cover, 4 zero vector, 5 rose rank too small,
6 loop search exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import linalg
from .cover import (
    CoverGraph,
    CoverSpec,
    Disconnected,
    Word,
    build_cover,
    free_reduce,
    lift_word,
    path_end,
    petal_complement_components,
    standard_images,
    to_dot,
)
from .cwcheck import (
    UnsupportedGroup,
    character_report_to_json,
    isotypic_decomposition,
    isotypic_report_to_json,
    verify_chevalley_weil,
)
from .groups import (
    FiniteGroup,
    NotAGroup,
    UnsupportedFamily,
    builtin_group_from_string,
    element_order,
    group_from_json,
    left_cosets,
    subgroup_generated,
)
from .homology import (
    chain_of_path,
    chain_to_class,
    cycle_basis,
    deck_action_matrix,
)
from .mover import (
    RankTooSmall,
    SearchExhausted,
    ZeroVector,
    certificate_to_json,
    move_vector,
    verify_certificate,
)
from .slides import (
    DoesNotLift,
    PetalInLoop,
    lifted_action_formula,
    lifted_action_oracle,
    lifted_slide_to_json,
    make_slide,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_DISCONNECTED = 3
EXIT_ZERO_VECTOR = 4
EXIT_RANK_TOO_SMALL = 5
EXIT_SEARCH_EXHAUSTED = 6


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    group: FiniteGroup
    images: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)


def _load_group(spec: str) -> FiniteGroup:
    path = Path(spec)
    if spec.endswith(".json") or path.is_file():
        try:
            data = json.loads(path.read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read group file {spec!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"bad JSON in group file {spec!r}: {exc}") from exc
        try:
            return group_from_json(data)
        except (NotAGroup, ValueError) as exc:
            raise ConfigError(f"group file {spec!r}: {exc}") from exc
    try:
        return builtin_group_from_string(spec)
    except UnsupportedFamily as exc:
        raise ConfigError(str(exc)) from exc


def _resolve_images(group: FiniteGroup, images_arg: str | None, n: int | None) -> tuple[int, ...]:
    if images_arg is None:
        if n is None:
            raise ConfigError("--images or --n is required")
        images = standard_images(group, n)
        if images is None:
            raise ConfigError(f"group of order {group.order} is not generated by {n} elements")
        return images
    tokens = [tok.strip() for tok in images_arg.split(",")]
    label_index = {label: i for i, label in enumerate(group.labels)}
    out = []
    for tok in tokens:
        if tok in label_index:
            out.append(label_index[tok])
            continue
        try:
            idx = int(tok)
        except ValueError:
            raise ConfigError(f"image {tok!r} is neither an element index nor a label")
        if not 0 <= idx < group.order:
            raise ConfigError(f"image index {idx} out of range 0..{group.order - 1}")
        out.append(idx)
    if n is not None and n != len(out):
        raise ConfigError(f"--n {n} disagrees with {len(out)} images")
    return tuple(out)


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.group is None:
        raise ConfigError("--group is required")
    group = _load_group(args.group)
    images = _resolve_images(group, args.images, args.n)
    if len(images) < 2:
        raise ConfigError("a rose needs at least 2 petals")
    return RunConfig(group=group, images=images)


def _build_from_config(cfg: RunConfig) -> CoverGraph:
    return build_cover(CoverSpec(cfg.group, cfg.images))


def _parse_vector(args: argparse.Namespace, Y: CoverGraph, B) -> list:
    if args.vector is not None and args.vector_word is not None:
        raise ConfigError("give only one of --vector and --vector-word")
    if args.vector is not None:
        try:
            v = [linalg.parse_rational(tok) for tok in args.vector.split(",")]
        except ValueError as exc:
            raise ConfigError(f"bad --vector: {exc}") from exc
        if len(v) != B.rank:
            raise ConfigError(f"--vector has {len(v)} coordinates, rank is {B.rank}")
        return v
    if args.vector_word is not None:
        try:
            w = Word.from_string(args.vector_word)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if w.max_petal() > Y.n:
            raise ConfigError(f"--vector-word uses petal {w.max_petal()}, rose has {Y.n}")
        p = lift_word(Y, w, 0)
        if path_end(Y, p) != 0:
            raise ConfigError(f"--vector-word {args.vector_word!r} does not lift closed")
        return chain_to_class(B, chain_of_path(p))
    raise ConfigError("a vector is required: --vector or --vector-word")


def _emit(args: argparse.Namespace, payload: dict, human_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def cmd_build(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    Y = _build_from_config(cfg)
    B = cycle_basis(Y)
    if args.dot:
        Path(args.dot).write_text(to_dot(Y))
    _emit(
        args,
        {"vertices": Y.vertex_count, "edges": Y.edge_count, "rank": B.rank},
        [f"V={Y.vertex_count} E={Y.edge_count} rank={B.rank}"],
    )
    return EXIT_OK


def cmd_verify_cw(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    Y = _build_from_config(cfg)
    B = cycle_basis(Y)
    report = verify_chevalley_weil(Y, B)
    payload = character_report_to_json(report)
    lines = [f"order={report.order} rank={report.rank}"]
    lines.append(
        "traces: "
        + " ".join(
            f"{Y.group.labels[g]}:{linalg.format_rational(t)}" for g, t in report.traces.items()
        )
    )
    try:
        iso = isotypic_decomposition(Y, B)
        payload["isotypic"] = isotypic_report_to_json(iso)
        dims = ",".join(str(iso.dims[chi]) for chi in iso.characters)
        lines.append(f"isotypic dims: {dims}")
    except UnsupportedGroup:
        pass
    lines.append(f"verdict: {'ok' if report.verdict else 'FAILED'}")
    _emit(args, payload, lines)
    return EXIT_OK if report.verdict else EXIT_FAILED


def cmd_move(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    Y = _build_from_config(cfg)
    B = cycle_basis(Y)
    v = _parse_vector(args, Y, B)
    cert = move_vector(
        Y, B, v, max_candidates=args.max_candidates, seed=args.seed, depth=args.depth
    )
    check = verify_certificate(Y, B, v, cert)
    payload = certificate_to_json(cert, Y)
    payload["verified"] = check.ok
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True))
    _emit(
        args,
        payload,
        [
            f"petal={cert.petal} ell={cert.ell.to_string()}",
            f"orbit_rank={cert.orbit_rank_value} of {Y.group.order}",
            f"increment nonzero: {not linalg.vec_is_zero(cert.increment)}",
            f"iterates checked: {cert.iterates_checked}",
            f"verified: {check.ok}",
        ],
    )
    return EXIT_OK if check.ok else EXIT_FAILED


def cmd_slide(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    Y = _build_from_config(cfg)
    B = cycle_basis(Y)
    if args.petal is None:
        raise ConfigError("--petal is required for slide")
    try:
        ell = Word.from_string(args.ell if args.ell is not None else "")
        s = make_slide(Y.n, args.petal, ell)
    except (ValueError, PetalInLoop) as exc:
        raise ConfigError(str(exc)) from exc
    try:
        L = lifted_action_formula(s, Y, B)
    except DoesNotLift as exc:
        raise ConfigError(str(exc)) from exc
    payload = lifted_slide_to_json(L)
    lines = [f"petal={s.j} ell={ell.to_string()!r} rank={B.rank}"]
    lines.extend(" ".join(linalg.format_rational(x) for x in row) for row in L.matrix)
    _emit(args, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# selftest


def _selftest_covers(quick: bool) -> list[tuple[str, CoverGraph]]:
    specs = [
        ("cyclic:2", 2),
        ("elementary_abelian:2,2", 2),
        ("cyclic:3", 3),
        ("elementary_abelian:2,2", 3),
        ("dihedral:4", 3),
    ]
    if not quick:
        specs += [
            ("symmetric:3", 3),
            ("cyclic:6", 4),
            ("elementary_abelian:2,3", 3),
            ("symmetric:4", 3),
        ]
    covers = []
    for spec, n in specs:
        group = builtin_group_from_string(spec)
        images = standard_images(group, n)
        if images is None:
            continue
        covers.append((f"{spec} n={n}", build_cover(CoverSpec(group, images))))
    return covers


def _suite_groups(covers, rng) -> str:
    for _, Y in covers:
        G = Y.group
        for x in G.elements():
            assert G.mul[0][x] == x and G.mul[x][0] == x
            assert G.mul[x][G.inv[x]] == 0
            assert G.order % element_order(G, x) == 0
        sub = subgroup_generated(G, [G.inv[Y.images[0]]])
        blocks = left_cosets(G, sub)
        assert sorted(x for b in blocks for x in b) == list(G.elements())
        assert len({len(b) for b in blocks}) == 1
    return f"{len(covers)} groups"


def _suite_covers(covers, rng) -> str:
    checked = 0
    for _, Y in covers:
        assert Y.vertex_count == Y.group.order
        assert Y.edge_count == Y.n * Y.group.order
        for _ in range(5):
            w = Word(
                tuple(
                    (rng.randint(1, Y.n), rng.choice((1, -1)))
                    for _ in range(rng.randint(0, 6))
                )
            )
            start = rng.randrange(Y.group.order)
            p = lift_word(Y, w, start)
            assert path_end(Y, p) == Y.group.mul[start][Y.image_of(w)]
            checked += 1
        comps = petal_complement_components(Y, 1)
        vertices = sorted(v for c in comps for v in c.vertices)
        assert vertices == list(Y.vertices())
    return f"{checked} lifted words"


def _suite_homology(covers, rng) -> str:
    for _, Y in covers:
        B = cycle_basis(Y)
        assert B.rank == (Y.n - 1) * Y.group.order + 1
        report = verify_chevalley_weil(Y, B)
        assert report.verdict, "character identity failed"
    return f"{len(covers)} character tables"


def _random_slide(Y, B, rng) -> Word | None:
    from .homology import component_basis

    j = rng.randint(1, Y.n)
    comps = petal_complement_components(Y, j)
    B0 = component_basis(comps[0])
    if B0.rank == 0:
        return None
    from .mover import fundamental_loop_word

    word = Word()
    for e in B0.cotree:
        c = rng.randint(-1, 1)
        if c:
            word = word * (fundamental_loop_word(B0, e) ** c)
    word = free_reduce(word)
    return (j, word) if len(word) else None


def _suite_slides(covers, rng) -> str:
    from .linalg import mat_identity, mat_is_zero, mat_mul, mat_sub

    checked = 0
    for _, Y in covers:
        B = cycle_basis(Y)
        for _ in range(3):
            jw = _random_slide(Y, B, rng)
            if jw is None:
                continue
            j, ell = jw
            s = make_slide(Y.n, j, ell)
            L = lifted_action_formula(s, Y, B)
            assert lifted_action_oracle(s, Y, B) == L.matrix, "formula != oracle"
            delta = mat_sub(L.matrix, mat_identity(B.rank))
            assert mat_is_zero(mat_mul(delta, delta)), "slide action not unipotent"
            checked += 1
    return f"{checked} slides formula==oracle"


def _suite_klein(covers, rng) -> str:
    from .groups import builtin_group

    group = builtin_group("elementary_abelian", 2, 2)
    Y = build_cover(CoverSpec(group, (1, 2)))
    B = cycle_basis(Y)
    assert B.rank == 5
    iso = isotypic_decomposition(Y, B)
    dims = sorted(iso.dims.values(), reverse=True)
    assert dims == [2, 1, 1, 1]
    a2 = Word.from_string("a1.a1")
    clsA = chain_to_class(B, chain_of_path(lift_word(Y, a2, 0)))
    rho_b = deck_action_matrix(Y, B, 2)
    eig = linalg.vec_sub(clsA, linalg.mat_vec(rho_b, clsA))
    assert not linalg.vec_is_zero(eig)
    rho_a = deck_action_matrix(Y, B, 1)
    assert linalg.mat_vec(rho_a, eig) == eig
    assert linalg.mat_vec(rho_b, eig) == linalg.vec_scale(-1, eig)
    from .homology import orbit_rank

    x = chain_to_class(
        B, chain_of_path(lift_word(Y, Word.from_string("a1.a1.a1.a2^-1.a1.a2"), 0))
    )
    assert orbit_rank(Y, B, x) == 4
    return "rank 5, dims 2+1+1+1, full regular orbit"


def _suite_mover(covers, rng) -> str:
    checked = 0
    for name, Y in covers:
        if Y.n < 3 or Y.group.order > 8:
            continue
        B = cycle_basis(Y)
        v = [0] * B.rank
        v[0] = 1
        cert = move_vector(Y, B, v)
        assert verify_certificate(Y, B, v, cert).ok
        checked += 1
    return f"{checked} certificates verified"


_SUITES = [
    ("groups", _suite_groups),
    ("covers", _suite_covers),
    ("homology", _suite_homology),
    ("slides", _suite_slides),
    ("klein-example", _suite_klein),
    ("mover", _suite_mover),
]


def cmd_selftest(args: argparse.Namespace) -> int:
    covers = _selftest_covers(args.quick)
    failed = []
    for name, fn in _SUITES:
        rng = random.Random(args.seed)
        try:
            if args.inject_fault == name:
                raise AssertionError("injected fault")
            detail = fn(covers, rng)
            print(f"ok    {name}: {detail}")
        except AssertionError as exc:
            print(f"FAIL  {name}: {exc}")
            failed.append(name)
    if failed:
        print(f"selftest failed: {', '.join(failed)}")
        return EXIT_FAILED
    print("selftest passed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _add_cover_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", help="builtin family (e.g. cyclic:5, elementary_abelian:2,2, dihedral:4, symmetric:3) or a JSON file")
    p.add_argument("--n", type=int, help="rose rank (petal count)")
    p.add_argument("--images", help="comma-separated petal images: element indices or labels")
    p.add_argument("--json", action="store_true", help="emit JSON on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverslide",
        description="Finite covers of roses: exact homology, deck actions, and edge slides that move homology classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a cover and print its size and H1 rank")
    _add_cover_options(p)
    p.add_argument("--dot", help="write a GraphViz DOT file of the cover")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("verify-cw", help="verify the regular-representation character identity")
    _add_cover_options(p)
    p.set_defaults(fn=cmd_verify_cw)

    p = sub.add_parser("move", help="produce and verify a class-moving certificate")
    _add_cover_options(p)
    p.add_argument("--vector", help="class coordinates, comma-separated rationals p/q")
    p.add_argument("--vector-word", help="word whose closed lift's class is moved")
    p.add_argument("--seed", type=int, default=0, help="loop search seed (default 0)")
    p.add_argument("--max-candidates", type=int, default=10_000, help="loop search bound")
    p.add_argument("--depth", type=int, default=10, help="iterates checked in the certificate")
    p.add_argument("--out", help="write the certificate JSON to a file")
    p.set_defaults(fn=cmd_move)

    p = sub.add_parser("slide", help="apply a given edge slide and print its lifted matrix")
    _add_cover_options(p)
    p.add_argument("--petal", type=int, help="petal being slid")
    p.add_argument("--ell", help="slide loop word, e.g. a2.a3^-1")
    p.set_defaults(fn=cmd_slide)

    p = sub.add_parser("selftest", help="run the built-in invariant battery")
    p.add_argument("--quick", action="store_true", help="restrict to groups of order <= 8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", metavar="SUITE", help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except Disconnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except ZeroVector as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_VECTOR
    except RankTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANK_TOO_SMALL
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEARCH_EXHAUSTED
    except (ConfigError, NotAGroup, UnsupportedFamily, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
