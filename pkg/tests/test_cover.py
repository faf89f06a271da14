import pytest
from hypothesis import given, strategies as st

from coverslide import (
    CoverSpec,
    Disconnected,
    Word,
    build_cover,
    builtin_group,
    concat_paths,
    deck_translate_path,
    free_reduce,
    lift_word,
    make_cover,
    path_end,
    path_is_closed,
    path_is_valid,
    path_to_json,
    petal_complement_components,
    standard_images,
    subgroup_generated,
    to_dot,
)

words = st.builds(
    Word,
    st.lists(
        st.tuples(st.integers(1, 3), st.sampled_from((1, -1))), max_size=12
    ).map(tuple),
)


# --- words ----------------------------------------------------------------


def test_free_reduce_cancels_pair():
    assert free_reduce(Word.from_string("a1.a1^-1")) == Word()


def test_free_reduce_inner_pair():
    assert free_reduce(Word.from_string("a1.a2.a2^-1.a1")) == Word.from_string("a1.a1")


def test_free_reduce_already_reduced():
    w = Word.from_string("a1.a1.a1.a2^-1.a1.a2")
    assert free_reduce(w) == w


@given(words)
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(r.letters[k] != (r.letters[k + 1][0], -r.letters[k + 1][1]) for k in range(len(r) - 1))


@given(words)
def test_word_times_inverse_reduces_to_empty(w):
    assert free_reduce(w * w.inverse()) == Word()


def test_word_string_round_trip():
    w = Word.from_string("a2.a3^-1.a1")
    assert w.to_string() == "a2.a3^-1.a1"
    assert Word.from_string(w.to_string()) == w
    assert Word.from_string("") == Word()


def test_word_string_rejects_garbage():
    with pytest.raises(ValueError):
        Word.from_string("b2")
    with pytest.raises(ValueError):
        Word.from_string("a0")
    with pytest.raises(ValueError):
        Word.from_string("a2^2")


def test_word_power():
    w = Word.from_string("a1.a2")
    assert w**2 == Word.from_string("a1.a2.a1.a2")
    assert w**-1 == Word.from_string("a2^-1.a1^-1")
    assert w**0 == Word()


# --- cover construction ---------------------------------------------------


def test_trivial_rose():
    Y = make_cover(builtin_group("cyclic", 1), (0, 0, 0))
    assert Y.vertex_count == 1
    assert Y.edge_count == 3
    assert all(Y.edge_head(e) == 0 for e in Y.edges())


def test_mod2_cover_counts(mod2_cover):
    assert mod2_cover.vertex_count == 4
    assert mod2_cover.edge_count == 8


def test_cyclic3_loops(cyclic3_cover):
    Y = cyclic3_cover
    assert Y.vertex_count == 3
    assert Y.edge_count == 9
    loops = [e for e in Y.edges() if Y.edge_head(e) == Y.edge_tail(e)]
    assert loops == [(0, 3), (1, 3), (2, 3)]


def test_disconnected_rejected():
    G = builtin_group("cyclic", 3)
    with pytest.raises(Disconnected):
        build_cover(CoverSpec(G, (0, 0)))


def test_spec_needs_two_petals():
    with pytest.raises(ValueError):
        CoverSpec(builtin_group("cyclic", 2), (1,))


# --- lifting --------------------------------------------------------------


def test_lift_empty_word(mod2_cover):
    p = lift_word(mod2_cover, Word(), 2)
    assert p.steps == ()
    assert path_end(mod2_cover, p) == 2


def test_lift_a_squared_closed(mod2_cover):
    p = lift_word(mod2_cover, Word.from_string("a1.a1"), 0)
    assert len(p.steps) == 2
    assert path_is_closed(mod2_cover, p)
    assert path_is_valid(mod2_cover, p)


def test_lift_a_open(mod2_cover):
    p = lift_word(mod2_cover, Word.from_string("a1"), 0)
    assert path_end(mod2_cover, p) == 1  # q(a)


@given(words, st.integers(0, 3))
def test_lift_endpoint_law(klein_n3_cover, w, start):
    # endpoint = start * q(w), with q folded here independently of lift_word
    Y = klein_n3_cover
    acc = start
    for i, s in w.letters:
        img = Y.images[i - 1]
        acc = Y.group.mul[acc][img if s == 1 else Y.group.inv[img]]
    p = lift_word(Y, w, start)
    assert path_end(Y, p) == acc
    assert path_is_valid(Y, p)


def test_lift_concatenation(klein_n3_cover):
    Y = klein_n3_cover
    u = Word.from_string("a1.a2^-1")
    v = Word.from_string("a3.a1")
    pu = lift_word(Y, u, 0)
    pv = lift_word(Y, v, path_end(Y, pu))
    assert concat_paths(Y, pu, pv) == lift_word(Y, u * v, 0)


def test_deck_translate_identity(mod2_cover):
    p = lift_word(mod2_cover, Word.from_string("a1.a2"), 1)
    assert deck_translate_path(mod2_cover, 0, p) == p


def test_deck_translate_of_lift(mod2_cover):
    # translating the lift of a^2 at the identity gives its lift at q(b)
    Y = mod2_cover
    A = lift_word(Y, Word.from_string("a1.a1"), 0)
    assert deck_translate_path(Y, 2, A) == lift_word(Y, Word.from_string("a1.a1"), 2)


def test_deck_translate_composition(mod2_cover):
    # translate by g then h equals translate by h*g, on all Klein pairs
    Y = mod2_cover
    p = lift_word(Y, Word.from_string("a1.a2^-1.a1"), 3)
    for g in range(4):
        for h in range(4):
            twice = deck_translate_path(Y, h, deck_translate_path(Y, g, p))
            once = deck_translate_path(Y, Y.group.mul[h][g], p)
            assert twice == once


def test_lift_equivariance(klein_n3_cover):
    Y = klein_n3_cover
    w = Word.from_string("a1.a3.a2^-1")
    for g in range(4):
        for h in range(4):
            lhs = deck_translate_path(Y, g, lift_word(Y, w, h))
            rhs = lift_word(Y, w, Y.group.mul[g][h])
            assert lhs == rhs


# --- petal complement -----------------------------------------------------


def test_components_trivial_group(trivial_n3_cover):
    comps = petal_complement_components(trivial_n3_cover, 2)
    assert len(comps) == 1
    assert comps[0].vertices == (0,)
    assert comps[0].edges == ((0, 1), (0, 3))


def test_components_mod2(mod2_cover):
    comps = petal_complement_components(mod2_cover, 1)
    assert len(comps) == 2  # [G : <q(b)>] = 4/2
    for comp in comps:
        assert len(comp.vertices) == 2
        assert len(comp.edges) == 2
        assert all(i == 2 for _, i in comp.edges)
    assert 0 in comps[0].vertices
    assert comps[0].coset_rep == 0


def test_components_cyclic3(cyclic3_cover):
    comps = petal_complement_components(cyclic3_cover, 1)
    assert len(comps) == 1
    assert comps[0].vertices == (0, 1, 2)


def test_components_cover_all_edges(klein_n3_cover):
    Y = klein_n3_cover
    for j in range(1, 4):
        comps = petal_complement_components(Y, j)
        all_edges = sorted(e for c in comps for e in c.edges)
        assert all_edges == sorted(e for e in Y.edges() if e[1] != j)
        all_vertices = sorted(v for c in comps for v in c.vertices)
        assert all_vertices == list(Y.vertices())
        # vertex sets are the left cosets of the generated subgroup
        gens = [Y.images[i - 1] for i in range(1, 4) if i != j]
        sub = subgroup_generated(Y.group, gens)
        assert {c.vertices for c in comps} == {
            tuple(sorted(Y.group.mul[g][h] for h in sub)) for g in Y.vertices()
        }


# --- misc interfaces ------------------------------------------------------


def test_standard_images_trivial():
    G = builtin_group("cyclic", 1)
    assert standard_images(G, 3) == (0, 0, 0)


def test_standard_images_infeasible():
    G = builtin_group("elementary_abelian", 2, 3)
    assert standard_images(G, 2) is None
    assert standard_images(G, 3) is not None


def test_standard_images_symmetric4_pair():
    G = builtin_group("symmetric", 4)
    imgs = standard_images(G, 2)
    assert imgs is not None
    assert len(subgroup_generated(G, imgs)) == 24


def test_dot_export(mod2_cover):
    dot = to_dot(mod2_cover)
    assert dot.startswith("digraph")
    assert dot.count("->") == 8
    assert 'label="a1"' in dot and 'label="a2"' in dot
    assert 'label="00"' in dot  # identity vertex label


def test_path_json(mod2_cover):
    p = lift_word(mod2_cover, Word.from_string("a1.a2^-1"), 0)
    assert path_to_json(p) == {"start": 0, "steps": [[0, 1, 1], [3, 2, -1]]}
