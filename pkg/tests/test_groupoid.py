"""Groupoid layer: inertia construction, skeletons, groupoid maps."""

import pytest

from twochar.errors import ValidationError
from twochar.group import FiniteGroup
from twochar.groupoid import FiniteGroupoid, GroupoidMap


def test_inertia_of_trivial_group():
    lam = FiniteGroupoid.inertia(FiniteGroup.trivial())
    assert lam.n_objects == 1 and lam.n_morphisms() == 1
    assert lam.validate()


def test_inertia_of_abelian_group():
    c4 = FiniteGroup.cyclic(4)
    lam = FiniteGroupoid.inertia(c4)
    assert lam.n_objects == 4
    assert lam.validate()
    # conjugation is trivial: every morphism is a loop
    assert all(lam.mor_src[m] == lam.mor_tgt[m] for m in range(lam.n_morphisms()))
    assert len(lam.skeleton().components) == 4
    for comp in lam.skeleton().components:
        assert comp.aut_group.order == 4


def test_inertia_of_s3():
    s3 = FiniteGroup.symmetric(3)
    lam = FiniteGroupoid.inertia(s3)
    assert lam.n_objects == 6
    assert lam.n_morphisms() == 36
    assert lam.validate()
    skel = lam.skeleton()
    assert len(skel.components) == 3
    assert sorted(c.aut_group.order for c in skel.components) == [2, 3, 6]


def test_inertia_morphism_endpoint_law():
    for grp in (FiniteGroup.symmetric(3), FiniteGroup.quaternion8()):
        lam = FiniteGroupoid.inertia(grp)
        n = grp.order
        for u in range(n):
            for g in range(n):
                m = u * n + g
                assert lam.mor_src[m] == u
                assert lam.mor_tgt[m] == grp.conj(g, u)


def test_skeleton_of_one_object_groupoid():
    s3 = FiniteGroup.symmetric(3)
    b = FiniteGroupoid.from_group(s3)
    assert b.validate()
    skel = b.skeleton()
    assert len(skel.components) == 1
    comp = skel.components[0]
    assert comp.aut_group.order == 6
    assert skel.transport[0] == b.identities[0]
    assert comp.aut_group.mult == s3.mult


def test_skeleton_of_klein_four_inertia():
    lam = FiniteGroupoid.inertia(FiniteGroup.klein_four())
    skel = lam.skeleton()
    assert len(skel.components) == 4
    assert all(c.aut_group.order == 4 for c in skel.components)


def test_skeleton_counts_morphisms():
    # morphisms into a class: class size x (class size x |Aut|)
    for grp in (FiniteGroup.symmetric(3), FiniteGroup.dihedral(4)):
        lam = FiniteGroupoid.inertia(grp)
        skel = lam.skeleton()
        assert len(skel.components) == len(grp.conjugacy_classes())
        for comp in skel.components:
            into = sum(1 for m in range(lam.n_morphisms())
                       if lam.mor_tgt[m] in set(comp.objects))
            size = len(comp.objects)
            assert into == size * size * comp.aut_group.order


def test_transport_endpoints():
    lam = FiniteGroupoid.inertia(FiniteGroup.symmetric(3))
    skel = lam.skeleton()
    for x in range(lam.n_objects):
        t = skel.to_representative(x)
        comp = skel.components[skel.component_index(x)]
        assert lam.mor_src[t] == x and lam.mor_tgt[t] == comp.rep_object


def test_inertia_of_groupoid_specializes_to_inertia_of_group():
    for grp in (FiniteGroup.cyclic(3), FiniteGroup.symmetric(3)):
        lam1 = FiniteGroupoid.inertia(grp)
        lam2 = FiniteGroupoid.inertia_of(FiniteGroupoid.from_group(grp))
        assert lam2.validate()
        assert lam1.n_objects == lam2.n_objects
        assert lam1.n_morphisms() == lam2.n_morphisms()
        # canonical identification: object u is element u, morphism (u, g)
        n = grp.order
        for u in range(n):
            for g in range(n):
                m = u * n + g
                assert lam1.mor_src[m] == lam2.mor_src[m]
                assert lam1.mor_tgt[m] == lam2.mor_tgt[m]
        assert lam1.compose_table == lam2.compose_table


def test_inertia_of_two_isomorphic_objects():
    # indiscrete groupoid on two objects with trivial automorphisms
    pair = FiniteGroupoid(
        2, [0, 1, 0, 1], [0, 1, 1, 0],
        {(0, 0): 0, (1, 1): 1, (2, 0): 2, (0, 3): 3, (3, 2): 0,
         (2, 3): 1, (1, 2): 2, (3, 1): 3},
        [0, 1], [0, 1, 3, 2], name="pair")
    lam = FiniteGroupoid.inertia_of(pair)
    assert lam.validate()
    assert lam.n_objects == 2
    assert len(lam.skeleton().components) == 1
    assert lam.skeleton().components[0].aut_group.order == 1


def test_inertia_of_discrete_groupoid():
    d = FiniteGroupoid.discrete(3)
    lam = FiniteGroupoid.inertia_of(d)
    assert lam.n_objects == 3 and lam.n_morphisms() == 3
    assert all(lam.mor_src[m] == lam.mor_tgt[m] == m for m in range(3))


def test_automorphism_classes_of_inertia_are_commuting_pair_classes():
    s3 = FiniteGroup.symmetric(3)
    lam = FiniteGroupoid.inertia(s3)
    classes = lam.automorphism_classes()
    # loops of Lambda(S3) are commuting pairs; classes are simultaneous
    # conjugation orbits -- count them independently
    pairs = s3.commuting_pairs()
    orbits = set()
    for g, h in pairs:
        orbit = frozenset((s3.conj(s, g), s3.conj(s, h)) for s in range(6))
        orbits.add(orbit)
    assert len(classes) == len(orbits)


def test_groupoid_map_from_inclusion():
    s3 = FiniteGroup.symmetric(3)
    h = s3.generated_subgroup([s3.element_by_label("(1 2)")])
    alpha = GroupoidMap.inertia_inclusion(h)
    assert alpha.is_faithful()
    assert alpha.src.n_objects == 2
    assert alpha.dst.n_objects == 6
    # object map lands in {e} and the transposition class
    classes = [set(c) for c in s3.conjugacy_classes()]
    images = [alpha.obj_map[u] for u in range(2)]
    assert images[0] == s3.identity
    assert any(images[1] in c and len(c) == 3 for c in classes)


def test_groupoid_map_identity_and_whole_subgroup():
    s3 = FiniteGroup.symmetric(3)
    whole = s3.subgroup(range(6))
    alpha = GroupoidMap.inertia_inclusion(whole)
    assert alpha.obj_map == tuple(range(6))
    assert alpha.mor_map == tuple(range(36))
    triv = s3.subgroup([s3.identity])
    beta = GroupoidMap.inertia_inclusion(triv)
    assert beta.obj_map == (s3.identity,)
    assert beta.is_faithful()


def test_groupoid_map_validation_catches_bad_ends():
    c2 = FiniteGroup.cyclic(2)
    lam = FiniteGroupoid.inertia(c2)
    with pytest.raises(ValidationError):
        GroupoidMap(lam, lam, [0, 1], [0, 1, 2, 0])
    # collapsing map is a functor but not faithful
    collapse = GroupoidMap(lam, lam, [0, 1], [0, 1, 2, 2])
    assert not collapse.is_faithful()


def test_json_shape():
    lam = FiniteGroupoid.inertia(FiniteGroup.cyclic(2))
    blob = lam.to_json_dict()
    assert {o["id"] for o in blob["objects"]} == {0, 1}
    assert len(blob["morphisms"]) == 4
    assert all(len(t) == 3 for t in blob["composition"])
