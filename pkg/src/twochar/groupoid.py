"""Finite groupoids, inertia groupoids, skeletons and groupoid maps.

A groupoid is stored densely: indexed objects, indexed morphisms with source
and target, a partial composition table on composable pairs, and identity
and inverse tables.  `compose[(f, g)]` is f after g, defined exactly when
src(f) == tgt(g).
"""

from __future__ import annotations

import random

from .errors import ValidationError
from .group import FiniteGroup

_FULL_ASSOC_TRIPLES = 400_000


class FiniteGroupoid:

    def __init__(self, n_objects, mor_src, mor_tgt, compose, identities,
                 inverses, object_labels=None, mor_labels=None, name=None,
                 check=True):
        self.n_objects = n_objects
        self.mor_src = tuple(mor_src)
        self.mor_tgt = tuple(mor_tgt)
        self.compose_table = dict(compose)
        self.identities = tuple(identities)
        self.inverses = tuple(inverses)
        self.object_labels = tuple(object_labels) if object_labels \
            else tuple("x%d" % i for i in range(n_objects))
        self.mor_labels = tuple(mor_labels) if mor_labels \
            else tuple("m%d" % i for i in range(len(self.mor_src)))
        self.name = name or "groupoid"
        self._skeleton = None
        self._by_source = None
        self._automorphisms = None
        if check:
            self._validate()

    # ------------------------------------------------------------------
    def n_morphisms(self):
        return len(self.mor_src)

    def compose(self, f, g):
        """f after g; raises KeyError when not composable."""
        return self.compose_table[(f, g)]

    def composable(self, f, g):
        return self.mor_src[f] == self.mor_tgt[g]

    def morphisms_from(self, x):
        if self._by_source is None:
            by_src = [[] for _ in range(self.n_objects)]
            for m, s in enumerate(self.mor_src):
                by_src[s].append(m)
            self._by_source = tuple(tuple(v) for v in by_src)
        return self._by_source[x]

    def automorphisms(self):
        """Morphism indices with equal source and target, ascending."""
        if self._automorphisms is None:
            self._automorphisms = tuple(
                m for m in range(self.n_morphisms())
                if self.mor_src[m] == self.mor_tgt[m])
        return self._automorphisms

    def automorphisms_at(self, x):
        return [m for m in self.morphisms_from(x) if self.mor_tgt[m] == x]

    # ------------------------------------------------------------------
    def validate(self):
        """Re-run the construction-time axiom checks."""
        self._validate()
        return True

    def _validate(self):
        nm = self.n_morphisms()
        if len(self.identities) != self.n_objects or len(self.inverses) != nm:
            raise ValidationError("identity/inverse table sizes are off")
        for x, e in enumerate(self.identities):
            if self.mor_src[e] != x or self.mor_tgt[e] != x:
                raise ValidationError("identity of object %d has wrong ends" % x,
                                      witness=(x,))
        for (f, g), h in self.compose_table.items():
            if self.mor_src[f] != self.mor_tgt[g]:
                raise ValidationError("composite defined on non-composable pair",
                                      witness=(f, g))
            if self.mor_src[h] != self.mor_src[g] or self.mor_tgt[h] != self.mor_tgt[f]:
                raise ValidationError("composite has wrong ends", witness=(f, g))
        by_tgt = self._by_target()
        pair_count = sum(len(self.morphisms_from(x)) * len(by_tgt[x])
                         for x in range(self.n_objects))
        if pair_count != len(self.compose_table):
            raise ValidationError("composition is not defined exactly on "
                                  "composable pairs (%d vs %d)"
                                  % (len(self.compose_table), pair_count))
        for m in range(nm):
            e_t = self.identities[self.mor_tgt[m]]
            e_s = self.identities[self.mor_src[m]]
            if self.compose_table[(e_t, m)] != m or self.compose_table[(m, e_s)] != m:
                raise ValidationError("identity law fails", witness=(m,))
            i = self.inverses[m]
            if self.mor_src[i] != self.mor_tgt[m] or self.mor_tgt[i] != self.mor_src[m]:
                raise ValidationError("inverse has wrong ends", witness=(m,))
            if self.compose_table[(i, m)] != e_s or self.compose_table[(m, i)] != e_t:
                raise ValidationError("inverse law fails", witness=(m,))
        self._check_associativity()

    def _check_associativity(self):
        # triples (f, g, h) with src(f) = tgt(g), src(g) = tgt(h)
        by_tgt = self._by_target()
        total = sum(len(self.morphisms_from(self.mor_tgt[g])) *
                    len(by_tgt[self.mor_src[g]])
                    for g in range(self.n_morphisms()))
        comp = self.compose_table
        if total <= _FULL_ASSOC_TRIPLES:
            for g in range(self.n_morphisms()):
                into_s = by_tgt[self.mor_src[g]]
                for f in self.morphisms_from(self.mor_tgt[g]):
                    fg = comp[(f, g)]
                    for h in into_s:
                        if comp[(fg, h)] != comp[(f, comp[(g, h)])]:
                            raise ValidationError("associativity fails",
                                                  witness=(f, g, h))
        else:
            rnd = random.Random(0)
            mors = self.n_morphisms()
            for _ in range(20000):
                g = rnd.randrange(mors)
                from_t = self.morphisms_from(self.mor_tgt[g])
                into_s = by_tgt[self.mor_src[g]]
                f = from_t[rnd.randrange(len(from_t))]
                h = into_s[rnd.randrange(len(into_s))]
                if comp[(comp[(f, g)], h)] != comp[(f, comp[(g, h)])]:
                    raise ValidationError("associativity fails", witness=(f, g, h))

    def _by_target(self):
        by_tgt = [[] for _ in range(self.n_objects)]
        for m, t in enumerate(self.mor_tgt):
            by_tgt[t].append(m)
        return by_tgt

    # ------------------------------------------------------------------
    def skeleton(self):
        """Deterministic skeleton: least-index representatives, least-index
        transport morphisms pointing at the representative."""
        if self._skeleton is not None:
            return self._skeleton
        n = self.n_objects
        comp_of = [None] * n
        components = []
        for x in range(n):
            if comp_of[x] is not None:
                continue
            members = [x]
            comp_of[x] = len(components)
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for m in self.morphisms_from(y):
                        z = self.mor_tgt[m]
                        if comp_of[z] is None:
                            comp_of[z] = len(components)
                            members.append(z)
                            nxt.append(z)
                frontier = nxt
            components.append(sorted(members))
        transport = [None] * n
        for members in components:
            rep = members[0]
            transport[rep] = self.identities[rep]
            for z in members[1:]:
                transport[z] = min(m for m in self.morphisms_from(z)
                                   if self.mor_tgt[m] == rep)
        comps = []
        for members in components:
            rep = members[0]
            auts = self.automorphisms_at(rep)
            index = {m: i for i, m in enumerate(auts)}
            mult = [[index[self.compose_table[(a, b)]] for b in auts] for a in auts]
            grp = FiniteGroup(mult, labels=[self.mor_labels[a] for a in auts],
                              name="Aut(%s)" % self.object_labels[rep])
            comps.append(SkeletonComponent(rep, tuple(members), tuple(auts), grp))
        self._skeleton = GroupoidSkeleton(self, tuple(comps), tuple(transport),
                                          tuple(comp_of))
        return self._skeleton

    def automorphism_classes(self):
        """Isomorphism classes of loops: orbits of automorphisms under
        conjugation by every morphism out of their object.  Least morphism
        index is the canonical representative."""
        comp = self.compose_table
        inv = self.inverses
        seen, classes = set(), []
        for u in self.automorphisms():
            if u in seen:
                continue
            orbit = set()
            frontier = [u]
            while frontier:
                v = frontier.pop()
                if v in orbit:
                    continue
                orbit.add(v)
                for s in self.morphisms_from(self.mor_src[v]):
                    w = comp[(s, comp[(v, inv[s])])]
                    if w not in orbit:
                        frontier.append(w)
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
        return tuple(classes)

    def to_json_dict(self):
        return {
            "objects": [{"id": i, "label": self.object_labels[i]}
                        for i in range(self.n_objects)],
            "morphisms": [{"id": m, "src": self.mor_src[m],
                           "tgt": self.mor_tgt[m], "label": self.mor_labels[m]}
                          for m in range(self.n_morphisms())],
            "composition": [[f, g, h] for (f, g), h
                            in sorted(self.compose_table.items())],
            "identities": list(self.identities),
            "inverses": list(self.inverses),
        }

    def __repr__(self):
        return "FiniteGroupoid(%s, %d objects, %d morphisms)" % (
            self.name, self.n_objects, self.n_morphisms())

    # ------------------------------------------------------------------
    @classmethod
    def from_group(cls, group):
        """The group as a one-object groupoid; morphism i is element i."""
        n = group.order
        compose = {(a, b): group.mult[a][b] for a in range(n) for b in range(n)}
        return cls(1, [0] * n, [0] * n, compose, [group.identity],
                   group.inverse, object_labels=["*"],
                   mor_labels=group.labels, name="B(%s)" % group.name,
                   check=False)

    @classmethod
    def inertia(cls, group):
        """Objects are the group elements; for every (u, g) one morphism
        labelled g from u to g u g^-1."""
        n = group.order
        mult, inv = group.mult, group.inverse

        def mor(u, g):
            return u * n + g

        src = [u for u in range(n) for _ in range(n)]
        tgt = [mult[mult[g][u]][inv[g]] for u in range(n) for g in range(n)]
        compose = {}
        for u in range(n):
            for g in range(n):
                v = tgt[mor(u, g)]
                for h in range(n):
                    compose[(mor(v, h), mor(u, g))] = mor(u, mult[h][g])
        identities = [mor(u, group.identity) for u in range(n)]
        inverses = [mor(tgt[mor(u, g)], inv[g]) for u in range(n) for g in range(n)]
        labels = ["%s:%s" % (group.labels[g], group.labels[u])
                  for u in range(n) for g in range(n)]
        lam = cls(n, src, tgt, compose, identities, inverses,
                  object_labels=group.labels, mor_labels=labels,
                  name="Lambda(%s)" % group.name, check=False)
        lam.group = group
        return lam

    @classmethod
    def inertia_of(cls, gpd):
        """Inertia groupoid of an arbitrary finite groupoid: objects are its
        loops, with one morphism u -> g u g^-1 per g out of the loop's object."""
        autos = gpd.automorphisms()
        obj_index = {u: i for i, u in enumerate(autos)}
        comp, ginv = gpd.compose_table, gpd.inverses
        mors = []  # (u, g) with src(g) == object of u
        for u in autos:
            for g in gpd.morphisms_from(gpd.mor_src[u]):
                mors.append((u, g))
        mor_index = {m: i for i, m in enumerate(mors)}

        def conj(u, g):
            return comp[(g, comp[(u, ginv[g])])]

        src = [obj_index[u] for u, g in mors]
        tgt = [obj_index[conj(u, g)] for u, g in mors]
        compose = {}
        for (u, g) in mors:
            v = conj(u, g)
            for h in gpd.morphisms_from(gpd.mor_src[v]):
                compose[(mor_index[(v, h)], mor_index[(u, g)])] = \
                    mor_index[(u, comp[(h, g)])]
        identities = [mor_index[(u, gpd.identities[gpd.mor_src[u]])] for u in autos]
        inverses = [mor_index[(conj(u, g), ginv[g])] for (u, g) in mors]
        return cls(len(autos), src, tgt, compose, identities, inverses,
                   object_labels=[gpd.mor_labels[u] for u in autos],
                   mor_labels=["%s:%s" % (gpd.mor_labels[g], gpd.mor_labels[u])
                               for u, g in mors],
                   name="Lambda(%s)" % gpd.name, check=False)

    @classmethod
    def discrete(cls, n):
        return cls(n, list(range(n)), list(range(n)),
                   {(i, i): i for i in range(n)}, list(range(n)),
                   list(range(n)), name="discrete%d" % n, check=False)


class SkeletonComponent:
    __slots__ = ("rep_object", "objects", "aut_morphisms", "aut_group")

    def __init__(self, rep_object, objects, aut_morphisms, aut_group):
        self.rep_object = rep_object
        self.objects = objects
        self.aut_morphisms = aut_morphisms  # aligned with aut_group elements
        self.aut_group = aut_group

    def aut_index(self, morphism):
        return self.aut_morphisms.index(morphism)


class GroupoidSkeleton:
    """Disjoint-union-of-groups picture of a groupoid, with transport
    morphisms from every object to its class representative."""

    def __init__(self, groupoid, components, transport, component_of):
        self.groupoid = groupoid
        self.components = components
        self.transport = transport
        self.component_of = component_of

    def component_index(self, obj):
        return self.component_of[obj]

    def to_representative(self, obj):
        """Transport morphism obj -> representative."""
        return self.transport[obj]


class GroupoidMap:
    """A functor between finite groupoids, given on indices."""

    def __init__(self, src, dst, obj_map, mor_map, check=True):
        self.src = src
        self.dst = dst
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        self._faithful = None
        if check:
            self._validate()

    def _validate(self):
        s, d = self.src, self.dst
        if len(self.obj_map) != s.n_objects or len(self.mor_map) != s.n_morphisms():
            raise ValidationError("map tables have wrong sizes")
        for m in range(s.n_morphisms()):
            fm = self.mor_map[m]
            if d.mor_src[fm] != self.obj_map[s.mor_src[m]] or \
               d.mor_tgt[fm] != self.obj_map[s.mor_tgt[m]]:
                raise ValidationError("morphism image has wrong ends", witness=(m,))
        for x in range(s.n_objects):
            if self.mor_map[s.identities[x]] != d.identities[self.obj_map[x]]:
                raise ValidationError("identities not preserved", witness=(x,))
        for (f, g), h in s.compose_table.items():
            if d.compose_table[(self.mor_map[f], self.mor_map[g])] != self.mor_map[h]:
                raise ValidationError("composition not preserved", witness=(f, g))

    def is_faithful(self):
        """Injective on every hom-set."""
        if self._faithful is None:
            homs = {}
            self._faithful = True
            for m in range(self.src.n_morphisms()):
                key = (self.src.mor_src[m], self.src.mor_tgt[m], self.mor_map[m])
                if key in homs:
                    self._faithful = False
                    break
                homs[key] = m
        return self._faithful

    @classmethod
    def identity(cls, gpd):
        return cls(gpd, gpd, range(gpd.n_objects), range(gpd.n_morphisms()),
                   check=False)

    @classmethod
    def from_group_hom(cls, src_group, dst_group, elem_map):
        """One-object groupoid map from a group homomorphism."""
        return cls(FiniteGroupoid.from_group(src_group),
                   FiniteGroupoid.from_group(dst_group), [0], elem_map)

    @classmethod
    def inertia_inclusion(cls, subgroup, lam_g=None, lam_h=None):
        """The map Lambda(H) -> Lambda(G) induced by a subgroup inclusion.

        `lam_g` / `lam_h` may be passed to reuse already-built inertia
        groupoids (`lam_h` must be the inertia groupoid of
        subgroup.extract()'s group).
        """
        g = subgroup.parent
        sub, to_parent, _ = subgroup.extract()
        if lam_g is None:
            lam_g = FiniteGroupoid.inertia(g)
        if lam_h is None:
            lam_h = FiniteGroupoid.inertia(sub)
        nh, ng = sub.order, g.order
        obj_map = [to_parent[u] for u in range(nh)]
        mor_map = [to_parent[u] * ng + to_parent[h]
                   for u in range(nh) for h in range(nh)]
        return cls(lam_h, lam_g, obj_map, mor_map)
