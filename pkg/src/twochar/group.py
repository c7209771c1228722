"""Finite groups as validated multiplication tables.

All the combinatorial queries the character formulas need live here:
conjugacy classes, centralizers, commuting pairs, coset representatives and
subgroup conjugacy.  Everything is deterministic (least-index scan) so that
output tables and JSON diffs are reproducible.
"""

from __future__ import annotations

import random

from .errors import ParameterError, ParseError, SizeCapError, ValidationError

DEFAULT_ORDER_CAP = 10080
_FULL_ASSOC_LIMIT = 64


# ----------------------------------------------------------------------
# permutations: tuples p with p[i] = image of i, 0-based

def compose_perm(p, q):
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert_perm(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def parse_cycles(text, degree):
    """Cycle notation "(1 2)(3 4)" over 1-based points; "()" is the identity."""
    perm = list(range(degree))
    seen = set()
    s = text.strip()
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        if s[pos] != "(":
            raise ParseError("expected '(' in cycle notation %r" % text, pos)
        end = s.find(")", pos)
        if end < 0:
            raise ParseError("unbalanced '(' in cycle notation %r" % text, pos)
        body = s[pos + 1:end].replace(",", " ").split()
        points = []
        for tok in body:
            try:
                p = int(tok)
            except ValueError:
                raise ParseError("bad point %r in cycle notation" % tok, pos)
            if not 1 <= p <= degree:
                raise ParseError("point %d out of range 1..%d" % (p, degree), pos)
            if p - 1 in seen:
                raise ParseError("point %d repeated in cycle notation" % p, pos)
            seen.add(p - 1)
            points.append(p - 1)
        for i, p in enumerate(points):
            perm[p] = points[(i + 1) % len(points)]
        pos = end + 1
    return tuple(perm)


def format_cycles(perm):
    out, seen = [], set()
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        out.append("(" + " ".join(str(p) for p in cyc) + ")")
    return "".join(out) if out else "()"


# ----------------------------------------------------------------------

class FiniteGroup:
    """Multiplication-table group with element labels.

    `mult[a][b]` is the product ab.  Construction validates the axioms:
    full associativity scan for order <= 64, a fixed-seed sample above.
    """

    def __init__(self, mult, labels=None, name=None, perm_action=None, check=True):
        self.mult = tuple(tuple(row) for row in mult)
        self.order = len(self.mult)
        self.name = name or "group%d" % self.order
        self.perm_action = None if perm_action is None else tuple(perm_action)
        if labels is None:
            labels = ["g%d" % i for i in range(self.order)]
        self.labels = tuple(labels)
        if len(self.labels) != self.order:
            raise ValidationError("label count %d does not match order %d"
                                  % (len(self.labels), self.order))
        if check:
            self._validate()
        self.identity = self._find_identity()
        self.inverse = self._find_inverses()
        self._classes = None
        self._commuting_pairs = None

    # -- validation ------------------------------------------------------
    def _validate(self):
        n = self.order
        if n == 0:
            raise ValidationError("empty multiplication table")
        rng = range(n)
        for a, row in enumerate(self.mult):
            if len(row) != n:
                raise ValidationError("row %d has length %d" % (a, len(row)))
            if sorted(row) != list(rng):
                raise ValidationError("row %d of the table is not a permutation" % a,
                                      witness=(a,))
        for b in rng:
            col = sorted(self.mult[a][b] for a in rng)
            if col != list(rng):
                raise ValidationError("column %d of the table is not a permutation" % b,
                                      witness=(b,))
        mult = self.mult
        if n <= _FULL_ASSOC_LIMIT:
            triples = ((a, b, c) for a in rng for b in rng for c in rng)
        else:
            rnd = random.Random(0)
            triples = ((rnd.randrange(n), rnd.randrange(n), rnd.randrange(n))
                       for _ in range(4096))
        for a, b, c in triples:
            if mult[a][mult[b][c]] != mult[mult[a][b]][c]:
                raise ValidationError(
                    "associativity fails at (%d, %d, %d)" % (a, b, c),
                    witness=(a, b, c))

    def _find_identity(self):
        for e in range(self.order):
            row = self.mult[e]
            if all(row[x] == x for x in range(self.order)) and \
               all(self.mult[x][e] == x for x in range(self.order)):
                return e
        raise ValidationError("no identity element")

    def _find_inverses(self):
        e = self.identity
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.mult[a][b] == e and self.mult[b][a] == e:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise ValidationError("element %d has no inverse" % a, witness=(a,))
        return tuple(inv)

    # -- basic queries -----------------------------------------------------
    def __len__(self):
        return self.order

    def mul(self, a, b):
        return self.mult[a][b]

    def inv(self, a):
        return self.inverse[a]

    def conj(self, s, g):
        """s g s^-1."""
        return self.mult[self.mult[s][g]][self.inverse[s]]

    def order_of(self, g):
        e, k, x = self.identity, 1, g
        while x != e:
            x = self.mult[x][g]
            k += 1
        return k

    def label(self, g):
        return self.labels[g]

    def element_by_label(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise ParseError("no element labelled %r in %s" % (label, self.name))

    def same_table(self, other):
        return self is other or self.mult == other.mult

    # -- conjugacy machinery -------------------------------------------------
    def conjugacy_classes(self):
        """Partition into conjugation orbits; each class is a sorted tuple and
        its first entry (the least index) is the canonical representative."""
        if self._classes is None:
            seen = set()
            classes = []
            for g in range(self.order):
                if g in seen:
                    continue
                orbit = {self.conj(s, g) for s in range(self.order)}
                seen |= orbit
                classes.append(tuple(sorted(orbit)))
            self._classes = tuple(classes)
        return self._classes

    def class_index(self, g):
        for i, cls in enumerate(self.conjugacy_classes()):
            if g in cls:
                return i
        raise ValueError("element out of range")

    def centralizer(self, g):
        members = [s for s in range(self.order)
                   if self.mult[s][g] == self.mult[g][s]]
        return Subgroup(self, members)

    def commuting_pairs(self):
        if self._commuting_pairs is None:
            mult = self.mult
            self._commuting_pairs = tuple(
                (g, h) for g in range(self.order) for h in range(self.order)
                if mult[g][h] == mult[h][g])
        return self._commuting_pairs

    # -- cosets and subgroups --------------------------------------------------
    def subgroup(self, members):
        return Subgroup(self, members)

    def generated_subgroup(self, gens):
        e = self.identity
        members = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mult[x][g]
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(self, sorted(members))

    def left_coset_representatives(self, sub):
        """One representative per left coset gH; the identity comes first and
        the rest are found by a least-index scan."""
        if sub.parent is not self:
            raise ValidationError("subgroup belongs to a different group")
        reps, covered = [], set()
        for g in [self.identity] + list(range(self.order)):
            if g in covered:
                continue
            reps.append(g)
            covered.update(self.mult[g][h] for h in sub.members)
        return reps

    def conjugate_subgroup_witness(self, h1, h2):
        """Some s with s H1 s^-1 = H2, or None."""
        if len(h1.members) != len(h2.members):
            return None
        target = set(h2.members)
        for s in range(self.order):
            if {self.conj(s, h) for h in h1.members} == target:
                return s
        return None

    def __repr__(self):
        return "FiniteGroup(%s, order=%d)" % (self.name, self.order)

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_mult_table(cls, table, labels=None, name=None):
        return cls(table, labels=labels, name=name)

    @classmethod
    def from_permutation_generators(cls, degree, generators, labels=None,
                                    name=None, cap=DEFAULT_ORDER_CAP):
        """Breadth-first closure of the generators, starting at the identity.

        Element 0 is the identity; new elements are discovered in BFS order,
        multiplying on the right by the generators in their given order.
        """
        gens = []
        for g in generators:
            p = tuple(g)
            if sorted(p) != list(range(degree)):
                raise ValidationError("generator %r is not a permutation of 0..%d"
                                      % (g, degree - 1))
            gens.append(p)
        ident = tuple(range(degree))
        elements = [ident]
        index = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = compose_perm(x, g)
                    if y not in index:
                        if len(elements) >= cap:
                            raise SizeCapError(
                                "closure exceeds the cap of %d elements" % cap)
                        index[y] = len(elements)
                        elements.append(y)
                        nxt.append(y)
            frontier = nxt
        n = len(elements)
        mult = [[index[compose_perm(a, b)] for b in elements] for a in elements]
        if labels is None:
            labels = [format_cycles(p) for p in elements]
        return cls(mult, labels=labels, name=name or "perm%d" % n,
                   perm_action=elements)

    @classmethod
    def trivial(cls):
        return cls.cyclic(1)

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise ParameterError("cyclic(n) needs n >= 1")
        mult = [[(a + b) % n for b in range(n)] for a in range(n)]
        labels = ["e"] + ["g" if k == 1 else "g%d" % k for k in range(1, n)]
        return cls(mult, labels=labels, name="C%d" % n)

    @classmethod
    def dihedral(cls, n):
        """Order 2n: rotations r^k at 0..n-1, reflections r^k s at n..2n-1."""
        if n < 1:
            raise ParameterError("dihedral(n) needs n >= 1")

        def mul(a, b):
            ka, fa = a % n, a // n
            kb, fb = b % n, b // n
            k = (ka + kb) % n if not fa else (ka - kb) % n
            return k + n * ((fa + fb) % 2)

        mult = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
        labels = ["e"] + ["r" if k == 1 else "r%d" % k for k in range(1, n)]
        labels += ["s"] + ["rs" if k == 1 else "r%ds" % k for k in range(1, n)]
        return cls(mult, labels=labels, name="D%d" % n)

    @classmethod
    def symmetric(cls, n):
        """S_n for n <= 5, elements in lexicographic order of their image tuples."""
        if not 1 <= n <= 5:
            raise ParameterError("symmetric(n) supports 1 <= n <= 5")
        import itertools
        elements = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(elements)}
        mult = [[index[compose_perm(a, b)] for b in elements] for a in elements]
        labels = [format_cycles(p) for p in elements]
        return cls(mult, labels=labels, name="S%d" % n, perm_action=elements)

    @classmethod
    def quaternion8(cls):
        """{1,-1,i,-i,j,-j,k,-k} with the usual quaternion multiplication."""
        units = ["1", "i", "j", "k"]
        table = {  # unit products as (sign, unit)
            ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
            ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
            ("k", "1"): (1, "k"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"),
            ("k", "k"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
            ("i", "k"): (-1, "j"),
        }
        elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"),
                 (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
        index = {x: i for i, x in enumerate(elems)}

        def mul(a, b):
            sa, ua = a
            sb, ub = b
            s, u = table[(ua, ub)]
            return index[(s * sa * sb, u)]

        mult = [[mul(a, b) for b in elems] for a in elems]
        labels = [("" if s > 0 else "-") + u for s, u in elems]
        return cls(mult, labels=labels, name="Q8")

    @classmethod
    def direct_product(cls, g, h):
        ng, nh = g.order, h.order
        n = ng * nh

        def mul(a, b):
            ag, ah = divmod(a, nh)
            bg, bh = divmod(b, nh)
            return g.mult[ag][bg] * nh + h.mult[ah][bh]

        mult = [[mul(a, b) for b in range(n)] for a in range(n)]
        labels = ["(%s,%s)" % (g.labels[a], h.labels[b])
                  for a in range(ng) for b in range(nh)]
        return cls(mult, labels=labels, name="%sx%s" % (g.name, h.name))

    @classmethod
    def klein_four(cls):
        grp = cls.direct_product(cls.cyclic(2), cls.cyclic(2))
        grp.name = "K4"
        return grp


class Subgroup:
    """A subgroup stored as an element set of a fixed parent group."""

    def __init__(self, parent, members):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self._extraction = None
        self._validate()

    def _validate(self):
        g = self.parent
        mem = set(self.members)
        if not mem:
            raise ValidationError("subgroup must be nonempty")
        if g.identity not in mem:
            raise ValidationError("subgroup misses the identity")
        for a in self.members:
            if not 0 <= a < g.order:
                raise ValidationError("element %d out of range" % a)
            if g.inverse[a] not in mem:
                raise ValidationError("subgroup not closed under inverse",
                                      witness=(a,))
            for b in self.members:
                if g.mult[a][b] not in mem:
                    raise ValidationError("subgroup not closed under product",
                                          witness=(a, b))
        if g.order % len(mem):
            raise ValidationError("subgroup order %d does not divide %d"
                                  % (len(mem), g.order))

    def __len__(self):
        return len(self.members)

    def __contains__(self, g):
        return g in set(self.members)

    def index(self):
        return self.parent.order // len(self.members)

    def conjugated_by(self, s):
        g = self.parent
        return Subgroup(g, [g.conj(s, h) for h in self.members])

    def is_whole_group(self):
        return len(self.members) == self.parent.order

    def extract(self):
        """Standalone FiniteGroup on the members, with index maps.

        Returns (group, to_parent, from_parent): `to_parent[i]` is the parent
        index of subgroup element i, `from_parent` the inverse mapping.
        """
        if self._extraction is None:
            g = self.parent
            to_parent = self.members
            from_parent = {p: i for i, p in enumerate(to_parent)}
            mult = [[from_parent[g.mult[a][b]] for b in to_parent]
                    for a in to_parent]
            sub = FiniteGroup(mult,
                              labels=[g.labels[p] for p in to_parent],
                              name="%s<=%s" % (len(to_parent), g.name))
            self._extraction = (sub, to_parent, from_parent)
        return self._extraction

    def __repr__(self):
        g = self.parent
        return "Subgroup(%s, {%s})" % (
            g.name, ", ".join(g.labels[m] for m in self.members))
