"""Concrete permutation groups at small degree.

Permutations are stored as image tuples on 0-based points; all text I/O
(cycle notation, data files) is 1-based.  Groups are fully enumerated
element sets, which is adequate and simple at the orders this package
works with; there is deliberately no stabilizer-chain machinery.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .combinat import EVEN, ODD, Partition, class_size, factorial


class CapExceeded(RuntimeError):
    """An enumeration or closure grew past its configured cap."""


DEFAULT_CLOSURE_CAP = 50_000
DEFAULT_LATTICE_CAP = 5_040
DEFAULT_CLASS_CAP = 20_000_000


class Perm:
    """A permutation of {1..n}, stored as a 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        """Composition: (p * q)(x) = p(q(x)), q applied first."""
        q = other.images
        p = self.images
        if len(p) != len(q):
            raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
        return Perm(p[q[i]] for i in range(len(p)))

    def inverse(self):
        images = self.images
        inv = [0] * len(images)
        for i, j in enumerate(images):
            inv[j] = i
        return Perm(inv)

    def conjugate_by(self, g):
        """Relabel points by g: returns g * self * g^{-1}."""
        return Perm(conjugate_images(self.images, g.images))

    def cycles(self, include_fixed=True):
        """Disjoint cycles as tuples of 0-based points, each starting at its minimum."""
        images = self.images
        seen = [False] * len(images)
        out = []
        for start in range(len(images)):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return Partition(len(c) for c in self.cycles())

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles()))

    def sign(self):
        return sign_of_images(self.images)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return f"Perm({cycle_text(self)})"


def conjugate_images(p, g):
    """Image tuple of g p g^{-1} given image tuples p and g."""
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[g[i]] = g[pi]
    return tuple(out)


def cycles_of_images(images):
    """Disjoint cycles of a raw image tuple, without building a Perm."""
    n = len(images)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = 1
                cyc.append(j)
                j = images[j]
            out.append(tuple(cyc))
    return out


def sign_of_images(images):
    n = len(images)
    seen = [False] * n
    ncycles = 0
    for i in range(n):
        if not seen[i]:
            ncycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = images[j]
    return ODD if (n - ncycles) % 2 else EVEN


def parse_cycles(text, degree):
    """Parse disjoint-cycle text like ``(1,2,3)(4,5)`` into a Perm.

    Points are 1-based and must not repeat.  ``()``, ``e`` and ``id``
    denote the identity.
    """
    s = text.replace(" ", "")
    if s in ("()", "e", "id", ""):
        return Perm.identity(degree)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed cycle text: {text!r}")
    images = list(range(degree))
    used = set()
    for chunk in s[1:-1].split(")("):
        pts = [int(v) for v in chunk.split(",") if v]
        if len(pts) < 2:
            raise ValueError(f"cycle too short in {text!r}")
        for v in pts:
            if not 1 <= v <= degree:
                raise ValueError(f"point {v} out of range 1..{degree}")
            if v in used:
                raise ValueError(f"repeated point {v} in {text!r}")
            used.add(v)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
    return Perm(images)


def cycle_text(perm):
    cycles = [c for c in perm.cycles() if len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles)


def compose(p, q):
    return p * q


def inverse(p):
    return p.inverse()


def order(p):
    return p.order()


def cycle_type(p):
    return p.cycle_type()


def sign(p):
    return p.sign()


def is_primary(p):
    """True when the order of p is a prime power (identity included)."""
    o = p.order() if isinstance(p, Perm) else int(p)
    if o == 1:
        return True
    f = 2
    while f * f <= o:
        if o % f == 0:
            while o % f == 0:
                o //= f
            return o == 1
        f += 1
    return True  # o itself prime


def perm_rank(images):
    """Lexicographic rank of an image tuple (factorial number system)."""
    n = len(images)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if images[j] < images[i])
        rank += smaller * factorial(n - 1 - i)
    return rank


def perm_unrank(n, rank):
    avail = list(range(n))
    images = []
    for i in range(n):
        f = factorial(n - 1 - i)
        idx, rank = divmod(rank, f)
        images.append(avail.pop(idx))
    return Perm(images)


# ---------------------------------------------------------------------------
# class enumeration


def _iter_class_images(n, parts):
    """Yield image tuples of every permutation of S_n with the given type.

    Each cycle is anchored at the smallest point it moves, so every
    permutation appears exactly once.
    """
    images = list(range(n))
    counts = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1

    def rec(avail):
        if not avail:
            yield tuple(images)
            return
        anchor = avail[0]
        rest = avail[1:]
        for length in sorted(counts):
            if not counts[length]:
                continue
            counts[length] -= 1
            if length == 1:
                yield from rec(rest)
            else:
                for others in itertools.permutations(rest, length - 1):
                    prev = anchor
                    for pt in others:
                        images[prev] = pt
                        prev = pt
                    images[prev] = anchor
                    chosen = set(others)
                    yield from rec(tuple(x for x in rest if x not in chosen))
                    for pt in others:
                        images[pt] = pt
                    images[anchor] = anchor
            counts[length] += 1

    yield from rec(tuple(range(n)))


def enumerate_class(n, lam, max_size=DEFAULT_CLASS_CAP):
    """Stream every permutation of cycle type ``lam`` in S_n exactly once."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    if lam.n != n:
        raise ValueError(f"partition of {lam.n} does not match degree {n}")
    size = class_size(lam)
    if size > max_size:
        raise CapExceeded(f"class size {size} exceeds budget {max_size}")
    return (Perm(t) for t in _iter_class_images(n, lam.parts))


# ---------------------------------------------------------------------------
# concrete groups


class ConcreteGroup:
    """A permutation group given by generators with all elements enumerated."""

    __slots__ = ("degree", "generators", "elements", "name")

    def __init__(self, degree, generators, elements, name=None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = frozenset(elements)
        self.name = name or "group"

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, p):
        images = p.images if isinstance(p, Perm) else tuple(p)
        return images in self.elements

    def __len__(self):
        return len(self.elements)

    def iter_perms(self):
        for t in sorted(self.elements):
            yield Perm(t)

    def element_ranks(self):
        return frozenset(perm_rank(t) for t in self.elements)

    def conjugate_by(self, g):
        gi = g.images if isinstance(g, Perm) else tuple(g)
        elems = frozenset(conjugate_images(t, gi) for t in self.elements)
        gens = tuple(Perm(conjugate_images(p.images, gi)) for p in self.generators)
        return ConcreteGroup(self.degree, gens, elems, name=self.name)

    def is_subgroup_of(self, other):
        return self.elements <= other.elements

    def __repr__(self):
        return f"ConcreteGroup({self.name}, degree={self.degree}, order={self.order})"


def close_images(gen_images, degree, cap=DEFAULT_CLOSURE_CAP):
    """Product closure of generator image tuples, as a set of tuples."""
    ident = tuple(range(degree))
    elements = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gen_images:
            y = tuple(x[g[i]] for i in range(degree))
            if y not in elements:
                if cap is not None and len(elements) >= cap:
                    raise CapExceeded(f"closure exceeded cap {cap}")
                elements.add(y)
                queue.append(y)
    return elements


def close(generators, degree=None, cap=DEFAULT_CLOSURE_CAP, name=None):
    """Enumerate the subgroup generated by ``generators``."""
    generators = list(generators)
    if degree is None:
        if not generators:
            raise ValueError("need a degree for the empty generating set")
        degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators have mismatched degrees")
    elems = close_images([g.images for g in generators], degree, cap=cap)
    return ConcreteGroup(degree, generators, elems, name=name)


def symmetric_group(n):
    gens = [Perm([1, 0] + list(range(2, n)))] if n >= 2 else []
    if n >= 3:
        gens.append(Perm(list(range(1, n)) + [0]))
    elems = set(itertools.permutations(range(n)))
    return ConcreteGroup(n, gens, elems, name=f"S{n}")


def alternating_group(n):
    elems = {t for t in itertools.permutations(range(n)) if sign_of_images(t) == EVEN}
    gens = []
    if n >= 3:
        gens.append(parse_cycles("(1,2,3)", n))
    if n >= 4:
        cyc = "(" + ",".join(str(i) for i in range(2, n + 1)) + ")"
        if n % 2 == 0:
            gens.append(parse_cycles(cyc, n))
        else:
            gens.append(parse_cycles("(" + ",".join(str(i) for i in range(1, n + 1)) + ")", n))
    return ConcreteGroup(n, gens, elems, name=f"A{n}")


def set_stabilizer_group(n, subset):
    """Setwise stabilizer of ``subset`` (1-based points) in S_n, fully enumerated."""
    inside = sorted(p - 1 for p in subset)
    outside = [p for p in range(n) if p not in set(inside)]
    elems = set()
    for pa in itertools.permutations(inside):
        for pb in itertools.permutations(outside):
            images = [0] * n
            for src, dst in zip(inside, pa):
                images[src] = dst
            for src, dst in zip(outside, pb):
                images[src] = dst
            elems.add(tuple(images))
    gens = _stabilizer_generators(n, [inside, outside])
    label = "{" + ",".join(str(p + 1) for p in inside) + "}"
    return ConcreteGroup(n, gens, elems, name=f"X{len(inside)}:{label}")


def _stabilizer_generators(n, blocks):
    gens = []
    for block in blocks:
        if len(block) >= 2:
            images = list(range(n))
            images[block[0]], images[block[1]] = block[1], block[0]
            gens.append(Perm(images))
        if len(block) >= 3:
            images = list(range(n))
            for a, b in zip(block, block[1:] + block[:1]):
                images[a] = b
            gens.append(Perm(images))
    return gens


def block_stabilizer_group(n, blocks, cap=DEFAULT_CLOSURE_CAP):
    """Stabilizer of a partition of the points into equal-size blocks."""
    blocks = [sorted(p - 1 for p in block) for block in blocks]
    d = len(blocks[0])
    if any(len(b) != d for b in blocks) or sorted(sum(blocks, [])) != list(range(n)):
        raise ValueError("blocks must partition the points into equal sizes")
    blocks = sorted(blocks)
    gens = _stabilizer_generators(n, blocks)
    for other in blocks[1:]:
        images = list(range(n))
        for a, b in zip(blocks[0], other):
            images[a], images[b] = b, a
        gens.append(Perm(images))
    if len(blocks) >= 3:
        images = list(range(n))
        for src, dst in zip(blocks, blocks[1:] + blocks[:1]):
            for a, b in zip(src, dst):
                images[a] = b
        gens.append(Perm(images))
    label = "|".join("".join(str(p + 1) for p in b) for b in blocks)
    group = close(gens, degree=n, cap=cap, name=f"W{d}:[{label}]")
    return group


def iter_equal_blocks(n, d):
    """All partitions of {1..n} into blocks of size d, each a sorted tuple of blocks."""
    points = tuple(range(1, n + 1))

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for rest in itertools.combinations(remaining[1:], d - 1):
            block = (first,) + rest
            leftover = tuple(p for p in remaining[1:] if p not in set(rest))
            for tail in rec(leftover):
                yield (block,) + tail

    return rec(points)


# ---------------------------------------------------------------------------
# membership tests against standard family members (no enumeration needed)


def stabilizes_set(images, subset0):
    """Does the permutation map the 0-based point set onto itself?"""
    return all(images[p] in subset0 for p in subset0)


def preserves_blocks(images, blocks0):
    """Does the permutation permute the given 0-based blocks among themselves?"""
    lookup = {}
    for idx, block in enumerate(blocks0):
        for p in block:
            lookup[p] = idx
    for block in blocks0:
        targets = {lookup[images[p]] for p in block}
        if len(targets) != 1:
            return False
    return True


def preserved_partitions(images, d):
    """All partitions into blocks of size d preserved by the permutation.

    Backtracking with orbit propagation: a candidate block forces its
    whole image orbit.  Returns a list of partitions, each a frozenset of
    frozensets of 0-based points.
    """
    n = len(images)
    out = []

    def rec(assigned, blocks):
        if len(assigned) == n:
            out.append(frozenset(blocks))
            return
        pivot = min(p for p in range(n) if p not in assigned)
        pool = [p for p in range(n) if p not in assigned and p != pivot]
        for rest in itertools.combinations(pool, d - 1):
            block = frozenset((pivot,) + rest)
            orbit = []
            seen = set()
            cur = block
            ok = True
            while cur not in seen:
                seen.add(cur)
                if len(cur) != d or any(p in assigned for p in cur):
                    ok = False
                    break
                if any(cur != other and cur & other for other in orbit):
                    ok = False
                    break
                orbit.append(cur)
                cur = frozenset(images[p] for p in cur)
            if not ok or cur != block:
                continue
            flat = set().union(*orbit)
            if len(flat) != d * len(orbit):
                continue
            rec(assigned | flat, blocks + orbit)

    rec(frozenset(), [])
    return out


# ---------------------------------------------------------------------------
# element sets and primary elements


class ElementSet:
    """An exact set of elements of a tagged universe, stored as image tuples."""

    __slots__ = ("degree", "tag", "members")

    def __init__(self, degree, tag, members):
        self.degree = degree
        self.tag = tag
        self.members = frozenset(members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        images = p.images if isinstance(p, Perm) else tuple(p)
        return images in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def ranks(self):
        """Canonical ids (factorial-number-system ranks), sorted."""
        return tuple(sorted(perm_rank(t) for t in self.members))

    def __repr__(self):
        return f"ElementSet({self.tag}, degree={self.degree}, size={len(self.members)})"


@lru_cache(maxsize=None)
def _order_of_images_cached(images):
    return Perm(images).order()


def primary_elements(G):
    """Elements of G of prime-power order, identity included."""
    members = {t for t in G.elements if is_primary(_order_of_images_cached(t))}
    return ElementSet(G.degree, f"primary({G.name})", members)


# ---------------------------------------------------------------------------
# derived subgroup, solvability, quotient actions


def _commutator(a, b):
    # a b a^{-1} b^{-1} on image tuples
    n = len(a)
    ainv = [0] * n
    binv = [0] * n
    for i, j in enumerate(a):
        ainv[j] = i
    for i, j in enumerate(b):
        binv[j] = i
    return tuple(a[b[ainv[binv[i]]]] for i in range(n))


def derived_subgroup(G, cap=None):
    """Commutator subgroup, via normal closure of generator commutators."""
    cap = cap or max(len(G.elements), 2)
    gens = []
    seen = set()
    base = [p.images for p in G.generators] or [tuple(range(G.degree))]
    for a in base:
        for b in base:
            c = _commutator(a, b)
            if c not in seen:
                seen.add(c)
                gens.append(c)
    elements = close_images(gens, G.degree, cap=cap)
    changed = True
    while changed:
        changed = False
        for g in base:
            for h in list(gens):
                c = conjugate_images(h, g)
                if c not in elements:
                    gens.append(c)
                    elements = close_images(gens, G.degree, cap=cap)
                    changed = True
    return ConcreteGroup(G.degree, [Perm(t) for t in gens], elements, name=f"derived({G.name})")


def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def abelianization_is_p_group(G):
    """('yes', p) when |G/G'| is a p-power, else ('no', (p, q)) with two witnesses."""
    der = derived_subgroup(G)
    quotient_order = G.order // der.order
    primes = _prime_factors(quotient_order)
    if len(primes) <= 1:
        return ("yes", primes[0] if primes else None)
    return ("no", (primes[0], primes[1]))


def is_solvable(G):
    current = G
    while current.order > 1:
        nxt = derived_subgroup(current)
        if nxt.order == current.order:
            return False
        current = nxt
    return True


def is_cyclic(G):
    return any(_order_of_images_cached(t) == G.order for t in G.elements)


def is_cyclic_p_group(G):
    return len(_prime_factors(G.order)) <= 1 and is_cyclic(G)


def act_on_cosets(G, normal_elements):
    """The quotient action of G on the cosets of a normal subgroup.

    ``normal_elements`` is a set of image tuples.  Returns a
    ConcreteGroup of degree [G : N] isomorphic to G/N.
    """
    N = frozenset(normal_elements)
    cosets = []
    index_of = {}
    for t in sorted(G.elements):
        if t in index_of:
            continue
        coset = frozenset(tuple(t[x[i]] for i in range(G.degree)) for x in N)
        idx = len(cosets)
        cosets.append(coset)
        for u in coset:
            index_of[u] = idx
    gen_perms = []
    for g in G.generators:
        gi = g.images
        images = [0] * len(cosets)
        for idx, coset in enumerate(cosets):
            rep = next(iter(coset))
            moved = tuple(gi[rep[i]] for i in range(G.degree))
            images[idx] = index_of[moved]
        gen_perms.append(Perm(images))
    return close(gen_perms, degree=len(cosets), cap=len(cosets) + 1, name=f"{G.name}/N")


# ---------------------------------------------------------------------------
# subgroup lattice up to conjugacy


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups: a representative plus all conjugates."""

    order: int
    rep_elements: frozenset
    rep_gens: tuple
    conjugates: tuple  # frozensets of image tuples, representative first

    @property
    def count(self):
        return len(self.conjugates)

    def rep_group(self, degree, name=None):
        gens = [Perm(t) for t in self.rep_gens]
        return ConcreteGroup(degree, gens, self.rep_elements, name=name or f"H{self.order}")


def _small_generating_set(elements, degree):
    """Greedy generating set for a subgroup given as a set of tuples."""
    ident = tuple(range(degree))
    gens = []
    span = {ident}
    for t in sorted(elements):
        if t in span:
            continue
        gens.append(t)
        span = close_images(gens, degree, cap=len(elements) + 1)
        if len(span) == len(elements):
            break
    return tuple(gens)


def _conjugacy_orbit(elements, gen_images, degree):
    """Orbit of a subgroup element-set under conjugation by the given generators."""
    start = frozenset(elements)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for g in gen_images:
            nxt = frozenset(conjugate_images(t, g) for t in cur)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    orbit = sorted(seen, key=sorted)
    orbit.remove(start)
    return (start,) + tuple(orbit)


def all_subgroups(G, cap=DEFAULT_LATTICE_CAP):
    """Every subgroup of G up to conjugacy, with all conjugates listed.

    Join closure: starting from the trivial subgroup, extend each known
    class representative H by one element g, where g runs over
    representatives of the orbits of N_G(H) acting on G by conjugation.
    Every subgroup is a chain of such one-generator extensions, so the
    scan is complete; no separate seeding of perfect subgroups is needed.
    """
    if G.order > cap:
        raise CapExceeded(f"group order {G.order} exceeds lattice cap {cap}")
    degree = G.degree
    g_elems = sorted(G.elements)
    g_gen_images = [p.images for p in G.generators]

    trivial = frozenset([tuple(range(degree))])
    classes = [SubgroupClass(1, trivial, (), (trivial,))]
    seen = {trivial: 0}
    queue = deque([0])
    while queue:
        idx = queue.popleft()
        cls = classes[idx]
        H = cls.rep_elements
        h_gens = cls.rep_gens
        normalizer = [
            g
            for g in g_elems
            if all(conjugate_images(t, g) in H for t in (h_gens or H))
        ]
        n_gens = _small_generating_set(normalizer, degree) or (tuple(range(degree)),)
        unprocessed = set(g_elems) - H
        while unprocessed:
            rep = min(unprocessed)
            orbit = {rep}
            bfs = deque([rep])
            while bfs:
                x = bfs.popleft()
                for g in n_gens:
                    y = conjugate_images(x, g)
                    if y not in orbit:
                        orbit.add(y)
                        bfs.append(y)
            unprocessed -= orbit
            join_gens = list(h_gens) + [rep]
            joined = frozenset(close_images(join_gens, degree, cap=G.order + 1))
            if joined in seen:
                continue
            new_cls = SubgroupClass(
                len(joined),
                joined,
                _small_generating_set(joined, degree),
                _conjugacy_orbit(joined, g_gen_images, degree),
            )
            new_idx = len(classes)
            classes.append(new_cls)
            for conj in new_cls.conjugates:
                seen[conj] = new_idx
            if len(joined) < G.order:
                queue.append(new_idx)
    classes.sort(key=lambda c: (c.order, sorted(c.rep_elements)))
    return classes


def maximal_classes(G, classes=None, cap=DEFAULT_LATTICE_CAP):
    """Conjugacy classes of maximal subgroups, from the full lattice."""
    classes = classes if classes is not None else all_subgroups(G, cap=cap)
    proper = [c for c in classes if c.order < G.order]
    by_order = sorted(proper, key=lambda c: -c.order)
    out = []
    for cls in by_order:
        contained = False
        for big in by_order:
            if big.order <= cls.order or big.order % cls.order:
                continue
            if any(cls.rep_elements <= conj for conj in big.conjugates):
                contained = True
                break
        if not contained:
            out.append(cls)
    return out


@dataclass
class MaximalSubgroup:
    group: ConcreteGroup
    status: str = "verified"  # or "assumed"
    label: str = ""


def maximal_subgroups(G, mode="lattice", catalog=None, cap=DEFAULT_LATTICE_CAP,
                      classes=None):
    """All maximal subgroups of G, fully enumerated.

    ``lattice`` mode works for any group within the cap.  ``catalog``
    mode applies to full symmetric groups only and assembles the known
    families (alternating, set stabilizers, block stabilizers, and the
    primitive groups from the catalog); completeness of the primitive
    list is the catalog's responsibility and its maximality flags are
    propagated.
    """
    if mode == "lattice":
        out = []
        for cls in maximal_classes(G, classes=classes, cap=cap):
            gens = [Perm(t) for t in cls.rep_gens]
            for i, conj in enumerate(cls.conjugates):
                grp = ConcreteGroup(G.degree, gens if i == 0 else (), conj,
                                    name=f"M{cls.order}#{i}")
                out.append(MaximalSubgroup(grp, "verified", grp.name))
        return out
    if mode == "catalog":
        n = G.degree
        if factorial(n) != G.order:
            raise ValueError("catalog mode applies to full symmetric groups")
        return symmetric_maximal_subgroups(n, catalog=catalog)
    raise ValueError(f"unknown mode {mode!r}")


DEFAULT_FAMILY_DEGREE_CAP = 12


def family_members(n, spec, catalog=None, degree_cap=DEFAULT_FAMILY_DEGREE_CAP,
                   element_budget=5_000_000):
    """All conjugates of one maximal family of S_n, fully enumerated.

    ``spec`` is a families.FamilySpec.  Guarded by a degree cap and a
    total element budget, since counts explode quickly.
    """
    if n > degree_cap:
        raise CapExceeded(f"degree {n} above the family cap {degree_cap}")
    from .families import ALTERNATING, PRIMITIVE, SETSTAB, family_stats

    if spec.kind == ALTERNATING:
        return [alternating_group(n)]
    if spec.kind == PRIMITIVE:
        if catalog is None:
            raise ValueError("primitive families need a catalog")
        matches = [e for e in catalog.entries_for(n)
                   if e.name == spec.catalog_id or not spec.catalog_id]
        if not matches:
            raise KeyError(f"no catalog entry {spec.catalog_id!r} at degree {n}")
        out = []
        for entry in matches:
            out.extend(catalog.conjugates(entry))
        return out
    stats = family_stats(spec)
    if stats.count * stats.order > element_budget:
        raise CapExceeded(
            f"{stats.count} conjugates of order {stats.order} exceed the budget")
    out = []
    if spec.kind == SETSTAB:
        first = (1,) if spec.anchored else ()
        pool = range(2, n + 1) if spec.anchored else range(1, n + 1)
        for rest in itertools.combinations(pool, spec.m - len(first)):
            out.append(set_stabilizer_group(n, first + rest))
    else:
        for blocks in iter_equal_blocks(n, spec.d):
            out.append(block_stabilizer_group(n, blocks))
    if len(out) != stats.count:
        raise RuntimeError(f"found {len(out)} members, expected {stats.count}")
    return out


def symmetric_maximal_subgroups(n, catalog=None):
    """The standard maximal subgroups of S_n, concretely enumerated."""
    out = [MaximalSubgroup(alternating_group(n), "verified", f"A{n}")]
    for m in range(1, (n + 1) // 2):
        for subset in itertools.combinations(range(1, n + 1), m):
            grp = set_stabilizer_group(n, subset)
            out.append(MaximalSubgroup(grp, "verified", grp.name))
    for d in range(2, n):
        if n % d or n // d == 1:
            continue
        for blocks in iter_equal_blocks(n, d):
            grp = block_stabilizer_group(n, blocks)
            out.append(MaximalSubgroup(grp, "verified", grp.name))
    if catalog is not None:
        for entry in catalog.entries_for(n):
            for grp in catalog.conjugates(entry):
                out.append(MaximalSubgroup(grp, entry.maximality, f"P:{entry.name}"))
    return out


def load_corpus(path=None):
    """Load the group corpus: ``name;degree;gen1|gen2|...`` per line.

    Returns an ordered dict name -> ConcreteGroup.  With no path the
    corpus shipped with the package is used.
    """
    if path is None:
        from importlib import resources

        text = resources.files("covernum.data").joinpath("corpus.txt").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    out = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, degree, gens = line.split(";")
        degree = int(degree)
        generators = [parse_cycles(g, degree) for g in gens.split("|")]
        out[name] = close(generators, degree=degree, name=name)
    return out


def maximality_by_joins(M, G):
    """Exact maximality test: every join <M, g> with g outside M is all of G.

    One representative g per M-M double coset suffices, found as orbit
    representatives of M acting by conjugation on the conjugates of M
    when M is self-normalizing; here we use plain double-coset pruning
    via orbits of M on left cosets.
    """
    m_elems = M.elements
    g_sorted = sorted(G.elements)
    reps = []
    assigned = set()
    for t in g_sorted:
        if t in assigned:
            continue
        # double coset M t M
        block = set()
        for a in m_elems:
            at = tuple(a[t[i]] for i in range(G.degree))
            for b in m_elems:
                block.add(tuple(at[b[i]] for i in range(G.degree)))
        assigned |= block
        reps.append(t)
    gen_images = [p.images for p in M.generators]
    for rep in reps:
        if rep in m_elems:
            continue
        joined = close_images(gen_images + [rep], G.degree, cap=G.order + 1)
        if len(joined) != G.order:
            return False
    return True
