"""Exact minimum set cover, and the covering numbers built on it.

Branch and bound over bitmask universes with purely combinatorial lower
bounds: no LP relaxation, no external solver.  Wrappers compute the
covering number, the primary covering number, and the normal primary
covering number of a concrete group from its maximal subgroups.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import ceil

from .permengine import (
    all_subgroups,
    is_cyclic,
    is_cyclic_p_group,
    maximal_subgroups,
    perm_rank,
    primary_elements,
)

OPTIMAL = "optimal"
UPPER_BOUND_ONLY = "upper-bound-only"
INFEASIBLE = "infeasible"
INFINITE = "infinite"


@dataclass
class Budget:
    """Search limits; deterministic mode keeps tie-breaks id-ordered."""

    max_nodes: int = 10_000_000
    max_seconds: float = None
    deterministic: bool = True

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


@dataclass
class CoverInstance:
    """A universe of element ids and candidate sets with provenance labels."""

    universe: tuple
    sets: list  # list of frozensets of element ids
    labels: list = None

    def __post_init__(self):
        self.universe = tuple(self.universe)
        self.sets = [frozenset(s) for s in self.sets]
        if self.labels is None:
            self.labels = [f"set{i}" for i in range(len(self.sets))]
        if len(self.labels) != len(self.sets):
            raise ValueError("labels/sets length mismatch")
        uni = set(self.universe)
        self.sets = [s & uni for s in self.sets]

    def uncoverable_elements(self):
        covered = set().union(*self.sets) if self.sets else set()
        return [e for e in self.universe if e not in covered]

    @property
    def feasible(self):
        return not self.uncoverable_elements()

    def dump(self):
        """Line-oriented text form: header plus one line per set."""
        index = {e: i for i, e in enumerate(self.universe)}
        lines = [f"universe {len(self.universe)}"]
        for sid, (members, label) in enumerate(zip(self.sets, self.labels)):
            body = ",".join(str(index[e]) for e in sorted(members, key=index.get))
            lines.append(f"set {sid} {label}: {body}")
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("universe "):
            raise ValueError("missing universe header")
        count = int(lines[0].split()[1])
        sets, labels = [], []
        for ln in lines[1:]:
            if not ln.startswith("set "):
                raise ValueError(f"bad line: {ln!r}")
            head, _, body = ln.partition(":")
            _, sid, label = head.split(None, 2)
            members = [int(v) for v in body.replace(" ", "").split(",") if v != ""]
            if any(not 0 <= v < count for v in members):
                raise ValueError(f"member out of range in {ln!r}")
            if int(sid) != len(sets):
                raise ValueError("set ids must be consecutive from 0")
            sets.append(frozenset(members))
            labels.append(label.strip())
        return cls(tuple(range(count)), sets, labels)


@dataclass
class CoverSolution:
    chosen: tuple
    size: int
    status: str
    lower_bound: int
    nodes: int = 0
    seconds: float = 0.0
    log: list = field(default_factory=list)

    @property
    def optimal(self):
        return self.status == OPTIMAL

    @property
    def is_infinite(self):
        return self.status == INFINITE

    def verify(self, inst):
        """Independent re-check that the chosen sets cover the universe."""
        if self.status in (INFEASIBLE, INFINITE):
            return True
        covered = set()
        for sid in self.chosen:
            covered |= inst.sets[sid]
        return set(inst.universe) <= covered

    def dump(self):
        lines = [f"status {self.status}", f"size {self.size}",
                 f"lb {self.lower_bound}", f"nodes {self.nodes}"]
        lines.append("chosen " + ",".join(str(s) for s in self.chosen))
        return "\n".join(lines) + "\n"


@dataclass
class ReductionLog:
    forced: list = field(default_factory=list)
    removed_sets: list = field(default_factory=list)
    removed_elements: list = field(default_factory=list)
    notes: list = field(default_factory=list)


# thresholds past which the quadratic dominance scans are skipped
_DOMINANCE_SET_LIMIT = 1200
_DOMINANCE_ELEMENT_LIMIT = 5000


def reduce_instance(inst, log=None):
    """Dominance and forcing reductions; the optimum size is preserved.

    Removes sets contained in other sets, removes elements whose
    candidate list contains another element's candidate list, and
    repeatedly selects sets forced by single-candidate elements.
    Returns (reduced instance, log); forced set ids are in the log.
    """
    log = log or ReductionLog()
    universe = list(inst.universe)
    sets = {i: set(s) for i, s in enumerate(inst.sets)}

    changed = True
    while changed:
        changed = False
        candidates = {e: [] for e in universe}
        for sid, members in sets.items():
            for e in members:
                if e in candidates:
                    candidates[e].append(sid)
        for e, cands in candidates.items():
            if not cands:
                log.notes.append(f"element {e} uncoverable")
                return (
                    CoverInstance(tuple(universe),
                                  [frozenset(sets[i]) for i in sorted(sets)],
                                  [inst.labels[i] for i in sorted(sets)]),
                    log,
                )
        # forced sets
        forced_now = sorted({cands[0] for cands in candidates.values() if len(cands) == 1})
        if forced_now:
            covered = set()
            for sid in forced_now:
                if sid not in log.forced:
                    log.forced.append(sid)
                covered |= sets[sid]
            universe = [e for e in universe if e not in covered]
            for sid in forced_now:
                del sets[sid]
            for sid in list(sets):
                sets[sid] &= set(universe)
            changed = True
            continue
        # dominated sets
        if len(sets) <= _DOMINANCE_SET_LIMIT:
            ids = sorted(sets, key=lambda i: (len(sets[i]), i))
            dropped = set()
            for a_pos, a in enumerate(ids):
                if a in dropped:
                    continue
                sa = sets[a]
                for b in ids[a_pos + 1:]:
                    if b in dropped:
                        continue
                    if sa < sets[b]:
                        dropped.add(a)
                        break
                    if sa == sets[b]:
                        dropped.add(max(a, b))
                        if a in dropped:
                            break
            for sid in dropped:
                log.removed_sets.append(sid)
                del sets[sid]
            if dropped:
                changed = True
                continue
        else:
            log.notes.append("set dominance skipped: too many sets")
        # dominated elements: candidate list a strict superset of another's
        if len(universe) <= _DOMINANCE_ELEMENT_LIMIT:
            by_list = {}
            drop = set()
            fingerprint = {e: frozenset(candidates[e]) for e in universe}
            for e in universe:
                fp = fingerprint[e]
                if fp in by_list:
                    drop.add(e)
                else:
                    by_list[fp] = e
            keep = [e for e in universe if e not in drop]
            for e in keep:
                if e in drop:
                    continue
                for f in keep:
                    if e == f or f in drop:
                        continue
                    if fingerprint[f] < fingerprint[e]:
                        drop.add(e)
                        break
            if drop:
                log.removed_elements.extend(sorted(drop))
                universe = [e for e in universe if e not in drop]
                for sid in list(sets):
                    sets[sid] &= set(universe)
                changed = True
        else:
            log.notes.append("element dominance skipped: universe too large")

    kept_ids = sorted(sets)
    reduced = CoverInstance(
        tuple(universe),
        [frozenset(sets[i]) for i in kept_ids],
        [inst.labels[i] for i in kept_ids],
    )
    log.notes.append(f"kept {len(kept_ids)} sets, {len(universe)} elements")
    reduced._original_ids = kept_ids
    return reduced, log


# spec-facing aliases
reduce = reduce_instance


def _bit_structures(inst):
    index = {e: i for i, e in enumerate(inst.universe)}
    masks = []
    for members in inst.sets:
        m = 0
        for e in members:
            m |= 1 << index[e]
        masks.append(m)
    candidates = [[] for _ in inst.universe]
    for sid, members in enumerate(inst.sets):
        for e in members:
            candidates[index[e]].append(sid)
    return masks, candidates


def greedy_cover(inst):
    """Deterministic greedy: most new coverage first, lowest set id on ties."""
    if not inst.feasible:
        return CoverSolution((), 0, INFEASIBLE, 0)
    masks, _ = _bit_structures(inst)
    full = (1 << len(inst.universe)) - 1
    covered = 0
    chosen = []
    while covered != full:
        best, best_gain = None, 0
        for sid, m in enumerate(masks):
            gain = (m & ~covered).bit_count()
            if gain > best_gain:
                best, best_gain = sid, gain
        chosen.append(best)
        covered |= masks[best]
    sol = CoverSolution(tuple(chosen), len(chosen), UPPER_BOUND_ONLY, lower_bound(inst))
    assert sol.verify(inst)
    return sol


greedy = greedy_cover


def lower_bound(inst):
    """Best of three combinatorial bounds; never exceeds the optimum.

    (a) universe size over the largest set size, (b) a greedily built
    family of pairwise set-disjoint elements, (c) the number of distinct
    forced sets.
    """
    if not inst.universe:
        return 0
    if not inst.feasible:
        return 0
    masks, candidates = _bit_structures(inst)
    max_size = max((m.bit_count() for m in masks), default=0)
    bound_a = ceil(len(inst.universe) / max_size) if max_size else 0
    order = sorted(range(len(inst.universe)), key=lambda i: (len(candidates[i]), i))
    blocked_sets = set()
    bound_b = 0
    for i in order:
        if any(s in blocked_sets for s in candidates[i]):
            continue
        bound_b += 1
        blocked_sets.update(candidates[i])
    forced = {candidates[i][0] for i in range(len(inst.universe)) if len(candidates[i]) == 1}
    return max(bound_a, bound_b, len(forced))


def solve_exact(inst, budget=None, warm_start=None):
    """Branch and bound with certified optimality.

    Branches on an uncovered element with fewest remaining candidates;
    children pick each candidate in decreasing-coverage order, forbidding
    earlier siblings so the search space is partitioned.  Pruning uses
    the greedy incumbent and coverage lower bounds.  On budget
    exhaustion the best incumbent is returned with a proven lower bound.
    ``warm_start`` is an optional known cover (original set ids) used as
    the initial incumbent.
    """
    budget = budget or Budget()
    if not inst.feasible:
        return CoverSolution((), 0, INFEASIBLE, 0)

    reduced, log = reduce_instance(inst)
    forced = list(log.forced)
    original_ids = getattr(reduced, "_original_ids", list(range(len(reduced.sets))))

    if not reduced.universe:
        sol = CoverSolution(tuple(sorted(forced)), len(forced), OPTIMAL,
                            len(forced), nodes=0, log=log.notes)
        assert sol.verify(inst)
        return sol

    masks, candidates = _bit_structures(reduced)
    full = (1 << len(reduced.universe)) - 1
    sizes = [m.bit_count() for m in masks]
    global_max = max(sizes)

    greedy = greedy_cover(reduced)
    incumbent = list(greedy.chosen)
    incumbent_size = len(incumbent)
    if warm_start is not None:
        back = {orig: pos for pos, orig in enumerate(original_ids)}
        translated = [back[s] for s in warm_start if s in back]
        covered = 0
        for s in translated:
            covered |= masks[s]
        if covered == full and len(translated) < incumbent_size:
            incumbent = translated
            incumbent_size = len(translated)
    root_lb = lower_bound(reduced)

    start = time.monotonic()
    state = {
        "nodes": 0,
        "aborted": False,
        "open_bound": None,  # min optimistic bound among abandoned nodes
        "best": incumbent,
        "best_size": incumbent_size,
    }
    max_nodes = budget.max_nodes
    max_seconds = budget.max_seconds

    def note_open(bound):
        if state["open_bound"] is None or bound < state["open_bound"]:
            state["open_bound"] = bound

    def dfs(covered, chosen, forbidden):
        state["nodes"] += 1
        if max_nodes is not None and state["nodes"] > max_nodes:
            state["aborted"] = True
        if max_seconds is not None and state["nodes"] % 64 == 0:
            if time.monotonic() - start > max_seconds:
                state["aborted"] = True
        uncovered = full & ~covered
        if not uncovered:
            if len(chosen) < state["best_size"]:
                state["best"] = list(chosen)
                state["best_size"] = len(chosen)
            return
        bound = len(chosen) + ceil(uncovered.bit_count() / global_max)
        if bound >= state["best_size"]:
            return
        if state["aborted"]:
            note_open(bound)
            return
        # pick an uncovered element with fewest live candidates; on large
        # universes only a prefix is scanned (any uncovered element is a
        # valid branching point)
        best_elem, best_cands = None, None
        rem = uncovered
        scanned = 0
        while rem:
            e = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            live = [s for s in candidates[e] if s not in forbidden]
            if not live:
                return  # dead branch: element uncoverable here
            if best_cands is None or len(live) < len(best_cands):
                best_elem, best_cands = e, live
                if len(live) == 1:
                    break
            scanned += 1
            if scanned >= 128 and best_cands is not None:
                break
        ordered = sorted(
            best_cands, key=lambda s: (-(masks[s] & uncovered).bit_count(), s)
        )
        newly_forbidden = []
        for s in ordered:
            chosen.append(s)
            dfs(covered | masks[s], chosen, forbidden)
            chosen.pop()
            forbidden.add(s)
            newly_forbidden.append(s)
            if state["aborted"]:
                note_open(bound)  # unexplored siblings fall under this node's bound
                break
        for s in newly_forbidden:
            forbidden.discard(s)

    dfs(0, [], set())
    elapsed = time.monotonic() - start

    best_ids = sorted(original_ids[s] for s in state["best"])
    chosen_ids = tuple(sorted(forced + best_ids))
    size = len(chosen_ids)
    if state["aborted"]:
        lb_core = min(
            state["best_size"],
            state["open_bound"] if state["open_bound"] is not None else state["best_size"],
        )
        lb_core = max(lb_core, root_lb)
        status = UPPER_BOUND_ONLY
    else:
        lb_core = state["best_size"]
        status = OPTIMAL
    sol = CoverSolution(
        chosen_ids,
        size,
        status,
        len(forced) + lb_core,
        nodes=state["nodes"],
        seconds=elapsed,
        log=log.notes,
    )
    assert sol.verify(inst)
    return sol


# ---------------------------------------------------------------------------
# covering numbers of concrete groups


def _identity_tuple(G):
    return tuple(range(G.degree))


def build_group_instance(G, universe_members, maximal=None, mode="lattice",
                         catalog=None, allow_nonmaximal=False):
    """Cover instance over a set of group elements against maximal subgroups.

    ``universe_members`` is a set of image tuples; the identity is
    dropped (it lies in every subgroup).  Element ids are the canonical
    permutation ranks.  Sets with empty restriction are dropped.
    """
    if maximal is None:
        maximal = maximal_subgroups(G, mode=mode, catalog=catalog)
    if not allow_nonmaximal:
        elems = [ms.group.elements for ms in maximal]
        for a in elems:
            if len(a) >= G.order:
                raise ValueError("cover candidates must be proper subgroups")
            if any(a is not b and a < b for b in elems):
                raise ValueError(
                    "candidate contained in another (not maximal); "
                    "pass allow_nonmaximal=True to override"
                )
    ident = _identity_tuple(G)
    members = sorted(t for t in universe_members if t != ident)
    ids = [perm_rank(t) for t in members]
    id_of = dict(zip(members, ids))
    sets, labels = [], []
    for ms in maximal:
        restricted = frozenset(id_of[t] for t in members if t in ms.group.elements)
        if restricted:
            sets.append(restricted)
            labels.append(ms.label or ms.group.name)
    return CoverInstance(tuple(sorted(ids)), sets, labels)


def sigma0_exact(G, mode="lattice", catalog=None, budget=None, maximal=None):
    """Smallest number of proper subgroups covering the prime-power-order elements.

    Infinite exactly for cyclic p-groups (sentinel status, never a
    number).  WLOG the candidates are maximal subgroups.
    """
    if is_cyclic_p_group(G):
        return CoverSolution((), 0, INFINITE, 0)
    universe = primary_elements(G).members
    inst = build_group_instance(G, universe, maximal=maximal, mode=mode, catalog=catalog)
    return solve_exact(inst, budget=budget)


def sigma_exact(G, mode="lattice", catalog=None, budget=None, maximal=None):
    """Smallest number of proper subgroups covering all of G; infinite if cyclic."""
    if is_cyclic(G):
        return CoverSolution((), 0, INFINITE, 0)
    inst = build_group_instance(G, set(G.elements), maximal=maximal, mode=mode,
                                catalog=catalog)
    return solve_exact(inst, budget=budget)


def gamma0_exact(G, budget=None):
    """Minimum number of subgroup conjugacy classes whose unions cover.

    The universe is the primary elements; each candidate set is the
    union of one full conjugacy class of proper subgroups.
    """
    if is_cyclic_p_group(G):
        return CoverSolution((), 0, INFINITE, 0)
    classes = [c for c in all_subgroups(G) if c.order < G.order]
    ident = _identity_tuple(G)
    members = sorted(t for t in primary_elements(G).members if t != ident)
    ids = [perm_rank(t) for t in members]
    id_of = dict(zip(members, ids))
    sets, labels = [], []
    for idx, cls in enumerate(classes):
        union = set()
        for conj in cls.conjugates:
            union |= conj
        restricted = frozenset(id_of[t] for t in members if t in union)
        if restricted:
            sets.append(restricted)
            labels.append(f"class{idx}:order{cls.order}x{cls.count}")
    inst = CoverInstance(tuple(sorted(ids)), sets, labels)
    return solve_exact(inst, budget=budget)


def no_single_class_covers(G):
    """Check no single conjugacy class of proper subgroups covers the primaries.

    Returns (ok, violations); a violation names the offending class.
    """
    primaries = set(primary_elements(G).members)
    violations = []
    for idx, cls in enumerate(all_subgroups(G)):
        if cls.order >= G.order:
            continue
        union = set()
        for conj in cls.conjugates:
            union |= conj
        if primaries <= union:
            violations.append(f"class{idx}:order{cls.order}x{cls.count}")
    return (not violations, violations)
