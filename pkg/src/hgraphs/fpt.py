"""Tree decompositions and decomposition-based solvers.

The validator here is the single source of truth for decomposition validity;
every other module that produces a decomposition is tested against it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .core import ColorLists, SimpleGraph
from .errors import InvalidDecomposition, ListColorOutOfRange


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed 0..b-1 plus tree edges over bag indices."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class NiceNode:
    kind: str  # "leaf" | "introduce" | "forget" | "join"
    bag: tuple[int, ...]  # sorted
    children: tuple[int, ...]
    vertex: int | None = None


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """Rooted binary decomposition with empty leaf and root bags."""

    nodes: tuple[NiceNode, ...]
    root: int

    @property
    def width(self) -> int:
        return max((len(nd.bag) for nd in self.nodes), default=0) - 1


@dataclass(frozen=True)
class DecompositionAttempt:
    """Outcome of a width-targeted decomposition attempt.

    Either a decomposition was found (possibly flagged as wider than the
    accepted factor times the target), or a certified lower bound on the
    treewidth exceeds the target.
    """

    decomposition: TreeDecomposition | None
    lower_bound: int | None = None
    lower_bound_method: str | None = None
    over_target: bool = False

    @property
    def found(self) -> bool:
        return self.decomposition is not None


def check_decomposition(g: SimpleGraph, d: TreeDecomposition) -> list[str]:
    """Return a list of axiom violations; empty means the decomposition is valid."""
    problems = []
    b = len(d.bags)
    if b == 0:
        return ["decomposition has no bags"]
    for bag in d.bags:
        for v in bag:
            if not (0 <= v < g.n):
                problems.append(f"bag vertex {v} outside graph")
    for i, j in d.tree_edges:
        if not (0 <= i < b and 0 <= j < b):
            return problems + [f"tree edge ({i},{j}) out of range"]
    # the tree really is a tree
    if len(d.tree_edges) != b - 1:
        problems.append(f"{len(d.tree_edges)} tree edges for {b} bags")
    nbrs: list[list[int]] = [[] for _ in range(b)]
    for i, j in d.tree_edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != b:
        problems.append("bag tree is disconnected")
        return problems
    # every vertex induces a non-empty connected subtree
    for v in range(g.n):
        holding = [i for i in range(b) if v in d.bags[i]]
        if not holding:
            problems.append(f"vertex {v} in no bag")
            continue
        hold = set(holding)
        comp = {holding[0]}
        stack = [holding[0]]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in hold and y not in comp:
                    comp.add(y)
                    stack.append(y)
        if comp != hold:
            problems.append(f"bags of vertex {v} are not connected in the tree")
    # every edge is inside some bag
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in d.bags):
            problems.append(f"edge ({u},{v}) not covered by any bag")
    return problems


def validate_decomposition(g: SimpleGraph, d: TreeDecomposition) -> None:
    problems = check_decomposition(g, d)
    if problems:
        raise InvalidDecomposition("; ".join(problems))


def decomposition_from_order(
    g: SimpleGraph, order: list[int] | tuple[int, ...]
) -> TreeDecomposition:
    """Tree decomposition induced by an elimination order.

    Bag i is the i-th eliminated vertex together with its neighbors in the
    partially filled graph; bag i hangs off the bag of its earliest-eliminated
    fill neighbor.
    """
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    if g.n == 0:
        return TreeDecomposition((frozenset(),), ())
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(a) for a in g.adjacency]
    bags = []
    elim_nbrs = []
    for v in order:
        nb = sorted(adj[v])
        bags.append(frozenset([v] + nb))
        elim_nbrs.append(nb)
        for a, c in combinations(nb, 2):
            adj[a].add(c)
            adj[c].add(a)
        for u in nb:
            adj[u].discard(v)
        adj[v].clear()
    edges = []
    for i, nb in enumerate(elim_nbrs):
        if nb:
            edges.append((i, min(pos[w] for w in nb)))
        elif i + 1 < len(bags):
            edges.append((i, i + 1))
    return TreeDecomposition(tuple(bags), tuple(edges))


def minfill_order(g: SimpleGraph, rng: random.Random | None = None) -> list[int]:
    """Elimination order picking a minimum-fill vertex at each step.

    Ties go to the smallest vertex index unless an rng is supplied, in which
    case a uniformly random tied vertex is taken (still deterministic per seed).
    """
    adj = [set(a) for a in g.adjacency]
    remaining = set(range(g.n))
    order = []
    while remaining:
        best_fill = None
        tied = []
        for v in sorted(remaining):
            nb = adj[v] & remaining
            fill = sum(
                1 for a, c in combinations(sorted(nb), 2) if c not in adj[a]
            )
            if best_fill is None or fill < best_fill:
                best_fill = fill
                tied = [v]
            elif fill == best_fill:
                tied.append(v)
        v = tied[0] if rng is None else rng.choice(tied)
        nb = adj[v] & remaining
        for a, c in combinations(sorted(nb), 2):
            adj[a].add(c)
            adj[c].add(a)
        remaining.remove(v)
        order.append(v)
    return order


def degeneracy(g: SimpleGraph) -> int:
    """Max over the min-degree peeling; a certified treewidth lower bound."""
    adj = [set(a) for a in g.adjacency]
    remaining = set(range(g.n))
    worst = 0
    while remaining:
        v = min(remaining, key=lambda u: (len(adj[u] & remaining), u))
        worst = max(worst, len(adj[v] & remaining))
        remaining.remove(v)
    return worst


def exact_decomposition(g: SimpleGraph) -> tuple[int, TreeDecomposition]:
    """Exact treewidth via dynamic programming over vertex subsets.

    State tw[S] is the best possible maximum elimination degree over orders
    that eliminate exactly the set S first; the witnessing order is unwound
    from the stored choices.  Exponential in n, intended for small graphs.
    """
    n = g.n
    if n == 0:
        return -1, TreeDecomposition((frozenset(),), ())
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    full = (1 << n) - 1

    def elim_degree(prefix: int, v: int) -> int:
        # vertices outside prefix+v reachable from v through prefix
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj_mask[low.bit_length() - 1]
                m ^= low
            nxt &= prefix & ~comp
            comp |= nxt
            frontier = nxt
        reach = 0
        m = comp
        while m:
            low = m & -m
            reach |= adj_mask[low.bit_length() - 1]
            m ^= low
        return (reach & ~prefix & ~(1 << v)).bit_count()

    tw = [0] * (full + 1)
    tw[0] = -1
    choice = [0] * (full + 1)
    for s in range(1, full + 1):
        best = n
        best_v = -1
        m = s
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            prev = s ^ low
            w = max(tw[prev], elim_degree(prev, v))
            if w < best:
                best = w
                best_v = v
        tw[s] = best
        choice[s] = best_v
    order_rev = []
    s = full
    while s:
        v = choice[s]
        order_rev.append(v)
        s ^= 1 << v
    order = order_rev[::-1]
    return tw[full], decomposition_from_order(g, order)


def tree_decomposition(
    g: SimpleGraph,
    target: int,
    approx_factor: int = 5,
    exact_limit: int = 12,
    rng: random.Random | None = None,
) -> DecompositionAttempt:
    """Try for a decomposition of width at most approx_factor * target.

    A certified lower bound above the target wins first and yields a
    width-exceeded answer.  Otherwise the exact subset DP (small graphs) or
    the min-fill heuristic produces a decomposition, flagged when its width
    misses the accepted factor.
    """
    if target < 0:
        raise ValueError("target width must be non-negative")
    lb = degeneracy(g)
    if lb > target:
        return DecompositionAttempt(None, lower_bound=lb, lower_bound_method="degeneracy")
    if g.n <= exact_limit:
        width, d = exact_decomposition(g)
    else:
        d = decomposition_from_order(g, minfill_order(g, rng))
        width = d.width
    return DecompositionAttempt(d, over_target=width > approx_factor * target)


def make_nice(d: TreeDecomposition) -> NiceTreeDecomposition:
    """Binary nice form: empty leaf/root bags, one-vertex introduce/forget steps.

    Bags are kept as sorted tuples, so join children always agree on vertex
    order.  Width and the set of covered vertex pairs are preserved exactly.
    """
    bags = [tuple(sorted(b)) for b in d.bags] or [()]
    nbrs: list[list[int]] = [[] for _ in bags]
    for i, j in d.tree_edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    nodes: list[NiceNode] = []

    def add(kind: str, bag: tuple[int, ...], children=(), vertex=None) -> int:
        nodes.append(NiceNode(kind, bag, tuple(children), vertex))
        return len(nodes) - 1

    def chain(idx: int, frm: tuple[int, ...], to: tuple[int, ...]) -> int:
        cur = idx
        bag = list(frm)
        for v in [x for x in frm if x not in to]:
            bag.remove(v)
            cur = add("forget", tuple(bag), (cur,), v)
        for v in [x for x in to if x not in frm]:
            bag = sorted(bag + [v])
            cur = add("introduce", tuple(bag), (cur,), v)
        return cur

    def build(i: int, parent: int) -> int:
        kids = [build(j, i) for j in nbrs[i] if j != parent]
        if not kids:
            return chain(add("leaf", ()), (), bags[i])
        kid_bags = [bags[j] for j in nbrs[i] if j != parent]
        lifted = [chain(k, kb, bags[i]) for k, kb in zip(kids, kid_bags)]
        cur = lifted[0]
        for nxt in lifted[1:]:
            cur = add("join", bags[i], (cur, nxt))
        return cur

    top = build(0, -1)
    root = chain(top, bags[0], ())
    return NiceTreeDecomposition(tuple(nodes), root)


def _max_clique_in_bag(g: SimpleGraph, bag: frozenset[int]) -> tuple[int, ...]:
    """Largest clique inside one bag by ordered extension with size pruning.

    Ascending exploration with strict-improvement updates keeps the
    lexicographically smallest clique of maximum size within the bag.
    """
    adj = g.adjacency
    best: tuple[int, ...] = ()

    def extend(clique: tuple[int, ...], cands: list[int]) -> None:
        nonlocal best
        if len(clique) > len(best):
            best = clique
        for i, v in enumerate(cands):
            if len(clique) + len(cands) - i <= len(best):
                break
            extend(clique + (v,), [w for w in cands[i + 1 :] if w in adj[v]])

    extend((), sorted(bag))
    return best


def k_clique(
    g: SimpleGraph, k: int, d: TreeDecomposition
) -> tuple[int, ...] | None:
    """Find a clique of size at least k by scanning decomposition bags.

    Complete because every clique of the graph appears inside some bag of any
    valid decomposition (pairwise intersecting subtrees of a tree share a
    node), so the best over bags is a maximum clique.
    """
    validate_decomposition(g, d)
    best: tuple[int, ...] = ()
    for bag in d.bags:
        if len(bag) <= len(best):
            continue
        c = _max_clique_in_bag(g, bag)
        if len(c) > len(best):
            best = c
    return best if len(best) >= k else None


def max_clique_decomposed(g: SimpleGraph, d: TreeDecomposition) -> tuple[int, ...]:
    """Maximum clique via the same bag scan as k_clique."""
    result = k_clique(g, 0, d)
    assert result is not None
    return result


@dataclass(frozen=True)
class KCliqueOutcome:
    """Answer of the width-attempt pipeline for the k-clique question.

    ``by_promise`` marks a positive answer concluded from a certified width
    bound plus the caller's promise that the graph lies in a class whose
    treewidth is bounded by the given function of the clique number; no
    witness is fabricated in that case.
    """

    has_clique: bool
    witness: tuple[int, ...] | None
    by_promise: bool
    attempt: DecompositionAttempt


def k_clique_bounded(
    g: SimpleGraph,
    k: int,
    target_width: int,
    approx_factor: int = 5,
    promise: bool = False,
) -> KCliqueOutcome:
    """Decide k-clique through a width-targeted decomposition attempt.

    When the attempt certifies treewidth above the target and the promise
    flag is set, the answer is yes without a witness.  Without the promise
    the graph is decomposed unconditionally and solved exactly.
    """
    attempt = tree_decomposition(g, target_width, approx_factor)
    if attempt.found:
        witness = k_clique(g, k, attempt.decomposition)
        return KCliqueOutcome(witness is not None, witness, False, attempt)
    if promise:
        return KCliqueOutcome(True, None, True, attempt)
    fallback = tree_decomposition(g, max(g.n - 1, 0), approx_factor)
    witness = k_clique(g, k, fallback.decomposition)
    return KCliqueOutcome(witness is not None, witness, False, attempt)


def _check_lists(g: SimpleGraph, lists: ColorLists, k: int) -> None:
    for v in range(g.n):
        if v not in lists or not lists[v]:
            raise ListColorOutOfRange(f"vertex {v} has no color list")
        bad = [c for c in lists[v] if not (1 <= c <= k)]
        if bad:
            raise ListColorOutOfRange(
                f"vertex {v} lists color {bad[0]} outside 1..{k}"
            )


def list_k_coloring(
    g: SimpleGraph, lists: ColorLists, k: int, d: TreeDecomposition
) -> dict[int, int] | None:
    """Proper coloring drawing each vertex's color from its own list, or None.

    Dynamic program over the nice form of d: a state is a proper,
    list-respecting coloring of the current bag; introduce extends by list
    colors unused on bag neighbors, forget projects, join keeps assignments
    present on both sides.  A witness is rebuilt from stored predecessors.
    Pre-coloring extension is the special case of singleton lists.
    """
    validate_decomposition(g, d)
    _check_lists(g, lists, k)
    nice = make_nice(d)
    adj = g.adjacency

    tables: list[dict[tuple[int, ...], tuple]] = [None] * len(nice.nodes)  # type: ignore

    def eval_node(idx: int) -> None:
        nd = nice.nodes[idx]
        if nd.kind == "leaf":
            tables[idx] = {(): ()}
            return
        if nd.kind == "join":
            a, b = nd.children
            left, right = tables[a], tables[b]
            tables[idx] = {
                s: (s, s) for s in left if s in right
            }
            return
        (child,) = nd.children
        ctab = tables[child]
        if nd.kind == "introduce":
            v = nd.vertex
            vi = nd.bag.index(v)
            bag_nbrs = [
                (i, u) for i, u in enumerate(nd.bag) if u != v and u in adj[v]
            ]
            out: dict[tuple[int, ...], tuple] = {}
            for state in ctab:
                for c in sorted(lists[v]):
                    if any(state[i if i < vi else i - 1] == c for i, _ in bag_nbrs):
                        continue
                    new = state[:vi] + (c,) + state[vi:]
                    out[new] = (state,)
            tables[idx] = out
            return
        # forget
        v = nd.vertex
        cbag = nice.nodes[child].bag
        vi = cbag.index(v)
        out = {}
        for state in ctab:
            new = state[:vi] + state[vi + 1 :]
            if new not in out:  # first predecessor wins; iteration is insertion order
                out[new] = (state,)
        tables[idx] = out

    post = []
    stack = [(nice.root, False)]
    while stack:
        idx, done = stack.pop()
        if done:
            post.append(idx)
            continue
        stack.append((idx, True))
        for ch in nice.nodes[idx].children:
            stack.append((ch, False))
    for idx in post:
        eval_node(idx)

    if () not in tables[nice.root]:
        return None

    coloring: dict[int, int] = {}

    def walk(idx: int, state: tuple[int, ...]) -> None:
        nd = nice.nodes[idx]
        if nd.kind == "leaf":
            return
        if nd.kind == "join":
            ls, rs = tables[idx][state]
            walk(nd.children[0], ls)
            walk(nd.children[1], rs)
            return
        (child,) = nd.children
        (cstate,) = tables[idx][state]
        if nd.kind == "forget":
            cbag = nice.nodes[child].bag
            coloring[nd.vertex] = cstate[cbag.index(nd.vertex)]
        walk(child, cstate)

    walk(nice.root, ())
    # every vertex is forgotten exactly once on the way to the empty root bag
    assert len(coloring) == g.n
    for u, v in g.edges:
        assert coloring[u] != coloring[v]
    for v, c in coloring.items():
        assert c in lists[v]
    return coloring
