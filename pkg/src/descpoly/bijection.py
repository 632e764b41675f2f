"""The cut-and-paste bijection between two families of di-sk trees.

Fix the node count m = n - 1 and a target minus-count k.  Two subsets of
di-sk trees have the same cardinality, namely the k-th gamma coefficient of
the descent polynomial of separable permutations:

* **family one** - every odd right chain starts with ``+`` (equivalently
  r_odd = m - 2k once the tree has k minus labels);
* **family two** - the first in-order node is ``+`` and no two in-order
  consecutive nodes are both ``-`` (the image of the permutations with no
  double descent).

The forward map ``psi`` repairs each odd ``-``-starting chain C by locating
a unique odd ``+``-starting partner chain (its *adjoint* C*) at the same
level and moving one end node (with its left subtree) between them; both
chains become even, dropping r_odd by two.  The backward map ``phi``
locates, for each family-two violation, a unique even chain L and moves its
last node back.  The two searches split into six mirrored cases each,
tagged I..VI and 1..6; matching tags are inverse to each other.  All the
elementary moves on one tree touch pairwise disjoint chains, so they can be
applied in any order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .trees import ChainRecord, DiskTree, GroupRecord, RightChainView
from .words import MINUS, PLUS

ADJOINT_CASES = ("I", "II", "III", "IV", "V", "VI")
REPAIR_CASES = (1, 2, 3, 4, 5, 6)


class FamilyError(ValueError):
    """Input tree is outside the family a map or search expects."""


@dataclass(frozen=True)
class Violation:
    kind: str                 # "odd-chain-starts-minus" | "first-node-minus"
    nodes: tuple[int, ...]    #   | "consecutive-minus-pair"


@dataclass(frozen=True)
class GammaFamilyMembership:
    n: int
    k: int
    n_minus: int
    in_dt1: bool
    in_dt2: bool
    violations: tuple[Violation, ...]
    r_odd: int

    @property
    def odd_chain_excess(self) -> int:
        """r_odd minus its family-one value (n - 1 - 2k); even and positive
        on family two minus family one."""
        return self.r_odd - (self.n - 1 - 2 * self.k)


def family_two_violations(tree: DiskTree) -> tuple[Violation, ...]:
    labels = tree.labels()
    out = []
    if labels and labels[0] == MINUS:
        out.append(Violation("first-node-minus", (1,)))
    for i in range(len(labels) - 1):
        if labels[i] == MINUS and labels[i + 1] == MINUS:
            out.append(Violation("consecutive-minus-pair", (i + 1, i + 2)))
    return tuple(out)


def family_one_violations(tree: DiskTree) -> tuple[Violation, ...]:
    view = tree.right_chains()
    return tuple(
        Violation("odd-chain-starts-minus", c.nodes)
        for c in view.chains
        if c.is_odd and c.starts_with == MINUS
    )


def classify(tree: DiskTree, k: Optional[int] = None) -> GammaFamilyMembership:
    """Membership of the tree in the two gamma families at minus-count k."""
    n_minus = tree.n_minus()
    if k is None:
        k = n_minus
    v1 = family_one_violations(tree)
    v2 = family_two_violations(tree)
    view = tree.right_chains()
    membership = GammaFamilyMembership(
        n=tree.n,
        k=k,
        n_minus=n_minus,
        in_dt1=(n_minus == k and not v1),
        in_dt2=(n_minus == k and not v2),
        violations=v1 + v2,
        r_odd=view.r_odd,
    )
    if membership.in_dt2 and not membership.in_dt1:
        excess = membership.odd_chain_excess
        assert excess > 0 and excess % 2 == 0, (tree, excess)
    return membership


# ---------------------------------------------------------------------------
# searches


@dataclass(frozen=True)
class AdjointResult:
    chain: int                # chain index of the adjoint C*
    case: str                 # "I".."VI"
    pivot: Optional[int]      # N_* node id (cases V/VI), else None


@dataclass(frozen=True)
class RepairResult:
    chain: int                # chain index of L
    case: int                 # 1..6
    cut_node: int             # tail of L
    attach_kind: str          # "lock-left" (cases 1,3,5) | "attach-right" (2,4,6)
    attach_node: int          # new parent of the cut node


def _group_of(view: RightChainView, chain: ChainRecord) -> GroupRecord:
    return view.groups[chain.group - 1]


def _hang_label(tree: DiskTree, group: GroupRecord) -> Optional[str]:
    if group.hang_node is None:
        return None
    return tree.labels()[group.hang_node - 1]


def find_adjoint(tree: DiskTree, chain_index: int) -> AdjointResult:
    """Adjoint of the odd ``-``-starting chain C, with its case tag.

    Cases I/II (C at level 0) and III/IV (C hangs below a ``+`` node) scan
    *down* the lock run below C, through even ``-``-starting chains, to the
    first odd chain, which necessarily starts ``+``.  Cases V/VI (C hangs
    below a ``-`` node) scan *up* for the nearest ``-``-starting chain; its
    terminal is the pivot N_* (defaulting to the hang node itself), and the
    adjoint is the chain whose terminal is the pivot's left child.
    """
    view = tree.right_chains()
    c = view.chains[chain_index - 1]
    if not (c.is_odd and c.starts_with == MINUS):
        raise FamilyError(f"chain {chain_index} is not an odd '-'-starting chain")
    group = _group_of(view, c)
    run = group.chains
    pos = run.index(chain_index)
    hang = _hang_label(tree, group)

    if hang is None or hang == PLUS:
        for cj in reversed(run[:pos]):
            cand = view.chains[cj - 1]
            if cand.is_odd:
                assert cand.starts_with == PLUS, (tree, chain_index, cj)
                if c.level == 0:
                    case = "I" if cand.length == 1 else "II"
                else:
                    case = "III" if cand.length == 1 else "IV"
                return AdjointResult(cj, case, None)
            assert cand.starts_with == MINUS, (tree, chain_index, cj)
        raise AssertionError(f"no adjoint below chain {chain_index} in {tree!r}")

    # Hang node labeled '-': look upward for the pivot.
    pivot = None
    adjoint_idx = None
    for offset, cj in enumerate(run[pos + 1 :], start=pos + 1):
        cand = view.chains[cj - 1]
        if cand.starts_with == MINUS:
            pivot = cand.terminal
            adjoint_idx = run[offset - 1]
            break
    if pivot is None:
        pivot = group.hang_node
        adjoint_idx = run[-1]
    assert adjoint_idx != chain_index, (tree, chain_index)
    adjoint = view.chains[adjoint_idx - 1]
    assert adjoint.is_odd and adjoint.starts_with == PLUS, (tree, chain_index)
    case = "V" if c.length == 1 else "VI"
    return AdjointResult(adjoint_idx, case, pivot)


def _walk_up_minus_run(view: RightChainView, run: tuple[int, ...], start_pos: int) -> int:
    """Last chain of the maximal '-'-starting run upward from start_pos."""
    pos = start_pos
    while pos + 1 < len(run) and view.chains[run[pos + 1] - 1].starts_with == MINUS:
        pos += 1
    return run[pos]


def find_repair_chain(tree: DiskTree, violation: Violation) -> RepairResult:
    """The even chain L fixing one family-two violation, with its case tag.

    Case 1 (tree starts ``-``) and the consecutive-pair cases 2-4 walk up a
    lock run through ``-``-starting chains; cases 5/6 (pair under a ``-``
    hang node) read L straight off the pair.  Cases 1/3/5 relocate L's last
    node to the front of its group; cases 2/4/6 append it to a chain below.
    """
    view = tree.right_chains()
    labels = tree.labels()
    left, right, parent = tree._arrays()

    if violation.kind == "first-node-minus":
        first = view.chains[0]
        assert first.terminal == 1 and first.starts_with == MINUS
        group = _group_of(view, first)
        assert group.hang_node is None and group.chains[0] == first.index
        l_idx = _walk_up_minus_run(view, group.chains, 0)
        l_chain = view.chains[l_idx - 1]
        assert not l_chain.is_odd and labels[l_chain.tail - 1] == PLUS
        return RepairResult(l_idx, 1, l_chain.tail, "lock-left", first.terminal)

    if violation.kind != "consecutive-minus-pair":
        raise FamilyError(f"not a family-two violation: {violation}")
    x, y = violation.nodes
    assert labels[x - 1] == MINUS and labels[y - 1] == MINUS

    if right[x]:
        # The pair straddles a hang: y is the first node of the group
        # hanging at N = right child of x, and N is labeled '+'.
        n_node = right[x]
        assert labels[n_node - 1] == PLUS
        first_idx = tree.chain_index_of(y)
        first = view.chains[first_idx - 1]
        assert first.terminal == y
        group = _group_of(view, first)
        assert group.hang_node == n_node and group.chains[0] == first_idx
        pos = group.chains.index(first_idx)
        l_idx = _walk_up_minus_run(view, group.chains, pos)
        l_chain = view.chains[l_idx - 1]
        assert not l_chain.is_odd and labels[l_chain.tail - 1] == PLUS
        return RepairResult(l_idx, 3, l_chain.tail, "lock-left", y)

    k_idx = tree.chain_index_of(x)
    k_chain = view.chains[k_idx - 1]
    assert k_chain.tail == x, "first node of a '-' pair must end its chain"
    group = _group_of(view, k_chain)
    p = parent[k_chain.terminal]
    assert p == y

    z_idx = tree.chain_index_of(y)
    if y == view.chains[z_idx - 1].terminal:
        # Lock pair inside one group: dispatch on the group's hang node.
        assert view.chains[z_idx - 1].group == k_chain.group
        hang = _hang_label(tree, group)
        if hang is None or hang == PLUS:
            case = 2 if hang is None else 4
            pos = group.chains.index(z_idx)
            l_idx = _walk_up_minus_run(view, group.chains, pos)
            l_chain = view.chains[l_idx - 1]
            assert not l_chain.is_odd and labels[l_chain.tail - 1] == PLUS
            return RepairResult(l_idx, case, l_chain.tail, "attach-right", x)
        # Hang node '-': fall through, the pivot is y and L is x's chain.
    else:
        # The pair straddles levels: y is the hang node of x's group.
        assert group.hang_node == y

    # Cases 5/6: L is the even '+'-starting chain ending at x.
    assert not k_chain.is_odd and k_chain.starts_with == PLUS
    pos = group.chains.index(k_idx)
    one_l_idx = None
    for cj in reversed(group.chains[:pos]):
        if view.chains[cj - 1].starts_with == MINUS:
            one_l_idx = cj
            break
    if one_l_idx is None:
        first_terminal = view.chains[group.chains[0] - 1].terminal
        return RepairResult(k_idx, 5, x, "lock-left", first_terminal)
    one_l = view.chains[one_l_idx - 1]
    assert not one_l.is_odd and labels[one_l.tail - 1] == PLUS
    return RepairResult(k_idx, 6, x, "attach-right", one_l.tail)


# ---------------------------------------------------------------------------
# surgery


@dataclass(frozen=True)
class SurgeryOp:
    cut_node: int
    attach_kind: str          # "attach-right" | "lock-left"
    attach_node: int
    case: str                 # "I".."VI" or "1".."6"


def apply_ops(tree: DiskTree, ops: Iterable[SurgeryOp]) -> DiskTree:
    """Apply cut-and-paste moves; each cut node keeps its left subtree."""
    labels = list(tree.labels())
    left, right, parent = (list(a) for a in tree._arrays())
    try:
        root = parent.index(0, 1)
    except ValueError:
        return tree  # empty tree, nothing to do
    for op in ops:
        u, v = op.cut_node, op.attach_node
        p = parent[u]
        assert p != 0, "cannot cut the root"
        if left[p] == u:
            left[p] = 0
        else:
            assert right[p] == u
            right[p] = 0
        if op.attach_kind == "attach-right":
            assert right[v] == 0, "target already has a right child"
            right[v] = u
        else:
            assert left[v] == 0, "target already has a left child"
            left[v] = u
        parent[u] = v

    def build(v: int):
        if v == 0:
            return None
        return (labels[v - 1], build(left[v]), build(right[v]))

    return DiskTree(build(root))


def psi_plan(tree: DiskTree) -> list[SurgeryOp]:
    """Moves taking a family-two tree to family one (empty on fixed points)."""
    view = tree.right_chains()
    labels = tree.labels()
    ops = []
    for c in view.chains:
        if c.is_odd and c.starts_with == MINUS:
            found = find_adjoint(tree, c.index)
            adj = view.chains[found.chain - 1]
            if found.case in ("I", "II", "III", "IV"):
                assert labels[adj.tail - 1] == PLUS and labels[c.tail - 1] == MINUS
                ops.append(SurgeryOp(adj.tail, "attach-right", c.tail, found.case))
            else:
                assert labels[c.tail - 1] == MINUS and labels[adj.tail - 1] == PLUS
                ops.append(SurgeryOp(c.tail, "attach-right", adj.tail, found.case))
    return ops


def phi_plan(tree: DiskTree) -> list[SurgeryOp]:
    """Moves taking a family-one tree back to family two."""
    ops = []
    for violation in family_two_violations(tree):
        found = find_repair_chain(tree, violation)
        ops.append(
            SurgeryOp(found.cut_node, found.attach_kind, found.attach_node, str(found.case))
        )
    return ops


def psi(tree: DiskTree) -> DiskTree:
    """Forward bijection; the input must lie in family two."""
    m = classify(tree)
    if not m.in_dt2:
        raise FamilyError("psi expects a tree with '+' first node and no '-' pair")
    result = apply_ops(tree, psi_plan(tree))
    out = classify(result)
    assert out.in_dt1 and out.n_minus == m.n_minus, (tree, result)
    return result


def phi(tree: DiskTree) -> DiskTree:
    """Backward bijection; the input must lie in family one."""
    m = classify(tree)
    if not m.in_dt1:
        raise FamilyError("phi expects a tree whose odd chains all start '+'")
    result = apply_ops(tree, phi_plan(tree))
    out = classify(result)
    assert out.in_dt2 and out.n_minus == m.n_minus, (tree, result)
    return result


def order_independence_certificate(
    tree: DiskTree, trials: int = 10, seed: int = 0
) -> bool:
    """Re-run the map applying one move at a time in random orders.

    After each single move the remaining violation sites are re-derived
    from scratch, which is a stronger check than permuting a fixed plan.
    Returns True when every trial reproduces the batch result.
    """
    m = classify(tree)
    if m.in_dt2:
        batch, planner = psi(tree), psi_plan
    elif m.in_dt1:
        batch, planner = phi(tree), phi_plan
    else:
        raise FamilyError("tree belongs to neither family")
    rng = random.Random(seed)
    for _ in range(trials):
        current = tree
        while True:
            sites = planner(current)
            if not sites:
                break
            current = apply_ops(current, [sites[rng.randrange(len(sites))]])
        if current != batch:
            return False
    return True


def bijection_certificate(n: int, k: int) -> dict:
    """Exhaustive check of the two families at (n, k); JSON-ready record."""
    from .trees import enumerate_trees

    dt1 = []
    dt2 = []
    for t in enumerate_trees(n):
        m = classify(t, k)
        if m.in_dt1:
            dt1.append(t)
        if m.in_dt2:
            dt2.append(t)
    histogram: dict[str, int] = {}
    images = set()
    ok = True
    for t in dt2:
        for op in psi_plan(t):
            histogram[op.case] = histogram.get(op.case, 0) + 1
        image = psi(t)
        images.add(image)
        if phi(image) != t:
            ok = False
    for t in dt1:
        for op in phi_plan(t):
            histogram[op.case] = histogram.get(op.case, 0) + 1
        if psi(phi(t)) != t:
            ok = False
    ok = ok and len(images) == len(dt2) == len(dt1) and all(
        classify(u, k).in_dt1 for u in images
    )
    return {
        "n": n,
        "k": k,
        "dt1_count": len(dt1),
        "dt2_count": len(dt2),
        "bijection_ok": ok,
        "case_histogram": dict(sorted(histogram.items())),
    }
