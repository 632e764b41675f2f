"""Di-sk trees: plus/minus labeled binary trees with alternating right chains.

A di-sk tree on m nodes is a binary tree whose every node carries ``+`` or
``-`` such that along every *right chain* the labels alternate.  A right
chain is a maximal run of right-child edges; its first node (called the
chain's *terminal*) is the root or a left child, and its remaining nodes
are reached by repeatedly taking right children.  Nodes are identified by
their 1-based in-order index throughout, and chains are ordered by their
terminals' in-order indices.

Di-sk trees with n-1 nodes are in bijection with Schröder words of n
leaves (drop the leaves of the expression tree) and hence with separable
permutations of n: the i-th in-order node is ``-`` exactly when i is a
descent of the permutation.

Chains hinge together by left edges in two ways.  If the terminal of a
later chain is the left child of an *earlier chain's terminal* the two
chains are **locked** and sit at the same level; if it is the left child of
a non-terminal node the later chain **hangs** one level deeper.  The chains
of one level that are locked to each other form a *group*: their terminals
lie on a single left chain, and each non-root group hangs from a specific
node of a chain one level up.

Text serialization is the nested form ``(label left right)`` with ``_``
for an empty subtree, e.g. ``(- (+ _ _) _)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .permutations import Permutation
from .words import (
    LEAF,
    MINUS,
    PLUS,
    Expr,
    SchroderWord,
    sweep,
)

# Tree nodes are frozen triples (label, left, right); None is the empty tree.
TreeNode = Optional[tuple]

# Unlabeled structures are frozen pairs (left, right); None is empty.
ShapeNode = Optional[tuple]


class InvalidTreeError(ValueError):
    """Raised when a right chain fails to alternate."""


def _validate(node: TreeNode) -> None:
    if node is None:
        return
    label, left, right = node
    if label not in (PLUS, MINUS):
        raise InvalidTreeError(f"bad label {label!r}")
    if right is not None and right[0] == label:
        raise InvalidTreeError("right chain does not alternate")
    _validate(left)
    _validate(right)


@dataclass(frozen=True)
class ChainRecord:
    """One right chain: 1-based ids, ordered terminal first."""

    index: int                 # position in chain order, 1-based
    nodes: tuple[int, ...]     # in-order node ids along the chain
    starts_with: str           # label of the terminal
    level: int
    attachment: str            # "root-group" | "lock" | "hang"
    group: int                 # group id, 1-based in chain order

    @property
    def terminal(self) -> int:
        return self.nodes[0]

    @property
    def tail(self) -> int:
        return self.nodes[-1]

    @property
    def length(self) -> int:
        return len(self.nodes)

    @property
    def is_odd(self) -> bool:
        return len(self.nodes) % 2 == 1


@dataclass(frozen=True)
class GroupRecord:
    """A maximal lock-connected run of chains (terminals on one left chain)."""

    index: int
    chains: tuple[int, ...]    # chain indices, bottom-up along the run
    level: int
    hang_node: Optional[int]   # node the group hangs from; None for the root group


@dataclass(frozen=True)
class RightChainView:
    chains: tuple[ChainRecord, ...]
    groups: tuple[GroupRecord, ...]

    @property
    def r(self) -> int:
        return len(self.chains)

    @property
    def r_odd(self) -> int:
        return sum(1 for c in self.chains if c.is_odd)

    @property
    def r_even(self) -> int:
        return sum(1 for c in self.chains if not c.is_odd)

    def lengths(self) -> tuple[int, ...]:
        return tuple(c.length for c in self.chains)


class DiskTree:
    """Immutable di-sk tree with lazily computed structure views."""

    __slots__ = ("root", "_cache")

    def __init__(self, root: TreeNode, _validate_labels: bool = True):
        # The empty tree (root None) is allowed: it corresponds to the
        # one-leaf word and the singleton permutation.
        if _validate_labels:
            _validate(root)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "_cache", {})

    def __eq__(self, other) -> bool:
        return isinstance(other, DiskTree) and self.root == other.root

    def __hash__(self) -> int:
        return hash(self.root)

    def __repr__(self) -> str:
        return f"DiskTree.parse({self.to_text()!r})"

    # -- basic views ----------------------------------------------------

    @property
    def size(self) -> int:
        """Number of nodes (= n - 1 for the length-n permutation)."""
        return len(self.labels())

    @property
    def n(self) -> int:
        return self.size + 1

    def labels(self) -> tuple[str, ...]:
        """Node labels in in-order; index i-1 holds node i's label."""
        if "labels" not in self._cache:
            out: list[str] = []

            def walk(node: TreeNode) -> None:
                if node is None:
                    return
                walk(node[1])
                out.append(node[0])
                walk(node[2])

            walk(self.root)
            self._cache["labels"] = tuple(out)
        return self._cache["labels"]

    def n_minus(self) -> int:
        return sum(1 for l in self.labels() if l == MINUS)

    def minus_positions(self) -> frozenset[int]:
        return frozenset(i for i, l in enumerate(self.labels(), 1) if l == MINUS)

    def _arrays(self):
        """Parent/child arrays keyed by in-order id (index 0 unused)."""
        if "arrays" not in self._cache:
            m = self.size
            left = [0] * (m + 1)
            right = [0] * (m + 1)
            parent = [0] * (m + 1)
            counter = [0]

            def walk(node: TreeNode) -> int:
                lab, l, r = node
                lid = walk(l) if l is not None else 0
                counter[0] += 1
                me = counter[0]
                rid = walk(r) if r is not None else 0
                left[me], right[me] = lid, rid
                if lid:
                    parent[lid] = me
                if rid:
                    parent[rid] = me
                return me

            if self.root is not None:
                walk(self.root)
            self._cache["arrays"] = (left, right, parent)
        return self._cache["arrays"]

    def right_chains(self) -> RightChainView:
        """Decompose into right chains with order, level, lock/hang, groups."""
        if "chains" in self._cache:
            return self._cache["chains"]
        labels = self.labels()
        left, right, parent = self._arrays()
        m = self.size

        terminals = [
            v for v in range(1, m + 1) if parent[v] == 0 or left[parent[v]] == v
        ]
        terminals.sort()
        raw_chains = []
        chain_of = [0] * (m + 1)
        for idx, t in enumerate(terminals, 1):
            nodes = [t]
            while right[nodes[-1]]:
                nodes.append(right[nodes[-1]])
            for v in nodes:
                chain_of[v] = idx
            raw_chains.append(tuple(nodes))

        # Levels and groups: lock keeps both, hang descends and opens a group.
        level = [0] * (len(raw_chains) + 1)
        group_key = [0] * (len(raw_chains) + 1)
        resolved = [False] * (len(raw_chains) + 1)

        def resolve(ci: int) -> None:
            if resolved[ci]:
                return
            t = raw_chains[ci - 1][0]
            p = parent[t]
            if p == 0:
                level[ci], group_key[ci] = 0, 0
            else:
                pc = chain_of[p]
                resolve(pc)
                if p == raw_chains[pc - 1][0]:          # lock to the parent chain
                    level[ci], group_key[ci] = level[pc], group_key[pc]
                else:                                    # hang below a non-terminal
                    level[ci], group_key[ci] = level[pc] + 1, p
            resolved[ci] = True

        for ci in range(1, len(raw_chains) + 1):
            resolve(ci)

        group_ids: dict[int, int] = {}
        for ci in range(1, len(raw_chains) + 1):
            group_ids.setdefault(group_key[ci], len(group_ids) + 1)

        chains = []
        for ci, nodes in enumerate(raw_chains, 1):
            t = nodes[0]
            p = parent[t]
            if p == 0:
                attachment = "root-group"
            elif p == raw_chains[chain_of[p] - 1][0]:
                attachment = "lock"
            else:
                attachment = "hang"
            chains.append(
                ChainRecord(
                    index=ci,
                    nodes=nodes,
                    starts_with=labels[t - 1],
                    level=level[ci],
                    attachment=attachment,
                    group=group_ids[group_key[ci]],
                )
            )

        members: dict[int, list[int]] = {}
        key_of_group: dict[int, int] = {}
        for ci in range(1, len(raw_chains) + 1):
            g = group_ids[group_key[ci]]
            members.setdefault(g, []).append(ci)
            key_of_group[g] = group_key[ci]
        groups = tuple(
            GroupRecord(
                index=g,
                chains=tuple(members[g]),
                level=level[members[g][0]],
                hang_node=key_of_group[g] or None,
            )
            for g in sorted(members)
        )
        view = RightChainView(tuple(chains), groups)
        self._cache["chains"] = view
        self._cache["chain_of"] = tuple(chain_of)
        return view

    def chain_index_of(self, node_id: int) -> int:
        """Chain (1-based index in chain order) containing the given node."""
        self.right_chains()
        chain_of = self._cache["chain_of"]
        if not 1 <= node_id < len(chain_of):
            raise KeyError(node_id)
        return chain_of[node_id]

    # -- conversions ------------------------------------------------------

    def to_word(self) -> SchroderWord:
        def back(node: TreeNode) -> Expr:
            if node is None:
                return LEAF
            lab, l, r = node
            return (lab, back(l), back(r))

        return SchroderWord(back(self.root))

    def to_perm(self) -> Permutation:
        from .words import word_to_perm

        return word_to_perm(self.to_word())

    def shape(self) -> "TreeShape":
        def strip(node: TreeNode) -> ShapeNode:
            if node is None:
                return None
            return (strip(node[1]), strip(node[2]))

        return TreeShape(strip(self.root))

    def flip_chain(self, i: int) -> "DiskTree":
        """Reverse every label on the i-th right chain (1-based chain order).

        An involution; flips on different chains commute, so the orbit of a
        tree under all of them has size 2^r.
        """
        view = self.right_chains()
        if not 1 <= i <= view.r:
            raise ValueError(f"chain index {i} out of range 1..{view.r}")
        targets = set(view.chains[i - 1].nodes)
        counter = [0]

        def rebuild(node: TreeNode) -> TreeNode:
            if node is None:
                return None
            lab, l, r = node
            nl = rebuild(l)
            counter[0] += 1
            if counter[0] in targets:
                lab = PLUS if lab == MINUS else MINUS
            nr = rebuild(r)
            return (lab, nl, nr)

        return DiskTree(rebuild(self.root), _validate_labels=False)

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        def fmt(node: TreeNode) -> str:
            if node is None:
                return "_"
            lab, l, r = node
            return f"({lab} {fmt(l)} {fmt(r)})"

        return fmt(self.root)

    @classmethod
    def parse(cls, text: str) -> "DiskTree":
        tokens = text.replace("(", " ( ").replace(")", " ) ").split()
        pos = 0

        def parse_node() -> TreeNode:
            nonlocal pos
            if pos >= len(tokens):
                raise InvalidTreeError("unexpected end of input")
            tok = tokens[pos]
            if tok == "_":
                pos += 1
                return None
            if tok != "(":
                raise InvalidTreeError(f"expected '(' or '_', got {tok!r}")
            pos += 1
            lab = tokens[pos]
            if lab not in (PLUS, MINUS):
                raise InvalidTreeError(f"expected label, got {lab!r}")
            pos += 1
            l = parse_node()
            r = parse_node()
            if tokens[pos] != ")":
                raise InvalidTreeError(f"expected ')', got {tokens[pos]!r}")
            pos += 1
            return (lab, l, r)

        node = parse_node()
        if pos != len(tokens):
            raise InvalidTreeError("trailing input")
        return cls(node)

    def to_json_obj(self):
        def enc(node: TreeNode):
            if node is None:
                return None
            lab, l, r = node
            return {"label": lab, "left": enc(l), "right": enc(r)}

        return enc(self.root)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "DiskTree":
        def dec(o) -> TreeNode:
            if o is None:
                return None
            return (o["label"], dec(o["left"]), dec(o["right"]))

        return cls(dec(obj))

    @classmethod
    def from_json(cls, text: str) -> "DiskTree":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class TreeShape:
    """Unlabeled binary-tree structure; canonical key is the preorder bits."""

    structure: ShapeNode

    @property
    def size(self) -> int:
        def count(node: ShapeNode) -> int:
            if node is None:
                return 0
            return 1 + count(node[0]) + count(node[1])

        return count(self.structure)

    def key(self) -> str:
        """Preorder bitstring: '1' for a node, '0' for an empty subtree."""
        out: list[str] = []

        def walk(node: ShapeNode) -> None:
            if node is None:
                out.append("0")
                return
            out.append("1")
            walk(node[0])
            walk(node[1])

        walk(self.structure)
        return "".join(out)

    def chain_lengths(self) -> tuple[int, ...]:
        """Right-chain lengths in chain order (a composition of size)."""
        return _shape_chain_lengths(self.structure)

    @property
    def r(self) -> int:
        return len(self.chain_lengths())

    @property
    def r_odd(self) -> int:
        return sum(1 for l in self.chain_lengths() if l % 2 == 1)

    @property
    def r_even(self) -> int:
        return sum(1 for l in self.chain_lengths() if l % 2 == 0)

    def labelings(self) -> Iterator[DiskTree]:
        """All 2^r di-sk trees with this shape (choose each chain's start)."""
        lengths = self.chain_lengths()
        for mask in range(1 << len(lengths)):
            starts = [PLUS if (mask >> i) & 1 == 0 else MINUS for i in range(len(lengths))]
            yield _label_shape(self.structure, starts)


def _shape_chain_lengths(structure: ShapeNode) -> tuple[int, ...]:
    # In-order ids, then the same chain walk as for labeled trees.
    nodes: list[tuple] = []        # (id, node) in in-order
    left_of: dict[int, int] = {}
    right_of: dict[int, int] = {}
    parent_of: dict[int, int] = {}
    counter = [0]

    def walk(node: ShapeNode) -> int:
        if node is None:
            return 0
        lid = walk(node[0])
        counter[0] += 1
        me = counter[0]
        rid = walk(node[1])
        left_of[me], right_of[me] = lid, rid
        if lid:
            parent_of[lid] = me
        if rid:
            parent_of[rid] = me
        return me

    walk(structure)
    m = counter[0]
    lengths = []
    for v in range(1, m + 1):
        p = parent_of.get(v, 0)
        if p == 0 or left_of[p] == v:
            length = 1
            w = v
            while right_of[w]:
                w = right_of[w]
                length += 1
            lengths.append((v, length))
    lengths.sort()
    return tuple(l for _, l in lengths)


def _label_shape(structure: ShapeNode, chain_starts: list[str]) -> DiskTree:
    """Label a shape given each chain's starting label (in chain order)."""
    # First pass decides each node's label in in-order-id space: a chain
    # terminal takes its chain's start, later chain nodes alternate.
    label_of: dict[int, str] = {}
    terminals: list[int] = []
    counter = [0]

    def assign(node: ShapeNode, incoming: Optional[str], chain_rank_of: dict[int, int]) -> None:
        if node is None:
            return
        # In-order: left subtree first (each left child starts a chain).
        assign(node[0], None, chain_rank_of)
        counter[0] += 1
        me = counter[0]
        if incoming is None:
            terminals.append(me)
            # The discovery pass has no ranks yet; any placeholder works.
            lab = chain_starts[chain_rank_of[me]] if chain_rank_of else PLUS
        else:
            lab = PLUS if incoming == MINUS else MINUS
        label_of[me] = lab
        assign(node[1], lab, chain_rank_of)

    # Two passes: the first discovers which in-order ids are terminals, the
    # second knows each terminal's chain rank and can fill real labels.
    assign(structure, None, {})
    ranks = {t: r for r, t in enumerate(sorted(terminals))}
    label_of.clear()
    terminals.clear()
    counter[0] = 0
    assign(structure, None, ranks)

    counter[0] = 0

    def build(node: ShapeNode) -> TreeNode:
        if node is None:
            return None
        l = build(node[0])
        counter[0] += 1
        lab = label_of[counter[0]]
        r = build(node[1])
        return (lab, l, r)

    return DiskTree(build(structure), _validate_labels=False)


def word_to_tree(w: SchroderWord) -> DiskTree:
    """Drop the leaves of the expression tree, keeping operator nodes.

    The i-th operator of the word (textual order) becomes the i-th in-order
    node of the tree, so the right-chain restriction on words is exactly
    the alternation condition on trees.
    """

    def convert(expr: Expr) -> TreeNode:
        if expr == LEAF:
            return None
        op, left, right = expr
        return (op, convert(left), convert(right))

    return DiskTree(convert(w.expr), _validate_labels=False)


def tree_to_word(t: DiskTree) -> SchroderWord:
    return t.to_word()


def perm_to_tree(p: Permutation) -> DiskTree:
    """Tree of a separable permutation; node i is '-' iff i is a descent.

    >>> perm_to_tree(Permutation((9, 8, 4, 1, 3, 2, 7, 5, 6))).n_minus()
    5
    """
    return word_to_tree(sweep(p))


def tree_to_perm(t: DiskTree) -> Permutation:
    return t.to_perm()


@lru_cache(maxsize=None)
def _gen_shapes(m: int) -> tuple[ShapeNode, ...]:
    if m == 0:
        return (None,)
    out: list[ShapeNode] = []
    for i in range(m):
        for left in _gen_shapes(i):
            for right in _gen_shapes(m - 1 - i):
                out.append((left, right))
    return tuple(out)


def enumerate_shapes(n: int) -> Iterator[TreeShape]:
    """All unlabeled binary trees with n-1 nodes (Catalan many)."""
    if n < 1:
        raise ValueError("need n >= 1")
    for s in _gen_shapes(n - 1):
        yield TreeShape(s)


@lru_cache(maxsize=None)
def _gen_trees(m: int, forbidden_root: str | None) -> tuple[TreeNode, ...]:
    if m == 0:
        return (None,)
    out: list[TreeNode] = []
    labels = [l for l in (PLUS, MINUS) if l != forbidden_root]
    for lab in labels:
        for i in range(m):
            for left in _gen_trees(i, None):
                for right in _gen_trees(m - 1 - i, lab):
                    out.append((lab, left, right))
    return tuple(out)


def enumerate_trees(n: int) -> Iterator[DiskTree]:
    """All di-sk trees with n-1 nodes, large-Schröder many.

    Alternation is enforced locally: a right child never repeats its
    parent's label.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    return (DiskTree(t, _validate_labels=False) for t in _gen_trees(n - 1, None))
