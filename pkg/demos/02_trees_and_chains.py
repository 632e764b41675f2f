"""Di-sk trees, right chains, levels, and the chain-flip group action.

Erasing the leaves of a Schröder word leaves a binary tree whose nodes
carry the operators; the defining restriction on words becomes "labels
alternate along every right chain".  Chains hinge together by left edges:
locked chains share a level, hanging chains sit one level deeper.
"""

from descpoly import enumerate_trees, parse_permutation, perm_to_tree

tree = perm_to_tree(parse_permutation("984132756"))
print("tree:", tree.to_text())
print("in-order labels:", "".join(tree.labels()))

view = tree.right_chains()
print(f"\n{view.r} right chains (odd {view.r_odd}, even {view.r_even}):")
for c in view.chains:
    print(f"  chain {c.index}: nodes {list(c.nodes)} length {c.length}, "
          f"starts {c.starts_with}, level {c.level}, {c.attachment}, group {c.group}")

print("\nflipping chain 2 (an involution):")
flipped = tree.flip_chain(2)
print("  ", flipped.to_text())
print("   flip twice restores:", flipped.flip_chain(2) == tree)

# The flips on the r chains commute, so each unlabeled shape carries an
# orbit of exactly 2^r trees; orbits are counted by the Catalan numbers.
orbit = {tree}
frontier = [tree]
while frontier:
    t = frontier.pop()
    for i in range(1, view.r + 1):
        u = t.flip_chain(i)
        if u not in orbit:
            orbit.add(u)
            frontier.append(u)
print(f"\norbit of the tree under all chain flips: {len(orbit)} = 2^{view.r}")

counts = [sum(1 for _ in enumerate_trees(n)) for n in range(1, 8)]
print("tree counts for n = 1..7:", counts)
