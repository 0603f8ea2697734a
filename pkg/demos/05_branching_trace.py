"""
Watching the search branch
==========================

An observer sees every branching step with its children.  Each step must
split the solutions of the parent among its children exactly; here we
check that by enumeration on a small list-coloring instance.
"""

from collections import Counter

from p5color import Instance
from p5color.acceptance import check_expansion
from p5color.engine import Engine
from p5color.oracle import generate_substitution

g = generate_substitution(8, seed=81, max_piece=4)
inst = Instance.uniform(g, 3)
print("edges:", g.edges())

seen = Counter()


def observe(rule, parent, children):
    seen[rule] += 1
    exact = check_expansion(parent, children)
    print(f"{rule:12} live={bin(parent.live).count('1')} children={len(children)} exact={exact}")


sol = Engine(g, observer=observe).solve(inst)
print("coloring:", dict(sorted(sol.items())))
print("steps by rule:", dict(seen))
