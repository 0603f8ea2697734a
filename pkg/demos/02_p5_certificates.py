"""
Induced P5 detection
====================

The solver only promises polynomial running time on P5-free inputs.  The
detector finds an induced path on five vertices when there is one, and the
solver itself reports one if its structural checks break down.
"""

import numpy as np

from p5color import InputNotP5Free, color_graph, find_induced_p5, verify_certificate
from p5color.oracle import random_graph

rng = np.random.default_rng(1)

# a sparse random graph usually contains an induced P5
g = random_graph(9, 0.35, rng)
cert = find_induced_p5(g)
print("random graph edges:", g.edges())
print("certificate (1-based):", None if cert is None else cert.one_based())
if cert is not None:
    print("verifies:", verify_certificate(g, cert))

# feed graphs with a P5 straight to the solver: each run either answers
# correctly or stops with a checked certificate
answered = rejected = 0
for _ in range(200):
    g = random_graph(9, rng.random(), rng)
    if find_induced_p5(g) is None:
        continue
    try:
        color_graph(g, 3)
        answered += 1
    except InputNotP5Free as exc:
        assert verify_certificate(g, exc.certificate)
        rejected += 1
print(f"graphs with a P5: {answered} answered anyway, {rejected} rejected with a certificate")
