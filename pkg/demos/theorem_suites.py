"""
Running the theorem suites
==========================

Each suite pits a claimed equivalence against invariants. Claims should come
out consistent and perturbed controls distinct. "Consistent" is evidence,
not proof.
"""

from twistknot.verify import SUITES, run_suite

print("available suites:", ", ".join(SUITES))

# %%
# Torus lemma on its default parameters.
print(run_suite("toruslemma").text())

# %%
# The cable theorem on a K-knot companion. Alexander is compared against the
# cable formula; the cable braid is compared when small enough for Jones.
print(run_suite("theorem5", [(2, 1)]).text(timings=True))

# %%
# Reports also serialize to stable JSON.
report = run_suite("lemma3", [(1,)])
print(report.json_text()[:400])
