# %% [markdown]
# # Hunting for counterexamples
#
# The harness draws random polynomials that satisfy an entry's hypothesis by
# construction and checks the inequality at each draw.  A correct
# implementation should never fail; a sabotaged one should be caught.

# %%
import json

from modsmirnov import smirnov
from modsmirnov.catalog import list_entries, sharpness_scan
from modsmirnov.harness.campaign import CampaignConfig, run_campaign

print(len(list_entries()), "registry entries")
for e in list_entries()[:5]:
    print(e["id"], e["direction"], e["citation"])

# %%
cfg = CampaignConfig(entries=("thm1-2.1", "thm2-2.3"), trials=300, seed=1)
report = run_campaign(cfg)
for e in report.entries:
    print(e.entry, e.passes, e.failures, f"{e.min_relative_slack:.2e}")

# %% [markdown]
# Equality cases: on `lambda z^n` both sides of the lower bound coincide at
# every grid point.

# %%
scan = sharpness_scan("thm1-2.1", n=3)
print(scan.gap, scan.max_gap, scan.gaps.size)

# %% [markdown]
# ## A planted bug
#
# Replace |alpha| by alpha inside kappa.  Violations live near the edge of
# the parameter domain, so the boundary law and low degrees find them fast.

# %%
real_kappa = smirnov.kappa
smirnov.kappa = lambda alpha, beta, R, n: beta * (((R + 1) / 2) ** n - alpha)
try:
    bad = run_campaign(CampaignConfig(entries=("thm1-2.1",), trials=1000, seed=0,
                                      degree_range=(1, 3), param_law="boundary"))
finally:
    smirnov.kappa = real_kappa
e = bad.entries[0]
print("failures:", e.failures, "shrink steps:", e.shrink_steps)
print(json.dumps(e.counterexample, indent=1))
