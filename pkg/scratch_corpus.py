"""Dev scratch: curate the dichotomy corpus (5 bounded + 5 unbounded sets)."""
import time
from rankone.words import minimal_period
from rankone.construction import (
    RankOneParams, Stage, PeriodicExtension, AffineExtension, v_prefix,
    params_to_dict,
)
from rankone.experiment import (
    ExperimentConfig, config_from_dict, run_experiment, budgets_from_dict,
)
from rankone.classify import Budgets

BOUNDED = {
    "b1": RankOneParams((Stage(2, (1,)), Stage(2, (2,))), PeriodicExtension(2), declared_bound=2),
    "b2": RankOneParams((Stage(3, (0, 1)),), PeriodicExtension(1), declared_bound=1),
    "b3": RankOneParams((Stage(2, (0,)), Stage(3, (2, 1))), PeriodicExtension(2), declared_bound=2),
    "b4": RankOneParams((Stage(4, (1, 0, 2)),), PeriodicExtension(1), declared_bound=2),
    "b5": RankOneParams((Stage(2, (2,)), Stage(2, (1,)), Stage(3, (0, 2))), PeriodicExtension(3), declared_bound=2),
}
UNBOUNDED = {
    "u1": RankOneParams((), AffineExtension(q=2, slots=(1,), coeff=1, offset=1)),
    "u2": RankOneParams((Stage(2, (0,)),), AffineExtension(q=2, slots=(1,), coeff=1, offset=0)),
    "u3": RankOneParams((Stage(3, (1, 0)),), AffineExtension(q=3, slots=(2,), coeff=2, offset=1, fill=1)),
    "u4": RankOneParams((Stage(2, (2,)),), AffineExtension(q=2, slots=(1,), coeff=2, offset=3)),
    "u5": RankOneParams((), AffineExtension(q=3, slots=(1,), coeff=1, offset=2, fill=0)),
}

print("aperiodicity check (minimal weak period of 600-prefix):")
for name, p in {**BOUNDED, **UNBOUNDED}.items():
    mp = minimal_period(v_prefix(p, 600)).minimal_period
    print(f"  {name}: {mp}", "(!! periodic-ish)" if mp < 300 else "")

budgets = Budgets(n_max=6, p_max=None, M_max=8, probe_length=None, K_range=(-3, 3))
t0 = time.time()
grand = {"finite": 0, "trivial": 0, "isomorphic": 0, "undetermined": 0}
for name, p in {**BOUNDED, **UNBOUNDED}.items():
    cfg = ExperimentConfig(
        params=p,
        code_source={"random": {"R_range": [0, 2], "b": 2}},
        budgets=budgets,
        trials=10,
        master_seed=20260809,
        revalidate=True,
    )
    t1 = time.time()
    rep = run_experiment(cfg)
    counts = rep["body"]["counts"]
    for k in grand:
        grand[k] += counts[k]
    bad = [t for t in rep["body"]["trials"] if t["classification"]["verdict"] == "undetermined"]
    reval = all(t.get("revalidated", True) for t in rep["body"]["trials"])
    print(f"{name}: {counts} reval_ok={reval} {round(time.time()-t1,2)}s")
    for t in bad:
        print("   UNDET:", t["index"], t["classification"].get("reason"))
print("grand:", grand, "total", round(time.time() - t0, 2), "s")
