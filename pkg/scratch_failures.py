"""Dev scratch: diagnose the undetermined corpus trials."""
import random
from rankone.words import Word, minimal_period
from rankone.construction import RankOneParams, Stage, PeriodicExtension, AffineExtension, v_prefix, vn_length
from rankone.codes import normalize_for_code, alpha_n, apply_code
from rankone.classify import invertibility_margin, detect_finite_period, margin_holds
from rankone.experiment import derive_seed, random_code

cases = [
    ("b4", RankOneParams((Stage(4, (1, 0, 2)),), PeriodicExtension(1), declared_bound=2), 1),
    ("b5", RankOneParams((Stage(2, (2,)), Stage(2, (1,)), Stage(3, (0, 2))), PeriodicExtension(3), declared_bound=2), 3),
    ("b5", RankOneParams((Stage(2, (2,)), Stage(2, (1,)), Stage(3, (0, 2))), PeriodicExtension(3), declared_bound=2), 6),
    ("u3", RankOneParams((Stage(3, (1, 0)),), AffineExtension(q=3, slots=(2,), coeff=2, offset=1, fill=1)), 4),
    ("u5", RankOneParams((), AffineExtension(q=3, slots=(1,), coeff=1, offset=2, fill=0)), 1),
]

for name, params, idx in cases:
    rng = random.Random(derive_seed(20260809, idx))
    code = random_code(rng, (0, 2), 2)
    print(f"--- {name} trial {idx}: R={code.R} table={code.table}")
    n = normalize_for_code(params, code)
    a1 = alpha_n(code, n, 1)
    a2 = alpha_n(code, n, 2)
    print("   alpha1:", a1.to_string()[:60], " alpha2 len:", len(a2))
    img = apply_code(code, v_prefix(n, 30 * vn_length(n, 2)))
    print("   minimal weak period of long image prefix:", minimal_period(img).minimal_period, "of", len(img))
    m = invertibility_margin(code, n, 16)
    print("   margin with M_max=16:", m)
    p = detect_finite_period(code, n, 6, 3 * vn_length(n, 2))
    print("   finite period with big p_max:", p)
