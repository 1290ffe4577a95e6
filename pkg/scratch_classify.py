"""Dev scratch: empirical margins/verdicts for golden instances and corpus curation."""
import time
from rankone.words import Word, minimal_period
from rankone.construction import (
    RankOneParams, Stage, PeriodicExtension, AffineExtension,
    build_vn, vn_length, v_prefix, language_words,
)
from rankone.codes import (
    SlidingBlockCode, identity_code, constant_code, run_detector_code,
    normalize_for_code, alpha_n,
)
from rankone.classify import (
    Budgets, classify, revalidate, invertibility_margin, detect_finite_period,
    tail_separation_check, margin_holds, spacer_profile,
)
from rankone.oracle import exhaustive_margin_check

det = run_detector_code()
ident = identity_code()
const1 = constant_code(1)

p1ext = RankOneParams((Stage(2, (1,)), Stage(2, (2,))), PeriodicExtension(2), declared_bound=2)
p3 = RankOneParams((), AffineExtension(q=2, slots=(1,), coeff=1, offset=1))

# aperiodicity sanity of p1ext
mp = minimal_period(v_prefix(p1ext, 500)).minimal_period
print("minimal period of 500-prefix of p1ext V:", mp)

t0 = time.time()
n = normalize_for_code(p1ext, det)
print("normalized p1ext for det: lh(v1) =", vn_length(n, 1))

# margin via oracle for golden (bounded)
R = det.R
for M in range(0, 6):
    ell = 2 * M + R + 1
    probes = [Word(t) for t in sorted(language_words(n, ell))]
    ok = exhaustive_margin_check(det, probes, M)
    print(f"  oracle margin check M={M} (ell={ell}, {len(probes)} probes): {ok}")
    if ok:
        break

m = invertibility_margin(det, n, 8)
print("invertibility_margin(det, p1ext):", m)
p = detect_finite_period(det, n, 6, vn_length(n, 2) - R)
print("detect_finite_period(det, p1ext):", p)

c = classify(det, p1ext)
print("classify(det, p1ext):", c)
print("revalidate:", revalidate(det, p1ext, c))
print("elapsed bounded golden:", round(time.time() - t0, 2), "s")

c = classify(ident, p1ext)
print("classify(identity, p1ext):", c)

t0 = time.time()
c = classify(det, p3)
print("classify(det, p3):", c, round(time.time() - t0, 2), "s")
print("revalidate:", revalidate(det, p3, c))

c = classify(const1, p3)
print("classify(const, p3):", c)

c = classify(ident, p3)
print("classify(identity, p3):", c)

# spacer profile examples
print("spacer_profile(p3, 2):", spacer_profile(p3, 2))
try:
    spacer_profile(p3, 3)
except Exception as e:
    print("spacer_profile(p3, 3):", type(e).__name__)
pp = RankOneParams((Stage(2, (0,)), Stage(3, (5, 1))))
print("spacer_profile(pp, 5):", spacer_profile(pp, 5))

# tail separation golden
npar = normalize_for_code(p3, det)
print("tail_separation_check(det, p3):", tail_separation_check(det, npar, (-3, 3)))

# periodic-word degenerate: both certificates fire?
pper = RankOneParams((Stage(2, (2,)),), PeriodicExtension(1), declared_bound=2)
print("v2(pper):", build_vn(pper, 2).to_string())
try:
    c = classify(ident, pper)
    print("classify(identity, periodic-word):", c)
except Exception as e:
    print("classify(identity, periodic-word) raised:", type(e).__name__, e)
