"""Dev scratch: verify spec examples computationally before freezing tests."""
from rankone.words import Word, minimal_period, is_period, find_occurrences
from rankone.construction import (
    RankOneParams, Stage, PeriodicExtension, AffineExtension, ExplicitExtension,
    build_vn, vn_length, telescope, v_prefix, vstar_suffix,
    LeftTail, RightTail, FixedPoint, point_window, expected_occurrences,
    scan_decomposition, language_words,
)
from rankone.codes import (
    SlidingBlockCode, identity_code, constant_code, run_detector_code,
    apply_code, alpha_n, beta_a, normalize_for_code, w_prefix, wstar_suffix,
    image_point_window,
)

W = Word.from_string

# P1: q0=2,a01=1, q1=2,a11=2 (explicit)
p1 = RankOneParams((Stage(2, (1,)), Stage(2, (2,))))
# P1ext: periodic extension (stage2 = stage0 etc.)
p1ext = RankOneParams((Stage(2, (1,)), Stage(2, (2,))), PeriodicExtension(2), declared_bound=2)
# P3: q_n=2, a_{n,1}=n+1
p3 = RankOneParams((), AffineExtension(q=2, slots=(1,), coeff=1, offset=1))

det = run_detector_code()

print("v1(p1) =", build_vn(p1, 1).to_string(), "expect 010")
print("v2(p1) =", build_vn(p1, 2).to_string(), "expect 01011010")
p_b = RankOneParams((Stage(3, (0, 1)),))
print("v1(q0=3,a=(0,1)) =", build_vn(p_b, 1).to_string(), "expect 0010")
print("lengths:", vn_length(p1, 1), vn_length(p1, 2), "expect 3 8")

t = telescope(p1, [0, 2])
print("telescope [0,2]:", t.stages[0], "expect q=4 row (1,2,1)")
print("  v1 of telescoped:", build_vn(t, 1).to_string(), "expect 01011010")
pz = RankOneParams((Stage(2, (0,)), Stage(2, (0,))))
tz = telescope(pz, [0, 2])
print("telescope zeros:", tz.stages[0], "word", build_vn(tz, 1).to_string(), "expect 0000")
print("identity telescope is same object:", telescope(p1, [0, 1, 2]) is p1)

print("v_prefix(p1,5) =", v_prefix(p1, 5).to_string(), "expect 01011")
print("vstar_suffix(p1,5) =", vstar_suffix(p1, 5).to_string(), "expect 11010")
print("vstar_suffix(p1,3) =", vstar_suffix(p1, 3).to_string(), "expect 010")

print("point LeftTail(0)[-3,4] =", point_window(p1, LeftTail(0), -3, 4).to_string(), "expect 11101011")
print("point FixedPoint[0,4] =", point_window(p1, FixedPoint(), 0, 4).to_string(), "expect 11111")
print("point RightTail(0)[-4,2] =", point_window(p1, RightTail(0), -4, 2).to_string(), "spec-oracle: 1101011")

d = expected_occurrences(p1, 1, 2)
print("exp occ (1,2):", d.starts, d.spacers, "expect (0,5) (2,)")
p13 = RankOneParams((Stage(2, (1,)), Stage(2, (2,)), Stage(2, (1,))))
d = expected_occurrences(p13, 1, 3)
print("exp occ (1,3):", d.starts, d.spacers, "expect (0,5,9,14) (2,1,2)")

print("scan v2:", [(x.starts, x.spacers) for x in scan_decomposition(p1, 1, W("01011010"))])
print("scan 010:", [(x.starts, x.spacers) for x in scan_decomposition(p1, 1, W("010"))])
try:
    scan_decomposition(p1, 1, W("0101"))
    print("scan 0101: PARSED (unexpected)")
except Exception as e:
    print("scan 0101: no-parse ok:", type(e).__name__)

print("language(2) of p1ext:", sorted("".join(map(str, t)) for t in language_words(p1ext, 2)))

print("apply identity:", apply_code(identity_code(), W("01011010")).to_string())
print("apply det 0110:", apply_code(det, W("0110")).to_string(), "expect 010")
print("alpha1(det,p1) =", alpha_n(det, p1, 1).to_string(), "expect 00")
print("alpha2(det,p1) =", alpha_n(det, p1, 2).to_string(), "expect 0001000")
print("beta(det,p1,2) =", beta_a(det, p1, 2).to_string(), "expect 010")
print("beta(det,p1,1) =", beta_a(det, p1, 1).to_string(), "expect 00")

n1 = normalize_for_code(p1ext, identity_code())
print("normalize(p1ext, id) unchanged:", n1 is p1ext or n1 == p1ext, "lh(v1)=", vn_length(n1,1))
code_r4 = SlidingBlockCode(4, 2, tuple(1 if i == 31 else 0 for i in range(32)))
n2 = normalize_for_code(p1ext, code_r4)
print("normalize(p1ext, R=4,B=2): lh(v1) =", vn_length(n2, 1), "expect >= 12")

print("w_prefix(det,p1,4) =", w_prefix(det, p1, 4).to_string(), "expect 0001")
print("wstar_suffix(det,p1,4) =", wstar_suffix(det, p1, 4).to_string(), "expect 1000")

print("img FixedPoint[0,3] det:", image_point_window(det, p1, FixedPoint(), 0, 3).to_string(), "expect 1111")
print("img LeftTail(0)[-3,1] det:", image_point_window(det, p1, LeftTail(0), -3, 1).to_string(),
      "(spec guessed 11100; sound derivation gives 11000)")
print("img LeftTail(0)[0,4] id:", image_point_window(identity_code(), p1, LeftTail(0), 0, 4).to_string(), "expect 01011")

# ---- THE tail-separation question: first 0 position of image of z_K ----
print()
np3 = normalize_for_code(p3, det)
print("normalized p3 v1:", build_vn(np3, 1).to_string())
a1 = alpha_n(det, np3, 1)
print("alpha_1(np3):", a1.to_string(), " i0 =", list(a1.symbols).index(0))
for K in range(-3, 4):
    img = image_point_window(det, p3, LeftTail(K), K - 6, K + 8)
    syms = img.symbols
    first0 = next(i for i, s in enumerate(syms) if s == 0) + (K - 6)
    print(f"  K={K:+d}: first 0 of image at {first0}  (K+i0 would be {K})")

# last 0 of z*_K images
for K in range(-2, 3):
    img = image_point_window(det, p3, RightTail(K), K - 14, K + 6)
    syms = img.symbols
    last0 = max(i for i, s in enumerate(syms) if s == 0) + (K - 14)
    print(f"  K={K:+d}: last 0 of z*_K image at {last0} (offset {last0-K})")
