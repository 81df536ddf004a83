"""Print translation-length bound tables for a few surface families.

Run as:  python3 demos/bound_tables.py
"""

from fractions import Fraction

from curvebounds import (
    SurfaceSig,
    flm_upper_bound,
    penner_upper_bound,
    punctured_genus2_upper_bound,
    translation_length_lower_bound,
    translation_length_upper_bound,
)


def show(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return f"{x:.6f}"


print("closed surfaces")
print(f"{'g':>3} {'lower':>12} {'upper':>10} {'flm':>10} {'certified':>10}")
for g in range(2, 11):
    lower = translation_length_lower_bound(SurfaceSig(g, 0))
    upper = translation_length_upper_bound(g)
    k, certified = penner_upper_bound(g)
    print(
        f"{g:>3} {show(lower):>12} {show(upper):>10} "
        f"{flm_upper_bound(g):>10.6f} {show(certified):>7} (k={k})"
    )

print()
print("punctured surfaces (coefficient drops from 162 to 18)")
for g, n in ((0, 5), (1, 2), (2, 1), (2, 4), (5, 3)):
    lower = translation_length_lower_bound(SurfaceSig(g, n))
    print(f"  g={g} n={n}  lower = {show(lower)}")

print()
print("genus 2 with many punctures, upper bound 20/(n-4)")
for n in range(5, 13):
    print(f"  n={n:>2}  upper = {show(punctured_genus2_upper_bound(n))}")
