"""Cyclic baskets: plumbing m Hopf bands around a cycle.

The sign vector eps fixes the plumbing order at each vertex of the cycle.
Only p = #{eps_i = +1} matters, and the symmetrized form is congruent to a
tridiagonal matrix with one corner entry, Q_m(+-1).
"""

from sqplinks.baskets import (
    CyclicBasket,
    boundary_classes,
    cyclic_congruence_check,
    cyclic_lk,
    cyclic_report,
    cyclic_seifert_matrix,
    lk_from_boundary,
    normalize_eps,
    q_matrix,
    sign_change_indices,
)

cb = CyclicBasket.parse("+-+--")
print(f"basket {cb}: p = {cb.p}, normalized to {normalize_eps(cb)}")
for row in cyclic_seifert_matrix(cb).entries:
    print("   ", " ".join(f"{x:>2}" for x in row))

m, p = cb.m, cb.p
print(f"\nflip rows/columns {sign_change_indices(m, p)} of -(S + S^T) to reach Q_{m}:")
for row in q_matrix(m, (-1) ** (m - p)).gram:
    print("   ", " ".join(f"{x:>2}" for x in row))
print("congruence verified:", cyclic_congruence_check(cb))

# Linking number, two ways: the closed formula and a walk around the
# boundary of the ribbon graph, pairing components with the Seifert form.
print(f"\nboundary components: {len(boundary_classes(m))}")
print(f"lk formula {cyclic_lk(cb)}, boundary trace {lk_from_boundary(cb)}")

print("\n m  p   lk  form               class  root test")
for m in range(3, 9):
    for p in range(1, m):
        r = cyclic_report(m, p)
        cls = str(r.lattice_class) if r.lattice_class else "-"
        n = "never" if r.obstructed_from_n is None else f"n >= {r.obstructed_from_n}"
        print(f"{m:>2} {p:>2}  {r.lk:>3}  {r.definiteness:<17}  {cls:<5}  {n}")
