"""Which torus links T(n, k) bound a definite quasipositive surface?

The closure of delta_n^k is the torus link T(n, k).  Its quasipositive
surface has a symmetrized Seifert form; when that form is negative definite
it is a root lattice, and the short-vector enumeration names it.
"""

from sqplinks import classify_root_lattice, delta, qp_seifert_matrix, symmetrize
from sqplinks.lattice import definiteness, inertia


def form(n, k):
    return symmetrize(qp_seifert_matrix(delta(n, k)))


print("delta_n^k   rank  inertia (+, -, 0)   verdict")
for n in range(2, 6):
    for k in range(2, 7):
        f = form(n, k)
        kind = definiteness(f)
        label = str(classify_root_lattice(f)) if kind == "negative_definite" else kind
        print(f"  n={n} k={k}   {f.rank:>4}  {str(inertia(f)):<18}  {label}")
    print()

# Definite exactly when {n, k} is {2, *}, {3, 3}, {3, 4} or {3, 5}: the
# forms are A, D4, E6 and E8, and T(n, k) = T(k, n) gives the same lattice.
# T(3, 6) is where the chain breaks: its form picks up a radical.
print("T(3,6) inertia:", inertia(form(3, 6)))
