"""The bidegree-(1,6) slice cut out by a (1,2) reference curve.

Pairs every H of bidegree (1,6) against the fixed reference form
C = X1*Y2^2 + Y1*X2^2 through the (1,2) bi-transvectant and studies the
9-dimensional solution space of T_(1,2)(H, C) = 0: its defining equations in
binomial coordinates, its decomposition into torus-weight lines and planes,
and the stabilizer of C itself.

Run:  python demos/02_slice_of_bidegree_16.py
"""

from fractions import Fraction

from biforms import (
    BiForm,
    BinaryForm,
    GroupPair,
    act,
    bitransvectant,
    branch_form,
    from_binomial_coeffs,
    is_squarefree,
    kernel_basis,
    projective_stabilizer_dim,
    rank,
    rref,
    transvectant_matrix,
    weight_of,
    QMat,
)

C = BiForm.parse("X1*Y2^2 + Y1*X2^2")
print("reference curve:", C)

# --- the slice equations in binomial coordinates ----------------------------
# write H = X1*P + Y1*Q with P, Q expressed in binomial-scaled coordinates
# alpha_0..alpha_6 and beta_0..beta_6
zero6 = BinaryForm.zero(6)
columns = []
for block in ("alpha", "beta"):
    for i in range(7):
        unit = [Fraction(0)] * 7
        unit[i] = Fraction(1)
        p = from_binomial_coeffs(6, unit)
        e = BiForm.from_pq(p, zero6) if block == "alpha" else BiForm.from_pq(zero6, p)
        columns.append(bitransvectant(e, C, 1, 2).coeff_vector())
system = QMat.from_columns(columns)
reduced, rk, _ = rref(system)
print(f"\nconstraint system: rank {rk} on 14 binomial coordinates")
print("reduced equations (alpha block | beta block):")
for row in reduced.entries[:rk]:
    print("  ", [str(x) for x in row[:7]], "|", [str(x) for x in row[7:]])
print("each row says alpha_i = beta_(i+2); the slice has dimension",
      kernel_basis(system).dim)

# --- the weight decomposition ------------------------------------------------
blocks = {
    0: ["X1*X2^2*Y2^4 + Y1*X2^4*Y2^2"],
    1: ["10*X1*X2^3*Y2^3 + 3*Y1*X2^5*Y2", "3*X1*X2*Y2^5 + 10*Y1*X2^3*Y2^3"],
    2: ["15*X1*X2^4*Y2^2 + Y1*X2^6", "X1*Y2^6 + 15*Y1*X2^2*Y2^4"],
    3: ["X1*X2^5*Y2", "Y1*X2*Y2^5"],
    4: ["X1*X2^6", "Y1*Y2^6"],
}
print("\ntorus weights under (X1, Y1, X2, Y2) -> (X1, t^2 Y1, X2, t Y2), twist t^-4:")
for k, texts in blocks.items():
    for text in texts:
        v = BiForm.parse(text)
        in_slice = bitransvectant(v, C, 1, 2).is_zero()
        print(f"  weight {weight_of(v, (0, 2, 0, 1), -4):+d}  "
              f"(in slice: {in_slice})  {text}")

# --- the stabilizer of the reference curve ----------------------------------
swap = ((0, 1), (1, 0))
print("\nswap on both factors fixes C:", act(GroupPair(swap, swap), C) == C)
alpha = Fraction(3)
g = GroupPair([[1, 0], [0, alpha ** 2]], [[1, 0], [0, alpha]])
print("one-parameter subgroup scales C by alpha^2:", act(g, C) == alpha ** 2 * C)
print("infinitesimal projective stabilizer dimension:", projective_stabilizer_dim(C))

# --- a non-degeneracy witness in the slice picture --------------------------
H0 = BiForm.parse("X1*X2^3*Y2^3 + Y1*(X2^4*Y2^2 + X2^2*Y2^4)")
m = transvectant_matrix(H0, 1, 2, (1, 2))
ker = kernel_basis(m)
gen = BiForm.from_coeff_vector((1, 2), ker.basis.entries[0])
print(f"\nwitness H0 pairs V_(1,2) -> V_(0,4) with rank {rank(m)};"
      f" kernel dim {ker.dim}")
print("kernel generator:", gen)
b = branch_form(gen)
print("its branch form", b, "is squarefree:", is_squarefree(b),
      "(the kernel curve is smooth)")
