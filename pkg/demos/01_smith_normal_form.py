"""
Smith normal form and cokernels
===============================

Every group in this library is computed as the cokernel of an integer
matrix, and every cokernel comes from a Smith normal form.
"""

from kinvariants import IntMatrix, cokernel, smith_normal_form

# A small matrix.  U and V are unimodular and U @ M @ V is diagonal.
M = IntMatrix.from_rows([[2, 4], [6, 8]])
res = smith_normal_form(M)
print("M =", M.tolist())
print("diagonal:", res.diagonal)
print("U @ M @ V == D:", res.U @ M @ res.V == res.D)

# The diagonal is a divisibility chain; entries > 1 are the invariant
# factors of Z^n / M Z^m, zeros become free summands.
E3 = IntMatrix.ones(3)
print("coker(I - E_3) =", cokernel(IntMatrix.identity(3) - E3))
print("coker(0_2x2)   =", cokernel(IntMatrix.zeros(2, 2)))

# Arithmetic is exact, so huge entries are no problem.
big = IntMatrix.from_rows([[2**80, 3**40], [5**30, 7**25]])
print("SNF of a matrix with 80-bit entries:", smith_normal_form(big).diagonal)
