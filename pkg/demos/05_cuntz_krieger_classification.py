"""
Classifying Cuntz-Krieger algebras
==================================

For a {0,1} matrix A the total extension group is the cokernel of I
minus the block sum of A_hat and A, and it decides isomorphism alone.
Here a batch of random matrices is sorted into classes.
"""

import random
from collections import defaultdict

from kinvariants import all_ones, iso_triple, k_triple, total_ext1_matrix, validate
from kinvariants.oracle import random_ck_matrix

# The golden mean shift gives the same algebra as the full 2-shift.
golden = validate([[1, 1], [1, 0]])
print("golden mean ~ O_2:", iso_triple(k_triple(golden), k_triple(all_ones(2))))

rng = random.Random(1)
classes = defaultdict(list)
for k in range(30):
    A = random_ck_matrix(rng, max_n=5)
    classes[str(total_ext1_matrix(A))].append(k)

for invariant, members in sorted(classes.items(), key=lambda kv: (-len(kv[1]), kv[0])):
    print(f"Ext_t1 = {invariant:16} {len(members):2} matrices  {members}")
