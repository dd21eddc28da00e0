"""Build and verify a Bailey chain for the tetrahedron-index kernel.

A Bailey pair (alpha, beta) at parameter t satisfies
    beta_k = sum_n I(t, n + k) alpha_n.
The step transform moves a pair from parameter t to t + s:
    alpha'_n = (-1)^n q^(-n/2) I(3t - s + n, 2s - t - n) alpha_n,
    beta'_m  = sum_k (-1)^m q^(k - m/2)
               I(-m - 2s + 2t, 2s - t + k) I(m + 2s - t, k - m - s - t) beta_k,
and the lemma states the new pair again satisfies the defining relation.
This script checks that mechanically, coefficient by coefficient.

Run:  python3 demos/03_bailey_chain.py
"""

from tetindex import bailey_chain, bailey_seed_delta, bailey_step, bailey_verify

print("Seed: alpha_n = delta_{n,0} at t = 1, so beta_k = I(1, k):\n")
state = bailey_seed_delta(0, 1)
for k in range(-2, 3):
    print(f"  beta_{k:>2} = {state.beta(k, 8)}")

print("\nOne step with s = 1 (new parameter t = 2):\n")
stepped = bailey_step(state, 1)
rep = bailey_verify(stepped, (-3, 3), 6)
print(f"  pair relation: {'holds' if rep.holds else 'FAILS'} to H={rep.verified_to}")
for k in range(-1, 2):
    print(f"  beta'_{k:>2} = {stepped.beta(k, 6)}")

print("\nA depth-2 chain (steps s = 1 then s = -1), verified at every level:\n")
for depth, rep in enumerate(bailey_chain(0, 1, [1, -1], (-2, 2), 4)):
    print(f"  depth {depth}: {'holds' if rep.holds else 'FAILS'}")
