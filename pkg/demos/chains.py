"""
Chains
======

For a chain with n vertices, the ideal of paths with t vertices is
Cohen-Macaulay exactly when t = n or 2t = n.  Print the table and check
it against brute-force cover enumeration.
"""

from pathideals import classify, line_tree, unmixed_oracle

N = 12
print("n\\t " + " ".join(f"{t:>2}" for t in range(2, N + 1)))
for n in range(2, N + 1):
    row = []
    for t in range(2, N + 1):
        if t > n:
            row.append("  ")
            continue
        r = classify(line_tree(n), t)
        assert r.cohen_macaulay == unmixed_oracle(line_tree(n), t).verdict
        row.append(" G" if r.gorenstein else " C" if r.cohen_macaulay else " .")
    print(f"{n:>3} " + " ".join(row))

# C = Cohen-Macaulay, G = also Gorenstein; the G column is the diagonal t = n
print()
r = classify(line_tree(6), 3)
print("L_6, t=3 certificate:", r.certificate.to_dict())
