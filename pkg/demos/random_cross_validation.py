"""
Cross-validating on random trees
================================

Generate seeded random trees, run every oracle against the classifier and
summarise the agreement.  A nonzero divergence count would be a bug.
"""

import collections

from pathideals import cross_validate, random_corpus, sweep

trees = random_corpus(200, 11, seed=1)
result = cross_validate(sweep(trees))
print(result.summary())

# how the Cohen-Macaulay instances spread over t; for large t most
# trees have no path that long and the zero ideal counts as CM
by_t = collections.Counter()
total = collections.Counter()
for rec in result.records:
    total[rec["t"]] += 1
    by_t[rec["t"]] += rec["classify"]["cohen_macaulay"]
for t in sorted(total):
    print(f"t={t:>2}: {by_t[t]:>4} / {total[t]:<4} Cohen-Macaulay")

# each record keeps every oracle verdict with its witness
print(result.records[0]["oracles"]["unmixed"])
