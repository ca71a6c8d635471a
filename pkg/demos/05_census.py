# Counting conjugacy classes by invariants and by brute force.
import json

from semiconj import Family, census

# %% P(2) both ways; the two partitions must coincide
r = census(Family.PX, 2, "both")
print(r.class_count_invariant, r.class_count_bruteforce, r.partitions_agree)
for c in r.classes:
    print(c.representative.image, c.size, c.invariant)

# %% class counts for small n
for fam, ns, mode in [
    (Family.PX, range(1, 5), "invariant"),
    (Family.TX, range(1, 6), "invariant"),
    (Family.SYMX, range(1, 7), "invariant"),
    (Family.IX, range(1, 4), "bruteforce"),
]:
    counts = []
    for n in ns:
        rep = census(fam, n, mode)
        counts.append(rep.class_count_invariant or rep.class_count_bruteforce)
    print(f"{fam.name:5s}", counts)

# %% report as JSON
print(json.dumps(census(Family.SYMX, 3).to_dict(), indent=1)[:400])
