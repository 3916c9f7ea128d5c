"""A short tour of one field: Q(sqrt(5), sqrt(209)).

Walks from the canonical triple to the genus field, the totally real genus
subfield L, the unit index, the class number, and the Euclidean verdict.
Run: python3 demos/field_tour.py
"""

from genuslab import (
    class_number,
    class_number_biquadratic,
    discriminant,
    euclidean_verdict,
    from_radicands,
    genus_field,
    genus_number,
    real_genus_subfield,
    unit_index,
)

K = from_radicands(5, 209)
print(f"K = Q(sqrt(5), sqrt(209)), canonical triple {K.triple}, c = {K.c}")
print(f"discriminant = {K.discriminant} = (c * m1 m2 m3)^2")

print(f"\nquadratic subfields have radicands {K.subfield_radicands}")
for n in K.subfield_radicands:
    print(f"  h(Q(sqrt({n}))) = {class_number(discriminant(n))}")

G = genus_field(K)
print(f"\ngenus field generated by square roots of {sorted(G.generators)}")
print(f"genus number [G(K):K] = {genus_number(K)}")

L = real_genus_subfield(K)
print(f"totally real genus subfield L = Q(sqrt of {L.reduced_generators()})")
print(f"[L:K] = {L.degree // 4}")

Q = unit_index(K).Q
h = class_number_biquadratic(K)
print(f"\nunit index Q = {Q}, Brauer relation gives h_K = h1 h2 h3 Q / 4 = {h}")

v = euclidean_verdict(K)
print(f"\nverdict: {v.status} (reasons: {', '.join(v.reasons)})")
print("h_K = 2 exceeds [L:K] = 1, so the Hilbert class field is non-abelian")
print("over Q; the congruence pattern q = 1, r = s = 3 (mod 4) forces the")
print("dihedral obstruction, and the unconditional criterion does not apply.")
