"""
Entropy of an eight-draw sample, step by step
=============================================

Five outcomes were observed: one of them four times, the other four once
each.  The sample becomes the polynomial y^4 + 4y and its entropy comes
out of counting alone.
"""
from fractions import Fraction

from polyentropy import (
    SampleTable,
    categorical_entropy,
    compare_entropies,
    empirical_distribution,
    poly_from_sample,
    shannon_entropy,
)

rows = tuple((f"d{i}", "o1") for i in range(1, 5))
rows += (("d5", "o2"), ("d6", "o3"), ("d7", "o4"), ("d8", "o5"))

p = poly_from_sample(SampleTable(rows))
print("sample polynomial:", p)

# one position per draw, decorated with the draws of its outcome
total = p.total_polynomial()
print("derivative:       ", p.derivative())
print("total polynomial: ", total)
print("outcomes:", p.position_count(), " draws:", p.term_count())

# a section of the total picks, for every draw, one draw of the same outcome
print("sections of the total:", total.section_count())

rect = categorical_entropy(p)
print("entropy rectangle: area", rect.a, "x", rect.b)
print("width:", rect.width())
print("log aspect ratio:", rect.log_aspect_ratio())

dist = empirical_distribution(p)
assert dist.probabilities == (Fraction(1, 2),) + (Fraction(1, 8),) * 4
print("empirical distribution:", " ".join(str(x) for x in dist))
print("classical entropy:", shannon_entropy(dist))

report = compare_entropies(p)
print("routes agree:", report.match)
