"""Pairwise cosine matrix for three fixed 8-dimensional vectors."""
import math

vectors = [
    [0.31, 1.2, 0.77, 2.05, 0.44, 0.9, 1.5, 0.03],
    [1.1, 0.25, 0.6, 1.8, 0.35, 1.4, 0.05, 0.66],
    [0.72, 0.48, 1.9, 0.12, 1.05, 0.58, 0.94, 1.27],
]


def cos(a, b):
    dot = sum(x * y for x, y in zip(a, b))
    return dot / (math.sqrt(sum(x * x for x in a)) * math.sqrt(sum(y * y for y in b)))


for i, a in enumerate(vectors):
    print("{" + ", ".join("0.0" if i == j else f"{cos(a, b):.17g}" for j, b in enumerate(vectors)) + "},")
