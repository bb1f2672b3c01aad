"""Textbook full-matrix Wagner-Fischer edit distance (test oracle)."""

from __future__ import annotations


def reference_levenshtein(a: str, b: str) -> int:
    rows = len(a) + 1
    cols = len(b) + 1
    table = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        table[i][0] = i
    for j in range(cols):
        table[0][j] = j
    for i in range(1, rows):
        ai = a[i - 1]
        row = table[i]
        prev = table[i - 1]
        for j in range(1, cols):
            cost = 0 if ai == b[j - 1] else 1
            row[j] = min(prev[j] + 1, row[j - 1] + 1, prev[j - 1] + cost)
    return table[rows - 1][cols - 1]
