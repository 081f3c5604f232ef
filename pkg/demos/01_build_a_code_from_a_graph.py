# Building a binary code out of a graph
#
# Any connected graph with at least one cycle defines a binary linear
# code: codewords are the edge sets that form unions of cycles (every
# vertex touched an even number of times).  With m edges and v
# vertices the code has length m, dimension m - v + 1, and minimum
# distance equal to the girth.
#
# Run me as:  python demos/01_build_a_code_from_a_graph.py

import numpy as np

from graphstego import (
    build_code,
    build_graph,
    bundled_codebook_text,
    code_from_codebook,
    parse_codebook,
)


def show_matrix(label, matrix):
    print(f"{label}:")
    for row in matrix:
        print("   ", "".join(str(b) for b in row))


# --- the smallest possible example: a triangle --------------------------
#
# Three vertices, three edges.  One independent cycle, so one generator
# row; two spanning-tree edges, so two parity-check rows.

triangle = build_graph(3, [(1, 2), (2, 3), (1, 3)])
code = build_code(triangle)
print(f"triangle code: length {code.n_len}, dimension {code.k}, distance {code.d}")
show_matrix("generator (one row per independent cycle)", code.generator)
show_matrix("parity check (one row per tree edge)", code.parity_check)

# The only nonzero codeword is the triangle itself, 111 — which is why
# the distance equals the girth.

# --- the worked reference: K5 with a pinned tree ------------------------
#
# Codebooks are plain text and shared between sender and receiver.  The
# bundled one describes the complete graph K5 with a specific edge
# labeling and an explicit spanning tree (the path 1-2-3-4-5, listed as
# edge ids 1, 5, 10, 7).  The tree line's order fixes the order of the
# parity-check rows, so the syndrome bit layout is part of the file.

text = bundled_codebook_text("k5")
print()
print("the bundled reference codebook:")
print(text)

graph, tree_ids = parse_codebook(text)
code = code_from_codebook(text)
print(f"K5 code: length {code.n_len}, dimension {code.k}, distance {code.d}")
print(f"pinned tree edges (row order): {code.tree.tree_edges}")
print(f"chords (generator row order):  {code.tree.chords}")
show_matrix("generator", code.generator)
show_matrix("parity check", code.parity_check)

# Restricted to the tree columns the parity check is an identity
# matrix, one column per tree edge in row order:

cols = [eid - 1 for eid in code.tree.tree_edges]
print("parity check restricted to tree columns (identity):")
print(code.parity_check[:, cols])

# Orthogonality: every generator row has zero syndrome.

syndromes = (code.generator.astype(int) @ code.parity_check.T.astype(int)) % 2
print("generator x parity-check^T (all zero):", not syndromes.any())

# Sixteen syndromes (2^4) partition the 1024 words of GF(2)^10 into
# cosets of the 64 codewords; the next demo tabulates their leaders.
assert 2 ** (code.n_len - code.k) == 16
