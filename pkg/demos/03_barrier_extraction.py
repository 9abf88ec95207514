"""From covered cells to a minimum-camera barrier.

Builds the weighted coverage graph for a hand-drawn coverage pattern,
prunes dead ends, runs the shortest-path search, and reports the barrier
along with the column-minimum multiplicity estimate.
"""

from cambarrier import (
    build_graph,
    k_barrier_count,
    prune_degree_one,
    shortest_barrier,
)

M, N = 4, 6
# A meandering covered band with some stray cells; (1, 5) dangles off the
# band by a single corner and cannot sit on any crossing path.
covered = {
    (1, 2), (1, 3), (1, 5),
    (2, 1), (2, 3), (2, 6),
    (3, 1), (3, 4), (3, 5), (3, 6),
    (4, 2), (4, 3), (4, 4),
}

print(f"{M} x {N} grid, {len(covered)} covered cells:")
for i in range(1, M + 1):
    print("  " + "".join("#" if (i, j) in covered else "." for j in range(1, N + 1)))

graph = build_graph(covered, M, N)
print(f"\ngraph: {len(graph.cells)} cell nodes, {sum(1 for _ in graph.edges())} edges")

pruned = prune_degree_one(graph)
dropped = sorted(graph.cells - pruned.cells)
print(f"degree-one pruning removed {len(dropped)} dead-end cells: {dropped}")

result = shortest_barrier(pruned)
print(f"\nbarrier exists: {result.exists}")
print(f"path: {' -> '.join(str(c) for c in result.path)}")
print(f"total weight (camera increments): {result.total_weight}")

k = k_barrier_count(covered, M, N)
print(f"column-minimum multiplicity estimate k = {k}")
