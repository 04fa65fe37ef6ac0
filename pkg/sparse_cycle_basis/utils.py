import itertools


def pairwise(iterable):
    "s -> (s0,s1), (s1,s2), (s2, s3), ..."
    a, b = itertools.tee(iterable)
    next(b, None)
    return zip(a, b)


def cyclic_pairwise(sequence):
    "s -> (s0,s1), (s1,s2), ..., (sn,s0)"
    return pairwise(itertools.chain(sequence, sequence[:1]))


def rotate_to(sequence, index):
    """``sequence`` read cyclically starting at ``index``."""
    return tuple(sequence[index:]) + tuple(sequence[:index])


def loop_erase(vertices, edges):
    """Shortcut a walk to a simple path between its end vertices.

    Parameters
    ----------
    vertices : sequence of int
        ``len(edges) + 1`` vertices of the walk.
    edges : sequence of int
        Edge traversed between consecutive vertices.

    Returns
    -------
    tuple of (tuple of int, tuple of int)
        Vertices and edges of the erased path.
    """
    path_vertices, path_edges = [vertices[0]], []
    seen = {vertices[0]: 0}
    for edge, v in zip(edges, vertices[1:]):
        if v in seen:
            cut = seen[v]
            for dropped in path_vertices[cut + 1 :]:
                del seen[dropped]
            del path_vertices[cut + 1 :]
            del path_edges[cut:]
        else:
            seen[v] = len(path_vertices)
            path_vertices.append(v)
            path_edges.append(edge)
    return tuple(path_vertices), tuple(path_edges)
