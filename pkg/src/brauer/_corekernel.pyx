# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled diagram-composition kernel; see _purekernel for the contract."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


def compose_pairings(tuple p1, tuple p2, int n):
    cdef int two_n = 2 * n
    cdef int *a = <int *> malloc(two_n * sizeof(int))
    cdef int *b = <int *> malloc(two_n * sizeof(int))
    cdef int *result = <int *> malloc(two_n * sizeof(int))
    cdef int *visited = <int *> malloc(n * sizeof(int))
    if a == NULL or b == NULL or result == NULL or visited == NULL:
        free(a); free(b); free(result); free(visited)
        raise MemoryError()

    cdef int i, start, side, v, w, end, m, m2, cur, loops
    try:
        for i in range(two_n):
            a[i] = p1[i]
            b[i] = p2[i]
            result[i] = -1
        for i in range(n):
            visited[i] = 0

        for start in range(two_n):
            if result[start] >= 0:
                continue
            side = 1 if start < n else 2
            v = start
            while True:
                if side == 1:
                    w = a[v]
                    if w < n:
                        end = w
                        break
                    visited[w - n] = 1
                    side = 2
                    v = w - n
                else:
                    w = b[v]
                    if w >= n:
                        end = w
                        break
                    visited[w] = 1
                    side = 1
                    v = n + w
            result[start] = end
            result[end] = start

        loops = 0
        for m in range(n):
            if visited[m]:
                continue
            loops += 1
            cur = m
            while not visited[cur]:
                visited[cur] = 1
                m2 = b[cur]
                visited[m2] = 1
                cur = a[n + m2] - n

        return tuple([result[i] for i in range(two_n)]), loops
    finally:
        free(a)
        free(b)
        free(result)
        free(visited)
