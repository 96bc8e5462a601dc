"""Compare the packed-integer shuffle kernel against the plain recursion
on products of Catalan elements."""

import time

from qshuffle_pbw.catalan import catalan_element
from qshuffle_pbw.qshuffle import clear_cache, shuffle_mul, shuffle_mul_right_recursion


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


for i, j in [(1, 3), (2, 3), (2, 4), (3, 4)]:
    a, b = catalan_element(i), catalan_element(j)
    clear_cache()
    fast, t_fast = timed(shuffle_mul, a, b)
    slow, t_slow = timed(shuffle_mul_right_recursion, a, b)
    assert fast == slow
    print(f"C_{i} * C_{j}: {len(fast):5d} words  kernel {t_fast:7.3f}s  plain {t_slow:7.3f}s")
