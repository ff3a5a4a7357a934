"""Lower bounds on the number of distinct entries, by exhaustive search.

Order 3: two values never suffice for an involutory MDS matrix, three do.
Order 4: over GF(2^3), three values never suffice, with both engines agreeing.
"""

import time

from invmds import SearchTask, make_field, search

f = make_field(3)


def run(**kw):
    t0 = time.perf_counter()
    r = search(SearchTask(field=f, **kw))
    wit = r.witnesses[0].rows if r.witnesses else None
    print(f"  n={kw['n']} k={kw['k']} {kw.get('engine', 'pattern'):7s} -> {r.outcome:13s}"
          f" nodes={r.nodes_explored:<9d} {time.perf_counter() - t0:5.1f}s  {wit or ''}")


print("order 3 over", f)
run(n=3, k=2)
run(n=3, k=3, require_exact_k=True)
run(n=3, k=2, mode="plain", require_exact_k=True)

print("order 4 over", f, "(takes several seconds)")
run(n=4, k=3, engine="pattern")
run(n=4, k=3, engine="direct")
