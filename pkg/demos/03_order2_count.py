"""How many 2x2 involutory MDS matrices with two distinct entries exist?

A natural guess is the 2^m - 2 matrices (a, a+1; a+1, a). Exhausting the
field shows three times as many: (a, a; a + 1/a, a) and its transpose are
involutory MDS too, for every a outside {0, 1}.
"""

from invmds import count_order2_family, make_field
from invmds.search import order2_form_violations

for m in range(2, 6):
    f = make_field(m)
    count = count_order2_family(f)
    others = order2_form_violations(f)
    print(f"GF(2^{m}): {count} matrices; 2^m - 2 = {2 ** m - 2}; "
          f"{len(others)} outside the (a, a+1; a+1, a) family")

f = make_field(3)
print("example outside the family over", f, ":", order2_form_violations(f)[0].rows)
