"""Run the whole claim suite and print the markdown summary.

The order-2 claim comes out refuted (see 03_order2_count.py), so the overall
verdict is fail; every other claim holds.
"""

from invmds import verify_paper_claims
from invmds.report import markdown_summary, report_document
from invmds.search import default_fields

fields = default_fields()
reports = verify_paper_claims(fields)
print(markdown_summary(report_document(reports, fields, "demo")))
