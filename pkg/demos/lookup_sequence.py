"""
Identifying a column with the OEIS
==================================

Responses are cached on disk; set RIORDANEMBED_OEIS_CACHE to choose where.
Pass --offline to use only the cache.
"""

import sys

from riordanembed import NetworkUnavailable, RiordanArray, triangle
from riordanembed.oeis import SequenceQuery, lookup

col = list(triangle(RiordanArray.from_strings("c", "x*c"), 8).column(0))
try:
    for hit in lookup(SequenceQuery(col, max_results=3), offline="--offline" in sys.argv):
        print(hit.id, hit.name)
except NetworkUnavailable as exc:
    print("lookup skipped:", exc)
