"""Acceptance criteria, one test each, at full scale.

Each test prints one ``ACCEPTANCE <id> PASS|FAIL`` line with its details
and elapsed time, and asserts the criterion's time limit.
"""

import time

import pytest

from bihyp.enumeration.store import VerdictStore
from bihyp.suite import CLAIMS, Context

# Time limits in seconds, per criterion.
LIMITS = {1: 10, 2: 10, 3: 600, 4: 60, 5: 900, 6: 3600, 7: 600, 8: 300, 9: 300}


@pytest.fixture(scope="module")
def ctx(tmp_path_factory):
    store = VerdictStore(tmp_path_factory.mktemp("acceptance-store"))
    return Context("paper", seed=0, jobs=1, store=store, n7_budget=LIMITS[6])


@pytest.mark.parametrize("cid,title,fn", CLAIMS, ids=[f"criterion-{c[0]}" for c in CLAIMS])
def test_criterion(ctx, capsys, cid, title, fn):
    start = time.time()
    status, details = fn(ctx)
    elapsed = time.time() - start
    ok = status == "pass" and elapsed < LIMITS[cid]
    with capsys.disabled():
        print(f"\nACCEPTANCE {cid} {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s < {LIMITS[cid]}s): {title}: {details}")
    assert status == "pass", details
    assert elapsed < LIMITS[cid]
