import pytest

from zdb.interval import Precision
from zdb import ledger


@pytest.fixture(scope="session")
def ledger_results():
    """One full ledger run shared by every test that inspects verdicts."""
    return {r.check_id: r for r in ledger.run_all(Precision())}
