"""One test per acceptance criterion; each prints a PASS/FAIL line.

Also runnable directly: ``python tests/test_acceptance.py``.
"""
import sys

import pytest

from quivfix.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=[CRITERIA[k][0] for k in sorted(CRITERIA)])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print(f"\n{result.line()}")
    assert result.passed, result.failed()


if __name__ == "__main__":
    results = [run_criterion(k) for k in sorted(CRITERIA)]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
