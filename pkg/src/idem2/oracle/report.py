"""Set comparison between constructed idempotents and the brute-force oracle."""
from __future__ import annotations

from pydantic import BaseModel

from idem2.datamodel.model import MatrixDoc
from idem2.matrix.mat2 import Mat2


class OracleReport(BaseModel):
    passed: bool
    count_constructed: int
    count_brute: int
    missing: list[MatrixDoc] = []  # found by the oracle, absent from the construction
    extra: list[MatrixDoc] = []    # constructed, unknown to the oracle

    def to_json(self):
        return self.model_dump_json()


def compare_sets(constructed: list[Mat2], brute: list[Mat2]) -> OracleReport:
    """Compare two lists of matrices as sets; diffs are listed in canonical order"""
    mine = {A.canonical_key(): A for A in constructed}
    truth = {A.canonical_key(): A for A in brute}
    missing = [MatrixDoc.from_mat2(truth[k]) for k in sorted(truth.keys() - mine.keys())]
    extra = [MatrixDoc.from_mat2(mine[k]) for k in sorted(mine.keys() - truth.keys())]
    return OracleReport(
        passed=not missing and not extra,
        count_constructed=len(constructed),
        count_brute=len(brute),
        missing=missing,
        extra=extra,
    )
