from dataclasses import dataclass

from matrices.exceptions import DimensionMismatch
from matrices.matrix import DenseMatrix, hstack
from normal_forms.hermite import hermite_col


@dataclass(frozen=True)
class ColumnModule:
    """생성 행렬들의 열이 만드는 가군. canonical 이 같으면 같은 가군입니다."""
    canonical: DenseMatrix

    @property
    def rank(self):
        return self.canonical.cols

    def __eq__(self, other):
        if not isinstance(other, ColumnModule):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)


def column_module(generators):
    generators = list(generators)
    if not generators:
        raise DimensionMismatch('at least one generator block is required')
    rows = generators[0].rows
    if any(g.rows != rows for g in generators):
        raise DimensionMismatch(f'generator blocks must all have {rows} rows, '
                                f'got {[g.rows for g in generators]}')
    hermite = hermite_col(hstack(generators))
    # rank 이후의 열은 0 이므로 버립니다
    return ColumnModule(canonical=hermite.H.block(0, rows, 0, hermite.rank))
