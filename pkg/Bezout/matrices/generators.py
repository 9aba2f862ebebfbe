"""테스트와 검증 배터리에서 쓰는 무작위 행렬 생성기 (시드 고정 random.Random 사용)"""
from .matrix import DenseMatrix


def random_matrix(ring, rng, rows, cols, bound=5, degree=0):
    return DenseMatrix(ring, rows, cols,
                       [ring.random_element(rng, bound, degree) for _ in range(rows * cols)])


def random_unimodular_pair(ring, rng, n, steps=6, bound=2, degree=0):
    """
    기본 행 연산의 곱으로 만든 가역 행렬 W 와 그 역행렬을 함께 돌려줍니다.
    W 에는 연산 E 를 왼쪽에서, 역행렬에는 E^-1 을 오른쪽에서 곱합니다.
    """
    w = DenseMatrix.identity(ring, n).to_rows()
    w_inv = DenseMatrix.identity(ring, n).to_rows()
    if n < 2:
        return DenseMatrix.from_rows(ring, w, n), DenseMatrix.from_rows(ring, w_inv, n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        if rng.random() < 0.2:
            w[i], w[j] = w[j], w[i]
            for r in w_inv:
                r[i], r[j] = r[j], r[i]
            continue
        c = ring.random_element(rng, bound, degree)
        # row_i += c * row_j  /  역: col_j -= c * col_i
        w[i] = [a + c * b for a, b in zip(w[i], w[j])]
        for r in w_inv:
            r[j] = r[j] - c * r[i]
    return DenseMatrix.from_rows(ring, w, n), DenseMatrix.from_rows(ring, w_inv, n)


def random_unimodular(ring, rng, n, steps=6, bound=2, degree=0):
    return random_unimodular_pair(ring, rng, n, steps, bound, degree)[0]
