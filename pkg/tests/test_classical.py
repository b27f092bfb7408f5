from random import Random

import pytest

from dcposets import analyze, rsk, young
from dcposets.classical import (
    GTPattern,
    SSYT,
    classical_insert_rsk,
    gt_from_rpp,
    is_rpp,
    order_from_ranks,
    row_major_order,
    ssyt_from_gt,
    toggle_rpp,
    two_line_array,
)
from dcposets.families import young_box_ids

MATRIX = [[1, 0, 2], [0, 2, 0], [1, 1, 0]]
RANKS = [[1, 2, 3], [4, 6, 8], [5, 7, 9]]


def test_two_line_array():
    assert two_line_array(MATRIX) == [
        (1, 1), (1, 3), (1, 3), (2, 2), (2, 2), (3, 1), (3, 2),
    ]


def test_insertion_pair():
    p, q = classical_insert_rsk(MATRIX)
    assert p.rows == ((1, 1, 2, 2), (2, 3), (3,))
    assert q.rows == ((1, 1, 1, 3), (2, 2), (3,))


def test_zero_matrix_gives_empty_tableaux():
    p, q = classical_insert_rsk([[0, 0], [0, 0]])
    assert p.rows == () and q.rows == ()


def test_insertion_properties_random():
    rng = Random(6)
    for _ in range(50):
        matrix = [[rng.randint(0, 3) for _ in range(3)] for _ in range(3)]
        p, q = classical_insert_rsk(matrix)
        total = sum(sum(row) for row in matrix)
        assert p.size == q.size == total
        assert p.shape == q.shape


def test_toggle_rpp_single_cell():
    assert toggle_rpp([[7]]) == [[7]]


def test_toggle_rpp_pinned_example():
    rpp = toggle_rpp(MATRIX, order_from_ranks(RANKS))
    assert rpp == [[1, 2, 3], [1, 2, 3], [2, 4, 4]]
    assert is_rpp(rpp)


def test_toggle_rpp_order_independent():
    rng = Random(8)
    shape = (3, 3, 3)

    def random_valid_order():
        remaining = set(row_major_order(shape))
        out = []
        while remaining:
            ready = [
                (i, j)
                for (i, j) in remaining
                if (i - 1, j) not in remaining and (i, j - 1) not in remaining
            ]
            out.append(ready[rng.randrange(len(ready))])
            remaining.remove(out[-1])
        return tuple(out)

    for _ in range(20):
        matrix = [[rng.randint(0, 4) for _ in range(3)] for _ in range(3)]
        base = toggle_rpp(matrix)
        assert toggle_rpp(matrix, random_valid_order()) == base


def test_toggle_rpp_rejects_bad_order():
    with pytest.raises(ValueError):
        toggle_rpp(MATRIX, ((0, 1), (0, 0), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)))
    with pytest.raises(ValueError):
        order_from_ranks([[1, 2], [2, 3]])


def test_gt_extraction_pinned():
    rpp = [[1, 2, 3], [1, 2, 3], [2, 4, 4]]
    lower, upper = gt_from_rpp(rpp)
    assert lower.rows == ((4, 2, 1), (4, 1), (2,))
    assert upper.rows == ((4, 2, 1), (3, 2), (3,))
    p, q = classical_insert_rsk(MATRIX)
    assert ssyt_from_gt(lower).rows == p.rows
    assert ssyt_from_gt(upper).rows == q.rows


def test_gt_requires_square_rpp():
    with pytest.raises(ValueError):
        gt_from_rpp([[1, 2, 3], [1, 2, 3]])
    with pytest.raises(ValueError):
        gt_from_rpp([[3, 1], [1, 5]])  # not an RPP


def test_gt_interlacing_validation():
    with pytest.raises(ValueError):
        GTPattern(((1, 3), (2,)))
    GTPattern(((3, 1), (2,)))


def test_ssyt_validation():
    with pytest.raises(ValueError):
        SSYT(((2, 1),))
    with pytest.raises(ValueError):
        SSYT(((1, 1), (1,)))


def test_constant_rpp_gives_superstandard():
    rpp = [[2, 2, 2], [2, 2, 2], [2, 2, 2]]
    lower, upper = gt_from_rpp(rpp)
    expected = SSYT(((1, 1), (2, 2), (3, 3)))
    assert ssyt_from_gt(lower) == expected
    assert ssyt_from_gt(upper) == expected


@pytest.mark.parametrize("size", [3, 4])
def test_full_pipeline_equivalence(size):
    rng = Random(size)
    for _ in range(40):
        matrix = [[rng.randint(0, 4) for _ in range(size)] for _ in range(size)]
        rpp = toggle_rpp(matrix)
        lower, upper = gt_from_rpp(rpp)
        p, q = classical_insert_rsk(matrix)
        assert (ssyt_from_gt(lower).rows, ssyt_from_gt(upper).rows) == (p.rows, q.rows)


@pytest.mark.parametrize("shape", [(3, 3), (3, 2), (2, 2, 1), (4, 1)])
def test_toggle_rpp_matches_generalized_map(shape):
    P = young(shape)
    a = analyze(P)
    ids = young_box_ids(shape)
    rng = Random(sum(shape))
    for _ in range(25):
        matrix = [[rng.randint(0, 4) for _ in range(width)] for width in shape]
        flat = [0] * P.n
        for (i, j), e in ids.items():
            flat[e] = matrix[i - 1][j - 1]
        image = rsk(P, flat, range(P.n), analysis=a)
        rpp = toggle_rpp(matrix)
        assert is_rpp(rpp)
        for (i, j), e in ids.items():
            assert image[e] == rpp[i - 1][j - 1]
