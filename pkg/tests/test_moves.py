import pytest

from ggmark.errors import InvalidMove
from ggmark.marking import gg_mark, gordon_mark
from ggmark.moves import (
    apply_move,
    first_dilation,
    first_reduction,
    second_dilation,
    second_reduction,
)
from ggmark.overpartitions import Overpartition, enumerate_overpartitions

from worked_examples import FIRST_AFTER, FIRST_BEFORE, SECOND_AFTER, SECOND_BEFORE, parse


class TestFirstMoves:
    def test_worked_reduction(self):
        before, after = parse(FIRST_BEFORE), parse(FIRST_AFTER)
        assert before.weight == 135 and after.weight == 134
        assert first_reduction(before, 2) == after

    def test_worked_dilation_inverts(self):
        assert first_dilation(parse(FIRST_AFTER), 2) == parse(FIRST_BEFORE)

    def test_worked_pair_row_contents(self):
        m = gordon_mark(parse(FIRST_AFTER))
        assert m.row_counts == (7, 6, 5)
        assert [str(p) for p in m.row(1)] == ["1", "~4", "~6", "~8", "~10", "~12", "15"]

    def test_top_position_rejected(self):
        with pytest.raises(InvalidMove):
            first_dilation(parse("~1"), 1)  # p equals the row count
        with pytest.raises(InvalidMove):
            first_reduction(parse("1"), 1)

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidMove):
            first_reduction(parse("1,3"), 5)
        with pytest.raises(InvalidMove):
            first_reduction(parse("1,3"), 0)

    def test_wrong_overline_state_rejected(self):
        # dilation needs an overlined part at position p
        with pytest.raises(InvalidMove):
            first_dilation(parse("1,3"), 1)

    def test_round_trips_exhaustive(self):
        for n in range(0, 12):
            for lam in enumerate_overpartitions(n):
                rows = gordon_mark(lam).row_counts
                n1 = rows[0] if rows else 0
                for p in range(1, n1):
                    try:
                        up = first_dilation(lam, p)
                    except InvalidMove:
                        up = None
                    if up is not None:
                        assert up.weight == lam.weight + 1
                        assert gordon_mark(up).row_counts == rows
                        assert first_reduction(up, p) == lam
                    try:
                        down = first_reduction(lam, p)
                    except InvalidMove:
                        down = None
                    if down is not None:
                        assert down.weight == lam.weight - 1
                        assert gordon_mark(down).row_counts == rows
                        assert first_dilation(down, p) == lam


class TestSecondMoves:
    def test_worked_dilation(self):
        before, after = parse(SECOND_BEFORE), parse(SECOND_AFTER)
        assert before.weight == 97 and after.weight == 99
        assert second_dilation(before, 5) == after

    def test_worked_reduction_inverts(self):
        assert second_reduction(parse(SECOND_AFTER), 5) == parse(SECOND_BEFORE)

    def test_top_cluster_examples(self):
        assert second_dilation(parse("~1"), 1) == parse("2")
        assert second_dilation(parse("1"), 1) == parse("~2")
        assert second_reduction(parse("2"), 1) == parse("~1")
        assert second_reduction(parse("~2"), 1) == parse("1")

    def test_precondition_errors(self):
        with pytest.raises(InvalidMove):
            second_dilation(parse("2"), 1)  # no odd part in the top cluster
        with pytest.raises(InvalidMove):
            second_reduction(parse("1"), 1)  # odd part present
        with pytest.raises(InvalidMove):
            second_dilation(parse("1"), 2)  # out of range

    def test_round_trips_exhaustive(self):
        for n in range(0, 12):
            for lam in enumerate_overpartitions(n):
                rows = gg_mark(lam).row_counts
                n1 = rows[0] if rows else 0
                for p in range(1, n1 + 1):
                    try:
                        up = second_dilation(lam, p)
                    except InvalidMove:
                        up = None
                    if up is not None:
                        assert up.weight == lam.weight + (1 if p == 1 else 2)
                        assert gg_mark(up).row_counts == rows
                        assert second_reduction(up, p) == lam
                    try:
                        down = second_reduction(lam, p)
                    except InvalidMove:
                        down = None
                    if down is not None:
                        assert down.weight == lam.weight - (1 if p == 1 else 2)
                        assert gg_mark(down).row_counts == rows
                        assert second_dilation(down, p) == lam


class TestReceipts:
    def test_receipt_fields(self):
        r = apply_move("secondDilation", parse(SECOND_BEFORE), 5)
        assert r.delta_weight == 2
        assert r.to_json_dict() == {
            "kind": "secondDilation",
            "p": 5,
            "before": SECOND_BEFORE,
            "after": SECOND_AFTER,
            "deltaWeight": 2,
        }

    def test_receipt_deltas(self):
        assert apply_move("firstReduction", parse(FIRST_BEFORE), 2).delta_weight == -1
        assert apply_move("secondDilation", parse("~1"), 1).delta_weight == 1

    def test_unknown_kind(self):
        with pytest.raises(InvalidMove):
            apply_move("thirdDilation", parse("1"), 1)
