"""Acceptance suite: the eight exit criteria, exact equality throughout.

Each test prints one PASS/FAIL line (run pytest with -s to stream them).
"""

from fractions import Fraction

import pytest

from ggmark.bailey import EVEN_MODULUS, ODD_MODULUS, run_chain
from ggmark.bijections import odd_merge, odd_split, overline_merge, overline_split
from ggmark.errors import InvalidMove
from ggmark.families import ClassId, count_cells, grid_cells, is_member, member_from_stats
from ggmark.identities import identity_lhs_multisum, identity_rhs
from ggmark.marking import alpha_set, clusters, gg_mark, gordon_mark
from ggmark.moves import (
    first_dilation,
    first_reduction,
    second_dilation,
    second_reduction,
)
from ggmark.overpartitions import enumerate_overpartitions
from ggmark.series import XPoly, triple_product

from worked_examples import (
    FIRST_AFTER,
    FIRST_BEFORE,
    GG_MARKS,
    GG_ROWS,
    GG_TEXT,
    GORDON_MARKS,
    GORDON_ROWS,
    GORDON_TEXT,
    SECOND_AFTER,
    SECOND_AFTER_ROWS,
    SECOND_BEFORE,
    parse,
)


def _report(number: int, ok: bool, text: str):
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {text}")
    assert ok, text


def test_criterion_1_even_modulus_counts():
    """Even-modulus equality O = P for k in 2..4, i < k, n <= 28."""
    ok = True
    first_bad = None
    for n in range(0, 29):
        for cell, members, cong in count_cells("O", (2, 3, 4), n):
            if members != cong:
                ok = False
                first_bad = first_bad or (cell, n, members, cong)
    _report(1, ok, f"O=P counts, k=2..4, n<=28 (first mismatch: {first_bad})")


def test_criterion_2_odd_modulus_counts():
    """Odd-modulus equality E = F for k in 2..4, i < k, n <= 28."""
    ok = True
    first_bad = None
    anchor = None
    for n in range(0, 29):
        for cell, members, cong in count_cells("E", (2, 3, 4), n):
            if members != cong:
                ok = False
                first_bad = first_bad or (cell, n, members, cong)
            if cell == ClassId("E", 2, 1) and n == 2:
                anchor = (members, cong)
    ok = ok and anchor == (1, 1)
    _report(2, ok, f"E=F counts, k=2..4, n<=28, anchor E_21(2)={anchor}")


def test_criterion_3_series_identities_to_q60():
    """Multisum = product to q^60 for k in 2..5, i < k, both identities."""
    ok = True
    bad = []
    for name in ("over4", "R-R-BB1-e-1"):
        for k in (2, 3, 4, 5):
            for i in range(1, k):
                lhs = identity_lhs_multisum(name, k, i, 60)
                rhs = identity_rhs(name, k, i, 60)
                if not lhs.matches(rhs, 60):
                    ok = False
                    bad.append((name, k, i))
    _report(3, ok, f"series identities to q^60 (failures: {bad})")


def _bivariate_grid(family: str, ks, order: int):
    cells = grid_cells(family, ks)
    acc = {cell: {} for cell in cells}
    for n in range(order):
        for lam in enumerate_overpartitions(n):
            st = lam.stats()
            for cell in cells:
                if member_from_stats(st, cell):
                    cell_acc = acc[cell]
                    key = (n, lam.length)
                    cell_acc[key] = cell_acc.get(key, 0) + 1
    return acc


def test_criterion_4_bivariate_generating_functions():
    """Bivariate multisums match (m, n)-counts to q^24 for k in {2, 3}."""
    order = 25
    ok = True
    bad = []
    for family, name in (("O", "Gollnitz-evene1"), ("E", "GENERATING-nwe2")):
        grids = _bivariate_grid(family, (2, 3), order)
        for cell, counts in grids.items():
            closed = identity_lhs_multisum(name, cell.k, cell.i, order, with_x=True)
            for n in range(order):
                coeff = closed.coefficient(n)
                by_m = {}
                if isinstance(coeff, XPoly):
                    by_m = {d: coeff.coeff(d) for d in range(coeff.degree + 1) if coeff.coeff(d)}
                elif coeff:
                    by_m = {0: coeff}
                enum = {m: c for (w, m), c in counts.items() if w == n}
                if by_m != enum:
                    ok = False
                    bad.append((family, cell.k, cell.i, n))
    _report(4, ok, f"bivariate identities to q^24 (failures: {bad[:4]})")


def test_criterion_5_worked_example_fidelity():
    """The four worked examples reproduce bit-exactly."""
    checks = []
    m = gordon_mark(parse(GORDON_TEXT))
    checks.append(m.marks() == GORDON_MARKS and m.row_counts == GORDON_ROWS)
    g = gg_mark(parse(GG_TEXT))
    checks.append(g.marks() == GG_MARKS and g.row_counts == GG_ROWS)
    before, after = parse(FIRST_BEFORE), parse(FIRST_AFTER)
    checks.append(before.weight == 135 and after.weight == 134)
    checks.append(first_reduction(before, 2) == after)
    checks.append(first_dilation(after, 2) == before)
    nu, nu2 = parse(SECOND_BEFORE), parse(SECOND_AFTER)
    checks.append(nu.weight == 97 and nu2.weight == 99)
    checks.append(second_dilation(nu, 5) == nu2)
    checks.append(second_reduction(nu2, 5) == nu)
    marked = gg_mark(nu2)
    rows = tuple(tuple(str(p) for p in marked.row(r)) for r in (1, 2, 3))
    checks.append(rows == SECOND_AFTER_ROWS)
    _report(5, all(checks), f"worked examples bit-exact ({checks})")


def test_criterion_6_bijection_round_trips():
    """Forward-inverse identity with exact weight books, n <= 14."""
    ok = True
    overline_cases = odd_cases = 0
    for n in range(0, 15):
        for lam in enumerate_overpartitions(n):
            if not (lam.parts and lam.parts[0].overlined):
                tau, mu = overline_split(lam)
                if (
                    tau.weight + mu.weight != lam.weight
                    or mu.length != lam.length
                    or mu.has_overline
                    or overline_merge(tau, mu) != lam
                    or gordon_mark(mu).row_counts != gordon_mark(lam).row_counts
                ):
                    ok = False
                overline_cases += 1
            xi, omega = odd_split(lam)
            if (
                xi.weight + omega.weight != lam.weight
                or omega.length != lam.length
                or omega.has_odd
                or odd_merge(xi, omega) != lam
                or gg_mark(omega).row_counts != gg_mark(lam).row_counts
            ):
                ok = False
            odd_cases += 1
    _report(6, ok, f"bijection round trips n<=14 ({overline_cases} + {odd_cases} cases)")


def test_criterion_7_structural_propositions_and_preservation():
    """Cluster propositions to n <= 18; move membership preservation to n <= 16."""
    ok = True
    # at most one odd part per cluster, adjacent to the anchor; the
    # cross-cluster proximity set never holds more than one row
    for n in range(0, 19):
        for lam in enumerate_overpartitions(n):
            d = clusters(gg_mark(lam))
            for j in range(1, d.n1 + 1):
                odds = d.odd_entries(j)
                if len(odds) > 1:
                    ok = False
                if odds and odds[0][0].size - d.cluster(j)[0][0].size > 1:
                    ok = False
            for j in range(1, d.n1):
                if len(alpha_set(d, j)) > 1:
                    ok = False
    prop_ok = ok

    o_cells = grid_cells("O", (2, 3, 4))
    e_cells = grid_cells("E", (2, 3, 4))
    moves_checked = 0
    for n in range(0, 17):
        for lam in enumerate_overpartitions(n):
            st = lam.stats()
            o_in = [c for c in o_cells if member_from_stats(st, c)]
            e_in = [c for c in e_cells if member_from_stats(st, c)]
            if e_in:
                rows = gordon_mark(lam).row_counts
                n1 = rows[0] if rows else 0
                for p in range(1, n1):
                    for move in (first_dilation, first_reduction):
                        try:
                            image = move(lam, p)
                        except InvalidMove:
                            continue
                        ist = image.stats()
                        if gordon_mark(image).row_counts != rows:
                            ok = False
                        for c in e_in:
                            if c.k - 1 >= len(rows) and not member_from_stats(ist, c):
                                ok = False
                        moves_checked += 1
            if o_in:
                rows = gg_mark(lam).row_counts
                n1 = rows[0] if rows else 0
                for p in range(1, n1 + 1):
                    for move in (second_dilation, second_reduction):
                        try:
                            image = move(lam, p)
                        except InvalidMove:
                            continue
                        ist = image.stats()
                        if gg_mark(image).row_counts != rows:
                            ok = False
                        for c in o_in:
                            if c.k - 1 >= len(rows) and not member_from_stats(ist, c):
                                ok = False
                        moves_checked += 1
    _report(7, ok, f"propositions n<=18 ({prop_ok}); move preservation n<=16 ({moves_checked} moves)")


def test_criterion_8_bailey_chains():
    """Chain verification (nMax 6, order 40) and triple products to q^80."""
    ok = True
    bad = []
    for (k, i) in ((2, 1), (3, 1), (3, 2), (4, 2)):
        for variant in (ODD_MODULUS, EVEN_MODULUS):
            rep = run_chain(k, i, variant, 40, n_max=6)
            if not rep.all_ok:
                ok = False
                bad.append((k, i, variant))
        s_odd, p_odd = triple_product(
            -1, Fraction(2 * k - 2 * i - 1, 2), Fraction(2 * k - 1, 2), 80
        )
        if not s_odd.matches(p_odd, 80):
            ok = False
            bad.append((k, i, "triple-odd"))
        s_even, p_even = triple_product(-1, 2 * k - 2 * i - 1, 2 * (k - 1), 80)
        if not s_even.matches(p_even, 80):
            ok = False
            bad.append((k, i, "triple-even"))
    _report(8, ok, f"chains and triple products (failures: {bad})")
