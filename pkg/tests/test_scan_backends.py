"""The compiled and pure-Python scan backends must be interchangeable."""

import pytest

from theta_kernel import _boxscan_py, _scan
from theta_kernel.lemma_data import lemma_ids
from theta_kernel.multiplier import f_value, g_value, membership
from theta_kernel.sl2z import Mat2

_compiled = pytest.importorskip(
    "theta_kernel._boxscan", reason="compiled scan backend not built")


@pytest.mark.parametrize("lemma_id", lemma_ids())
@pytest.mark.parametrize("box", (7, 25))
def test_backends_agree(lemma_id, box):
    code = _boxscan_py.LEMMA_CODES[lemma_id]
    members_c, cases_c = _compiled.scan_lemma(code, box)
    members_p, cases_p = _boxscan_py.scan_lemma(code, box)
    assert members_c == members_p
    assert len(cases_c) == len(cases_p)
    for (checked_c, cex_c, att_c), (checked_p, cex_p, att_p) in zip(cases_c, cases_p):
        assert checked_c == checked_p
        assert cex_c == cex_p
        assert att_c == att_p


def test_backend_branch_integers_match_reference():
    """The formulas inlined in the scan loops agree with the multiplier module."""
    box = 12
    for level, fn in ((3, _boxscan_py._f_level3), (4, _boxscan_py._g_level4)):
        seen = 0
        for a in range(-box, box + 1):
            for b in range(-box, box + 1):
                for c in range(-box, box + 1):
                    for d in (x for x in range(-box, box + 1) if a * x - b * c == 1):
                        m = Mat2(a, b, c, d)
                        if not membership(m, level):
                            continue
                        seen += 1
                        reference = f_value(m) if level == 3 else g_value(m)
                        assert fn(a, b, c, d) == reference
        assert seen > 100


def test_selected_backend_is_exposed():
    assert _scan.backend_name() in ("cython", "python")
    assert set(_scan.LEMMA_CODES) == set(lemma_ids())


def test_python_backend_rejects_bad_input():
    with pytest.raises(ValueError):
        _boxscan_py.scan_lemma(9, 10)
    with pytest.raises(ValueError):
        _boxscan_py.scan_lemma(1, 0)


def test_compiled_backend_rejects_bad_input():
    with pytest.raises(ValueError):
        _compiled.scan_lemma(9, 10)
    with pytest.raises(ValueError):
        _compiled.scan_lemma(1, 0)
    with pytest.raises(ValueError):
        _compiled.scan_lemma(1, 10**9)


def test_counterexample_limit_is_honored():
    # the limit caps the list; with sound lemmas the lists stay empty
    _, cases = _boxscan_py.scan_lemma(1, 10, counterexample_limit=2)
    for _, cex, _ in cases:
        assert len(cex) <= 2
