import pytest

from bgauge.algebra import poincare
from bgauge.calculator import GaugeCalculator
from bgauge.catalog import RegimeError
from bgauge.document import BOTTOM_FAMILY_NOTE, MH_INDEX_NOTE, VECTOR_SPACE_NOTE
from bgauge.groups import lookup
from bgauge.oracle import OracleAuditor
from bgauge.series import from_coeffs


class FaultyAuditor(OracleAuditor):
    """Perturbs one coefficient before auditing."""

    def __init__(self, degree: int):
        super().__init__()
        self.degree = degree

    def audit(self, pres, trunc=None):
        coeffs = list(poincare(pres, trunc).coeffs)
        coeffs[self.degree] += 1
        return self.audit_series(pres, from_coeffs(coeffs))


def nonzero_dims(space):
    return {d: int(dim) for d, dim in space.dims if dim != "0"}


def test_compute_document_su2_p5():
    doc = GaugeCalculator(lookup("SU(2)"), 5, 1, 7).compute_document()
    assert list(doc.spaces) == ["BGk", "Omega3G3", "BG", "G", "MH_odd"]
    assert nonzero_dims(doc.spaces["BGk"]) == {0: 1, 4: 1, 7: 1}
    assert doc.verdict.regime == "FullTheorem"
    assert doc.meta.command == "compute"
    assert doc.meta.notes == [BOTTOM_FAMILY_NOTE, MH_INDEX_NOTE, VECTOR_SPACE_NOTE]
    assert doc.spaces["MH_odd"].degrees == [7]
    assert [g.label for g in doc.spaces["MH_odd"].generators] == ["abar[k=0]"]
    assert doc.spaces["MH_odd"].printed_degrees is None


def test_compute_document_su2_mod3():
    doc = GaugeCalculator(lookup("SU(2)"), 3, 1, 16).compute_document()
    assert list(doc.spaces) == ["BGk", "Omega3G3", "BG", "G", "MH_odd", "S3"]
    bgk = doc.spaces["BGk"]
    assert [g.degree for g in bgk.generators] == [4, 10, 11, 15, 16]
    assert [g.family for g in bgk.generators] == ["C", "BBAR", "ABAR", "A", "C"]
    assert nonzero_dims(bgk) == {
        0: 1, 4: 1, 8: 1, 10: 1, 11: 1, 12: 1, 14: 1, 15: 2, 16: 2,
    }
    assert doc.verdict.regime == "SU2Mod3"


def test_compute_document_verbose_adds_printed_subscripts():
    doc = GaugeCalculator(lookup("SU(3)"), 7, 1, 30, verbose=True).compute_document()
    mh = doc.spaces["MH_odd"]
    assert mh.degrees == [11, 25]
    assert mh.printed_degrees == [11, 39]
    assert mh.transgression_targets == [10, 24]
    assert [g.label for g in mh.generators] == ["abar[k=0]", "a[n=2,k=1,j=0]"]


@pytest.mark.parametrize(
    "name, p, k, message",
    [
        ("SU(2)", 3, 3, "(3,k)=1 fails"),
        ("SU(4)", 5, 1, "n_ℓ < p−1 fails"),
        ("E8", 13, 1, "not 13-regular"),
    ],
)
def test_compute_document_refuses_inapplicable_regimes(name, p, k, message):
    with pytest.raises(RegimeError) as e:
        GaugeCalculator(lookup(name), p, k, 20).compute_document()
    assert message in str(e.value)


def test_verdict_document_has_no_spaces():
    doc = GaugeCalculator(lookup("SU(4)"), 5, 1).verdict_document()
    assert doc.spaces == {}
    assert doc.verdict.regime == "PRegularOnly"
    assert doc.verdict.failed_condition == "condition n_ℓ < p−1 fails (4 ≮ 4)"
    assert doc.inputs.entries == [2, 3, 4]


def test_generators_document():
    doc = GaugeCalculator(lookup("SU(3)"), 7, max_degree=20).generators_document("omega3g3")
    space = doc.spaces["Omega3G3"]
    assert [(g.label, g.degree) for g in space.generators] == [
        ("c[n=2,k=0]", 2),
        ("abar[k=0]", 11),
        ("c[n=7,k=0]", 12),
    ]
    assert space.generators[0].formula == "2n·p^k - 2"
    assert doc.verdict is None
    assert doc.inputs.space == "omega3g3"

    bg = GaugeCalculator(lookup("G2"), 13).generators_document("bg").spaces["BG"]
    assert [(g.degree, g.kind) for g in bg.generators] == [(4, "polynomial"), (12, "polynomial")]
    g = GaugeCalculator(lookup("Sp(2)"), 11).generators_document("g").spaces["G"]
    assert [(x.degree, x.kind) for x in g.generators] == [(3, "exterior"), (7, "exterior")]


def test_generators_document_needs_p_regularity():
    with pytest.raises(RegimeError):
        GaugeCalculator(lookup("E8"), 13).generators_document("bg")
    with pytest.raises(ValueError):
        GaugeCalculator(lookup("SU(2)"), 5).generators_document("bgk")


def test_oracle_document_passes():
    doc, passed = GaugeCalculator(lookup("SU(3)"), 7, 1, 60).oracle_document()
    assert passed
    rows = doc.spaces["BGk"].audit
    assert len(rows) == 61
    assert all(row.status == "PASS" for row in rows)


def test_oracle_document_reports_an_injected_fault():
    calculator = GaugeCalculator(lookup("SU(2)"), 5, 1, 20, auditor=FaultyAuditor(7))
    doc, passed = calculator.oracle_document()
    assert not passed
    failed = [row.degree for row in doc.spaces["BGk"].audit if row.status == "FAIL"]
    assert failed == [7]


def test_oracle_degree_guard():
    calculator = GaugeCalculator(lookup("SU(2)"), 5, 1, 81)
    with pytest.raises(ValueError):
        calculator.oracle_document()
    _, passed = calculator.oracle_document(force=True)
    assert passed


def test_negative_max_degree_is_rejected():
    with pytest.raises(ValueError):
        GaugeCalculator(lookup("SU(2)"), 5, 1, -1)
