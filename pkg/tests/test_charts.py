import pytest

from dbcompare.attributes import AttributeId
from dbcompare.catalog import generate_instances
from dbcompare.charts import (SpiderAxisConfig, axis_fraction,
                              emit_resistance_curves, emit_spider,
                              resistance_series, series_to_csv)


@pytest.fixture(scope="module")
def instances():
    return generate_instances()


@pytest.fixture(scope="module")
def by_id(instances):
    return {i.id: i for i in instances}


def test_single_instance_polygon(by_id):
    svg = emit_spider([by_id["BC-{16}"]])
    assert svg.startswith("<svg")
    assert svg.count("<polygon") >= 5  # rings + one data polygon
    assert "BC-{16}" in svg


def test_spider_limits(by_id):
    with pytest.raises(ValueError):
        emit_spider([])
    with pytest.raises(ValueError):
        emit_spider([by_id["BC-{16}"]] * 7)


def test_spider_deterministic(by_id):
    sel = [by_id["BC-{16}"], by_id["Tree-{16,8}"]]
    assert emit_spider(sel) == emit_spider(sel)


def test_fig1_fraud_axis_ordering(by_id):
    """The optimal-resistance instance sits outermost on all fraud axes."""
    bc, tree = by_id["BC-{16}"], by_id["Tree-{16,8}"]
    cfg = SpiderAxisConfig.for_instances([bc, tree])
    for attr in (AttributeId.PM, AttributeId.PD):
        assert axis_fraction(bc, attr, cfg) > axis_fraction(tree, attr, cfg)
    # equal terrorist resistance: both at the center
    assert axis_fraction(bc, AttributeId.PT, cfg) == \
        axis_fraction(tree, AttributeId.PT, cfg) == 0.0
    # the lightweight design sits farther out on crypto-ops and slow phase
    assert axis_fraction(tree, AttributeId.NC, cfg) > \
        axis_fraction(bc, AttributeId.NC, cfg)
    assert axis_fraction(tree, AttributeId.NS, cfg) == 1.0
    assert axis_fraction(bc, AttributeId.NS, cfg) == 0.0


def test_axis_hiding_rule(by_id):
    # identical non-security attributes disappear; security axes stay
    cfg = SpiderAxisConfig.for_instances([by_id["BC-{16}"], by_id["BC-{32}"]])
    assert AttributeId.PM in cfg.axes
    assert AttributeId.NC not in cfg.axes     # both 2
    assert AttributeId.NS not in cfg.axes     # both true
    assert AttributeId.NBE in cfg.axes        # 32 vs 64 differ


def test_normalized_comparison_runs(by_id):
    svg = emit_spider([by_id["SwissKnife-{128}"], by_id["SKI-{64,2}"]],
                      normalization=by_id["BC-{128}"])
    assert "SwissKnife-{128}" in svg and "SKI-{64,2}" in svg


def test_curve_series_selection(instances):
    series = resistance_series(instances, "mafia", points=(32,))
    # best mafia value at 32 rounds comes from the all-predefined variant
    ka_val = series["KA"][0]
    assert ka_val[0] == 32
    by_id = {i.id: i for i in instances}
    expected = by_id["KA-{32,1}"].vector.p_m.log2
    assert ka_val[1] == pytest.approx(expected)
    dseries = resistance_series(instances, "distance", points=(32,))
    expected_d = by_id["KA-{32,0}"].vector.p_d.log2
    assert dseries["KA"][0][1] == pytest.approx(expected_d)


def test_curve_terrorist_constant_for_signature_design(instances):
    series = resistance_series(instances, "terrorist", points=(32, 64))
    assert all(v == 0.0 for _, v in series["BC"])  # log2(1) = 0


def test_curves_errors(instances):
    with pytest.raises(ValueError, match="unknown fraud"):
        resistance_series(instances, "quantum")
    with pytest.raises(ValueError, match="at least one"):
        resistance_series(instances, "mafia", points=())


def test_curves_csv_and_svg(instances):
    series = resistance_series(instances, "mafia", points=(32, 64))
    csv_text = series_to_csv(series)
    assert csv_text.startswith("protocol,n,log2_value\n")
    assert "BC,32," in csv_text
    svg = emit_resistance_curves(instances, "mafia", points=(32, 64))
    assert svg.startswith("<svg")
    assert "rounds of the fast phase" in svg
