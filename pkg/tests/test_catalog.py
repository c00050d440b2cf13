import math

import pytest

from dbcompare.catalog import (ALL_PROTOCOL_IDS, GlobalConstants,
                               generate_instances, instances_to_csv,
                               instances_to_json, parameter_grid, evaluate,
                               descriptor)
from dbcompare.formulas import fibonacci

CONSTS = GlobalConstants()


def test_thirteen_protocols_registered():
    assert len(ALL_PROTOCOL_IDS) == 13
    assert set(ALL_PROTOCOL_IDS) == {
        "BC", "MAD", "BB", "HK", "MP", "SwissKnife", "Tree", "Poulidor",
        "RC", "YKHL", "KA", "SKI", "TMA"}


def test_bc_16_full_vector():
    v = evaluate("BC", {"n": 16}, CONSTS)
    assert v.p_m.log2 == -16
    assert v.p_d.log2 == -16
    assert v.p_t.value == 1.0
    assert v.e == 32
    assert v.c == 2
    assert v.m == 2 * 16 + 3 * 128  # 416 bits
    assert v.s is True
    assert v.b is False


def test_ski_39_2_published_row():
    v = evaluate("SKI", {"n": 39, "t": 2}, CONSTS)
    assert abs(v.p_m.log2 - 39 * math.log2(0.75)) < 1e-9
    assert math.ceil(round(v.p_m.log2, 9)) == -16     # scales to 2^-16
    assert v.p_t.log2 == pytest.approx(-39)
    assert v.c == 1
    assert v.s is False
    assert v.b is True
    assert v.e == 2 * 39 * 2


def test_ka_2_05_published_row():
    v = evaluate("KA", {"n": 2, "p_d_frac": 0.5}, CONSTS)
    # alpha = floor(0.5 * 2) = 1, distance value (3/4)^1 scales to 2^0
    assert v.p_d.value == 0.75
    assert math.ceil(round(v.p_d.log2, 9)) == 0


def test_tree_depth_one_reproduces_two_register_mafia():
    for n in (1, 7, 32, 256):
        tree = evaluate("Tree", {"n": n, "ell": 1}, CONSTS)
        hk = evaluate("HK", {"n": n}, CONSTS)
        assert tree.p_m.log2 == pytest.approx(hk.p_m.log2, abs=1e-9)


def test_grid_sizes():
    assert len(parameter_grid("BC")) == 256
    assert len(parameter_grid("Tree")) == 8192
    assert len(parameter_grid("SKI")) == 7936
    assert len(parameter_grid("MP")) == 5376
    assert len(parameter_grid("KA")) == 5376
    pf_values = sorted({g["p_f"] for g in parameter_grid("MP")})
    assert len(pf_values) == 21
    assert pf_values[0] == 0.0 and pf_values[-1] == 1.0
    assert pf_values[1] == 0.05


def test_full_generation_count():
    instances = generate_instances()
    assert len(instances) == 29184


def test_single_protocol_and_empty_generation():
    assert len(generate_instances(["BC"])) == 256
    assert generate_instances([]) == []


def test_generation_deterministic_order():
    a = [i.id for i in generate_instances(["BC", "KA"])]
    b = [i.id for i in generate_instances(["KA", "BC"])]
    assert a == b
    assert a[0] == "BC-{1}"


def test_canonical_ids():
    instances = generate_instances(["Tree", "KA", "SKI"])
    ids = {i.id for i in instances}
    assert "Tree-{24,6}" in ids
    assert "KA-{22,0.55}" in ids
    assert "KA-{2,1}" in ids           # 1.0 renders bare
    assert "SKI-{39,2}" in ids


def test_schema_errors():
    with pytest.raises(ValueError, match="missing"):
        evaluate("SKI", {"n": 5}, CONSTS)
    with pytest.raises(ValueError, match="unexpected"):
        evaluate("BC", {"n": 5, "t": 2}, CONSTS)
    with pytest.raises(KeyError, match="unknown protocol"):
        evaluate("NOPE", {"n": 5}, CONSTS)
    with pytest.raises(ValueError, match="n must be"):
        evaluate("BC", {"n": 0}, CONSTS)


def test_e_invariant_and_probability_ranges():
    for inst in generate_instances():
        params = dict(inst.params)
        t = params.get("t", 1)
        assert inst.vector.e == 2 * params["n"] * t
        for attr in ("p_m", "p_d", "p_t"):
            assert getattr(inst.vector, attr).log2 <= 0


def test_memory_increases_with_n():
    for pid in ALL_PROTOCOL_IDS:
        if pid == "RC":   # constant-memory design
            continue
        d = descriptor(pid)
        fixed = {}
        for name in d.param_names:
            if name != "n":
                fixed[name] = d.grid[0][d.param_names.index(name)]
        prev = None
        for n in (1, 2, 50, 128, 256):
            m = evaluate(pid, dict(fixed, n=n), CONSTS).m
            if prev is not None:
                assert m > prev, pid
            prev = m


def test_terrorist_resistant_protocols():
    resistant = set()
    for inst in generate_instances():
        if inst.vector.p_t.value < 1.0:
            resistant.add(inst.protocol)
    assert resistant == {"SwissKnife", "SKI"}


def test_ski_t2_identities():
    for n in (1, 5, 40, 256):
        v = evaluate("SKI", {"n": n, "t": 2}, CONSTS)
        assert v.p_m.log2 == pytest.approx(n * math.log2(0.75))
        assert v.p_t.log2 == pytest.approx(-n)


def test_ka_all_predefined_has_no_distance_protection():
    v = evaluate("KA", {"n": 17, "p_d_frac": 1.0}, CONSTS)
    assert v.p_d.value == 1.0


def test_tma_fibonacci_values():
    assert fibonacci(6) == 8
    v = evaluate("TMA", {"n": 2}, CONSTS)
    assert v.p_m.value == pytest.approx(0.5)   # F_6 / 16
    assert v.p_d.value == pytest.approx(0.5)


def test_flag_assignments():
    multi_bit = {i.protocol for i in generate_instances()
                 if i.vector.b}
    assert multi_bit == {"RC", "SKI", "MP"}
    slow_phase = {i.protocol for i in generate_instances() if i.vector.s}
    assert slow_phase == {"BC", "MAD", "BB", "MP", "SwissKnife", "RC"}


def test_provenance_tags():
    assert descriptor("SKI").provenance["p_d"] == "bound-only"
    assert descriptor("Poulidor").provenance["p_m"] == "cited-reference"
    assert descriptor("Tree").provenance["p_m"] == "closed-form-in-paper"
    assert descriptor("Tree").provenance["p_d"] == "cited-reference"
    assert descriptor("RC").provenance["e"] == "estimated"


def test_csv_and_json_export():
    instances = generate_instances(["BC"])
    csv_text = instances_to_csv(instances)
    lines = csv_text.strip().split("\n")
    assert len(lines) == 257
    assert lines[0].startswith("id,protocol,n,")
    assert lines[1].startswith("BC-{1},BC,1,")
    json_text = instances_to_json(instances)
    import json
    rows = json.loads(json_text)
    assert rows[15]["id"] == "BC-{16}"
    assert rows[15]["scaled_p_m"] == -16
    assert rows[15]["m"] == 416


def test_constants_validation():
    with pytest.raises(ValueError):
        GlobalConstants(delta=0)
    custom = GlobalConstants(delta=64, sigma=256)
    v = evaluate("BC", {"n": 4}, custom)
    assert v.m == 8 + 3 * 256
